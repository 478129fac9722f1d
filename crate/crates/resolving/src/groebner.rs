//! Buchberger's algorithm for submodules of free modules (ideals are the
//! rank-one case), plus membership, normal forms, lifts and syzygies via a
//! position-elimination augmentation.

use crate::monomial::Monomial;
use crate::poly::{Polynomial, PolyCtx, Term};
use std::cmp::Ordering;

/// An element of a free module P^rank, one polynomial per coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorPoly {
    pub comps: Vec<Polynomial>,
}

impl VectorPoly {
    pub fn zero(rank: usize) -> VectorPoly {
        VectorPoly { comps: vec![Polynomial::zero(); rank] }
    }

    pub fn unit(pos: usize, rank: usize, nvars: usize) -> VectorPoly {
        let mut v = VectorPoly::zero(rank);
        v.comps[pos] = Polynomial::one(nvars);
        v
    }

    pub fn from_poly(f: Polynomial) -> VectorPoly {
        VectorPoly { comps: vec![f] }
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &VectorPoly, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b, ctx)).collect(),
        }
    }

    pub fn sub(&self, other: &VectorPoly, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly {
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a.sub(b, ctx)).collect(),
        }
    }

    pub fn neg(&self, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|a| a.neg(ctx)).collect() }
    }

    pub fn scale(&self, c: u32, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|a| a.scale(c, ctx)).collect() }
    }

    pub fn mul_term(&self, c: u32, mon: &Monomial, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|a| a.mul_term(c, mon, ctx)).collect() }
    }

    pub fn mul_poly(&self, f: &Polynomial, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly { comps: self.comps.iter().map(|a| a.mul(f, ctx)).collect() }
    }

    pub fn normalize(self, ctx: &PolyCtx) -> VectorPoly {
        VectorPoly { comps: self.comps.into_iter().map(|c| c.normalize(ctx)).collect() }
    }

    /// Concatenate two vectors (used by the augmentation).
    pub fn concat(&self, other: &VectorPoly) -> VectorPoly {
        let mut comps = self.comps.clone();
        comps.extend(other.comps.iter().cloned());
        VectorPoly { comps }
    }

    pub fn slice(&self, from: usize, to: usize) -> VectorPoly {
        VectorPoly { comps: self.comps[from..to].to_vec() }
    }
}

/// Compare module terms `(pos_a, mon_a)` vs `(pos_b, mon_b)` under the
/// block order: positions `< split` dominate positions `>= split`; within a
/// block, the monomial order decides and lower position wins ties.
fn cmp_module_term(
    pa: usize,
    ma: &Monomial,
    pb: usize,
    mb: &Monomial,
    split: usize,
    ctx: &PolyCtx,
) -> Ordering {
    let ba = pa < split;
    let bb = pb < split;
    match (ba, bb) {
        (true, false) => return Ordering::Greater,
        (false, true) => return Ordering::Less,
        _ => {}
    }
    match ctx.cmp_mon(ma, mb) {
        Ordering::Equal => pb.cmp(&pa),
        o => o,
    }
}

/// Leading module term of `v`: position, monomial and coefficient.
pub fn lead_term<'a>(v: &'a VectorPoly, split: usize, ctx: &PolyCtx) -> Option<(usize, &'a Term)> {
    let mut best: Option<(usize, &Term)> = None;
    for (pos, comp) in v.comps.iter().enumerate() {
        if let Some(t) = comp.leading() {
            best = match best {
                None => Some((pos, t)),
                Some((bp, bt)) => {
                    if cmp_module_term(pos, &t.mon, bp, &bt.mon, split, ctx) == Ordering::Greater {
                        Some((pos, t))
                    } else {
                        Some((bp, bt))
                    }
                }
            };
        }
    }
    best
}

fn subtract_term(v: &mut VectorPoly, pos: usize, t: &Term) {
    let comp = &mut v.comps[pos];
    if let Some(idx) = comp.terms.iter().position(|u| u.mon == t.mon) {
        comp.terms.remove(idx);
    }
}

/// Full normal form of `v` against `basis`: no surviving term is divisible
/// by a leading term of the basis (position-compatible division).
pub fn normal_form_vec(
    v: &VectorPoly,
    basis: &[VectorPoly],
    split: usize,
    ctx: &PolyCtx,
) -> VectorPoly {
    let rank = v.rank();
    let mut work = v.clone();
    let mut rem = VectorPoly::zero(rank);
    'outer: while let Some((pos, lt)) = lead_term(&work, split, ctx) {
        let (c, mon) = (lt.coeff, lt.mon.clone());
        for g in basis {
            if let Some((gp, gt)) = lead_term(g, split, ctx) {
                if gp == pos && gt.mon.divides(&mon) {
                    let q = gt.mon.div_into(&mon).unwrap();
                    let qc = ctx.field.div(c, gt.coeff);
                    work = work.sub(&g.mul_term(qc, &q, ctx), ctx);
                    continue 'outer;
                }
            }
        }
        // not reducible: move the leading term to the remainder
        let term = Term { coeff: c, mon: mon.clone() };
        subtract_term(&mut work, pos, &term);
        rem.comps[pos] = rem.comps[pos].add(&Polynomial { terms: vec![term] }, ctx);
    }
    rem
}

fn spair(
    f: &VectorPoly,
    g: &VectorPoly,
    split: usize,
    ctx: &PolyCtx,
) -> Option<(Monomial, VectorPoly)> {
    let (pf, tf) = lead_term(f, split, ctx)?;
    let (pg, tg) = lead_term(g, split, ctx)?;
    if pf != pg {
        return None;
    }
    let lcm = tf.mon.lcm(&tg.mon, &ctx.weights);
    let mf = tf.mon.div_into(&lcm).unwrap();
    let mg = tg.mon.div_into(&lcm).unwrap();
    let a = f.mul_term(ctx.field.inv(tf.coeff), &mf, ctx);
    let b = g.mul_term(ctx.field.inv(tg.coeff), &mg, ctx);
    Some((lcm, a.sub(&b, ctx)))
}

/// Buchberger with a conservative chain criterion (and the product criterion
/// in the ideal case). Returns an interreduced, monic basis sorted ascending
/// by leading term.
pub fn buchberger(gens: &[VectorPoly], split: usize, ctx: &PolyCtx) -> Vec<VectorPoly> {
    let mut basis: Vec<VectorPoly> = Vec::new();
    for g in gens {
        let g = g.clone();
        if !g.is_zero() {
            let (_, lt) = lead_term(&g, split, ctx).map(|(p, t)| (p, t.clone())).unwrap();
            basis.push(g.scale(ctx.field.inv(lt.coeff), ctx));
        }
    }
    let rank = gens.first().map(|g| g.rank()).unwrap_or(0);
    let ideal_case = rank == 1;

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut treated: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in 0..i {
            pairs.push((j, i));
        }
    }

    let lcm_of = |basis: &[VectorPoly], i: usize, j: usize| -> Option<(usize, Monomial)> {
        let (pi, ti) = lead_term(&basis[i], split, ctx)?;
        let (pj, tj) = lead_term(&basis[j], split, ctx)?;
        if pi != pj {
            return None;
        }
        Some((pi, ti.mon.lcm(&tj.mon, &ctx.weights)))
    };

    while !pairs.is_empty() {
        // normal selection: smallest lcm degree first, deterministic tie-break
        let mut best = 0usize;
        let mut best_key: Option<(u32, usize, usize)> = None;
        let mut k = 0;
        while k < pairs.len() {
            let (i, j) = pairs[k];
            match lcm_of(&basis, i, j) {
                None => {
                    pairs.swap_remove(k);
                    continue;
                }
                Some((_, lcm)) => {
                    let key = (lcm.degree, i, j);
                    if best_key.map_or(true, |bk| key < bk) {
                        best_key = Some(key);
                        best = k;
                    }
                }
            }
            k += 1;
        }
        if pairs.is_empty() {
            break;
        }
        let (i, j) = pairs.remove(best);
        let (pos, lcm) = match lcm_of(&basis, i, j) {
            Some(x) => x,
            None => continue,
        };
        treated.push((i, j));

        // product criterion (valid for ideals only)
        if ideal_case {
            let ti = lead_term(&basis[i], split, ctx).unwrap().1.mon.clone();
            let tj = lead_term(&basis[j], split, ctx).unwrap().1.mon.clone();
            if ti.coprime(&tj) {
                continue;
            }
        }
        // chain criterion, conservative form: both subsidiary pairs treated
        let mut skip = false;
        for (k, g) in basis.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            if let Some((pk, tk)) = lead_term(g, split, ctx) {
                if pk == pos && tk.mon.divides(&lcm) {
                    let p1 = (i.min(k), i.max(k));
                    let p2 = (j.min(k), j.max(k));
                    if treated.contains(&p1) && treated.contains(&p2) {
                        skip = true;
                        break;
                    }
                }
            }
        }
        if skip {
            continue;
        }

        if let Some((_, s)) = spair(&basis[i], &basis[j], split, ctx) {
            let r = normal_form_vec(&s, &basis, split, ctx);
            if !r.is_zero() {
                let lt = lead_term(&r, split, ctx).unwrap().1.coeff;
                let r = r.scale(ctx.field.inv(lt), ctx);
                let new = basis.len();
                basis.push(r);
                for t in 0..new {
                    pairs.push((t, new));
                }
            }
        }
    }

    interreduce(basis, split, ctx)
}

/// Tail-reduce every element against the others until stable; drop zeros,
/// make monic, sort ascending by leading term. For ideals this yields the
/// unique reduced Groebner basis.
pub fn interreduce(mut basis: Vec<VectorPoly>, split: usize, ctx: &PolyCtx) -> Vec<VectorPoly> {
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let elt = basis[i].clone();
            let mut others = basis.clone();
            others.remove(i);
            let r = normal_form_vec(&elt, &others, split, ctx);
            if r.is_zero() {
                basis.remove(i);
                changed = true;
                continue;
            }
            if r != elt {
                let lt = lead_term(&r, split, ctx).unwrap().1.coeff;
                basis[i] = r.scale(ctx.field.inv(lt), ctx);
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    // canonical order: ascending leading degree, then descending in the
    // module term order
    basis.sort_by(|a, b| {
        let (pa, ta) = lead_term(a, split, ctx).unwrap();
        let (pb, tb) = lead_term(b, split, ctx).unwrap();
        ta.mon
            .degree
            .cmp(&tb.mon.degree)
            .then(cmp_module_term(pb, &tb.mon, pa, &ta.mon, split, ctx))
    });
    basis
}

/// Reduced Groebner basis of an ideal.
pub fn ideal_gb(gens: &[Polynomial], ctx: &PolyCtx) -> Vec<Polynomial> {
    let vecs: Vec<VectorPoly> =
        gens.iter().filter(|f| !f.is_zero()).map(|f| VectorPoly::from_poly(f.clone())).collect();
    buchberger(&vecs, 1, ctx).into_iter().map(|v| v.comps.into_iter().next().unwrap()).collect()
}

/// Normal form of a polynomial against an ideal Groebner basis.
pub fn ideal_nf(f: &Polynomial, gb: &[Polynomial], ctx: &PolyCtx) -> Polynomial {
    let v = VectorPoly::from_poly(f.clone());
    let basis: Vec<VectorPoly> = gb.iter().map(|g| VectorPoly::from_poly(g.clone())).collect();
    normal_form_vec(&v, &basis, 1, ctx).comps.into_iter().next().unwrap()
}

/// A submodule of P^rank given by generators, with the augmented Groebner
/// basis that answers membership, lifting and syzygy questions.
pub struct SubmoduleGb {
    pub rank: usize,
    pub ngens: usize,
    pub gb: Vec<VectorPoly>,
    ctx: PolyCtx,
}

impl SubmoduleGb {
    pub fn new(gens: &[VectorPoly], rank: usize, ctx: &PolyCtx) -> SubmoduleGb {
        let ngens = gens.len();
        let nvars = ctx.nvars();
        let aug: Vec<VectorPoly> = gens
            .iter()
            .enumerate()
            .map(|(i, g)| g.concat(&VectorPoly::unit(i, ngens, nvars)))
            .collect();
        let gb = buchberger(&aug, rank, ctx);
        SubmoduleGb { rank, ngens, gb, ctx: ctx.clone() }
    }

    fn augment(&self, v: &VectorPoly) -> VectorPoly {
        v.concat(&VectorPoly::zero(self.ngens))
    }

    /// Normal form of `v` modulo the submodule.
    pub fn nf(&self, v: &VectorPoly) -> VectorPoly {
        let r = normal_form_vec(&self.augment(v), &self.gb, self.rank, &self.ctx);
        r.slice(0, self.rank)
    }

    pub fn contains(&self, v: &VectorPoly) -> bool {
        self.nf(v).is_zero()
    }

    /// Coefficients `c` with `sum c_i * gens_i = v`, if `v` is a member.
    pub fn lift(&self, v: &VectorPoly) -> Option<Vec<Polynomial>> {
        let r = normal_form_vec(&self.augment(v), &self.gb, self.rank, &self.ctx);
        if !r.slice(0, self.rank).is_zero() {
            return None;
        }
        Some(r.slice(self.rank, self.rank + self.ngens).neg(&self.ctx).comps)
    }

    /// Generators of the syzygy module of the original generators.
    pub fn syzygies(&self) -> Vec<VectorPoly> {
        self.gb
            .iter()
            .filter(|g| g.slice(0, self.rank).is_zero())
            .map(|g| g.slice(self.rank, self.rank + self.ngens))
            .collect()
    }

    /// A Groebner basis of the submodule itself.
    pub fn gens_gb(&self) -> Vec<VectorPoly> {
        self.gb
            .iter()
            .filter(|g| !g.slice(0, self.rank).is_zero())
            .map(|g| g.slice(0, self.rank))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::Fp;
    use crate::monomial::MonomialOrder;

    fn ctx2() -> PolyCtx {
        PolyCtx { field: Fp::new(101), weights: vec![1, 1], order: MonomialOrder::GrevLex }
    }

    fn pvar(i: usize, ctx: &PolyCtx) -> Polynomial {
        Polynomial::variable(i, ctx)
    }

    #[test]
    fn already_reduced_basis() {
        let ctx = ctx2();
        let gb = ideal_gb(&[pvar(0, &ctx), pvar(1, &ctx)], &ctx);
        assert_eq!(gb.len(), 2);
        assert_eq!(gb[0], pvar(0, &ctx));
        assert_eq!(gb[1], pvar(1, &ctx));
    }

    #[test]
    fn spair_reduction_example() {
        // {x*y - 1, y^2 - 1} over F_101[x,y] grevlex: basis contains x - y
        let ctx = ctx2();
        let x = pvar(0, &ctx);
        let y = pvar(1, &ctx);
        let one = Polynomial::one(2);
        let f = x.mul(&y, &ctx).sub(&one, &ctx);
        let g = y.mul(&y, &ctx).sub(&one, &ctx);
        let gb = ideal_gb(&[f, g], &ctx);
        let xmy = x.sub(&y, &ctx);
        assert!(gb.contains(&xmy), "gb = {:?}", gb);
        // and the basis is a GB: nf of x - y^3 is 0 etc.
        let y3 = y.mul(&y, &ctx).mul(&y, &ctx);
        assert!(ideal_nf(&x.sub(&y3, &ctx), &gb, &ctx).is_zero());
    }

    #[test]
    fn principal_ideal_monic() {
        let ctx = ctx2();
        let x = pvar(0, &ctx);
        let f = x.scale(7, &ctx);
        let gb = ideal_gb(&[f], &ctx);
        assert_eq!(gb, vec![x]);
    }

    #[test]
    fn normal_form_examples() {
        let ctx = ctx2();
        let x = pvar(0, &ctx);
        let y = pvar(1, &ctx);
        let gb = ideal_gb(&[x.clone()], &ctx);
        // x^2 -> 0
        assert!(ideal_nf(&x.mul(&x, &ctx), &gb, &ctx).is_zero());
        // x*y + y^2 -> y^2
        let f = x.mul(&y, &ctx).add(&y.mul(&y, &ctx), &ctx);
        assert_eq!(ideal_nf(&f, &gb, &ctx), y.mul(&y, &ctx));
        // empty basis: identity
        assert_eq!(ideal_nf(&f, &[], &ctx), f);
    }

    #[test]
    fn koszul_syzygy() {
        // syzygies of (x, y) in P^1: generated by (y, -x)
        let ctx = ctx2();
        let x = pvar(0, &ctx);
        let y = pvar(1, &ctx);
        let gens = vec![VectorPoly::from_poly(x.clone()), VectorPoly::from_poly(y.clone())];
        let sub = SubmoduleGb::new(&gens, 1, &ctx);
        let syz = sub.syzygies();
        assert_eq!(syz.len(), 1);
        // the syzygy s satisfies s_0 * x + s_1 * y = 0
        let check = syz[0].comps[0].mul(&x, &ctx).add(&syz[0].comps[1].mul(&y, &ctx), &ctx);
        assert!(check.is_zero());
        assert!(!syz[0].comps[0].is_zero() && !syz[0].comps[1].is_zero());
    }

    #[test]
    fn lift_recovers_membership() {
        let ctx = ctx2();
        let x = pvar(0, &ctx);
        let y = pvar(1, &ctx);
        let gens = vec![VectorPoly::from_poly(x.clone()), VectorPoly::from_poly(y.clone())];
        let sub = SubmoduleGb::new(&gens, 1, &ctx);
        let f = x.mul(&x, &ctx).add(&x.mul(&y, &ctx), &ctx); // x^2 + xy
        let c = sub.lift(&VectorPoly::from_poly(f.clone())).unwrap();
        let rebuilt = c[0].mul(&x, &ctx).add(&c[1].mul(&y, &ctx), &ctx);
        assert_eq!(rebuilt, f);
        assert!(sub.lift(&VectorPoly::from_poly(Polynomial::one(2))).is_none());
    }
}
