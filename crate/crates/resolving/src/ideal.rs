//! Ideal arithmetic in the ambient polynomial ring: sum, product,
//! intersection, quotient and elimination, radical membership by the
//! Rabinowitsch trick, and Hilbert series via the leading-term module.

use crate::error::Error;
use crate::groebner::{ideal_gb, ideal_nf, VectorPoly};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use std::collections::BTreeMap;

/// An ideal of the polynomial ring with its reduced Groebner basis cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub gens: Vec<Polynomial>,
    pub gb: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(gens: Vec<Polynomial>, ring: &PolyRing) -> Ideal {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|f| !f.is_zero()).collect();
        let gb = ideal_gb(&gens, &ring.ctx());
        Ideal { gens, gb }
    }

    pub fn zero() -> Ideal {
        Ideal { gens: vec![], gb: vec![] }
    }

    pub fn unit(ring: &PolyRing) -> Ideal {
        let one = Polynomial::one(ring.nvars());
        Ideal { gens: vec![one.clone()], gb: vec![one] }
    }

    pub fn is_zero(&self) -> bool {
        self.gb.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb.iter().any(|f| f.is_constant() && !f.is_zero())
    }

    pub fn contains(&self, f: &Polynomial, ring: &PolyRing) -> bool {
        ideal_nf(f, &self.gb, &ring.ctx()).is_zero()
    }

    pub fn nf(&self, f: &Polynomial, ring: &PolyRing) -> Polynomial {
        ideal_nf(f, &self.gb, &ring.ctx())
    }

    pub fn contains_ideal(&self, other: &Ideal, ring: &PolyRing) -> bool {
        other.gb.iter().all(|f| self.contains(f, ring))
    }

    pub fn sum(&self, other: &Ideal, ring: &PolyRing) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(gens, ring)
    }

    pub fn product(&self, other: &Ideal, ring: &PolyRing) -> Ideal {
        let ctx = ring.ctx();
        let mut gens = Vec::new();
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul(g, &ctx));
            }
        }
        Ideal::new(gens, ring)
    }

    /// Intersection via one new variable t: eliminate t from t*I + (1-t)*J.
    pub fn intersection(&self, other: &Ideal, ring: &PolyRing) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero();
        }
        let tname = ring.fresh_var_name("t");
        let ext = ring.extended(&[(tname, 1)]);
        let t_idx = ext.nvars() - 1;
        let ctx = ext.ctx();
        let t = Polynomial::variable(t_idx, &ctx);
        let one_minus_t = Polynomial::one(ext.nvars()).sub(&t, &ctx);
        let mut gens = Vec::new();
        for f in &self.gens {
            gens.push(f.extend_vars(1).mul(&t, &ctx));
        }
        for g in &other.gens {
            gens.push(g.extend_vars(1).mul(&one_minus_t, &ctx));
        }
        let eliminated = eliminate_vars(&ext, &gens, &[t_idx]);
        let base: Vec<Polynomial> = eliminated
            .into_iter()
            .map(|f| truncate_vars(&f, ring.nvars()).normalize(&ring.ctx()))
            .collect();
        Ideal::new(base, ring)
    }

    /// Ideal quotient I : J, computed generator by generator as
    /// (I cap (g)) / g.
    pub fn quotient(&self, other: &Ideal, ring: &PolyRing) -> Ideal {
        if other.is_zero() {
            return Ideal::unit(ring);
        }
        let ctx = ring.ctx();
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            if g.is_zero() {
                continue;
            }
            let principal = Ideal::new(vec![g.clone()], ring);
            let meet = self.intersection(&principal, ring);
            let quot_gens: Vec<Polynomial> =
                meet.gb.iter().map(|f| f.div_exact(g, &ctx)).collect();
            let q = Ideal::new(quot_gens, ring);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q, ring),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(ring))
    }

    /// Eliminate the given variables; generators of the contraction to the
    /// subring in the remaining variables (still expressed in the full ring).
    pub fn eliminate(&self, vars: &[usize], ring: &PolyRing) -> Ideal {
        let polys = eliminate_vars(ring, &self.gens, vars);
        Ideal::new(polys, ring)
    }

    /// f in sqrt(I), by testing 1 in I + (1 - t*f).
    pub fn radical_contains(&self, f: &Polynomial, ring: &PolyRing) -> bool {
        if f.is_zero() || self.is_unit() {
            return true;
        }
        let tname = ring.fresh_var_name("t");
        let ext = ring.extended(&[(tname, 1)]);
        let t_idx = ext.nvars() - 1;
        let ctx = ext.ctx();
        let t = Polynomial::variable(t_idx, &ctx);
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.extend_vars(1)).collect();
        gens.push(Polynomial::one(ext.nvars()).sub(&f.extend_vars(1).mul(&t, &ctx), &ctx));
        let gb = ideal_gb(&gens, &ctx);
        gb.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    /// All generators homogeneous?
    pub fn check_homogeneous(&self, ring: &PolyRing) -> Result<(), Error> {
        for g in &self.gens {
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous(format!(
                    "ideal generator {} is not homogeneous",
                    ring.poly_to_string(g)
                )));
            }
        }
        Ok(())
    }
}

/// Groebner-basis elimination of a set of variables from a generator list.
fn eliminate_vars(ring: &PolyRing, gens: &[Polynomial], vars: &[usize]) -> Vec<Polynomial> {
    let n = ring.nvars();
    let k = vars.len();
    // permutation sending eliminated variables to the front
    let mut perm = vec![usize::MAX; n];
    for (slot, &v) in vars.iter().enumerate() {
        perm[v] = slot;
    }
    let mut next = k;
    for i in 0..n {
        if perm[i] == usize::MAX {
            perm[i] = next;
            next += 1;
        }
    }
    let mut weights = vec![0u32; n];
    for i in 0..n {
        weights[perm[i]] = ring.weights[i];
    }
    let ctx = crate::poly::PolyCtx {
        field: ring.field(),
        weights,
        order: MonomialOrder::Elim(k),
    };
    let permuted: Vec<Polynomial> =
        gens.iter().map(|f| f.permute_vars(&perm).normalize(&ctx)).collect();
    let gb = ideal_gb(&permuted, &ctx);
    // inverse permutation
    let mut inv = vec![0usize; n];
    for i in 0..n {
        inv[perm[i]] = i;
    }
    gb.into_iter()
        .filter(|f| f.terms.iter().all(|t| t.mon.exps[..k].iter().all(|&e| e == 0)))
        .map(|f| f.permute_vars(&inv).normalize(&ring.ctx()))
        .collect()
}

fn truncate_vars(f: &Polynomial, nvars: usize) -> Polynomial {
    Polynomial {
        terms: f
            .terms
            .iter()
            .map(|t| crate::poly::Term {
                coeff: t.coeff,
                mon: Monomial { exps: t.mon.exps[..nvars].to_vec(), degree: t.mon.degree },
            })
            .collect(),
    }
}

/// Numerator of the Hilbert series over the common denominator
/// prod_i (1 - u^{d_i}); a Laurent polynomial in u with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertNumerator(pub BTreeMap<i64, i64>);

impl HilbertNumerator {
    pub fn zero() -> Self {
        HilbertNumerator(BTreeMap::new())
    }

    pub fn monomial(power: i64, coeff: i64) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(power, coeff);
        }
        HilbertNumerator(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_assign(&mut self, other: &Self, sign: i64) {
        for (&k, &v) in &other.0 {
            let e = self.0.entry(k).or_insert(0);
            *e += sign * v;
            if *e == 0 {
                self.0.remove(&k);
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = BTreeMap::new();
        for (&a, &ca) in &self.0 {
            for (&b, &cb) in &other.0 {
                let e = out.entry(a + b).or_insert(0);
                *e += ca * cb;
            }
        }
        out.retain(|_, v| *v != 0);
        HilbertNumerator(out)
    }

    pub fn shift(&self, by: i64) -> Self {
        HilbertNumerator(self.0.iter().map(|(&k, &v)| (k + by, v)).collect())
    }

    /// Multiplicity of the root u = 1.
    pub fn vanishing_order_at_one(&self) -> u32 {
        if self.is_zero() {
            return u32::MAX;
        }
        // shift to ordinary polynomial
        let min = *self.0.keys().next().unwrap();
        let max = *self.0.keys().last().unwrap();
        let mut coeffs = vec![0i64; (max - min + 1) as usize];
        for (&k, &v) in &self.0 {
            coeffs[(k - min) as usize] = v;
        }
        let mut order = 0;
        loop {
            let sum: i64 = coeffs.iter().sum();
            if sum != 0 {
                return order;
            }
            // divide by (1 - u): q_k = sum_{j<=k} p_j, top coefficient drops
            let mut acc = 0i64;
            for c in coeffs.iter_mut() {
                acc += *c;
                *c = acc;
            }
            coeffs.pop();
            order += 1;
            if coeffs.is_empty() {
                return order;
            }
        }
    }
}

/// Minimalize a list of monomial generators (drop divisible ones).
fn minimalize_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree);
    let mut out: Vec<Monomial> = Vec::new();
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Numerator of the Hilbert series of P/(monomial ideal), by the standard
/// pivot-variable recursion.
pub fn monomial_quotient_numerator(gens: Vec<Monomial>, weights: &[u32]) -> HilbertNumerator {
    let gens = minimalize_monomials(gens);
    if gens.iter().any(|m| m.is_one()) {
        return HilbertNumerator::zero();
    }
    if gens.is_empty() {
        return HilbertNumerator::monomial(0, 1);
    }
    // pure powers of distinct variables: complete intersection base case
    let mut pure: Vec<Option<usize>> = gens
        .iter()
        .map(|m| {
            let support: Vec<usize> =
                m.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect();
            if support.len() == 1 { Some(support[0]) } else { None }
        })
        .collect();
    pure.sort();
    let all_pure = pure.iter().all(|p| p.is_some());
    let distinct = pure.windows(2).all(|w| w[0] != w[1]);
    if all_pure && distinct {
        let mut acc = HilbertNumerator::monomial(0, 1);
        for m in &gens {
            let mut factor = HilbertNumerator::monomial(0, 1);
            factor.add_assign(&HilbertNumerator::monomial(m.degree as i64, 1), -1);
            acc = acc.mul(&factor);
        }
        return acc;
    }
    // pivot: the variable appearing in the most generators
    let nvars = weights.len();
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (i, &e) in m.exps.iter().enumerate() {
            if e > 0 {
                counts[i] += 1;
            }
        }
    }
    let pivot = (0..nvars).max_by_key(|&i| counts[i]).unwrap();
    let xj = Monomial::var(pivot, nvars, weights);
    // I + (x_j)
    let mut plus = gens.clone();
    plus.push(xj.clone());
    // I : x_j
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exps[pivot] > 0 {
                let mut exps = m.exps.clone();
                exps[pivot] -= 1;
                Monomial::from_exps(exps, weights)
            } else {
                m.clone()
            }
        })
        .collect();
    let mut out = monomial_quotient_numerator(plus, weights);
    out.add_assign(&monomial_quotient_numerator(colon, weights).shift(weights[pivot] as i64), 1);
    out
}

/// Hilbert numerator of F/W for a submodule W of a graded free module with
/// generator degrees `twists`, from a Groebner basis of W.
pub fn quotient_module_numerator(
    w_gb: &[VectorPoly],
    twists: &[i64],
    ring: &PolyRing,
) -> HilbertNumerator {
    let ctx = ring.ctx();
    let mut acc = HilbertNumerator::zero();
    for (pos, &tw) in twists.iter().enumerate() {
        let lt: Vec<Monomial> = w_gb
            .iter()
            .filter_map(|v| {
                crate::groebner::lead_term(v, twists.len(), &ctx)
                    .filter(|(p, _)| *p == pos)
                    .map(|(_, t)| t.mon.clone())
            })
            .collect();
        acc.add_assign(&monomial_quotient_numerator(lt, &ring.weights).shift(tw), 1);
    }
    acc
}

/// Count of standard monomials (a k-basis of the quotient) of weighted
/// degree `degree` in coordinate with twist `tw` subtracted; used by the
/// graded linear-algebra cross checks.
pub fn standard_monomials_of_degree(
    lt: &[Monomial],
    degree: u32,
    weights: &[u32],
) -> Vec<Monomial> {
    let mut out = Vec::new();
    let nvars = weights.len();
    let mut exps = vec![0u16; nvars];
    enumerate_monomials(&mut exps, 0, degree, weights, &mut |m: &Monomial| {
        if !lt.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    });
    out
}

/// All monomials of exact weighted degree `degree`.
pub fn monomials_of_degree(degree: u32, weights: &[u32]) -> Vec<Monomial> {
    standard_monomials_of_degree(&[], degree, weights)
}

fn enumerate_monomials(
    exps: &mut Vec<u16>,
    var: usize,
    remaining: u32,
    weights: &[u32],
    f: &mut impl FnMut(&Monomial),
) {
    if var == weights.len() {
        if remaining == 0 {
            f(&Monomial::from_exps(exps.clone(), weights));
        }
        return;
    }
    let w = weights[var];
    let max = remaining / w;
    for e in 0..=max {
        exps[var] = e as u16;
        enumerate_monomials(exps, var + 1, remaining - e * w, weights, f);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> PolyRing {
        PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap()
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = ring2();
        let i = Ideal::new(vec![r.parse_poly("x").unwrap()], &r);
        let j = Ideal::new(vec![r.parse_poly("y").unwrap()], &r);
        let m = i.intersection(&j, &r);
        assert_eq!(m.gb.len(), 1);
        assert_eq!(r.poly_to_string(&m.gb[0]), "x*y");
    }

    #[test]
    fn sum_is_generator_union() {
        let r = ring2();
        let i = Ideal::new(vec![r.parse_poly("x").unwrap()], &r);
        let j = Ideal::new(vec![r.parse_poly("y").unwrap()], &r);
        let s = i.sum(&j, &r);
        assert!(s.contains(&r.parse_poly("x").unwrap(), &r));
        assert!(s.contains(&r.parse_poly("y").unwrap(), &r));
        assert!(!s.is_unit());
    }

    #[test]
    fn quotient_xy_by_x() {
        let r = ring2();
        let i = Ideal::new(vec![r.parse_poly("x*y").unwrap()], &r);
        let j = Ideal::new(vec![r.parse_poly("x").unwrap()], &r);
        let q = i.quotient(&j, &r);
        assert_eq!(q.gb.len(), 1);
        assert_eq!(r.poly_to_string(&q.gb[0]), "y");
    }

    #[test]
    fn radical_membership() {
        let r = ring2();
        let i = Ideal::new(vec![r.parse_poly("x^2").unwrap()], &r);
        assert!(i.radical_contains(&r.parse_poly("x").unwrap(), &r));
        let j = Ideal::new(vec![r.parse_poly("x*y").unwrap()], &r);
        assert!(!j.radical_contains(&r.parse_poly("x").unwrap(), &r));
        let u = Ideal::new(
            vec![r.parse_poly("x").unwrap(), r.parse_poly("1 - x").unwrap()],
            &r,
        );
        assert!(u.radical_contains(&Polynomial::one(2), &r));
    }

    #[test]
    fn hilbert_numerators() {
        let r = ring2();
        // P itself
        let n = monomial_quotient_numerator(vec![], &r.weights);
        assert_eq!(n, HilbertNumerator::monomial(0, 1));
        // k = P/(x,y): numerator (1-u)^2
        let gens = vec![
            Monomial::from_exps(vec![1, 0], &r.weights),
            Monomial::from_exps(vec![0, 1], &r.weights),
        ];
        let n = monomial_quotient_numerator(gens, &r.weights);
        let mut expect = HilbertNumerator::monomial(0, 1);
        expect.add_assign(&HilbertNumerator::monomial(1, 1), -2);
        expect.add_assign(&HilbertNumerator::monomial(2, 1), 1);
        assert_eq!(n, expect);
        assert_eq!(n.vanishing_order_at_one(), 2);
        // P/(x): numerator 1-u, one factor vanishes
        let n = monomial_quotient_numerator(
            vec![Monomial::from_exps(vec![1, 0], &r.weights)],
            &r.weights,
        );
        assert_eq!(n.vanishing_order_at_one(), 1);
        // non-CI case: (x^2, xy)
        let gens = vec![
            Monomial::from_exps(vec![2, 0], &r.weights),
            Monomial::from_exps(vec![1, 1], &r.weights),
        ];
        let n = monomial_quotient_numerator(gens, &r.weights);
        // dim of P/(x^2,xy) is 1 (the line x=0)
        assert_eq!(2 - n.vanishing_order_at_one(), 1);
    }

    #[test]
    fn elimination_to_constants() {
        let r = ring2();
        let i = Ideal::new(vec![r.parse_poly("x - y").unwrap()], &r);
        let e = i.eliminate(&[0, 1], &r);
        assert!(e.is_zero());
        let u = Ideal::new(
            vec![r.parse_poly("x").unwrap(), r.parse_poly("x + 1").unwrap()],
            &r,
        );
        let e = u.eliminate(&[0, 1], &r);
        assert!(e.is_unit());
    }

    #[test]
    fn standard_monomial_count() {
        let r = ring2();
        // P/(x): standard monomials of degree 3 = {y^3}
        let lt = vec![Monomial::from_exps(vec![1, 0], &r.weights)];
        assert_eq!(standard_monomials_of_degree(&lt, 3, &r.weights).len(), 1);
        assert_eq!(monomials_of_degree(3, &r.weights).len(), 4);
    }
}
