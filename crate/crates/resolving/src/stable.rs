//! Stable module theory over Gorenstein rings: free summand splitting,
//! cosyzygies, MCM approximations and the finite-pd/MCM glueing, plus the
//! four-term transpose exact sequence and explicit isomorphism search.

use crate::error::Error;
use crate::groebner::VectorPoly;
use crate::gring::GradedRing;
use crate::homalg::{hom, homology, image, kernel, PresMap};
use crate::ideal::{monomials_of_degree, Ideal};
use crate::module::ModulePresentation;
use crate::poly::Polynomial;
use std::sync::Arc;

/// Split off the maximal free summand: returns the twists of the free part
/// and a summand-free complement (the double transpose). Cross-checked
/// against the trace-ideal criterion.
pub fn free_summand_split(
    m: &ModulePresentation,
) -> Result<(Vec<i64>, ModulePresentation), Error> {
    let reduced = m.transpose().transpose();
    let (mg, _) = m.minimal_betti();
    let (rg, _) = reduced.minimal_betti();
    // multiset difference of generator degrees
    let mut free = Vec::new();
    let mut it = rg.iter().peekable();
    for &t in &mg {
        match it.peek() {
            Some(&&r) if r == t => {
                it.next();
            }
            _ => free.push(t),
        }
    }
    if free.len() + rg.len() != mg.len() {
        return Err(Error::Internal(
            "double transpose gained generators".into(),
        ));
    }
    // trace-ideal criterion: a free summand exists iff the images of all
    // maps M -> R generate the unit ideal
    let ring = &m.ring;
    let h = hom(m, &ModulePresentation::ring_module(ring.clone()))?;
    let mut tr: Vec<Polynomial> = ring.defining.gens.clone();
    for f in &h.maps {
        for c in &f.cols {
            if !c.comps[0].is_zero() {
                tr.push(c.comps[0].clone());
            }
        }
    }
    let trace = Ideal::new(tr, &ring.poly);
    if trace.is_unit() != !free.is_empty() {
        return Err(Error::Internal(
            "trace-ideal criterion disagrees with double transpose".into(),
        ));
    }
    Ok((free, reduced))
}

/// The embedding of an MCM module Z into the dual of a free cover of Z^*:
/// returns (Z^*, the twists of Q = G_0^*, the columns of Z -> Q indexed by
/// the minimal generators of Z).
fn coembedding(
    z: &ModulePresentation,
) -> Result<(ModulePresentation, Vec<i64>, Vec<VectorPoly>), Error> {
    let zm = z.minimal_presentation();
    let h = hom(&zm, &ModulePresentation::ring_module(z.ring.clone()))?;
    let qtw: Vec<i64> = h.module.gens.iter().map(|t| -t).collect();
    let b0 = zm.gens.len();
    let iota: Vec<VectorPoly> = (0..b0)
        .map(|j| VectorPoly {
            comps: h.maps.iter().map(|f| f.cols[j].comps[0].clone()).collect(),
        })
        .collect();
    Ok((h.module, qtw, iota))
}

/// Omega^{-n} of an MCM module over a Gorenstein ring, by n-fold
/// Hom(Omega(Hom(-, R)), R).
pub fn cosyzygy(m: &ModulePresentation, n: usize) -> Result<ModulePresentation, Error> {
    let ring = &m.ring;
    if !ring.is_gorenstein {
        return Err(Error::UnsupportedRing(
            "cosyzygy requires a Gorenstein ring".into(),
        ));
    }
    if !(m.is_zero() || m.is_mcm()?) {
        return Err(Error::Invalid("cosyzygy requires an MCM module".into()));
    }
    let mut z = m.minimal_presentation();
    for _ in 0..n {
        if z.is_zero() {
            break;
        }
        let zd = z.dual();
        let s = zd.syzygy(1)?;
        z = s.dual().minimal_presentation();
    }
    Ok(z)
}

/// Solve h * a = b for a map of free modules h: R^{q_rank} -> R^{f_rank},
/// where the columns of `a` and `b` are indexed by a common generator list.
pub fn extend_map(
    ring: &Arc<GradedRing>,
    a_cols: &[VectorPoly],
    b_cols: &[VectorPoly],
    q_rank: usize,
    f_rank: usize,
) -> Option<Vec<VectorPoly>> {
    let q = ring.quot_ctx();
    let nv = a_cols.len();
    let at: Vec<VectorPoly> = (0..q_rank)
        .map(|qc| VectorPoly {
            comps: (0..nv).map(|v| a_cols[v].comps[qc].clone()).collect(),
        })
        .collect();
    let sub = q.submodule(&at, nv);
    let mut rows = Vec::with_capacity(f_rank);
    for f in 0..f_rank {
        let t = VectorPoly {
            comps: (0..nv).map(|v| b_cols[v].comps[f].clone()).collect(),
        };
        rows.push(sub.lift(&t, &q)?);
    }
    Some(
        (0..q_rank)
            .map(|qc| VectorPoly {
                comps: (0..f_rank).map(|f| rows[f][qc].clone()).collect(),
            })
            .collect(),
    )
}

/// An MCM approximation 0 -> F -> C -> X -> 0 with pd F finite and C
/// maximal Cohen-Macaulay; n is the least syzygy index that becomes MCM.
pub struct McmApproximation {
    pub n: usize,
    pub f_part: ModulePresentation,
    pub c_part: ModulePresentation,
    pub incl: PresMap,
    pub onto: PresMap,
}

pub fn mcm_approximation(x: &ModulePresentation) -> Result<McmApproximation, Error> {
    let ring = x.ring.clone();
    if !ring.is_gorenstein {
        return Err(Error::UnsupportedRing(
            "MCM approximation requires a Gorenstein ring".into(),
        ));
    }
    let xm = x.minimal_presentation();
    let dim = ring.dim as usize;
    let mut n = 0usize;
    let mut z = xm.clone();
    while !(z.is_zero() || z.is_mcm()?) {
        n += 1;
        if n > dim {
            return Err(Error::Internal(
                "syzygy fails to become MCM by dim R".into(),
            ));
        }
        z = xm.syzygy(n)?;
    }
    if n == 0 {
        let zero = ModulePresentation::zero(ring.clone());
        let incl = PresMap::zero_from(zero.clone(), xm.clone());
        let onto = PresMap::identity(&xm);
        return Ok(McmApproximation { n, f_part: zero, c_part: xm, incl, onto });
    }

    let res = xm.free_resolution(n + 1);
    let f0 = res.f0.twists.clone();
    // chain maps f_i: Q_i -> F_{n-1-i} along the co-resolution of Z,
    // starting from the biduality square over Z = Omega^n X
    let (cpres, fmap_cols) = if z.is_free() {
        (ModulePresentation::zero(ring.clone()), vec![])
    } else {
        let dn = &res.maps[n - 1];
        let (zstar, qtw, iota) = coembedding(&z)?;
        let mut prev = extend_map(&ring, &iota, &dn.cols, qtw.len(), dn.target.rank())
            .ok_or_else(|| Error::Internal("chain lift over the coembedding failed".into()))?;
        let mut prev_qtw = qtw;
        let mut crels = iota;
        if n > 1 {
            let cores = zstar.free_resolution(n - 1);
            if cores.length() < n - 1 {
                return Err(Error::Internal("dual resolution terminated early".into()));
            }
            let ctx = ring.poly.ctx();
            let q = ring.quot_ctx();
            for i in 1..n {
                let qi = cores.maps[i - 1].dual();
                let d = &res.maps[n - i - 1];
                // rhs = d_{n-i} . f_{i-1}
                let rhs: Vec<VectorPoly> = prev
                    .iter()
                    .map(|col| {
                        let mut acc = VectorPoly::zero(d.target.rank());
                        for (k, e) in col.comps.iter().enumerate() {
                            if !e.is_zero() {
                                acc = acc.add(&d.cols[k].mul_poly(e, &ctx), &ctx);
                            }
                        }
                        q.nf_vec(&acc)
                    })
                    .collect();
                prev = extend_map(&ring, &qi.cols, &rhs, qi.target.rank(), d.target.rank())
                    .ok_or_else(|| Error::Internal("chain lift failed".into()))?;
                prev_qtw = qi.target.twists.clone();
                crels = qi.cols.clone();
            }
        }
        let c = ModulePresentation::new(ring.clone(), prev_qtw, crels)?;
        (c, prev)
    };

    // C' = C (+) free cover of X, mapped onto X by [f | id]
    let freecover = ModulePresentation::free(ring.clone(), f0.clone());
    let csum = cpres.direct_sum(&freecover)?;
    let b0x = f0.len();
    let mut cols: Vec<VectorPoly> = fmap_cols;
    for j in 0..b0x {
        cols.push(VectorPoly::unit(j, b0x, ring.nvars()));
    }
    let onto = PresMap::new(csum.clone(), xm.clone(), 0, cols)?;
    if !onto.is_well_defined() || !onto.is_surjective() {
        return Err(Error::Internal("approximation map is not onto".into()));
    }
    let (y, incl) = kernel(&onto);
    if !y.pd().is_finite() {
        return Err(Error::Internal("kernel of the approximation has infinite pd".into()));
    }
    if !csum.is_mcm()? {
        return Err(Error::Internal("approximation middle term is not MCM".into()));
    }
    Ok(McmApproximation { n, f_part: y, c_part: csum, incl, onto })
}

/// The glueing sequence 0 -> X -> L -> Omega^{-1}C -> 0 built from the MCM
/// approximation by pushing out along C into a free module; L has finite pd
/// and the cokernel is MCM.
pub struct LciSplit {
    pub pd_part: ModulePresentation,
    pub mcm_part: ModulePresentation,
    pub x_to_l: PresMap,
    pub l_to_c: PresMap,
}

pub fn lci_split(m: &ModulePresentation) -> Result<LciSplit, Error> {
    let ring = m.ring.clone();
    let a = mcm_approximation(m)?;
    let xm = a.onto.target.clone();
    if a.c_part.is_zero() {
        // X already has finite pd: the split is (X, 0)
        let zero = ModulePresentation::zero(ring.clone());
        return Ok(LciSplit {
            pd_part: xm.clone(),
            mcm_part: zero.clone(),
            x_to_l: PresMap::identity(&xm),
            l_to_c: PresMap::zero_from(xm, zero),
        });
    }
    let (_, qtw, iota) = coembedding(&a.c_part)?;
    let ctx = ring.poly.ctx();
    let q = ring.quot_ctx();
    let apply_iota = |v: &VectorPoly| {
        let mut acc = VectorPoly::zero(qtw.len());
        for (j, e) in v.comps.iter().enumerate() {
            if !e.is_zero() {
                acc = acc.add(&iota[j].mul_poly(e, &ctx), &ctx);
            }
        }
        q.nf_vec(&acc)
    };
    // L = Q / iota(F-part)
    let lrels: Vec<VectorPoly> = a.incl.cols.iter().map(&apply_iota).collect();
    let lpres = ModulePresentation::new(ring.clone(), qtw.clone(), lrels)?;
    // X -> L: lift generators of X through C' -> X, then embed
    let mut spanning = a.onto.cols.clone();
    spanning.extend(xm.rels.iter().cloned());
    let sub = q.submodule(&spanning, xm.gens.len());
    let nvars = ring.nvars();
    let mut xcols = Vec::with_capacity(xm.gens.len());
    for j in 0..xm.gens.len() {
        let e = VectorPoly::unit(j, xm.gens.len(), nvars);
        let c = sub
            .lift(&e, &q)
            .ok_or_else(|| Error::Internal("approximation lost surjectivity".into()))?;
        let v = VectorPoly { comps: c[..a.onto.cols.len()].to_vec() };
        xcols.push(apply_iota(&v));
    }
    let x_to_l = PresMap::new(xm, lpres.clone(), 0, xcols)?;
    // mcm part: coker(iota) with the coordinate projection from L
    let omc = ModulePresentation::new(ring.clone(), qtw.clone(), iota.clone())?;
    let idcols = (0..qtw.len()).map(|j| VectorPoly::unit(j, qtw.len(), nvars)).collect();
    let l_to_c = PresMap::new(lpres.clone(), omc.clone(), 0, idcols)?;
    // verify the sequence and the classification postconditions
    if !x_to_l.is_well_defined() || !x_to_l.is_injective() {
        return Err(Error::Internal("glueing map X -> L is not injective".into()));
    }
    if !l_to_c.is_surjective() || !homology(&x_to_l, &l_to_c)?.is_zero() {
        return Err(Error::Internal("glueing sequence is not exact".into()));
    }
    if !lpres.pd().is_finite() {
        return Err(Error::Internal("pd part has infinite pd".into()));
    }
    if !omc.is_mcm()? {
        return Err(Error::Internal("cokernel of the coembedding is not MCM".into()));
    }
    Ok(LciSplit { pd_part: lpres, mcm_part: omc, x_to_l, l_to_c })
}

/// The verified exact sequence
/// 0 -> Ext^1(M,R) -> Tr M -> (Omega^2 M)^* -> Ext^2(M,R) -> 0.
pub struct TransposeSequence {
    pub e1: ModulePresentation,
    pub t: ModulePresentation,
    pub d: ModulePresentation,
    pub e2: ModulePresentation,
    pub alpha: PresMap,
    pub beta: PresMap,
    pub gamma: PresMap,
}

pub fn prop1_5_sequence(m: &ModulePresentation) -> Result<TransposeSequence, Error> {
    let ring = m.ring.clone();
    let q = ring.quot_ctx();
    let res = m.free_resolution(3);
    let rank = |i: usize| -> usize {
        if i == 0 {
            res.f0.rank()
        } else if i <= res.length() {
            res.maps[i - 1].source.rank()
        } else {
            0
        }
    };
    let neg_twists = |i: usize| -> Vec<i64> {
        if i == 0 {
            res.f0.twists.iter().map(|t| -t).collect()
        } else if i <= res.length() {
            res.maps[i - 1].source.twists.iter().map(|t| -t).collect()
        } else {
            vec![]
        }
    };
    // transpose of d_i: one column per basis element of F_i^*
    let dual_cols = |i: usize| -> Vec<VectorPoly> {
        if i > res.length() {
            return (0..rank(i - 1))
                .map(|_| VectorPoly::zero(rank(i)))
                .collect();
        }
        let d = &res.maps[i - 1];
        (0..rank(i - 1))
            .map(|r| VectorPoly {
                comps: d.cols.iter().map(|c| c.comps[r].clone()).collect(),
            })
            .collect()
    };

    // T = Tr M presented on the dual basis of F_1
    let t = ModulePresentation::new(ring.clone(), neg_twists(1), dual_cols(1))?;
    // E1 = ker(d_2^*) / im(d_1^*)
    let f1s = ModulePresentation::free(ring.clone(), neg_twists(1));
    let f2s = ModulePresentation::free(ring.clone(), neg_twists(2));
    let f3s = ModulePresentation::free(ring.clone(), neg_twists(3));
    let g1 = PresMap::new(f1s.clone(), f2s.clone(), 0, dual_cols(2))?;
    let (k1, incl1) = kernel(&g1);
    let sub1 = q.submodule(&incl1.cols, rank(1));
    let mut e1rels = k1.rels.clone();
    for v in dual_cols(1) {
        let c = sub1
            .lift(&v, &q)
            .ok_or_else(|| Error::Internal("d_1^* does not land in ker d_2^*".into()))?;
        let w = VectorPoly { comps: c[..incl1.cols.len()].to_vec() };
        if !w.is_zero() {
            e1rels.push(w);
        }
    }
    let e1 = ModulePresentation::new(ring.clone(), k1.gens.clone(), e1rels)?;
    let alpha = PresMap::new(e1.clone(), t.clone(), 0, incl1.cols.clone())?;
    // D = (Omega^2 M)^* = ker(d_3^*), with the induced map from T
    let g2 = PresMap::new(f2s.clone(), f3s, 0, dual_cols(3))?;
    let (k2, incl2) = kernel(&g2);
    let sub2 = q.submodule(&incl2.cols, rank(2));
    let mut bcols = Vec::with_capacity(t.gens.len());
    for v in dual_cols(2) {
        let c = sub2
            .lift(&v, &q)
            .ok_or_else(|| Error::Internal("d_2^* does not land in ker d_3^*".into()))?;
        bcols.push(VectorPoly { comps: c[..incl2.cols.len()].to_vec() });
    }
    let beta = PresMap::new(t.clone(), k2.clone(), 0, bcols.clone())?;
    // E2 = D / im(beta)
    let mut e2rels = k2.rels.clone();
    e2rels.extend(bcols.into_iter().filter(|v| !v.is_zero()));
    let e2 = ModulePresentation::new(ring.clone(), k2.gens.clone(), e2rels)?;
    let idcols = (0..k2.gens.len())
        .map(|j| VectorPoly::unit(j, k2.gens.len(), ring.nvars()))
        .collect();
    let gamma = PresMap::new(k2.clone(), e2.clone(), 0, idcols)?;
    // exactness at all four spots
    if !alpha.is_well_defined() || !alpha.is_injective() {
        return Err(Error::Internal("Ext^1 -> Tr is not injective".into()));
    }
    if !beta.is_well_defined() || !homology(&alpha, &beta)?.is_zero() {
        return Err(Error::Internal("sequence not exact at Tr".into()));
    }
    if !homology(&beta, &gamma)?.is_zero() {
        return Err(Error::Internal("sequence not exact at (Omega^2 M)^*".into()));
    }
    if !gamma.is_surjective() {
        return Err(Error::Internal("projection onto Ext^2 not surjective".into()));
    }
    // Im(middle map) agrees with Omega Tr Omega M up to free summands
    let (imf, _) = image(&beta);
    let otom = m.syzygy(1)?.transpose().syzygy(1)?;
    let (_, imf_red) = free_summand_split(&imf)?;
    let (_, otom_red) = free_summand_split(&otom)?;
    if imf_red.minimal_betti() != otom_red.minimal_betti() {
        return Err(Error::Internal(
            "image of the middle map differs from Omega Tr Omega M".into(),
        ));
    }
    Ok(TransposeSequence { e1, t, d: k2, e2, alpha, beta, gamma })
}

/// Search for an explicit degree-0 isomorphism. Equality of minimal Betti
/// data and Hilbert series is required first; then deterministic linear
/// combinations of Hom generators are tried and checked for surjectivity
/// (which suffices, degreewise, once the Hilbert series agree).
pub fn find_isomorphism(
    m: &ModulePresentation,
    n: &ModulePresentation,
) -> Result<Option<PresMap>, Error> {
    m.same_ring(n)?;
    if m.minimal_betti() != n.minimal_betti() || m.hilbert_numerator() != n.hilbert_numerator() {
        return Ok(None);
    }
    let mm = m.minimal_presentation();
    let nm = n.minimal_presentation();
    if mm.is_zero() {
        return Ok(Some(PresMap::zero_from(mm, nm)));
    }
    let ring = &m.ring;
    let h = hom(&mm, &nm)?;
    // degree-0 candidate maps: generators of twist 0 and monomial multiples
    // of generators of negative twist
    let ctx = ring.poly.ctx();
    let mut cands: Vec<PresMap> = Vec::new();
    for (g, f) in h.maps.iter().enumerate() {
        let tw = h.module.gens[g];
        if tw == 0 {
            cands.push(PresMap { degree: 0, ..f.clone() });
        } else if tw < 0 {
            for mon in monomials_of_degree((-tw) as u32, &ring.poly.weights) {
                let p = Polynomial::monomial(1, mon);
                let cols = f.cols.iter().map(|c| c.mul_poly(&p, &ctx)).collect();
                if let Ok(scaled) = PresMap::new(mm.clone(), nm.clone(), 0, cols) {
                    cands.push(scaled);
                }
            }
        }
    }
    let combine = |coeffs: &dyn Fn(usize) -> u32| -> PresMap {
        let mut cols = vec![VectorPoly::zero(nm.gens.len()); mm.gens.len()];
        for (i, c) in cands.iter().enumerate() {
            let a = coeffs(i) % ring.poly.p;
            if a == 0 {
                continue;
            }
            for (j, col) in c.cols.iter().enumerate() {
                cols[j] = cols[j].add(&col.scale(a, &ctx), &ctx);
            }
        }
        PresMap {
            source: mm.clone(),
            target: nm.clone(),
            degree: 0,
            cols: cols.iter().map(|c| ring.quot_ctx().nf_vec(c)).collect(),
        }
    };
    let mut trials: Vec<PresMap> = cands.clone();
    trials.push(combine(&|_| 1));
    trials.push(combine(&|i| (i as u32) + 1));
    trials.push(combine(&|i| ((i as u32) + 1) * ((i as u32) + 1)));
    for f in trials {
        if f.is_well_defined() && f.is_surjective() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::Pd;
    use crate::ring::PolyRing;

    fn regular2() -> Arc<GradedRing> {
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        GradedRing::new(p, vec![]).unwrap()
    }

    fn hyper2() -> Arc<GradedRing> {
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        let xy = p.parse_poly("x*y").unwrap();
        GradedRing::new(p, vec![xy]).unwrap()
    }

    fn cyclic(ring: &Arc<GradedRing>, gens: &[&str]) -> ModulePresentation {
        let polys: Vec<_> = gens.iter().map(|s| ring.poly.parse_poly(s).unwrap()).collect();
        ModulePresentation::cyclic(ring.clone(), &Ideal::new(polys, &ring.poly)).unwrap()
    }

    fn hilbert_exactness_ok(terms: &[&ModulePresentation]) -> bool {
        let mut acc = crate::ideal::HilbertNumerator::zero();
        let mut sign = 1i64;
        for t in terms {
            acc.add_assign(&t.hilbert_numerator(), sign);
            sign = -sign;
        }
        acc.is_zero()
    }

    #[test]
    fn splitting_free_summands() {
        let r = regular2();
        let k = ModulePresentation::residue_field(r.clone());
        let free = ModulePresentation::ring_module(r.clone());
        let m = free.direct_sum(&k).unwrap();
        let (f, red) = free_summand_split(&m).unwrap();
        assert_eq!(f, vec![0]);
        assert_eq!(red.minimal_betti(), k.minimal_betti());
        let r2 = ModulePresentation::free(r.clone(), vec![0, 1]);
        let (f, red) = free_summand_split(&r2).unwrap();
        assert_eq!(f, vec![0, 1]);
        assert!(red.is_zero());
        // Tr k has no free summand
        let (f, _) = free_summand_split(&k.transpose()).unwrap();
        assert!(f.is_empty());
    }

    #[test]
    fn cosyzygies_over_hypersurfaces() {
        let r = hyper2();
        let free = ModulePresentation::ring_module(r.clone());
        assert!(cosyzygy(&free, 1).unwrap().is_zero());
        // Omega^{-1}(R/(x)) ≅ R/(y) up to twist
        let mx = cyclic(&r, &["x"]);
        let my = cyclic(&r, &["y"]);
        let c = cosyzygy(&mx, 1).unwrap();
        let y = r.poly.parse_poly("y").unwrap();
        assert!(c.annihilator().contains(&y, &r.poly));
        assert_eq!(c.minimal_betti().0.len(), 1);
        assert_eq!(my.annihilator().gb, c.annihilator().gb);
        // non-MCM input rejected
        let k = ModulePresentation::residue_field(r.clone());
        assert!(cosyzygy(&k, 1).is_err());
        // Omega(Omega^{-1}) recovers the input stably over F101[x,y]/(x^2)
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        let x2 = p.parse_poly("x^2").unwrap();
        let ra = GradedRing::new(p, vec![x2]).unwrap();
        let ka = ModulePresentation::residue_field(ra.clone());
        let s1 = ka.syzygy(1).unwrap();
        let back = cosyzygy(&s1, 1).unwrap().syzygy(1).unwrap();
        let (_, red) = free_summand_split(&back).unwrap();
        let (_, s1red) = free_summand_split(&s1).unwrap();
        assert_eq!(red.minimal_betti(), s1red.minimal_betti());
    }

    #[test]
    fn mcm_approximation_of_k() {
        let r = hyper2();
        let k = ModulePresentation::residue_field(r.clone());
        let a = mcm_approximation(&k).unwrap();
        assert_eq!(a.n, 1);
        assert!(a.c_part.is_mcm().unwrap());
        assert!(a.f_part.pd().is_finite());
        assert!(a.onto.is_surjective());
        assert!(hilbert_exactness_ok(&[&a.f_part, &a.c_part, &k]));
        // MCM input gives n = 0
        let mx = cyclic(&r, &["x"]);
        let a = mcm_approximation(&mx).unwrap();
        assert_eq!(a.n, 0);
        assert!(a.f_part.is_zero());
        // free input
        let free = ModulePresentation::ring_module(r.clone());
        let a = mcm_approximation(&free).unwrap();
        assert_eq!(a.n, 0);
    }

    #[test]
    fn lci_split_of_k() {
        let r = hyper2();
        let k = ModulePresentation::residue_field(r.clone());
        let s = lci_split(&k).unwrap();
        assert!(s.pd_part.pd().is_finite());
        assert!(s.mcm_part.is_mcm().unwrap());
        assert!(hilbert_exactness_ok(&[&k, &s.pd_part, &s.mcm_part]));
        // free module: pd part free, mcm part zero
        let free = ModulePresentation::ring_module(r.clone());
        let s = lci_split(&free).unwrap();
        assert_eq!(s.pd_part.pd(), Pd::Finite(0));
        assert!(s.mcm_part.is_zero());
    }

    #[test]
    fn transpose_sequence_examples() {
        let r = regular2();
        // M = k: Ext^1 = 0, Tr k embeds in (Omega^2 k)^* ≅ R, cokernel ≅ k
        let k = ModulePresentation::residue_field(r.clone());
        let s = prop1_5_sequence(&k).unwrap();
        assert!(s.e1.is_zero());
        let (g, rels) = s.e2.minimal_betti();
        assert_eq!((g.len(), rels.len()), (1, 2));
        assert!(hilbert_exactness_ok(&[&s.e1, &s.t, &s.d, &s.e2]));
        // M = R/(x): Omega^2 M = 0, so Tr M ≅ Ext^1(M,R)
        let mx = cyclic(&r, &["x"]);
        let s = prop1_5_sequence(&mx).unwrap();
        assert!(s.d.is_zero() && s.e2.is_zero());
        assert_eq!(s.e1.minimal_betti(), mx.transpose().minimal_betti());
        // M free: everything zero
        let free = ModulePresentation::ring_module(r.clone());
        let s = prop1_5_sequence(&free).unwrap();
        assert!(s.e1.is_zero() && s.t.is_zero() && s.d.is_zero() && s.e2.is_zero());
    }

    #[test]
    fn isomorphism_search() {
        let r = regular2();
        let k = ModulePresentation::residue_field(r.clone());
        // Omega^2 k ≅ R(-2)
        let s2 = k.syzygy(2).unwrap();
        let free = ModulePresentation::free(r.clone(), vec![2]);
        assert!(find_isomorphism(&s2, &free).unwrap().is_some());
        // Tr(R/(x)) ≅ (R/(x))(1)
        let mx = cyclic(&r, &["x"]);
        let t = mx.transpose();
        assert!(find_isomorphism(&t, &mx.twist(-1)).unwrap().is_some());
        // non-isomorphic pairs
        assert!(find_isomorphism(&k, &mx).unwrap().is_none());
        let my = cyclic(&r, &["y"]);
        // R/(x) ≅ R/(y) is a genuine isomorphism of graded modules? no:
        // different annihilators, but identical Betti data and Hilbert
        // series; the surjectivity search must still fail
        assert!(find_isomorphism(&mx, &my).unwrap().is_none());
        // double transpose complement: M ≅ TrTrM ⊕ free
        let m = ModulePresentation::ring_module(r.clone()).direct_sum(&k).unwrap();
        let (ftw, red) = free_summand_split(&m).unwrap();
        let sum = red.direct_sum(&ModulePresentation::free(r.clone(), ftw)).unwrap();
        assert!(find_isomorphism(&m, &sum).unwrap().is_some());
    }
}
