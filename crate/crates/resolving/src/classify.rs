//! Grade consistent functions and the correspondences between them and
//! resolving subcategories: the finite-pd bijection, the transpose-of-syzygy
//! filtration witnesses, the dominant and hypersurface classifications, and
//! the Tor-rigidity comparison.

use crate::error::Error;
use crate::gring::GradedRing;
use crate::homalg::tor;
use crate::module::{ModulePresentation, FreeResolution};
use crate::spectrum::{
    codepth_profile, grade, ipd_locus, nonfree_locus, pd_profile, singular_locus, support,
    Chain, ClosedSet, PrimeCatalog,
};
use std::sync::Arc;

/// f: Spec R -> N with f(p) <= grade p and p ⊆ q ⟹ f(p) <= f(q), encoded
/// by its level sets Y_i = { p : f(p) >= i }.
#[derive(Clone, Debug)]
pub struct GradeConsistentFunction {
    pub chain: Chain,
}

/// Validation outcome; a violation is a value, not an error.
pub enum GcfVerdict {
    Valid(GradeConsistentFunction),
    Violation { level: usize, reason: String },
}

pub fn gcf_validate(ring: &Arc<GradedRing>, levels: Vec<ClosedSet>) -> Result<GcfVerdict, Error> {
    for (i, w) in levels.windows(2).enumerate() {
        if !w[0].contains(&w[1]) {
            return Ok(GcfVerdict::Violation {
                level: i + 2,
                reason: "level is not contained in the previous one".into(),
            });
        }
    }
    for (i, l) in levels.iter().enumerate() {
        let g = grade(ring, &l.ideal)?;
        if let Some(g) = g {
            if (g as usize) < i + 1 {
                return Ok(GcfVerdict::Violation {
                    level: i + 1,
                    reason: format!("grade of level ideal is {} < {}", g, i + 1),
                });
            }
        }
    }
    let chain = Chain::new(levels)?;
    Ok(GcfVerdict::Valid(GradeConsistentFunction { chain }))
}

fn revalidate(ring: &Arc<GradedRing>, chain: Chain) -> Result<GradeConsistentFunction, Error> {
    match gcf_validate(ring, chain.levels)? {
        GcfVerdict::Valid(f) => Ok(f),
        GcfVerdict::Violation { level, reason } => Err(Error::Internal(format!(
            "lattice operation broke grade consistency at level {level}: {reason}"
        ))),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

/// Meet = pointwise min (levelwise intersection); join = pointwise max
/// (levelwise union). The result is revalidated.
pub fn gcf_lattice(
    ring: &Arc<GradedRing>,
    op: LatticeOp,
    f: &GradeConsistentFunction,
    g: &GradeConsistentFunction,
) -> Result<GradeConsistentFunction, Error> {
    let chain = match op {
        LatticeOp::Meet => f.chain.intersect(&g.chain),
        LatticeOp::Join => f.chain.union(&g.chain),
    };
    revalidate(ring, chain)
}

fn require_finite_pd(m: &ModulePresentation) -> Result<(), Error> {
    if m.pd().is_finite() {
        return Ok(());
    }
    let ipd = ipd_locus(m)?;
    Err(Error::Invalid(format!(
        "generator has infinite projective dimension, IPD = {}",
        ipd.render()
    )))
}

/// phi for the finite-pd correspondence: the levelwise union of the
/// generators' pd profiles (pointwise max of local projective dimensions).
pub fn phi_pd(gens: &[ModulePresentation]) -> Result<GradeConsistentFunction, Error> {
    let ring = gens
        .first()
        .map(|m| m.ring.clone())
        .ok_or_else(|| Error::Invalid("empty generator list".into()))?;
    let mut chain = Chain::empty();
    for g in gens {
        require_finite_pd(g)?;
        chain = chain.union(&pd_profile(g)?);
    }
    revalidate(&ring, chain)
}

/// Membership verdict with the violated level or locus for reporting.
pub struct MemberVerdict {
    pub member: bool,
    pub detail: String,
}

impl MemberVerdict {
    fn yes() -> MemberVerdict {
        MemberVerdict { member: true, detail: String::new() }
    }
}

/// psi for the finite-pd correspondence: M belongs iff NF(Omega^{i-1} M)
/// is contained in Y_i for every i (empty beyond the chain).
pub fn psi_pd_member(
    f: &GradeConsistentFunction,
    m: &ModulePresentation,
) -> Result<MemberVerdict, Error> {
    let ring = m.ring.clone();
    let prof = pd_profile(m)?;
    for i in 1..=prof.len() {
        let y = f.chain.level(&ring, i);
        if !y.contains(&prof.levels[i - 1]) {
            return Ok(MemberVerdict {
                member: false,
                detail: format!(
                    "level {}: {} not contained in {}",
                    i,
                    prof.levels[i - 1].render(),
                    y.render()
                ),
            });
        }
    }
    Ok(MemberVerdict::yes())
}

/// Membership in the resolving closure of a finite-pd generator set.
pub fn res_member(
    m: &ModulePresentation,
    gens: &[ModulePresentation],
) -> Result<MemberVerdict, Error> {
    let f = phi_pd(gens)?;
    psi_pd_member(&f, m)
}

pub struct Pd0Witness {
    pub module: ModulePresentation,
    pub resolution: FreeResolution,
}

/// Generator of the n-th stage of the finite-length finite-pd filtration:
/// the transpose of the (n-1)-st syzygy of k, whose minimal resolution is
/// the dualized front of the Koszul-type resolution of k. Requires
/// 1 <= n <= depth R.
pub fn pd0_witness(ring: &Arc<GradedRing>, n: u32) -> Result<Pd0Witness, Error> {
    if n < 1 || n > ring.depth {
        return Err(Error::Invalid(format!(
            "witness index {} out of range 1..={} (depth)",
            n, ring.depth
        )));
    }
    let n = n as usize;
    let k = ModulePresentation::residue_field(ring.clone());
    let w = k.syzygy(n - 1)?.transpose().minimal_presentation();
    let res = w.free_resolution(n + 1);
    if res.length() != n || !res.is_minimal() || !res.is_complex(ring) {
        return Err(Error::Internal(
            "witness resolution is not the expected dualized front".into(),
        ));
    }
    // Betti numbers must mirror the front of the resolution of k
    let kres = ring.k_resolution();
    let expected: Vec<usize> = (0..=n).map(|i| kres.twists[n - i].len()).collect();
    if res.betti() != expected {
        return Err(Error::Internal("witness Betti numbers do not mirror the front".into()));
    }
    let nf = nonfree_locus(&w)?;
    if !nf.set_eq(&ClosedSet::new(ring.clone(), &ring.irrelevant_ideal())) {
        return Err(Error::Internal("witness nonfree locus is not the closed point".into()));
    }
    Ok(Pd0Witness { module: w, resolution: res })
}

pub struct TransposeClass {
    pub equal: bool,
    pub profile: Chain,
}

/// For finite-length L and 0 <= n < depth R, the transpose of Omega^n L
/// generates the same resolving subcategory as the transpose of Omega^n k.
pub fn finite_length_transpose_class(
    l: &ModulePresentation,
    n: u32,
) -> Result<TransposeClass, Error> {
    let ring = l.ring.clone();
    if n >= ring.depth {
        return Err(Error::Invalid(format!("n = {} must be < depth R = {}", n, ring.depth)));
    }
    let closed_point = ClosedSet::new(ring.clone(), &ring.irrelevant_ideal());
    if l.is_zero() || !support(l).set_eq(&closed_point) {
        return Err(Error::Invalid("module is not of finite nonzero length".into()));
    }
    let a = l.syzygy(n as usize)?.transpose().minimal_presentation();
    let k = ModulePresentation::residue_field(ring.clone());
    let b = k.syzygy(n as usize)?.transpose().minimal_presentation();
    let ab = res_member(&a, std::slice::from_ref(&b))?.member;
    let ba = res_member(&b, std::slice::from_ref(&a))?.member;
    Ok(TransposeClass { equal: ab && ba, profile: pd_profile(&b)? })
}

pub enum WitnessResult {
    Found(Vec<ModulePresentation>),
    NotFound { uncovered_level: usize },
}

/// Searches for a finite generator set realizing f: syzygies of cyclic
/// modules on level ideals and their powers, filtered by psi-membership
/// and accumulated greedily until the union of profiles equals f.
pub fn gcf_witness(
    f: &GradeConsistentFunction,
    search_budget: u32,
) -> Result<WitnessResult, Error> {
    let levels = &f.chain.levels;
    let ring = match levels.first() {
        Some(l) => l.ring.clone(),
        None => {
            // f ≡ 0 is realized by the free modules
            return Ok(WitnessResult::Found(vec![]));
        }
    };
    let max_power = search_budget.max(1).min(4);
    let mut candidates: Vec<ModulePresentation> = Vec::new();
    for l in levels {
        let mut j = l.ideal.clone();
        for _ in 0..max_power {
            candidates.push(ModulePresentation::cyclic(ring.clone(), &j)?);
            j = j.product(&l.ideal, &ring.poly);
        }
    }
    let mut found: Vec<ModulePresentation> = Vec::new();
    let mut covered = Chain::empty();
    'outer: for c in &candidates {
        for a in 0..=(ring.dim as usize) {
            let m = c.syzygy(a)?;
            if m.pd() == crate::module::Pd::Infinite {
                continue;
            }
            if !psi_pd_member(f, &m)?.member {
                continue;
            }
            let prof = pd_profile(&m)?;
            if covered.contains(&prof) {
                continue;
            }
            covered = covered.union(&prof);
            found.push(m);
            if covered.chain_eq(&f.chain) {
                break 'outer;
            }
        }
    }
    if covered.chain_eq(&f.chain) {
        return Ok(WitnessResult::Found(found));
    }
    let uncovered = (1..=levels.len())
        .find(|&i| !covered.level(&ring, i).contains(&levels[i - 1]))
        .unwrap_or(levels.len());
    Ok(WitnessResult::NotFound { uncovered_level: uncovered })
}

/// phi for the dominant correspondence over a Gorenstein ring: levelwise
/// union of codepth profiles (ht p minus pointwise depth).
pub fn phi_dominant(gens: &[ModulePresentation]) -> Result<GradeConsistentFunction, Error> {
    let ring = gens
        .first()
        .map(|m| m.ring.clone())
        .ok_or_else(|| Error::Invalid("empty generator list".into()))?;
    if !ring.is_gorenstein || !ring.is_cm {
        return Err(Error::UnsupportedRing(
            "dominant classification requires a Gorenstein Cohen-Macaulay ring".into(),
        ));
    }
    let mut chain = Chain::empty();
    for g in gens {
        chain = chain.union(&codepth_profile(g)?);
    }
    revalidate(&ring, chain)
}

/// psi for the dominant correspondence: M belongs iff its codepth profile
/// is levelwise contained in f.
pub fn psi_dominant_member(
    f: &GradeConsistentFunction,
    m: &ModulePresentation,
) -> Result<MemberVerdict, Error> {
    let ring = m.ring.clone();
    let prof = codepth_profile(m)?;
    for i in 1..=prof.len() {
        let y = f.chain.level(&ring, i);
        if !y.contains(&prof.levels[i - 1]) {
            return Ok(MemberVerdict {
                member: false,
                detail: format!(
                    "level {}: {} not contained in {}",
                    i,
                    prof.levels[i - 1].render(),
                    y.render()
                ),
            });
        }
    }
    Ok(MemberVerdict::yes())
}

/// Catalog-relative dominance: Omega^{dim R}(R/p) must belong to the
/// subcategory generated by `gens` for every catalog prime. Returns the
/// witness prime on failure.
pub fn is_dominant(
    gens: &[ModulePresentation],
    catalog: &PrimeCatalog,
) -> Result<(bool, Option<String>), Error> {
    let ring = catalog.ring.clone();
    let d = ring.dim as usize;
    let all_finite = gens.iter().all(|g| g.pd().is_finite());
    let dom_f = if all_finite { None } else { Some(phi_dominant(gens)?) };
    for p in &catalog.primes {
        let quot = ModulePresentation::cyclic(ring.clone(), &p.ideal)?;
        let s = quot.syzygy(d)?;
        let member = match &dom_f {
            None => res_member(&s, gens)?.member,
            Some(f) => psi_dominant_member(f, &s)?.member,
        };
        if !member {
            let name = ClosedSet::new(ring.clone(), &p.ideal).render();
            return Ok((false, Some(name)));
        }
    }
    Ok((true, None))
}

/// Phi for the hypersurface classification: the pair (union of IPD loci,
/// union of codepth profiles).
pub fn hyper_phi(
    gens: &[ModulePresentation],
) -> Result<(ClosedSet, GradeConsistentFunction), Error> {
    let ring = gens
        .first()
        .map(|m| m.ring.clone())
        .ok_or_else(|| Error::Invalid("empty generator list".into()))?;
    if !ring.is_hypersurface {
        return Err(Error::UnsupportedRing(
            "hypersurface classification requires a principal defining ideal".into(),
        ));
    }
    let mut w = ClosedSet::empty(ring.clone());
    for g in gens {
        w = w.union(&ipd_locus(g)?);
    }
    let f = phi_dominant(gens)?;
    let sing = singular_locus(&ring)?;
    if !sing.contains(&w) {
        return Err(Error::Internal("IPD union escapes the singular locus".into()));
    }
    Ok((w, f))
}

/// Psi for the hypersurface classification: IPD(M) ⊆ W and the codepth
/// profile of M contained in f.
pub fn hyper_psi_member(
    w: &ClosedSet,
    f: &GradeConsistentFunction,
    m: &ModulePresentation,
) -> Result<MemberVerdict, Error> {
    let ipd = ipd_locus(m)?;
    if !w.contains(&ipd) {
        return Ok(MemberVerdict {
            member: false,
            detail: format!("IPD {} not contained in W = {}", ipd.render(), w.render()),
        });
    }
    psi_dominant_member(f, m)
}

/// A resolving subcategory given by one of the four descriptor forms.
pub enum ResolvingDescriptor {
    Generated(Vec<ModulePresentation>),
    FinPd(GradeConsistentFunction),
    Dominant(GradeConsistentFunction),
    Hyper(ClosedSet, GradeConsistentFunction),
}

impl ResolvingDescriptor {
    /// Structural invariants beyond gcf validity: the hypersurface form
    /// needs W inside the singular locus; the dominant form needs a
    /// Gorenstein Cohen-Macaulay ring.
    pub fn validate(&self, ring: &Arc<GradedRing>) -> Result<(), Error> {
        match self {
            ResolvingDescriptor::Generated(_) | ResolvingDescriptor::FinPd(_) => Ok(()),
            ResolvingDescriptor::Dominant(_) => {
                if !ring.is_gorenstein || !ring.is_cm {
                    return Err(Error::UnsupportedRing(
                        "dominant descriptor requires a Gorenstein Cohen-Macaulay ring".into(),
                    ));
                }
                Ok(())
            }
            ResolvingDescriptor::Hyper(w, _) => {
                if !ring.is_hypersurface {
                    return Err(Error::UnsupportedRing(
                        "hypersurface descriptor requires a principal defining ideal".into(),
                    ));
                }
                let sing = singular_locus(ring)?;
                if !sing.contains(w) {
                    return Err(Error::Invalid(format!(
                        "W = {} is not contained in the singular locus {}",
                        w.render(),
                        sing.render()
                    )));
                }
                Ok(())
            }
        }
    }

    pub fn member(&self, m: &ModulePresentation) -> Result<MemberVerdict, Error> {
        match self {
            ResolvingDescriptor::Generated(gens) => res_member(m, gens),
            ResolvingDescriptor::FinPd(f) => psi_pd_member(f, m),
            ResolvingDescriptor::Dominant(f) => psi_dominant_member(f, m),
            ResolvingDescriptor::Hyper(w, f) => hyper_psi_member(w, f, m),
        }
    }
}

pub struct TorRigidityReport {
    pub i_max: usize,
    pub cond1: bool,
    pub cond2: bool,
    pub cond3: bool,
    /// (catalog index, homological degree) of a support violation.
    pub violation: Option<(usize, usize)>,
}

/// Compares the three equivalent conditions of the Tor-rigidity theorem
/// for finite-pd M, N over a regular ring: (1) pointwise pd M_p <= pd N_p,
/// (2) M in res N, (3) Supp Tor_i(M, X) ⊆ Supp Tor_i(N, X) for catalog X.
/// Necessity of (3) is verified on the full catalog; sufficiency is
/// sampled through the cyclic instances the proof uses.
pub fn tor_rigidity_check(
    m: &ModulePresentation,
    n: &ModulePresentation,
    x_catalog: &[ModulePresentation],
    i_max: usize,
) -> Result<TorRigidityReport, Error> {
    let ring = m.ring.clone();
    if !ring.is_regular {
        return Err(Error::UnsupportedRing(
            "Tor-rigidity comparison requires a regular ring".into(),
        ));
    }
    let (pm, pn) = (m.pd(), n.pd());
    if !pm.is_finite() || !pn.is_finite() {
        return Err(Error::Invalid("both modules must have finite projective dimension".into()));
    }
    let max_pd = pm.finite_value().unwrap_or(0).max(pn.finite_value().unwrap_or(0)) as usize;
    let i_max = i_max.max(max_pd);
    let cond1 = pd_profile(n)?.contains(&pd_profile(m)?);
    let cond2 = res_member(m, std::slice::from_ref(n))?.member;
    if cond1 != cond2 {
        return Err(Error::Internal("profile comparison disagrees with membership".into()));
    }
    let mut violation = None;
    'scan: for (xi, x) in x_catalog.iter().enumerate() {
        for i in 1..=i_max {
            let sm = support(&tor(m, x, i)?);
            let sn = support(&tor(n, x, i)?);
            if !sn.contains(&sm) {
                violation = Some((xi, i));
                break 'scan;
            }
        }
    }
    Ok(TorRigidityReport { i_max, cond1, cond2, cond3: violation.is_none(), violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::ring::PolyRing;

    fn regular2() -> Arc<GradedRing> {
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        GradedRing::new(p, vec![]).unwrap()
    }

    fn regular3() -> Arc<GradedRing> {
        let p = PolyRing::new(
            101,
            vec![("x".into(), 1), ("y".into(), 1), ("z".into(), 1)],
        )
        .unwrap();
        GradedRing::new(p, vec![]).unwrap()
    }

    fn hyper2() -> Arc<GradedRing> {
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        let xy = p.parse_poly("x*y").unwrap();
        GradedRing::new(p, vec![xy]).unwrap()
    }

    fn vset(ring: &Arc<GradedRing>, gens: &[&str]) -> ClosedSet {
        let polys = gens.iter().map(|s| ring.poly.parse_poly(s).unwrap()).collect();
        ClosedSet::from_polys(ring.clone(), polys)
    }

    fn cyclic(ring: &Arc<GradedRing>, gens: &[&str]) -> ModulePresentation {
        let polys: Vec<_> = gens.iter().map(|s| ring.poly.parse_poly(s).unwrap()).collect();
        ModulePresentation::cyclic(ring.clone(), &Ideal::new(polys, &ring.poly)).unwrap()
    }

    fn gcf(ring: &Arc<GradedRing>, levels: &[&[&str]]) -> GradeConsistentFunction {
        let sets = levels.iter().map(|l| vset(ring, l)).collect();
        match gcf_validate(ring, sets).unwrap() {
            GcfVerdict::Valid(f) => f,
            GcfVerdict::Violation { level, reason } => {
                panic!("invalid gcf at level {level}: {reason}")
            }
        }
    }

    #[test]
    fn validation_and_lattice() {
        let r = regular2();
        assert!(matches!(gcf_validate(&r, vec![]).unwrap(), GcfVerdict::Valid(_)));
        gcf(&r, &[&["x"]]);
        gcf(&r, &[&["x", "y"], &["x", "y"]]);
        // whole space at level 1 has grade 0
        match gcf_validate(&r, vec![ClosedSet::whole(r.clone())]).unwrap() {
            GcfVerdict::Violation { level: 1, .. } => {}
            _ => panic!("expected a level-1 violation"),
        }
        // V(x) at level 2 has grade 1 < 2
        match gcf_validate(&r, vec![vset(&r, &["x"]), vset(&r, &["x"])]).unwrap() {
            GcfVerdict::Violation { level: 2, .. } => {}
            _ => panic!("expected a level-2 violation"),
        }
        let fx = gcf(&r, &[&["x"]]);
        let fy = gcf(&r, &[&["y"]]);
        let meet = gcf_lattice(&r, LatticeOp::Meet, &fx, &fy).unwrap();
        assert!(meet.chain.chain_eq(&gcf(&r, &[&["x", "y"]]).chain));
        let join = gcf_lattice(&r, LatticeOp::Join, &fx, &fy).unwrap();
        assert!(join.chain.chain_eq(&gcf(&r, &[&["x*y"]]).chain));
        let idem = gcf_lattice(&r, LatticeOp::Meet, &fx, &fx).unwrap();
        assert!(idem.chain.chain_eq(&fx.chain));
    }

    #[test]
    fn phi_and_psi_finite_pd() {
        let r = regular2();
        let free = ModulePresentation::ring_module(r.clone());
        assert!(phi_pd(&[free.clone()]).unwrap().chain.is_empty());
        let mx = cyclic(&r, &["x"]);
        let f = phi_pd(std::slice::from_ref(&mx)).unwrap();
        assert!(f.chain.chain_eq(&gcf(&r, &[&["x"]]).chain));
        let k = ModulePresentation::residue_field(r.clone());
        let f = phi_pd(&[k.clone(), mx.clone()]).unwrap();
        assert!(f.chain.chain_eq(&gcf(&r, &[&["x"], &["x", "y"]]).chain));
        // infinite-pd generator rejected with its IPD locus named
        let h = hyper2();
        let kk = ModulePresentation::residue_field(h.clone());
        let err = phi_pd(std::slice::from_ref(&kk)).unwrap_err();
        assert!(err.to_string().contains("V("));

        let fx = gcf(&r, &[&["x"]]);
        assert!(psi_pd_member(&fx, &free).unwrap().member);
        assert!(psi_pd_member(&fx, &mx).unwrap().member);
        let zero = gcf(&r, &[]);
        let v = psi_pd_member(&zero, &k).unwrap();
        assert!(!v.member);
        assert!(v.detail.contains("level 1"));
    }

    #[test]
    fn res_membership() {
        let r = regular2();
        let mx = cyclic(&r, &["x"]);
        let mx2 = cyclic(&r, &["x^2"]);
        let k = ModulePresentation::residue_field(r.clone());
        assert!(res_member(&mx2, std::slice::from_ref(&mx)).unwrap().member);
        assert!(!res_member(&k, std::slice::from_ref(&mx)).unwrap().member);
        assert!(res_member(&k, std::slice::from_ref(&k)).unwrap().member);
        // R/(x) is not free at (x) while k vanishes there
        assert!(!res_member(&mx, std::slice::from_ref(&k)).unwrap().member);
    }

    #[test]
    fn filtration_witnesses() {
        let r = regular3();
        let w1 = pd0_witness(&r, 1).unwrap();
        assert_eq!(w1.resolution.betti(), vec![3, 1]);
        assert_eq!(w1.module.pd().finite_value(), Some(1));
        let w2 = pd0_witness(&r, 2).unwrap();
        assert_eq!(w2.resolution.betti(), vec![3, 3, 1]);
        assert_eq!(w2.module.pd().finite_value(), Some(2));
        let w3 = pd0_witness(&r, 3).unwrap();
        assert_eq!(w3.module.pd().finite_value(), Some(3));
        // profiles are constant chains at the closed point
        let p = pd_profile(&w2.module).unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.levels.iter().all(|l| l.set_eq(&vset(&r, &["x", "y", "z"]))));
        // filtration: witness i belongs to res(witness n) iff i <= n
        let ws = [w1.module, w2.module, w3.module];
        for i in 0..3 {
            for n in 0..3 {
                let verdict = res_member(&ws[i], std::slice::from_ref(&ws[n])).unwrap();
                assert_eq!(verdict.member, i <= n, "i={} n={}", i + 1, n + 1);
            }
        }
        // depth-0 ring: no witnesses exist
        let p = PolyRing::new(101, vec![("x".into(), 1)]).unwrap();
        let x2 = p.parse_poly("x^2").unwrap();
        let art = GradedRing::new(p, vec![x2]).unwrap();
        assert!(pd0_witness(&art, 1).is_err());
    }

    #[test]
    fn transpose_classes() {
        let r = regular3();
        // L = k, any n: trivially the same class
        let k = ModulePresentation::residue_field(r.clone());
        let t = finite_length_transpose_class(&k, 1).unwrap();
        assert!(t.equal);
        assert_eq!(t.profile.len(), 2);
        // L = R/(x,y,z)^2 at n = 1
        let l = cyclic(&r, &["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"]);
        assert!(finite_length_transpose_class(&l, 1).unwrap().equal);
        // L = R/(x^2, y, z) at n = 0
        let l = cyclic(&r, &["x^2", "y", "z"]);
        assert!(finite_length_transpose_class(&l, 0).unwrap().equal);
        // non-finite-length module rejected
        let mx = cyclic(&r, &["x"]);
        assert!(finite_length_transpose_class(&mx, 0).is_err());
    }

    #[test]
    fn witness_search() {
        let r = regular2();
        let zero = gcf(&r, &[]);
        match gcf_witness(&zero, 3).unwrap() {
            WitnessResult::Found(ms) => assert!(ms.is_empty()),
            _ => panic!("f = 0 must be realized"),
        }
        let fx = gcf(&r, &[&["x"]]);
        match gcf_witness(&fx, 3).unwrap() {
            WitnessResult::Found(ms) => {
                assert!(phi_pd(&ms).unwrap().chain.chain_eq(&fx.chain));
            }
            _ => panic!("witness for [V(x)] not found"),
        }
        let fk = gcf(&r, &[&["x", "y"], &["x", "y"]]);
        match gcf_witness(&fk, 3).unwrap() {
            WitnessResult::Found(ms) => {
                assert!(phi_pd(&ms).unwrap().chain.chain_eq(&fk.chain));
            }
            _ => panic!("witness for [V(m), V(m)] not found"),
        }
    }

    #[test]
    fn dominant_classification() {
        let h = hyper2();
        let k = ModulePresentation::residue_field(h.clone());
        let f = phi_dominant(std::slice::from_ref(&k)).unwrap();
        assert!(f.chain.chain_eq(&gcf(&h, &[&["x", "y"]]).chain));
        let free = ModulePresentation::ring_module(h.clone());
        assert!(phi_dominant(std::slice::from_ref(&free)).unwrap().chain.is_empty());
        let r = regular2();
        let mx = cyclic(&r, &["x"]);
        let f = phi_dominant(std::slice::from_ref(&mx)).unwrap();
        assert!(f.chain.chain_eq(&gcf(&r, &[&["x"]]).chain));

        let zero = gcf(&h, &[]);
        let hx = cyclic(&h, &["x"]);
        assert!(psi_dominant_member(&zero, &hx).unwrap().member); // MCM
        assert!(!psi_dominant_member(&zero, &k).unwrap().member);
        let fm = gcf(&h, &[&["x", "y"]]);
        assert!(psi_dominant_member(&fm, &k).unwrap().member);
    }

    #[test]
    fn dominance_tests() {
        let r = regular2();
        let ideals = vec![
            Ideal::zero(),
            Ideal::new(vec![r.poly.parse_poly("x").unwrap()], &r.poly),
            Ideal::new(
                vec![r.poly.parse_poly("x").unwrap(), r.poly.parse_poly("y").unwrap()],
                &r.poly,
            ),
        ];
        let cat = PrimeCatalog::new(r.clone(), ideals).unwrap();
        let free = ModulePresentation::ring_module(r.clone());
        let (dom, _) = is_dominant(std::slice::from_ref(&free), &cat).unwrap();
        assert!(dom);

        let h = hyper2();
        let hideals = vec![
            Ideal::new(vec![h.poly.parse_poly("x").unwrap()], &h.poly),
            Ideal::new(
                vec![h.poly.parse_poly("x").unwrap(), h.poly.parse_poly("y").unwrap()],
                &h.poly,
            ),
        ];
        let hcat = PrimeCatalog::new(h.clone(), hideals).unwrap();
        let hfree = ModulePresentation::ring_module(h.clone());
        let (dom, witness) = is_dominant(std::slice::from_ref(&hfree), &hcat).unwrap();
        assert!(!dom);
        assert!(witness.unwrap().contains("V("));

        // artinian: {k} is dominant (the only prime is m and Omega^0 k = k)
        let p = PolyRing::new(101, vec![("x".into(), 1)]).unwrap();
        let x2 = p.parse_poly("x^2").unwrap();
        let art = GradedRing::new(p, vec![x2]).unwrap();
        let acat = PrimeCatalog::new(
            art.clone(),
            vec![Ideal::new(vec![art.poly.parse_poly("x").unwrap()], &art.poly)],
        )
        .unwrap();
        let ak = ModulePresentation::residue_field(art.clone());
        let (dom, _) = is_dominant(std::slice::from_ref(&ak), &acat).unwrap();
        assert!(dom);
    }

    #[test]
    fn hypersurface_classification() {
        let h = hyper2();
        let free = ModulePresentation::ring_module(h.clone());
        let (w, f) = hyper_phi(std::slice::from_ref(&free)).unwrap();
        assert!(w.is_empty());
        assert!(f.chain.is_empty());
        let k = ModulePresentation::residue_field(h.clone());
        let (w, f) = hyper_phi(std::slice::from_ref(&k)).unwrap();
        assert!(w.set_eq(&vset(&h, &["x", "y"])));
        assert!(f.chain.chain_eq(&gcf(&h, &[&["x", "y"]]).chain));
        let hx = cyclic(&h, &["x"]);
        let (w, f) = hyper_phi(std::slice::from_ref(&hx)).unwrap();
        assert!(w.set_eq(&vset(&h, &["x", "y"])));
        assert!(f.chain.is_empty());

        // psi: each generator satisfies its own Phi
        for g in [&k, &hx, &free] {
            let (w, f) = hyper_phi(std::slice::from_ref(g)).unwrap();
            assert!(hyper_psi_member(&w, &f, g).unwrap().member);
        }
        let zero = gcf(&h, &[]);
        assert!(hyper_psi_member(&ClosedSet::empty(h.clone()), &zero, &free).unwrap().member);
        assert!(
            hyper_psi_member(&vset(&h, &["x", "y"]), &zero, &hx).unwrap().member
        );
        let fm = gcf(&h, &[&["x", "y"]]);
        let v = hyper_psi_member(&ClosedSet::empty(h.clone()), &fm, &k).unwrap();
        assert!(!v.member);
        assert!(v.detail.contains("IPD"));
        // non-hypersurface ring rejected
        let p = PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap();
        let rels = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| p.parse_poly(s).unwrap())
            .collect();
        let fat = GradedRing::new(p, rels).unwrap();
        let fk = ModulePresentation::residue_field(fat.clone());
        assert!(hyper_phi(std::slice::from_ref(&fk)).is_err());
    }

    #[test]
    fn tor_rigidity() {
        let r = regular2();
        let k = ModulePresentation::residue_field(r.clone());
        let mx = cyclic(&r, &["x"]);
        let my = cyclic(&r, &["y"]);
        let free = ModulePresentation::ring_module(r.clone());
        let catalog = vec![free, k.clone(), mx.clone(), my];

        let rep = tor_rigidity_check(&mx, &mx, &catalog, 2).unwrap();
        assert!(rep.cond1 && rep.cond2 && rep.cond3);

        let mx2 = cyclic(&r, &["x^2"]);
        let rep = tor_rigidity_check(&mx2, &mx, &catalog, 2).unwrap();
        assert!(rep.cond1 && rep.cond2 && rep.cond3);

        // M = R/(x), N = k: pd M_(x) = 1 while k vanishes at (x)
        let rep = tor_rigidity_check(&mx, &k, &catalog, 2).unwrap();
        assert!(!rep.cond1 && !rep.cond2 && !rep.cond3);
        assert_eq!(rep.violation.unwrap(), (2, 1)); // X = R/(x), Tor_1

        // M = k, N = R/(x): fails with a concrete Tor-support witness
        let rep = tor_rigidity_check(&k, &mx, &catalog, 2).unwrap();
        assert!(!rep.cond1 && !rep.cond2 && !rep.cond3);
        let (xi, i) = rep.violation.unwrap();
        assert_eq!((xi, i), (1, 2)); // X = k, Tor_2(k,k) != 0 = Tor_2(R/(x),k)
    }
}
