//! Zariski-closed subsets of Spec R up to radical, grade, supports and the
//! loci (nonfree, infinite-pd, singular) together with the pd and codepth
//! profile chains.

use crate::error::Error;
use crate::groebner::VectorPoly;
use crate::gring::GradedRing;
use crate::homalg::ext;
use crate::ideal::Ideal;
use crate::module::ModulePresentation;
use crate::poly::Polynomial;
use itertools::Itertools;
use std::sync::Arc;

/// V(J) in Spec R, stored by a defining ideal (always containing the
/// defining ideal of R); compared only up to radical.
#[derive(Clone, Debug)]
pub struct ClosedSet {
    pub ring: Arc<GradedRing>,
    pub ideal: Ideal,
}

impl ClosedSet {
    pub fn new(ring: Arc<GradedRing>, ideal: &Ideal) -> ClosedSet {
        let full = ideal.sum(&ring.defining, &ring.poly);
        ClosedSet { ring, ideal: full }
    }

    pub fn from_polys(ring: Arc<GradedRing>, gens: Vec<Polynomial>) -> ClosedSet {
        let ideal = Ideal::new(gens, &ring.poly);
        ClosedSet::new(ring, &ideal)
    }

    pub fn whole(ring: Arc<GradedRing>) -> ClosedSet {
        ClosedSet::from_polys(ring, vec![])
    }

    pub fn empty(ring: Arc<GradedRing>) -> ClosedSet {
        let one = Polynomial::one(ring.nvars());
        ClosedSet::from_polys(ring, vec![one])
    }

    pub fn is_empty(&self) -> bool {
        self.ideal.is_unit()
    }

    pub fn is_whole(&self) -> bool {
        self.ideal
            .gb
            .iter()
            .all(|f| self.ring.defining.radical_contains(f, &self.ring.poly))
    }

    /// other ⊆ self, i.e. I_self ⊆ rad(I_other).
    pub fn contains(&self, other: &ClosedSet) -> bool {
        self.ideal
            .gb
            .iter()
            .all(|f| other.ideal.radical_contains(f, &self.ring.poly))
    }

    pub fn set_eq(&self, other: &ClosedSet) -> bool {
        self.contains(other) && other.contains(self)
    }

    pub fn union(&self, other: &ClosedSet) -> ClosedSet {
        ClosedSet {
            ring: self.ring.clone(),
            ideal: self.ideal.intersection(&other.ideal, &self.ring.poly),
        }
    }

    pub fn intersect(&self, other: &ClosedSet) -> ClosedSet {
        ClosedSet {
            ring: self.ring.clone(),
            ideal: self.ideal.sum(&other.ideal, &self.ring.poly),
        }
    }

    /// Canonical text form `V(g1; g2; ...)` from the reduced Groebner basis.
    pub fn render(&self) -> String {
        if self.ideal.gb.is_empty() {
            return "V(0)".to_string();
        }
        let gens: Vec<String> =
            self.ideal.gb.iter().map(|f| self.ring.poly.poly_to_string(f)).collect();
        format!("V({})", gens.join("; "))
    }
}

/// A descending chain of closed sets Y_1 ⊇ Y_2 ⊇ ...; trailing empty
/// levels are trimmed at construction.
#[derive(Clone, Debug)]
pub struct Chain {
    pub levels: Vec<ClosedSet>,
}

impl Chain {
    pub fn new(mut levels: Vec<ClosedSet>) -> Result<Chain, Error> {
        while levels.last().map(|l| l.is_empty()).unwrap_or(false) {
            levels.pop();
        }
        for w in levels.windows(2) {
            if !w[0].contains(&w[1]) {
                return Err(Error::Invalid("chain is not descending".into()));
            }
        }
        Ok(Chain { levels })
    }

    pub fn empty() -> Chain {
        Chain { levels: vec![] }
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Level i (1-based); the empty set beyond the chain.
    pub fn level(&self, ring: &Arc<GradedRing>, i: usize) -> ClosedSet {
        if i >= 1 && i <= self.levels.len() {
            self.levels[i - 1].clone()
        } else {
            ClosedSet::empty(ring.clone())
        }
    }

    /// Levelwise containment other ⊆ self.
    pub fn contains(&self, other: &Chain) -> bool {
        if other.levels.len() > self.levels.len() {
            return false;
        }
        other
            .levels
            .iter()
            .zip(&self.levels)
            .all(|(o, s)| s.contains(o))
    }

    pub fn chain_eq(&self, other: &Chain) -> bool {
        self.contains(other) && other.contains(self)
    }

    /// Levelwise union (join of the encoded functions).
    pub fn union(&self, other: &Chain) -> Chain {
        let n = self.levels.len().max(other.levels.len());
        let mut levels = Vec::with_capacity(n);
        for i in 1..=n {
            let a = self.levels.get(i - 1);
            let b = other.levels.get(i - 1);
            levels.push(match (a, b) {
                (Some(a), Some(b)) => a.union(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Chain { levels }
    }

    /// Levelwise intersection (meet of the encoded functions).
    pub fn intersect(&self, other: &Chain) -> Chain {
        let n = self.levels.len().min(other.levels.len());
        let mut levels: Vec<ClosedSet> = (0..n)
            .map(|i| self.levels[i].intersect(&other.levels[i]))
            .collect();
        while levels.last().map(|l| l.is_empty()).unwrap_or(false) {
            levels.pop();
        }
        Chain { levels }
    }

    pub fn render(&self) -> String {
        if self.levels.is_empty() {
            return "(empty chain)\n".to_string();
        }
        let mut out = String::new();
        for (i, l) in self.levels.iter().enumerate() {
            out.push_str(&format!("level {}: {}\n", i + 1, l.render()));
        }
        out
    }
}

/// grade(I) = min { i : Ext^i(R/I, R) != 0 }; None encodes +infinity (unit
/// ideal).
pub fn grade(ring: &Arc<GradedRing>, ideal: &Ideal) -> Result<Option<u32>, Error> {
    let full = ideal.sum(&ring.defining, &ring.poly);
    if full.is_unit() {
        return Ok(None);
    }
    let m = ModulePresentation::cyclic(ring.clone(), &full)?;
    let free = ModulePresentation::ring_module(ring.clone());
    for i in 0..=ring.dim {
        if !ext(&m, &free, i as usize)?.is_zero() {
            return Ok(Some(i));
        }
    }
    Err(Error::Internal("grade exceeds dim R".into()))
}

pub fn support(m: &ModulePresentation) -> ClosedSet {
    ClosedSet::new(m.ring.clone(), &m.annihilator())
}

/// NF(M) = Supp Ext^1(M, Omega M).
pub fn nonfree_locus(m: &ModulePresentation) -> Result<ClosedSet, Error> {
    let ring = m.ring.clone();
    if m.is_free() {
        return Ok(ClosedSet::empty(ring));
    }
    let om = m.syzygy(1)?;
    let e = ext(m, &om, 1)?;
    Ok(support(&e))
}

/// Independent oracle: V(Fitt_r(M)) for r the generic rank of the minimal
/// presentation matrix (valid over a domain).
pub fn fitting_nonfree_locus(m: &ModulePresentation) -> ClosedSet {
    let ring = m.ring.clone();
    let raw = m.minimal_raw();
    let b0 = raw.twists.len();
    let b1 = raw.cols.len();
    let maxt = b0.min(b1);
    // largest minor size with a nonzero minor, then the ideal of minors of
    // that size
    for t in (1..=maxt).rev() {
        let minors = minor_ideal(&raw.cols, b0, t, &ring);
        if !minors.is_empty() {
            return ClosedSet::from_polys(ring, minors);
        }
    }
    ClosedSet::empty(ring)
}

fn minor_ideal(
    cols: &[VectorPoly],
    rows: usize,
    t: usize,
    ring: &Arc<GradedRing>,
) -> Vec<Polynomial> {
    let ctx = ring.poly.ctx();
    let q = ring.quot_ctx();
    let mut out = Vec::new();
    for rsel in (0..rows).combinations(t) {
        for csel in (0..cols.len()).combinations(t) {
            let det = determinant(&rsel, &csel, cols, &ctx);
            let det = q.nf_poly(&det);
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    out
}

fn determinant(
    rsel: &[usize],
    csel: &[usize],
    cols: &[VectorPoly],
    ctx: &crate::poly::PolyCtx,
) -> Polynomial {
    if rsel.is_empty() {
        return Polynomial::one(ctx.nvars());
    }
    // Laplace expansion along the first selected row
    let mut acc = Polynomial::zero();
    let row = rsel[0];
    let rest: Vec<usize> = rsel[1..].to_vec();
    for (k, &c) in csel.iter().enumerate() {
        let e = &cols[c].comps[row];
        if e.is_zero() {
            continue;
        }
        let sub: Vec<usize> =
            csel.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, &c)| c).collect();
        let minor = determinant(&rest, &sub, cols, ctx);
        let term = e.mul(&minor, ctx);
        acc = if k % 2 == 0 { acc.add(&term, ctx) } else { acc.sub(&term, ctx) };
    }
    acc
}

/// pd profile: Y_i = NF(Omega^{i-1} M) for 1 <= i <= dim R + 1. A nonempty
/// final level flags infinite projective dimension.
pub fn pd_profile(m: &ModulePresentation) -> Result<Chain, Error> {
    let ring = m.ring.clone();
    let mut levels = Vec::new();
    for i in 1..=(ring.dim as usize + 1) {
        let s = m.syzygy(i - 1)?;
        let nf = nonfree_locus(&s)?;
        if nf.is_empty() {
            break;
        }
        levels.push(nf);
    }
    Chain::new(levels)
}

/// codepth profile over a Gorenstein ring: W_i = union over j >= i of
/// Supp Ext^j(M, R).
pub fn codepth_profile(m: &ModulePresentation) -> Result<Chain, Error> {
    let ring = m.ring.clone();
    if !ring.is_gorenstein {
        return Err(Error::UnsupportedRing(
            "codepth profile requires a Gorenstein ring".into(),
        ));
    }
    let free = ModulePresentation::ring_module(ring.clone());
    let d = ring.dim as usize;
    let supports: Vec<ClosedSet> = (1..=d)
        .map(|j| ext(m, &free, j).map(|e| support(&e)))
        .collect::<Result<_, _>>()?;
    let mut levels = Vec::new();
    for i in 1..=d {
        let mut w = ClosedSet::empty(ring.clone());
        for s in &supports[i - 1..] {
            w = w.union(s);
        }
        levels.push(w);
    }
    Chain::new(levels)
}

/// IPD(M) = NF(Omega^{dim R} M).
pub fn ipd_locus(m: &ModulePresentation) -> Result<ClosedSet, Error> {
    let s = m.syzygy(m.ring.dim as usize)?;
    nonfree_locus(&s)
}

/// Sing R by the Jacobian criterion; requires the defining ideal to be a
/// complete intersection (codim = number of minimal generators).
pub fn singular_locus(ring: &Arc<GradedRing>) -> Result<ClosedSet, Error> {
    let c = (ring.nvars() as u32 - ring.dim) as usize;
    if ring.min_gens.len() != c {
        return Err(Error::UnsupportedRing(
            "Jacobian criterion implemented for complete intersections only".into(),
        ));
    }
    if c == 0 {
        return Ok(ClosedSet::empty(ring.clone()));
    }
    let ctx = ring.poly.ctx();
    // Jacobian as columns over the minimal generators
    let jac: Vec<VectorPoly> = (0..ring.nvars())
        .map(|v| VectorPoly {
            comps: ring.min_gens.iter().map(|f| f.derivative(v, &ctx)).collect(),
        })
        .collect();
    let mut gens = minor_ideal(&jac, c, c, ring);
    gens.extend(ring.defining.gens.iter().cloned());
    Ok(ClosedSet::from_polys(ring.clone(), gens))
}

/// A trusted finite list of primes with cached height and grade.
pub struct CatalogPrime {
    pub ideal: Ideal,
    pub height: u32,
    pub grade: Option<u32>,
}

pub struct PrimeCatalog {
    pub ring: Arc<GradedRing>,
    pub primes: Vec<CatalogPrime>,
}

impl PrimeCatalog {
    pub fn new(ring: Arc<GradedRing>, ideals: Vec<Ideal>) -> Result<PrimeCatalog, Error> {
        let mut primes = Vec::new();
        let mut has_max = false;
        for ideal in ideals {
            let full = ideal.sum(&ring.defining, &ring.poly);
            if full.is_unit() {
                return Err(Error::Invalid("catalog contains the unit ideal".into()));
            }
            let quot = ModulePresentation::cyclic(ring.clone(), &full)?;
            let qdim = quot.dimension().expect("R/p is nonzero");
            let height = ring.dim - qdim;
            if qdim == 0 {
                has_max = true;
            }
            let g = grade(&ring, &full)?;
            primes.push(CatalogPrime { ideal: full, height, grade: g });
        }
        if !has_max {
            return Err(Error::Invalid(
                "catalog must contain the irrelevant maximal ideal".into(),
            ));
        }
        Ok(PrimeCatalog { ring, primes })
    }
}
