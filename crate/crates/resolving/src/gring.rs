//! Graded quotient rings R = P/I with cached homological invariants.

use crate::error::Error;
use crate::groebner::VectorPoly;
use crate::ideal::{monomial_quotient_numerator, HilbertNumerator, Ideal};
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::rmod::{minimize_presentation, resolve, QuotCtx, RawPresentation, RawResolution};
use std::sync::{Arc, OnceLock};

#[derive(Debug)]
pub struct GradedRing {
    pub poly: PolyRing,
    pub defining: Ideal,
    /// Minimal homogeneous generators of the defining ideal.
    pub min_gens: Vec<Polynomial>,
    pub hs_numer: HilbertNumerator,
    pub dim: u32,
    pub depth: u32,
    pub is_cm: bool,
    pub is_gorenstein: bool,
    pub is_hypersurface: bool,
    pub is_regular: bool,
    k_res: OnceLock<RawResolution>,
}

impl PartialEq for GradedRing {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly && self.defining.gb == other.defining.gb
    }
}

impl GradedRing {
    pub fn new(poly: PolyRing, gens: Vec<Polynomial>) -> Result<Arc<GradedRing>, Error> {
        let defining = Ideal::new(gens, &poly);
        defining.check_homogeneous(&poly)?;
        if defining.is_unit() {
            return Err(Error::Invalid("defining ideal is the unit ideal".into()));
        }
        let n = poly.nvars() as u32;

        // minimal generators, greedily from the reduced GB by degree
        let mut min_gens: Vec<Polynomial> = Vec::new();
        for f in &defining.gb {
            let part = Ideal::new(min_gens.clone(), &poly);
            if !part.contains(f, &poly) {
                min_gens.push(f.clone());
            }
        }

        // Hilbert series of R from the leading-term ideal
        let lt: Vec<_> = defining.gb.iter().map(|f| f.leading().unwrap().mon.clone()).collect();
        let hs_numer = monomial_quotient_numerator(lt, &poly.weights);
        let dim = n - hs_numer.vanishing_order_at_one();

        // resolve R over P; Auslander-Buchsbaum gives the depth, the last
        // Betti number the Gorenstein type
        let q = QuotCtx { ring: &poly, quot_gb: &[] };
        let pres = RawPresentation {
            twists: vec![0],
            cols: min_gens.iter().map(|f| VectorPoly::from_poly(f.clone())).collect(),
        };
        let pres = minimize_presentation(&q, &pres);
        let res = resolve(&q, &pres, n as usize + 1);
        assert!(!res.truncated, "resolution over the polynomial ring must terminate");
        let pd_p = res.length() as u32;
        let depth = n - pd_p;
        let is_cm = depth == dim;
        let is_gorenstein = is_cm
            && (pd_p == 0 || res.twists.last().map(|t| t.len()) == Some(1));
        let is_regular = min_gens.is_empty();
        let is_hypersurface = min_gens.len() <= 1;

        Ok(Arc::new(GradedRing {
            poly,
            defining,
            min_gens,
            hs_numer,
            dim,
            depth,
            is_cm,
            is_gorenstein,
            is_hypersurface,
            is_regular,
            k_res: OnceLock::new(),
        }))
    }

    pub fn quot_ctx(&self) -> QuotCtx<'_> {
        QuotCtx { ring: &self.poly, quot_gb: &self.defining.gb }
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn nf(&self, f: &Polynomial) -> Polynomial {
        self.quot_ctx().nf_poly(f)
    }

    /// The irrelevant maximal ideal (x_1, ..., x_n) of R, as a P-ideal.
    pub fn irrelevant_ideal(&self) -> Ideal {
        let gens: Vec<Polynomial> = (0..self.nvars()).map(|i| self.poly.var(i)).collect();
        Ideal::new(gens, &self.poly)
    }

    /// Minimal presentation of the residue field k = R/m.
    pub fn k_presentation(&self) -> RawPresentation {
        let q = self.quot_ctx();
        let cols: Vec<VectorPoly> = (0..self.nvars())
            .map(|i| VectorPoly::from_poly(self.poly.var(i)))
            .collect();
        minimize_presentation(&q, &RawPresentation { twists: vec![0], cols })
    }

    /// Minimal R-free resolution of k, computed once to dim + 2 steps.
    pub fn k_resolution(&self) -> &RawResolution {
        self.k_res.get_or_init(|| {
            let q = self.quot_ctx();
            resolve(&q, &self.k_presentation(), self.dim as usize + 2)
        })
    }

    pub fn same_ring(&self, other: &GradedRing) -> Result<(), Error> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch("operands live over different rings".into()))
        }
    }
}
