//! Raw module algebra over a quotient ring R = P/I: normal forms, syzygies,
//! minimal generating sets, presentation minimalization and minimal graded
//! free resolutions. Everything here works over P augmented with the
//! relations I * e_i, so the same code serves P itself (empty quotient).

use crate::error::Error;
use crate::groebner::{SubmoduleGb, VectorPoly};
use crate::poly::{Polynomial, PolyCtx};
use crate::ring::PolyRing;
use std::cmp::Ordering;

/// The ambient ring P together with the Groebner basis of the defining
/// ideal I; all module computations happen modulo I.
#[derive(Clone, Copy)]
pub struct QuotCtx<'a> {
    pub ring: &'a PolyRing,
    pub quot_gb: &'a [Polynomial],
}

impl<'a> QuotCtx<'a> {
    pub fn ctx(&self) -> PolyCtx {
        self.ring.ctx()
    }

    pub fn nf_poly(&self, f: &Polynomial) -> Polynomial {
        crate::groebner::ideal_nf(f, self.quot_gb, &self.ctx())
    }

    pub fn nf_vec(&self, v: &VectorPoly) -> VectorPoly {
        VectorPoly { comps: v.comps.iter().map(|c| self.nf_poly(c)).collect() }
    }

    /// Submodule of R^rank given by generators (entries taken mod I).
    pub fn submodule(&self, gens: &[VectorPoly], rank: usize) -> RSubmodule {
        let nvars = self.ring.nvars();
        let mut aug: Vec<VectorPoly> = gens.to_vec();
        for f in self.quot_gb {
            for i in 0..rank {
                let mut v = VectorPoly::zero(rank);
                v.comps[i] = f.clone();
                aug.push(v);
            }
        }
        let _ = nvars;
        let inner = SubmoduleGb::new(&aug, rank, &self.ctx());
        RSubmodule { inner, norig: gens.len(), rank }
    }

    /// Generators of the syzygy module over R of the given columns.
    pub fn syzygies(&self, cols: &[VectorPoly], rank: usize) -> Vec<VectorPoly> {
        if cols.is_empty() {
            return vec![];
        }
        let sub = self.submodule(cols, rank);
        sub.syzygies_over_r(self)
    }

    /// Greedy minimal generating subset of a homogeneous submodule,
    /// ascending by generator degree; ties broken canonically.
    pub fn minimal_gens(
        &self,
        cols: &[VectorPoly],
        rank: usize,
        twists: &[i64],
    ) -> Vec<VectorPoly> {
        let ctx = self.ctx();
        let mut cand: Vec<VectorPoly> = cols
            .iter()
            .map(|v| self.nf_vec(v))
            .filter(|v| !v.is_zero())
            .collect();
        cand.sort_by(|a, b| {
            let da = column_degree(a, twists).unwrap_or(i64::MAX);
            let db = column_degree(b, twists).unwrap_or(i64::MAX);
            da.cmp(&db).then_with(|| cmp_vec(a, b, &ctx))
        });
        cand.dedup();
        let mut chosen: Vec<VectorPoly> = Vec::new();
        for v in cand {
            if chosen.is_empty() {
                chosen.push(v);
                continue;
            }
            let sub = self.submodule(&chosen, rank);
            if !sub.contains(&v) {
                chosen.push(v);
            }
        }
        chosen
    }
}

/// A submodule of R^rank with its augmented Groebner basis.
pub struct RSubmodule {
    inner: SubmoduleGb,
    norig: usize,
    rank: usize,
}

impl RSubmodule {
    pub fn nf(&self, v: &VectorPoly) -> VectorPoly {
        self.inner.nf(v)
    }

    pub fn contains(&self, v: &VectorPoly) -> bool {
        self.inner.contains(v)
    }

    /// Coefficients on the original generators with `sum c_i g_i = v` in
    /// R^rank, when `v` is a member.
    pub fn lift(&self, v: &VectorPoly, q: &QuotCtx) -> Option<Vec<Polynomial>> {
        let c = self.inner.lift(v)?;
        Some(c[..self.norig].iter().map(|f| q.nf_poly(f)).collect())
    }

    /// Syzygies over R of the original generators (coefficients on the
    /// I-relation columns are discarded).
    pub fn syzygies_over_r(&self, q: &QuotCtx) -> Vec<VectorPoly> {
        let mut out = Vec::new();
        for s in self.inner.syzygies() {
            let proj = q.nf_vec(&s.slice(0, self.norig));
            if !proj.is_zero() {
                out.push(proj);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Groebner basis over P of the full submodule W + I * F (leading
    /// terms feed the Hilbert series of F/W).
    pub fn gens_gb_full(&self) -> Vec<VectorPoly> {
        self.inner.gens_gb()
    }
}

/// Degree of a homogeneous column of a graded free module with the given
/// generator twists; `None` for the zero column.
pub fn column_degree(v: &VectorPoly, twists: &[i64]) -> Option<i64> {
    for (i, c) in v.comps.iter().enumerate() {
        if let Some(d) = c.homogeneous_degree() {
            return Some(d as i64 + twists[i]);
        }
    }
    None
}

/// Check that every entry is homogeneous and all nonzero entries agree on
/// the column degree.
pub fn validate_column(v: &VectorPoly, twists: &[i64]) -> Result<Option<i64>, Error> {
    let mut degree: Option<i64> = None;
    for (i, c) in v.comps.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let d = c
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(format!("entry {} of a column", i)))?;
        let cd = d as i64 + twists[i];
        match degree {
            None => degree = Some(cd),
            Some(e) if e == cd => {}
            Some(e) => {
                return Err(Error::NotHomogeneous(format!(
                    "column mixes degrees {} and {}",
                    e, cd
                )))
            }
        }
    }
    Ok(degree)
}

/// Deterministic total order on vectors (used only for canonical sorting).
pub fn cmp_vec(a: &VectorPoly, b: &VectorPoly, ctx: &PolyCtx) -> Ordering {
    for (x, y) in a.comps.iter().zip(&b.comps) {
        let o = cmp_poly(x, y, ctx);
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

pub fn cmp_poly(a: &Polynomial, b: &Polynomial, ctx: &PolyCtx) -> Ordering {
    let mut i = 0;
    loop {
        match (a.terms.get(i), b.terms.get(i)) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) => {
                let o = ctx.cmp_mon(&y.mon, &x.mon).then(x.coeff.cmp(&y.coeff));
                if o != Ordering::Equal {
                    return o;
                }
            }
        }
        i += 1;
    }
}

/// A presentation matrix: generator twists plus relation columns.
#[derive(Clone, Debug)]
pub struct RawPresentation {
    pub twists: Vec<i64>,
    pub cols: Vec<VectorPoly>,
}

impl RawPresentation {
    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.cols[col].comps[row]
    }

    pub fn ngens(&self) -> usize {
        self.twists.len()
    }
}

/// Minimalize a presentation: normal forms mod I, elimination of unit
/// (degree-zero) entries, removal of zero columns, and pruning of redundant
/// relations. The result presents an isomorphic module and is idempotent.
pub fn minimize_presentation(q: &QuotCtx, pres: &RawPresentation) -> RawPresentation {
    let ctx = q.ctx();
    let mut twists = pres.twists.clone();
    let mut cols: Vec<VectorPoly> = pres.cols.iter().map(|c| q.nf_vec(c)).collect();
    cols.retain(|c| !c.is_zero());

    // eliminate unit pivots: a nonzero constant entry makes its generator
    // redundant
    'outer: loop {
        for j in 0..cols.len() {
            for i in 0..twists.len() {
                let e = &cols[j].comps[i];
                if !e.is_zero() && e.is_constant() {
                    let c = e.constant_coeff();
                    let cinv = ctx.field.inv(c);
                    let pivot = cols[j].clone();
                    for (jj, col) in cols.iter_mut().enumerate() {
                        if jj == j {
                            continue;
                        }
                        let factor = col.comps[i].scale(cinv, &ctx);
                        if factor.is_zero() {
                            continue;
                        }
                        *col = q.nf_vec(&col.sub(&pivot.mul_poly(&factor, &ctx), &ctx));
                    }
                    cols.remove(j);
                    for col in cols.iter_mut() {
                        col.comps.remove(i);
                    }
                    twists.remove(i);
                    cols.retain(|c| !c.is_zero());
                    continue 'outer;
                }
            }
        }
        break;
    }

    // prune redundant relations to a minimal generating set of the
    // relation submodule
    let cols = q.minimal_gens(&cols, twists.len(), &twists);
    RawPresentation { twists, cols }
}

/// A minimal graded free resolution: maps[i] holds the columns of
/// d_{i+1} : F_{i+1} -> F_i, twists[i] the generator degrees of F_i.
#[derive(Clone, Debug)]
pub struct RawResolution {
    pub twists: Vec<Vec<i64>>,
    pub maps: Vec<Vec<VectorPoly>>,
    pub truncated: bool,
}

impl RawResolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> Vec<usize> {
        self.twists.iter().map(|t| t.len()).collect()
    }
}

/// Resolve the cokernel of a *minimal* presentation to at most `max_steps`
/// syzygy steps.
pub fn resolve(q: &QuotCtx, pres: &RawPresentation, max_steps: usize) -> RawResolution {
    let mut twists = vec![pres.twists.clone()];
    let mut maps: Vec<Vec<VectorPoly>> = Vec::new();
    let mut current = pres.cols.clone();
    let mut current_ambient = pres.twists.clone();
    let mut truncated = false;

    loop {
        if current.is_empty() {
            break;
        }
        let col_twists: Vec<i64> = current
            .iter()
            .map(|c| column_degree(c, &current_ambient).expect("nonzero column"))
            .collect();
        maps.push(current.clone());
        twists.push(col_twists.clone());
        if maps.len() >= max_steps {
            // decide termination by one more syzygy computation
            let syz = q.syzygies(&current, current_ambient.len());
            let syz = q.minimal_gens(&syz, col_twists.len(), &col_twists);
            truncated = !syz.is_empty();
            break;
        }
        let syz = q.syzygies(&current, current_ambient.len());
        let syz = q.minimal_gens(&syz, col_twists.len(), &col_twists);
        if syz.is_empty() {
            break;
        }
        current_ambient = col_twists;
        current = syz;
    }

    RawResolution { twists, maps, truncated }
}
