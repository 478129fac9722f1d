//! Homological algebra on presented modules: maps, kernels, homology,
//! Hom/Ext/Tor and depth. A map is stored by its matrix on generators; all
//! constructions reduce to syzygy and lift computations over R.

use crate::error::Error;
use crate::groebner::VectorPoly;
use crate::module::{Depth, ModulePresentation};
use crate::rmod::{self, cmp_vec, column_degree, QuotCtx, RawResolution};

/// A homogeneous map of presented modules of internal degree `degree`
/// (degree 0 for honest graded maps; Hom-module generators carry their
/// twist here). Columns are indexed by source generators.
#[derive(Clone, Debug)]
pub struct PresMap {
    pub source: ModulePresentation,
    pub target: ModulePresentation,
    pub degree: i64,
    pub cols: Vec<VectorPoly>,
}

impl PresMap {
    pub fn new(
        source: ModulePresentation,
        target: ModulePresentation,
        degree: i64,
        cols: Vec<VectorPoly>,
    ) -> Result<PresMap, Error> {
        source.same_ring(&target)?;
        if cols.len() != source.gens.len() {
            return Err(Error::Invalid(format!(
                "map has {} columns for {} source generators",
                cols.len(),
                source.gens.len()
            )));
        }
        let q = source.ring.quot_ctx();
        let mut reduced = Vec::with_capacity(cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.rank() != target.gens.len() {
                return Err(Error::Invalid(format!(
                    "column {} has {} entries for {} target generators",
                    j,
                    c.rank(),
                    target.gens.len()
                )));
            }
            for (i, e) in c.comps.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = degree + source.gens[j] - target.gens[i];
                match e.homogeneous_degree() {
                    Some(d) if d as i64 == want => {}
                    _ => {
                        return Err(Error::NotHomogeneous(format!(
                            "map entry ({}, {}) is not homogeneous of degree {}",
                            i, j, want
                        )))
                    }
                }
            }
            reduced.push(q.nf_vec(c));
        }
        Ok(PresMap { source, target, degree, cols: reduced })
    }

    pub fn identity(m: &ModulePresentation) -> PresMap {
        let n = m.gens.len();
        let nvars = m.ring.nvars();
        let cols = (0..n).map(|j| VectorPoly::unit(j, n, nvars)).collect();
        PresMap { source: m.clone(), target: m.clone(), degree: 0, cols }
    }

    pub fn zero_from(source: ModulePresentation, target: ModulePresentation) -> PresMap {
        let cols = source
            .gens
            .iter()
            .map(|_| VectorPoly::zero(target.gens.len()))
            .collect();
        PresMap { source, target, degree: 0, cols }
    }

    /// Image of a vector of source-generator coordinates.
    pub fn apply(&self, v: &VectorPoly) -> VectorPoly {
        let ctx = self.source.ring.poly.ctx();
        let q = self.source.ring.quot_ctx();
        let mut acc = VectorPoly::zero(self.target.gens.len());
        for (j, f) in v.comps.iter().enumerate() {
            if !f.is_zero() {
                acc = acc.add(&self.cols[j].mul_poly(f, &ctx), &ctx);
            }
        }
        q.nf_vec(&acc)
    }

    pub fn compose(&self, first: &PresMap) -> PresMap {
        let cols = first.cols.iter().map(|c| self.apply(c)).collect();
        PresMap {
            source: first.source.clone(),
            target: self.target.clone(),
            degree: self.degree + first.degree,
            cols,
        }
    }

    /// The map kills every source relation (so it is a well-defined map of
    /// the presented modules, not just of free covers).
    pub fn is_well_defined(&self) -> bool {
        if self.source.rels.is_empty() {
            return true;
        }
        let q = self.source.ring.quot_ctx();
        let sub = q.submodule(&self.target.rels, self.target.gens.len());
        self.source.rels.iter().all(|r| sub.contains(&self.apply(r)))
    }

    pub fn is_zero_map(&self) -> bool {
        let q = self.source.ring.quot_ctx();
        let sub = q.submodule(&self.target.rels, self.target.gens.len());
        self.cols.iter().all(|c| sub.contains(c))
    }

    pub fn is_surjective(&self) -> bool {
        cokernel(self).is_zero()
    }

    pub fn is_injective(&self) -> bool {
        kernel(self).0.is_zero()
    }
}

/// Greedy minimal generating set of the submodule generated by `cands`
/// inside the module presented on `rank` generators with relations `fixed`.
pub fn minimal_gens_mod(
    q: &QuotCtx,
    cands: &[VectorPoly],
    fixed: &[VectorPoly],
    rank: usize,
    twists: &[i64],
) -> Vec<VectorPoly> {
    let ctx = q.ctx();
    let mut cand: Vec<VectorPoly> = cands
        .iter()
        .map(|v| q.nf_vec(v))
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
        let mut span = chosen.clone();
        span.extend(fixed.iter().cloned());
        if span.is_empty() && q.quot_gb.is_empty() {
            chosen.push(v);
            continue;
        }
        if !q.submodule(&span, rank).contains(&v) {
            chosen.push(v);
        }
    }
    chosen
}

/// The submodule of `target` generated by the given coordinate vectors,
/// presented on a minimal generating set, with its inclusion map.
pub fn submodule_presentation(
    target: &ModulePresentation,
    gens: Vec<VectorPoly>,
) -> (ModulePresentation, PresMap) {
    let ring = target.ring.clone();
    let q = ring.quot_ctx();
    let rank = target.gens.len();
    let u = minimal_gens_mod(&q, &gens, &target.rels, rank, &target.gens);
    let tw: Vec<i64> = u
        .iter()
        .map(|c| column_degree(c, &target.gens).expect("nonzero generator"))
        .collect();
    let mut spanning = u.clone();
    spanning.extend(target.rels.iter().cloned());
    let rels: Vec<VectorPoly> = if u.is_empty() {
        vec![]
    } else {
        q.syzygies(&spanning, rank)
            .into_iter()
            .map(|s| q.nf_vec(&s.slice(0, u.len())))
            .filter(|v| !v.is_zero())
            .collect()
    };
    let module = ModulePresentation::new(ring, tw, rels)
        .expect("submodule presentation is homogeneous");
    let incl = PresMap {
        source: module.clone(),
        target: target.clone(),
        degree: 0,
        cols: u,
    };
    (module, incl)
}

/// Kernel of a map, with its inclusion into the source.
pub fn kernel(f: &PresMap) -> (ModulePresentation, PresMap) {
    let ring = f.source.ring.clone();
    let q = ring.quot_ctx();
    let nm = f.source.gens.len();
    let nn = f.target.gens.len();
    let mut cols = f.cols.clone();
    cols.extend(f.target.rels.iter().cloned());
    let cands: Vec<VectorPoly> = q
        .syzygies(&cols, nn)
        .into_iter()
        .map(|s| q.nf_vec(&s.slice(0, nm)))
        .filter(|v| !v.is_zero())
        .collect();
    submodule_presentation(&f.source, cands)
}

pub fn cokernel(f: &PresMap) -> ModulePresentation {
    let mut rels = f.target.rels.clone();
    rels.extend(f.cols.iter().cloned());
    ModulePresentation::new(f.target.ring.clone(), f.target.gens.clone(), rels)
        .expect("cokernel presentation is homogeneous")
}

/// Image of a map as a submodule of the target, with inclusion.
pub fn image(f: &PresMap) -> (ModulePresentation, PresMap) {
    submodule_presentation(&f.target, f.cols.clone())
}

/// Homology ker(g)/im(f) at the middle of `A --f--> B --g--> C`.
pub fn homology(f: &PresMap, g: &PresMap) -> Result<ModulePresentation, Error> {
    let ring = g.source.ring.clone();
    let q = ring.quot_ctx();
    let (k, incl) = kernel(g);
    if f.cols.is_empty() {
        return Ok(k);
    }
    if k.gens.is_empty() {
        return Ok(k);
    }
    let nb = g.source.gens.len();
    let mut spanning = incl.cols.clone();
    spanning.extend(g.source.rels.iter().cloned());
    let sub = q.submodule(&spanning, nb);
    let mut rels = k.rels.clone();
    for v in &f.cols {
        let c = sub.lift(v, &q).ok_or_else(|| {
            Error::Internal("image does not land in the kernel (not a complex)".into())
        })?;
        let w = VectorPoly { comps: c[..incl.cols.len()].to_vec() };
        if !w.is_zero() {
            rels.push(w);
        }
    }
    ModulePresentation::new(ring, k.gens.clone(), rels)
}

/// Hom(F, N) for a free module with the given twists, as a block module;
/// coordinate (i, g) at flat index i * n + g.
fn hom_block(ftwists: &[i64], n: &ModulePresentation) -> ModulePresentation {
    let nn = n.gens.len();
    let mut gens = Vec::with_capacity(ftwists.len() * nn);
    for &fi in ftwists {
        for &tg in &n.gens {
            gens.push(tg - fi);
        }
    }
    let mut rels = Vec::new();
    for i in 0..ftwists.len() {
        for r in &n.rels {
            let mut v = VectorPoly::zero(gens.len());
            for (g, e) in r.comps.iter().enumerate() {
                v.comps[i * nn + g] = e.clone();
            }
            rels.push(v);
        }
    }
    ModulePresentation::new(n.ring.clone(), gens, rels).expect("hom block is homogeneous")
}

/// Induced map Hom(F_prev, N) -> Hom(F_next, N) of a differential
/// d: F_next -> F_prev with columns `dcols`.
fn hom_block_map(
    dcols: &[VectorPoly],
    source: ModulePresentation,
    target: ModulePresentation,
    nn: usize,
    prev_rank: usize,
) -> PresMap {
    let next_rank = dcols.len();
    let mut cols = Vec::with_capacity(prev_rank * nn);
    for i in 0..prev_rank {
        for g in 0..nn {
            let mut v = VectorPoly::zero(next_rank * nn);
            for (j, dc) in dcols.iter().enumerate() {
                v.comps[j * nn + g] = dc.comps[i].clone();
            }
            cols.push(v);
        }
    }
    PresMap { source, target, degree: 0, cols }
}

/// F ⊗ N for a free module; coordinate (a, g) at flat index a * n + g.
fn tensor_block(ftwists: &[i64], n: &ModulePresentation) -> ModulePresentation {
    let nn = n.gens.len();
    let mut gens = Vec::with_capacity(ftwists.len() * nn);
    for &fa in ftwists {
        for &tg in &n.gens {
            gens.push(fa + tg);
        }
    }
    let mut rels = Vec::new();
    for a in 0..ftwists.len() {
        for r in &n.rels {
            let mut v = VectorPoly::zero(gens.len());
            for (g, e) in r.comps.iter().enumerate() {
                v.comps[a * nn + g] = e.clone();
            }
            rels.push(v);
        }
    }
    ModulePresentation::new(n.ring.clone(), gens, rels).expect("tensor block is homogeneous")
}

/// Induced map F_next ⊗ N -> F_prev ⊗ N of d: F_next -> F_prev.
fn tensor_block_map(
    dcols: &[VectorPoly],
    source: ModulePresentation,
    target: ModulePresentation,
    nn: usize,
    prev_rank: usize,
) -> PresMap {
    let next_rank = dcols.len();
    let mut cols = Vec::with_capacity(next_rank * nn);
    for (a, dc) in dcols.iter().enumerate() {
        let _ = a;
        for g in 0..nn {
            let mut v = VectorPoly::zero(prev_rank * nn);
            for b in 0..prev_rank {
                v.comps[b * nn + g] = dc.comps[b].clone();
            }
            cols.push(v);
        }
    }
    PresMap { source, target, degree: 0, cols }
}

/// Hom(M, N) together with its generators realized as honest maps M -> N
/// (each of the recorded internal degree).
pub struct Hom {
    pub module: ModulePresentation,
    pub maps: Vec<PresMap>,
}

pub fn hom(m: &ModulePresentation, n: &ModulePresentation) -> Result<Hom, Error> {
    m.same_ring(n)?;
    let mm = m.minimal_presentation();
    let mraw = m.minimal_raw();
    let nn = n.gens.len();
    let h0 = hom_block(&mraw.twists, n);
    let col_twists: Vec<i64> = mraw
        .cols
        .iter()
        .map(|c| column_degree(c, &mraw.twists).expect("nonzero relation"))
        .collect();
    let h1 = hom_block(&col_twists, n);
    let delta = hom_block_map(&mraw.cols, h0, h1, nn, mraw.twists.len());
    let (module, incl) = kernel(&delta);
    let mut maps = Vec::with_capacity(module.gens.len());
    for (g, u) in incl.cols.iter().enumerate() {
        let cols: Vec<VectorPoly> = (0..mraw.twists.len())
            .map(|i| VectorPoly { comps: u.comps[i * nn..(i + 1) * nn].to_vec() })
            .collect();
        maps.push(PresMap::new(mm.clone(), n.clone(), module.gens[g], cols)?);
    }
    Ok(Hom { module, maps })
}

/// Ext^i at the free modules F_{i-1}, F_i, F_{i+1} of a resolution given by
/// its twists and differential columns.
fn ext_at(
    twists: &[Vec<i64>],
    maps: &[Vec<VectorPoly>],
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, Error> {
    let ring = n.ring.clone();
    if i >= twists.len() {
        return Ok(ModulePresentation::zero(ring));
    }
    let nn = n.gens.len();
    let hi = hom_block(&twists[i], n);
    let f = if i == 0 {
        PresMap::zero_from(ModulePresentation::zero(ring.clone()), hi.clone())
    } else {
        let him1 = hom_block(&twists[i - 1], n);
        hom_block_map(&maps[i - 1], him1, hi.clone(), nn, twists[i - 1].len())
    };
    let g = if i < maps.len() {
        let hip1 = hom_block(&twists[i + 1], n);
        hom_block_map(&maps[i], hi.clone(), hip1, nn, twists[i].len())
    } else {
        PresMap::zero_from(hi.clone(), ModulePresentation::zero(ring))
    };
    homology(&f, &g)
}

pub fn ext(
    m: &ModulePresentation,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, Error> {
    m.same_ring(n)?;
    let q = m.ring.quot_ctx();
    let res = rmod::resolve(&q, m.minimal_raw(), i + 1);
    ext_at(&res.twists, &res.maps, n, i)
}

pub fn tor(
    m: &ModulePresentation,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, Error> {
    m.same_ring(n)?;
    let ring = m.ring.clone();
    let q = ring.quot_ctx();
    let res = rmod::resolve(&q, m.minimal_raw(), i + 1);
    if i >= res.twists.len() {
        return Ok(ModulePresentation::zero(ring));
    }
    let nn = n.gens.len();
    let ti = tensor_block(&res.twists[i], n);
    let f = if i < res.maps.len() {
        let tip1 = tensor_block(&res.twists[i + 1], n);
        tensor_block_map(&res.maps[i], tip1, ti.clone(), nn, res.twists[i].len())
    } else {
        PresMap::zero_from(ModulePresentation::zero(ring.clone()), ti.clone())
    };
    let g = if i == 0 {
        PresMap::zero_from(ti.clone(), ModulePresentation::zero(ring))
    } else {
        let tim1 = tensor_block(&res.twists[i - 1], n);
        tensor_block_map(&res.maps[i - 1], ti.clone(), tim1, nn, res.twists[i - 1].len())
    };
    homology(&f, &g)
}

fn ext_from_resolution(
    res: &RawResolution,
    n: &ModulePresentation,
    i: usize,
) -> Result<ModulePresentation, Error> {
    ext_at(&res.twists, &res.maps, n, i)
}

impl ModulePresentation {
    /// Depth at the irrelevant maximal ideal: least i with Ext^i(k, M) != 0.
    pub fn depth(&self) -> Depth {
        if self.is_zero() {
            return Depth::Infinite;
        }
        let kres = self.ring.k_resolution();
        for i in 0..=self.ring.dim as usize {
            let e = ext_from_resolution(kres, self, i)
                .expect("Ext(k, M) within the cached resolution range");
            if !e.is_zero() {
                return Depth::Finite(i as u32);
            }
        }
        unreachable!("depth of a nonzero module is at most dim R");
    }

    /// M^* = Hom(M, R).
    pub fn dual(&self) -> ModulePresentation {
        hom(self, &ModulePresentation::ring_module(self.ring.clone()))
            .expect("dual over the same ring")
            .module
    }

    /// Maximal Cohen-Macaulay test (ring must be CM).
    pub fn is_mcm(&self) -> Result<bool, Error> {
        if !self.ring.is_cm {
            return Err(Error::UnsupportedRing(
                "MCM test requires a Cohen-Macaulay ring".into(),
            ));
        }
        if self.is_zero() {
            return Ok(true);
        }
        Ok(self.depth() == Depth::Finite(self.ring.dim))
    }
}
