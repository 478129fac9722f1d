//! Plain-text formats: ring, module, chain, descriptor and prime-catalog
//! files, plus the canonical renderers the command line prints.

use crate::classify::{GcfVerdict, GradeConsistentFunction, ResolvingDescriptor, gcf_validate};
use crate::error::Error;
use crate::groebner::VectorPoly;
use crate::gring::GradedRing;
use crate::ideal::Ideal;
use crate::module::{FreeResolution, ModulePresentation};
use crate::spectrum::{ClosedSet, PrimeCatalog};
use std::path::Path;
use std::sync::Arc;

fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {}: {}", line, msg))
}

/// Ring file: `char <prime>`, `vars <name>:<deg> ...`, optional
/// `rels <poly>; <poly>; ...`.
pub fn parse_ring(text: &str) -> Result<Arc<GradedRing>, Error> {
    let mut characteristic: Option<u32> = None;
    let mut vars: Option<Vec<(String, u32)>> = None;
    let mut rels: Vec<String> = Vec::new();
    for (n, line) in meaningful_lines(text) {
        if let Some(rest) = line.strip_prefix("char ") {
            let p = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(n, format!("bad characteristic {:?}", rest.trim())))?;
            characteristic = Some(p);
        } else if let Some(rest) = line.strip_prefix("vars ") {
            let mut vs = Vec::new();
            for tok in rest.split_whitespace() {
                let (name, deg) = tok
                    .split_once(':')
                    .ok_or_else(|| parse_err(n, format!("variable {:?} needs name:deg", tok)))?;
                let d = deg
                    .parse()
                    .map_err(|_| parse_err(n, format!("bad degree {:?}", deg)))?;
                vs.push((name.to_string(), d));
            }
            vars = Some(vs);
        } else if line == "rels" {
            // explicitly empty relation list
        } else if let Some(rest) = line.strip_prefix("rels ") {
            rels.extend(rest.split(';').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()));
        } else {
            return Err(parse_err(n, format!("unrecognized ring line {:?}", line)));
        }
    }
    let p = characteristic.ok_or_else(|| Error::Parse("missing `char` line".into()))?;
    let vars = vars.ok_or_else(|| Error::Parse("missing `vars` line".into()))?;
    let poly = crate::ring::PolyRing::new(p, vars)?;
    let gens = rels
        .iter()
        .map(|s| poly.parse_poly(s))
        .collect::<Result<Vec<_>, _>>()?;
    GradedRing::new(poly, gens)
}

pub fn render_ring(ring: &GradedRing) -> String {
    let mut out = format!("char {}\n", ring.poly.p);
    let vars: Vec<String> = ring
        .poly
        .var_names
        .iter()
        .zip(&ring.poly.weights)
        .map(|(n, d)| format!("{}:{}", n, d))
        .collect();
    out.push_str(&format!("vars {}\n", vars.join(" ")));
    let rels: Vec<String> = ring
        .min_gens
        .iter()
        .map(|f| compact(&ring.poly.poly_to_string(f)))
        .collect();
    if rels.is_empty() {
        out.push_str("rels\n");
    } else {
        out.push_str(&format!("rels {}\n", rels.join("; ")));
    }
    out
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Module file: `gens <d1> <d2> ...`, then `rel <entry> <entry> ...`
/// lines with one whitespace-free polynomial per generator.
pub fn parse_module(text: &str, ring: &Arc<GradedRing>) -> Result<ModulePresentation, Error> {
    let mut gens: Option<Vec<i64>> = None;
    let mut rels: Vec<VectorPoly> = Vec::new();
    for (n, line) in meaningful_lines(text) {
        if line == "gens" {
            gens = Some(vec![]);
        } else if let Some(rest) = line.strip_prefix("gens ") {
            let ds = rest
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| parse_err(n, format!("bad degree {:?}", t))))
                .collect::<Result<Vec<i64>, _>>()?;
            gens = Some(ds);
        } else if let Some(rest) = line.strip_prefix("rel ") {
            let gens = gens
                .as_ref()
                .ok_or_else(|| parse_err(n, "`rel` before `gens`"))?;
            let entries = rest.split_whitespace().collect::<Vec<_>>();
            if entries.len() != gens.len() {
                return Err(parse_err(
                    n,
                    format!("relation has {} entries, expected {}", entries.len(), gens.len()),
                ));
            }
            let comps = entries
                .iter()
                .map(|e| ring.poly.parse_poly(e).map_err(|err| parse_err(n, err)))
                .collect::<Result<Vec<_>, _>>()?;
            rels.push(VectorPoly { comps });
        } else {
            return Err(parse_err(n, format!("unrecognized module line {:?}", line)));
        }
    }
    let gens = gens.ok_or_else(|| Error::Parse("missing `gens` line".into()))?;
    ModulePresentation::new(ring.clone(), gens, rels)
}

/// Canonical module text from the minimal presentation.
pub fn render_module(m: &ModulePresentation) -> String {
    let raw = m.minimal_raw();
    let mut out = String::from("gens");
    for d in &raw.twists {
        out.push_str(&format!(" {}", d));
    }
    out.push('\n');
    for col in &raw.cols {
        out.push_str("rel");
        for c in &col.comps {
            out.push_str(&format!(" {}", compact(&m.ring.poly.poly_to_string(c))));
        }
        out.push('\n');
    }
    out
}

/// `V(<poly>; <poly>; ...)`; `V(0)` is the whole spectrum.
pub fn parse_closed_set(text: &str, ring: &Arc<GradedRing>) -> Result<ClosedSet, Error> {
    let s = text.trim();
    let inner = s
        .strip_prefix("V(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse(format!("closed set {:?} must be of the form V(...)", s)))?;
    let mut gens = Vec::new();
    for part in inner.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        gens.push(ring.poly.parse_poly(part)?);
    }
    Ok(ClosedSet::from_polys(ring.clone(), gens))
}

/// Chain lines `level <i>: V(...)` with consecutive 1-based indices;
/// returned raw (unvalidated) for gcf_validate.
pub fn parse_chain_levels(text: &str, ring: &Arc<GradedRing>) -> Result<Vec<ClosedSet>, Error> {
    let mut levels = Vec::new();
    for (n, line) in meaningful_lines(text) {
        let rest = line
            .strip_prefix("level ")
            .ok_or_else(|| parse_err(n, format!("expected `level <i>: V(...)`, got {:?}", line)))?;
        let (idx, set) = rest
            .split_once(':')
            .ok_or_else(|| parse_err(n, "missing `:` after level index"))?;
        let i: usize = idx
            .trim()
            .parse()
            .map_err(|_| parse_err(n, format!("bad level index {:?}", idx.trim())))?;
        if i != levels.len() + 1 {
            return Err(parse_err(n, format!("expected level {}, got {}", levels.len() + 1, i)));
        }
        levels.push(parse_closed_set(set, ring).map_err(|e| parse_err(n, e))?);
    }
    Ok(levels)
}

fn validated_gcf(
    levels: Vec<ClosedSet>,
    ring: &Arc<GradedRing>,
) -> Result<GradeConsistentFunction, Error> {
    match gcf_validate(ring, levels)? {
        GcfVerdict::Valid(f) => Ok(f),
        GcfVerdict::Violation { level, reason } => {
            Err(Error::Invalid(format!("not grade consistent at level {}: {}", level, reason)))
        }
    }
}

/// Descriptor file: a header line `fin-pd:` / `dominant:` /
/// `hyper: W=V(...)` / `generated:`, then chain lines or module file
/// paths (resolved relative to `base`).
pub fn parse_descriptor(
    text: &str,
    ring: &Arc<GradedRing>,
    base: &Path,
) -> Result<ResolvingDescriptor, Error> {
    let mut lines = meaningful_lines(text);
    let (n, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty descriptor file".into()))?;
    let body: String =
        lines.map(|(_, l)| l).collect::<Vec<_>>().join("\n");
    let desc = if header == "fin-pd:" {
        let levels = parse_chain_levels(&body, ring)?;
        ResolvingDescriptor::FinPd(validated_gcf(levels, ring)?)
    } else if header == "dominant:" {
        let levels = parse_chain_levels(&body, ring)?;
        ResolvingDescriptor::Dominant(validated_gcf(levels, ring)?)
    } else if let Some(rest) = header.strip_prefix("hyper:") {
        let w = rest
            .trim()
            .strip_prefix("W=")
            .ok_or_else(|| parse_err(n, "hyper header needs `W=V(...)`"))?;
        let w = parse_closed_set(w, ring)?;
        let levels = parse_chain_levels(&body, ring)?;
        ResolvingDescriptor::Hyper(w, validated_gcf(levels, ring)?)
    } else if header == "generated:" {
        let mut gens = Vec::new();
        for path in body.lines().filter(|l| !l.trim().is_empty()) {
            let full = base.join(path.trim());
            let text = std::fs::read_to_string(&full)?;
            gens.push(parse_module(&text, ring)?);
        }
        if gens.is_empty() {
            return Err(Error::Parse("`generated:` descriptor lists no modules".into()));
        }
        ResolvingDescriptor::Generated(gens)
    } else {
        return Err(parse_err(n, format!("unrecognized descriptor header {:?}", header)));
    };
    desc.validate(ring)?;
    Ok(desc)
}

pub fn render_descriptor(d: &ResolvingDescriptor) -> String {
    match d {
        ResolvingDescriptor::FinPd(f) => format!("fin-pd:\n{}", render_levels(f)),
        ResolvingDescriptor::Dominant(f) => format!("dominant:\n{}", render_levels(f)),
        ResolvingDescriptor::Hyper(w, f) => {
            format!("hyper: W={}\n{}", w.render(), render_levels(f))
        }
        ResolvingDescriptor::Generated(gens) => {
            format!("generated: ({} modules)\n", gens.len())
        }
    }
}

fn render_levels(f: &GradeConsistentFunction) -> String {
    let mut out = String::new();
    for (i, l) in f.chain.levels.iter().enumerate() {
        out.push_str(&format!("level {}: {}\n", i + 1, l.render()));
    }
    out
}

/// Catalog file: one prime per line as `V(<poly>; ...)`.
pub fn parse_catalog(text: &str, ring: &Arc<GradedRing>) -> Result<PrimeCatalog, Error> {
    let mut ideals = Vec::new();
    for (n, line) in meaningful_lines(text) {
        let set = parse_closed_set(line, ring).map_err(|e| parse_err(n, e))?;
        let _ = n;
        ideals.push(Ideal::new(set.ideal.gens.clone(), &ring.poly));
    }
    if ideals.is_empty() {
        return Err(Error::Parse("catalog file lists no primes".into()));
    }
    PrimeCatalog::new(ring.clone(), ideals)
}

/// Betti rows `step: (rank, twists…)`.
pub fn render_betti(res: &FreeResolution) -> String {
    let mut out = String::new();
    let mut row = |step: usize, twists: &[i64]| {
        let mut ts = twists.to_vec();
        ts.sort();
        let ts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
        out.push_str(&format!("{}: ({}, {})\n", step, twists.len(), ts.join(" ")));
    };
    row(0, &res.f0.twists);
    for (i, m) in res.maps.iter().enumerate() {
        row(i + 1, &m.source.twists);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyper_ring() -> Arc<GradedRing> {
        parse_ring("char 101\nvars x:1 y:1\nrels x*y\n").unwrap()
    }

    #[test]
    fn ring_roundtrip() {
        let r = hyper_ring();
        assert_eq!(r.dim, 1);
        assert_eq!(r.depth, 1);
        assert!(r.is_hypersurface && !r.is_regular);
        assert_eq!(render_ring(&r), "char 101\nvars x:1 y:1\nrels x*y\n");
        let reg = parse_ring("char 101\nvars x:1 y:1\nrels\n").unwrap();
        assert!(reg.is_regular);
        assert_eq!(parse_ring(&render_ring(&reg)).unwrap().dim, 2);
        assert!(parse_ring("vars x:1\n").is_err());
        assert!(parse_ring("char 4\nvars x:1\n").is_err());
    }

    #[test]
    fn module_roundtrip() {
        let r = hyper_ring();
        let m = parse_module("gens 0 1\nrel x 0\nrel 0 y^2\n", &r).unwrap();
        assert_eq!(m.minimal_betti().0, vec![0, 1]);
        let text = render_module(&m);
        let m2 = parse_module(&text, &r).unwrap();
        assert_eq!(render_module(&m2), text);
        // inhomogeneous entry named by line
        let err = parse_module("gens 0\nrel x+1\n", &r).unwrap_err();
        assert!(err.to_string().contains("homog") || err.to_string().contains("degree"));
        assert!(parse_module("rel x\n", &r).is_err());
    }

    #[test]
    fn chains_and_descriptors() {
        let r = hyper_ring();
        let levels = parse_chain_levels("level 1: V(x; y)\n", &r).unwrap();
        assert_eq!(levels.len(), 1);
        assert!(parse_chain_levels("level 2: V(x)\n", &r).is_err());
        let d = parse_descriptor("fin-pd:\nlevel 1: V(x; y)\n", &r, Path::new(".")).unwrap();
        assert!(render_descriptor(&d).starts_with("fin-pd:"));
        let d = parse_descriptor(
            "hyper: W=V(x; y)\nlevel 1: V(x; y)\n",
            &r,
            Path::new("."),
        )
        .unwrap();
        assert!(render_descriptor(&d).contains("W=V(x; y)"));
        // W escaping Sing R is rejected: Sing = V(x,y) over this ring
        let reg = parse_ring("char 101\nvars x:1 y:1\nrels\n").unwrap();
        assert!(
            parse_descriptor("hyper: W=V(x)\nlevel 1: V(x)\n", &reg, Path::new(".")).is_err()
        );
        // invalid gcf rejected at parse time
        assert!(parse_descriptor("fin-pd:\nlevel 1: V(0)\n", &r, Path::new(".")).is_err());
    }

    #[test]
    fn catalogs_and_betti() {
        let r = parse_ring("char 101\nvars x:1 y:1\nrels\n").unwrap();
        let cat = parse_catalog("V(0)\nV(x)\nV(x; y)\n", &r).unwrap();
        assert_eq!(cat.primes.len(), 3);
        assert!(parse_catalog("V(x)\n", &r).is_err()); // maximal ideal missing
        let k = ModulePresentation::residue_field(r.clone());
        let res = k.free_resolution(3);
        assert_eq!(render_betti(&res), "0: (1, 0)\n1: (2, 1 1)\n2: (1, 2)\n");
    }
}
