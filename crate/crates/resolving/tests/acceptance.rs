//! End-to-end acceptance gate: one pass/fail line per criterion.

use resolving::verify::{run_suite, CheckResult};
use std::process::Command;
use std::time::{Duration, Instant};

struct Criterion {
    label: &'static str,
    pass: bool,
    detail: String,
}

fn all_pass(results: &[CheckResult]) -> (bool, String) {
    match results.iter().find(|r| !r.pass) {
        None => (true, format!("{} checks", results.len())),
        Some(r) => (false, format!("{}: {}", r.name, r.detail)),
    }
}

/// Checks whose names contain any of the fragments must all pass, and at
/// least `min` such checks must exist.
fn fragment_pass(results: &[CheckResult], fragments: &[&str], min: usize) -> (bool, String) {
    let picked: Vec<&CheckResult> = results
        .iter()
        .filter(|r| fragments.iter().any(|f| r.name.contains(f)))
        .collect();
    if picked.len() < min {
        return (false, format!("only {} matching checks (expected >= {})", picked.len(), min));
    }
    match picked.iter().find(|r| !r.pass) {
        None => (true, format!("{} checks", picked.len())),
        Some(r) => (false, format!("{}: {}", r.name, r.detail)),
    }
}

fn timed_suite(name: &str) -> (Vec<CheckResult>, Duration) {
    let start = Instant::now();
    let results = run_suite(name).expect("suite must run");
    (results, start.elapsed())
}

fn verify_all_output(extra: &[&str]) -> (Vec<u8>, bool) {
    let out = Command::new(env!("CARGO_BIN_EXE_resolving"))
        .args(extra)
        .args(["verify", "--all"])
        .output()
        .expect("binary must run");
    (out.stdout, out.status.success())
}

#[test]
fn acceptance() {
    let mut criteria: Vec<Criterion> = Vec::new();

    // 1: minimal-resolution suite, strict time budget
    let (lemma4, t1) = timed_suite("lemma4");
    let (p, mut d) = all_pass(&lemma4);
    let p = p && t1 < Duration::from_secs(10);
    if t1 >= Duration::from_secs(10) {
        d = format!("suite took {:?} (budget 10s)", t1);
    }
    criteria.push(Criterion { label: "1 finite-length witnesses resolve minimally", pass: p, detail: d });

    // 2: filtration of the finite-length finite-pd category
    let (filt, _) = timed_suite("thm1.1");
    let (p, d) = all_pass(&filt);
    criteria.push(Criterion { label: "2 filtration profiles and membership order", pass: p, detail: d });

    // 3: correspondence round trips, strict time budget
    let (rt, t3) = timed_suite("thm1.2");
    let (p, mut d) = all_pass(&rt);
    let p = p && t3 < Duration::from_secs(60);
    if t3 >= Duration::from_secs(60) {
        d = format!("suite took {:?} (budget 60s)", t3);
    }
    criteria.push(Criterion { label: "3 correspondence round trips", pass: p, detail: d });

    // 4-6 and 10 live in the cross-cutting property suite
    let (props, _) = timed_suite("props");

    let (p, d) = fragment_pass(&props, &["pd + depth"], 2);
    criteria.push(Criterion { label: "4 pd + depth = depth R on random modules", pass: p, detail: d });

    let (p, d) = fragment_pass(&props, &["Fitting-ideal oracle"], 1);
    criteria.push(Criterion { label: "5 nonfree locus matches the Fitting-ideal oracle", pass: p, detail: d });

    let (p, d) = fragment_pass(&props, &["transpose"], 8);
    criteria.push(Criterion { label: "6 transpose identities on module pools", pass: p, detail: d });

    // 7: rigidity desk check over the regular ring
    let (rig, _) = timed_suite("thm1.4");
    let (p, d) = all_pass(&rig);
    criteria.push(Criterion { label: "7 rigidity conditions agree and violations are exhibited", pass: p, detail: d });

    // 8 and 9 live in the hypersurface suite
    let (hyper, _) = timed_suite("hyper");

    let (p, d) = fragment_pass(
        &hyper,
        &["Phi of k is", "Phi of R/(x) is", "satisfies Psi", "singular locus is", "IPD"],
        8,
    );
    criteria.push(Criterion { label: "8 hypersurface classification and loci", pass: p, detail: d });

    let (p, d) = fragment_pass(&hyper, &["split"], 2);
    criteria.push(Criterion { label: "9 split parts classify like the original", pass: p, detail: d });

    let (p, d) = fragment_pass(&props, &["dominant", "second syzygies"], 4);
    criteria.push(Criterion { label: "10 dominance of add R decided with witnesses", pass: p, detail: d });

    // 11: the full battery is deterministic across runs and thread counts
    let start = Instant::now();
    let (base, ok0) = verify_all_output(&[]);
    let mut det = ok0 && !base.is_empty();
    let mut why = if ok0 { String::new() } else { "first run exited nonzero".into() };
    for run in 0..3 {
        let (out, ok) = if run < 2 {
            verify_all_output(&[])
        } else {
            verify_all_output(&["--threads", "4"])
        };
        if !ok {
            det = false;
            why = format!("run {} exited nonzero", run + 2);
        } else if out != base {
            det = false;
            why = format!("run {} output differs from the first", run + 2);
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= Duration::from_secs(300) {
        det = false;
        why = format!("battery took {:?} (budget 5 min)", elapsed);
    }
    let d = if det { format!("4 identical runs in {:?}", elapsed) } else { why };
    criteria.push(Criterion { label: "11 verify battery deterministic and within budget", pass: det, detail: d });

    let mut failed = 0usize;
    for c in &criteria {
        if c.pass {
            println!("PASS criterion {} ({})", c.label, c.detail);
        } else {
            println!("FAIL criterion {}: {}", c.label, c.detail);
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{} acceptance criteria failed", failed);
}
