//! Monomials with weighted degrees and the monomial orders used by the kernel.

use std::cmp::Ordering;

/// A power product of the ring variables. `degree` is the weighted degree
/// with respect to the declared variable degrees and is kept consistent by
/// every constructor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub exps: Vec<u16>,
    pub degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], degree: 0 }
    }

    pub fn from_exps(exps: Vec<u16>, weights: &[u32]) -> Monomial {
        let degree = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { exps, degree }
    }

    pub fn var(i: usize, nvars: usize, weights: &[u32]) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, degree: weights[i] }
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when defined.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: Vec<u16> =
            self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exps(exps, weights)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders. `GrevLex` is the single order exposed to callers;
/// `Elim(k)` (block grevlex eliminating the first `k` variables) is used
/// internally for intersections, quotients and eliminations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Elim(usize),
}

fn grevlex_block(a: &[u16], b: &[u16], weights: &[u32]) -> Ordering {
    let da: u32 = a.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
    let db: u32 = b.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    // reverse lexicographic tie break: the first difference from the right,
    // smaller exponent there means larger monomial
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// `Greater` means `a` is larger in the order.
    pub fn cmp(&self, a: &Monomial, b: &Monomial, weights: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => grevlex_block(&a.exps, &b.exps, weights),
                o => o,
            },
            MonomialOrder::Elim(k) => {
                match grevlex_block(&a.exps[..k], &b.exps[..k], &weights[..k]) {
                    Ordering::Equal => grevlex_block(&a.exps[k..], &b.exps[k..], &weights[k..]),
                    o => o,
                }
            }
        }
    }
}
