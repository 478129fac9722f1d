//! Multivariate polynomials over F_p with terms kept strictly sorted
//! descending in the active monomial order.

use crate::fp::Fp;
use crate::monomial::{Monomial, MonomialOrder};
use std::cmp::Ordering;

/// Everything polynomial arithmetic needs to know about the ambient ring:
/// the field, the variable degrees and the active order.
#[derive(Clone, Debug)]
pub struct PolyCtx {
    pub field: Fp,
    pub weights: Vec<u32>,
    pub order: MonomialOrder,
}

impl PolyCtx {
    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, &self.weights)
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyCtx {
        PolyCtx { field: self.field, weights: self.weights.clone(), order }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: u32,
    pub mon: Monomial,
}

/// Sparse polynomial; invariant: no zero coefficients, monomials strictly
/// descending in the context order under which it was built.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    pub terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: vec![] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: u32, nvars: usize) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { coeff: c, mon: Monomial::one(nvars) }] }
        }
    }

    pub fn one(nvars: usize) -> Polynomial {
        Polynomial::constant(1, nvars)
    }

    pub fn variable(i: usize, ctx: &PolyCtx) -> Polynomial {
        Polynomial {
            terms: vec![Term { coeff: 1, mon: Monomial::var(i, ctx.nvars(), &ctx.weights) }],
        }
    }

    pub fn monomial(c: u32, mon: Monomial) -> Polynomial {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { coeff: c, mon }] }
        }
    }

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Rebuild the sorted-term invariant after an order change.
    pub fn normalize(mut self, ctx: &PolyCtx) -> Polynomial {
        self.terms.sort_by(|a, b| ctx.cmp_mon(&b.mon, &a.mon));
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            if let Some(last) = out.last_mut() {
                if last.mon == t.mon {
                    last.coeff = ctx.field.add(last.coeff, t.coeff);
                    if last.coeff == 0 {
                        out.pop();
                    }
                    continue;
                }
            }
            if t.coeff != 0 {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }

    pub fn add(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ctx.cmp_mon(&self.terms[i].mon, &other.terms[j].mon) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ctx.field.add(self.terms[i].coeff, other.terms[j].coeff);
                    if c != 0 {
                        out.push(Term { coeff: c, mon: self.terms[i].mon.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, ctx: &PolyCtx) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: ctx.field.neg(t.coeff), mon: t.mon.clone() })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        self.add(&other.neg(ctx), ctx)
    }

    pub fn scale(&self, c: u32, ctx: &PolyCtx) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: ctx.field.mul(t.coeff, c), mon: t.mon.clone() })
                .collect(),
        }
    }

    /// Multiply by the term `c * mon`; preserves the sorted invariant since
    /// monomial orders respect multiplication.
    pub fn mul_term(&self, c: u32, mon: &Monomial, ctx: &PolyCtx) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: ctx.field.mul(t.coeff, c), mon: t.mon.mul(mon) })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_term(t.coeff, &t.mon, ctx), ctx);
        }
        acc
    }

    pub fn monic(&self, ctx: &PolyCtx) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(lt) => self.scale(ctx.field.inv(lt.coeff), ctx),
        }
    }

    /// Weighted degree of a homogeneous polynomial; `None` for 0 or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let first = self.terms.first()?;
        let d = first.mon.degree;
        if self.terms.iter().all(|t| t.mon.degree == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Total (weighted) degree, -1 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|t| t.mon.degree as i64).max().unwrap_or(-1)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.iter().all(|t| t.mon.is_one())
    }

    pub fn constant_coeff(&self) -> u32 {
        self.terms.iter().find(|t| t.mon.is_one()).map(|t| t.coeff).unwrap_or(0)
    }

    pub fn derivative(&self, var: usize, ctx: &PolyCtx) -> Polynomial {
        let mut out = Vec::new();
        for t in &self.terms {
            let e = t.mon.exps[var];
            if e == 0 {
                continue;
            }
            let c = ctx.field.mul(t.coeff, ctx.field.reduce_i64(e as i64));
            if c == 0 {
                continue;
            }
            let mut exps = t.mon.exps.clone();
            exps[var] -= 1;
            out.push(Term { coeff: c, mon: Monomial::from_exps(exps, &ctx.weights) });
        }
        Polynomial { terms: out }.normalize(ctx)
    }

    /// Exact division by `g`; panics if the division is not exact.
    pub fn div_exact(&self, g: &Polynomial, ctx: &PolyCtx) -> Polynomial {
        let glt = g.leading().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = Polynomial::zero();
        while let Some(lt) = rem.leading() {
            let m = glt
                .mon
                .div_into(&lt.mon)
                .expect("inexact polynomial division");
            let c = ctx.field.div(lt.coeff, glt.coeff);
            let q = Polynomial::monomial(c, m);
            rem = rem.sub(&g.mul(&q, ctx), ctx);
            quo = quo.add(&q, ctx);
        }
        quo
    }

    /// Reinterpret in a ring with `extra` new variables appended.
    pub fn extend_vars(&self, extra: usize) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mut exps = t.mon.exps.clone();
                    exps.extend(std::iter::repeat(0).take(extra));
                    Term { coeff: t.coeff, mon: Monomial { exps, degree: t.mon.degree } }
                })
                .collect(),
        }
    }

    /// Apply a variable permutation: new exponent at `perm[i]` comes from old slot `i`.
    pub fn permute_vars(&self, perm: &[usize]) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| {
                    let mut exps = vec![0u16; t.mon.exps.len()];
                    for (i, &e) in t.mon.exps.iter().enumerate() {
                        exps[perm[i]] = e;
                    }
                    Term { coeff: t.coeff, mon: Monomial { exps, degree: t.mon.degree } }
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx2() -> PolyCtx {
        PolyCtx { field: Fp::new(101), weights: vec![1, 1], order: MonomialOrder::GrevLex }
    }

    fn x(ctx: &PolyCtx) -> Polynomial {
        Polynomial::variable(0, ctx)
    }

    fn y(ctx: &PolyCtx) -> Polynomial {
        Polynomial::variable(1, ctx)
    }

    #[test]
    fn arithmetic_roundtrip() {
        let ctx = ctx2();
        let f = x(&ctx).add(&y(&ctx), &ctx);
        let g = x(&ctx).sub(&y(&ctx), &ctx);
        let prod = f.mul(&g, &ctx);
        // x^2 - y^2
        assert_eq!(prod.terms.len(), 2);
        assert_eq!(prod.terms[0].mon.exps, vec![2, 0]);
        assert_eq!(prod.terms[1].coeff, 100);
        assert!(prod.is_homogeneous());
    }

    #[test]
    fn exact_division() {
        let ctx = ctx2();
        let f = x(&ctx).add(&y(&ctx), &ctx);
        let g = x(&ctx).mul(&f, &ctx);
        assert_eq!(g.div_exact(&x(&ctx), &ctx), f);
    }

    #[test]
    fn derivative_drops_degree() {
        let ctx = ctx2();
        let f = x(&ctx).mul(&x(&ctx), &ctx); // x^2
        let d = f.derivative(0, &ctx);
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].coeff, 2);
        assert_eq!(d.terms[0].mon.exps, vec![1, 0]);
    }
}
