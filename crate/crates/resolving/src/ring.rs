//! The ambient graded polynomial ring: variables with positive integer
//! degrees over a prime field, plus canonical polynomial text I/O.

use crate::error::Error;
use crate::fp::Fp;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, PolyCtx, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub p: u32,
    pub var_names: Vec<String>,
    pub weights: Vec<u32>,
}

impl PolyRing {
    pub fn new(p: u32, vars: Vec<(String, u32)>) -> Result<PolyRing, Error> {
        if p < 2 || p >= (1 << 16) || !crate::fp::is_prime(p) {
            return Err(Error::Invalid(format!("characteristic {} is not a prime < 2^16", p)));
        }
        let mut names = Vec::new();
        let mut weights = Vec::new();
        for (n, d) in vars {
            if d == 0 {
                return Err(Error::Invalid(format!("variable {} must have positive degree", n)));
            }
            if names.contains(&n) {
                return Err(Error::Invalid(format!("duplicate variable {}", n)));
            }
            names.push(n);
            weights.push(d);
        }
        if names.is_empty() {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        Ok(PolyRing { p, var_names: names, weights })
    }

    pub fn nvars(&self) -> usize {
        self.var_names.len()
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn ctx(&self) -> PolyCtx {
        PolyCtx { field: self.field(), weights: self.weights.clone(), order: MonomialOrder::GrevLex }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::variable(i, &self.ctx())
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|n| n == name)
    }

    /// Ring with extra variables appended (used for Rabinowitsch and
    /// elimination computations). Fresh names avoid collisions.
    pub fn extended(&self, extra: &[(String, u32)]) -> PolyRing {
        let mut names = self.var_names.clone();
        let mut weights = self.weights.clone();
        for (n, d) in extra {
            names.push(n.clone());
            weights.push(*d);
        }
        PolyRing { p: self.p, var_names: names, weights }
    }

    pub fn fresh_var_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.var_names.contains(&name) {
            name.push('_');
        }
        name
    }

    /// Canonical text form: terms in descending grevlex order, least
    /// nonnegative coefficients, explicit `*` and `^`.
    pub fn poly_to_string(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for t in &f.terms {
            parts.push(self.term_to_string(t));
        }
        parts.join(" + ")
    }

    fn term_to_string(&self, t: &Term) -> String {
        let mut factors = Vec::new();
        for (i, &e) in t.mon.exps.iter().enumerate() {
            if e == 1 {
                factors.push(self.var_names[i].clone());
            } else if e > 1 {
                factors.push(format!("{}^{}", self.var_names[i], e));
            }
        }
        if factors.is_empty() {
            return format!("{}", t.coeff);
        }
        let m = factors.join("*");
        if t.coeff == 1 {
            m
        } else {
            format!("{}*{}", t.coeff, m)
        }
    }

    /// Parse a polynomial in the canonical syntax (`+`/`-` separated terms,
    /// `coeff*var^exp*...`).
    pub fn parse_poly(&self, input: &str) -> Result<Polynomial, Error> {
        let ctx = self.ctx();
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse(format!("empty polynomial in {:?}", input)));
        }
        // split into signed terms
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut chars = s.chars().peekable();
        // leading sign
        if let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                neg = c == '-';
                chars.next();
            }
        }
        for c in chars {
            if c == '+' || c == '-' {
                if cur.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {:?}", input)));
                }
                terms.push((neg, std::mem::take(&mut cur)));
                neg = c == '-';
            } else {
                cur.push(c);
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {:?}", input)));
        }
        terms.push((neg, cur));

        let mut acc = Polynomial::zero();
        for (neg, term) in terms {
            let t = self.parse_term(&term)?;
            let t = if neg { t.neg(&ctx) } else { t };
            acc = acc.add(&t, &ctx);
        }
        Ok(acc)
    }

    fn parse_term(&self, term: &str) -> Result<Polynomial, Error> {
        let ctx = self.ctx();
        let mut coeff: u32 = 1;
        let mut exps = vec![0u16; self.nvars()];
        for factor in term.split('*') {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in term {:?}", term)));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let n: u64 = factor
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient {:?}", factor)))?;
                coeff = ctx.field.mul(coeff, (n % self.p as u64) as u32);
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u16 =
                        e.parse().map_err(|_| Error::Parse(format!("bad exponent {:?}", e)))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            let i = self
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable {:?}", name)))?;
            exps[i] += exp;
        }
        Ok(Polynomial::monomial(coeff, Monomial::from_exps(exps, &self.weights)).normalize(&ctx))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> PolyRing {
        PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap()
    }

    #[test]
    fn print_parse_roundtrip() {
        let r = ring2();
        let f = r.parse_poly("3*x^2*y + 100*y^3").unwrap();
        assert_eq!(r.poly_to_string(&f), "3*x^2*y + 100*y^3");
        let g = r.parse_poly("x^2 - y^2").unwrap();
        assert_eq!(r.poly_to_string(&g), "x^2 + 100*y^2");
        assert_eq!(r.poly_to_string(&r.parse_poly("0").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_unknown_variable() {
        let r = ring2();
        assert!(r.parse_poly("x*z").is_err());
    }
}
