//! Arithmetic in the prime field F_p, p < 2^16.

/// Prime field of characteristic `p`. Elements are least nonnegative residues.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Fp {
    pub p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Fp {
        assert!(p >= 2 && p < (1 << 16), "characteristic must be a prime < 2^16");
        assert!(is_prime(p), "characteristic must be prime");
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b { a - b } else { a + self.p - b }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 { 0 } else { self.p - a }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "division by zero in F_p");
        self.pow(a, self.p as u64 - 2)
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// Reduce an arbitrary signed integer to its least nonnegative residue.
    pub fn reduce_i64(&self, a: i64) -> u32 {
        let p = self.p as i64;
        (((a % p) + p) % p) as u32
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_arithmetic() {
        let f = Fp::new(101);
        assert_eq!(f.add(100, 2), 1);
        assert_eq!(f.sub(0, 1), 100);
        assert_eq!(f.mul(50, 4), 99);
        assert_eq!(f.mul(3, f.inv(3)), 1);
        assert_eq!(f.reduce_i64(-1), 100);
    }

    #[test]
    #[should_panic]
    fn rejects_composite() {
        Fp::new(100);
    }
}
