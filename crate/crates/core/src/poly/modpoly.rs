//! Dense univariate polynomials over `Z/q`, little-endian coefficient vectors.
//!
//! Division only needs an invertible leading coefficient, so the same routines
//! serve `F_p` and `Z/p^n`. `gcd` and the irreducibility tests assume `q` prime.

use crate::arith::{inv_mod, mul_mod, neg_mod, prime_factors};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModPolyRing {
    pub modulus: u64,
}

impl ModPolyRing {
    pub fn new(modulus: u64) -> Self {
        ModPolyRing { modulus }
    }

    pub fn trim(&self, mut a: Vec<u64>) -> Vec<u64> {
        for c in a.iter_mut() {
            *c %= self.modulus;
        }
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self, a: &[u64]) -> Option<usize> {
        a.iter().rposition(|&c| c % self.modulus != 0)
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let q = self.modulus;
        let len = a.len().max(b.len());
        let out = (0..len).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % q).collect();
        self.trim(out)
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let q = self.modulus;
        let len = a.len().max(b.len());
        let out = (0..len)
            .map(|i| (a.get(i).copied().unwrap_or(0) + neg_mod(b.get(i).copied().unwrap_or(0) % q, q)) % q)
            .collect();
        self.trim(out)
    }

    pub fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        let q = self.modulus;
        self.trim(a.iter().map(|&x| mul_mod(x, c, q)).collect())
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let q = self.modulus;
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(x, y, q)) % q;
            }
        }
        self.trim(out)
    }

    /// Quotient and remainder; `None` if `b` is zero or its leading coefficient is not invertible.
    pub fn divrem(&self, a: &[u64], b: &[u64]) -> Option<(Vec<u64>, Vec<u64>)> {
        let q = self.modulus;
        let db = self.degree(b)?;
        let lead_inv = inv_mod(b[db], q)?;
        let mut rem = self.trim(a.to_vec());
        let Some(da) = self.degree(&rem) else {
            return Some((Vec::new(), Vec::new()));
        };
        if da < db {
            return Some((Vec::new(), rem));
        }
        let mut quot = vec![0u64; da - db + 1];
        for d in (db..=da).rev() {
            let c = rem.get(d).copied().unwrap_or(0);
            if c == 0 {
                continue;
            }
            let f = mul_mod(c, lead_inv, q);
            quot[d - db] = f;
            for (j, &bj) in b.iter().enumerate().take(db + 1) {
                let idx = d - db + j;
                rem[idx] = (rem[idx] + neg_mod(mul_mod(f, bj, q), q)) % q;
            }
        }
        Some((self.trim(quot), self.trim(rem)))
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.divrem(a, b).expect("divisor with invertible leading coefficient").1
    }

    pub fn make_monic(&self, a: &[u64]) -> Vec<u64> {
        match self.degree(a) {
            None => Vec::new(),
            Some(d) => {
                let inv = inv_mod(a[d], self.modulus).expect("invertible leading coefficient");
                self.scale(a, inv)
            }
        }
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut x = self.trim(a.to_vec());
        let mut y = self.trim(b.to_vec());
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.make_monic(&x)
    }

    /// Extended gcd over a field: `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn xgcd(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (self.trim(a.to_vec()), self.trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (quo, rem) = self.divrem(&r0, &r1).expect("field");
            let s2 = self.sub(&s0, &self.mul(&quo, &s1));
            let t2 = self.sub(&t0, &self.mul(&quo, &t1));
            (r0, r1) = (r1, rem);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        match self.degree(&r0) {
            None => (r0, s0, t0),
            Some(d) => {
                let inv = inv_mod(r0[d], self.modulus).expect("field");
                (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
            }
        }
    }

    /// `base^exp mod modulus`.
    pub fn pow_mod(&self, base: &[u64], mut exp: u64, modulus: &[u64]) -> Vec<u64> {
        let mut acc = self.rem(&[1], modulus);
        let mut b = self.rem(base, modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.rem(&self.mul(&acc, &b), modulus);
            }
            b = self.rem(&self.mul(&b, &b), modulus);
            exp >>= 1;
        }
        acc
    }

    pub fn eval(&self, a: &[u64], x: u64) -> u64 {
        let q = self.modulus;
        a.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, q) + c) % q)
    }

    /// Irreducibility over `F_p` (`modulus` prime): no factor of degree `<= d/2`.
    pub fn is_irreducible(&self, f: &[u64]) -> bool {
        let Some(d) = self.degree(f) else { return false };
        if d == 0 {
            return false;
        }
        let p = self.modulus;
        let x = vec![0, 1];
        let mut frob = self.rem(&x, f);
        for _ in 1..=d / 2 {
            frob = self.pow_mod(&frob, p, f);
            let g = self.gcd(&self.sub(&frob, &x), f);
            if self.degree(&g) != Some(0) {
                return false;
            }
        }
        true
    }

    /// Primitivity over `F_p`: irreducible and `X` has order exactly `p^d - 1` modulo `f`.
    pub fn is_primitive(&self, f: &[u64]) -> bool {
        if !self.is_irreducible(f) {
            return false;
        }
        let d = self.degree(f).unwrap() as u32;
        if f[0].is_multiple_of(self.modulus) {
            return false;
        }
        let order = (self.modulus as u128).pow(d) - 1;
        let order = order as u64;
        let x = vec![0, 1];
        if self.pow_mod(&x, order, f) != vec![1] {
            return false;
        }
        prime_factors(order).into_iter().all(|l| self.pow_mod(&x, order / l, f) != vec![1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tests() {
        let f2 = ModPolyRing::new(2);
        assert!(f2.is_irreducible(&[1, 1, 1]));
        assert!(!f2.is_irreducible(&[1, 0, 1]));
        assert!(f2.is_primitive(&[1, 1, 0, 1]));
        // X^4 + X^3 + X^2 + X + 1 is irreducible but its roots have order 5
        assert!(f2.is_irreducible(&[1, 1, 1, 1, 1]));
        assert!(!f2.is_primitive(&[1, 1, 1, 1, 1]));
        assert!(f2.is_primitive(&[1, 1]));
        assert!(!f2.is_primitive(&[0, 1]));
        let f3 = ModPolyRing::new(3);
        assert!(f3.is_primitive(&[1, 1]));
        assert!(!f3.is_primitive(&[2, 1]));
    }

    #[test]
    fn division_over_z4() {
        let z4 = ModPolyRing::new(4);
        // X^3 - 1 = (X + 3)(X^2 + X + 1) over Z/4
        let (quo, rem) = z4.divrem(&[3, 0, 0, 1], &[3, 1]).unwrap();
        assert_eq!(quo, vec![1, 1, 1]);
        assert!(rem.is_empty());
        let (g, s, t) = ModPolyRing::new(2).xgcd(&[1, 1], &[1, 1, 1]);
        assert_eq!(g, vec![1]);
        let f2 = ModPolyRing::new(2);
        let check = f2.add(&f2.mul(&s, &[1, 1]), &f2.mul(&t, &[1, 1, 1]));
        assert_eq!(check, vec![1]);
    }
}
