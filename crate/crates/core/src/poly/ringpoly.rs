//! Univariate polynomials with chain-ring coefficients.

use crate::ring::{ChainRing, Elem};

/// Little-endian coefficient list; no trailing-zero normalisation is implied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPoly {
    pub coeffs: Vec<Elem>,
}

impl RingPoly {
    pub fn new(coeffs: Vec<Elem>) -> Self {
        RingPoly { coeffs }
    }

    pub fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Elem::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn mul(&self, ring: &ChainRing, other: &RingPoly) -> RingPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RingPoly::new(Vec::new());
        }
        let mut out = vec![ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = ring.add(&out[i + j], &ring.mul(a, b));
            }
        }
        RingPoly::new(out)
    }

    /// `∏ (X - root)`.
    pub fn from_roots(ring: &ChainRing, roots: &[Elem]) -> RingPoly {
        roots.iter().fold(RingPoly::new(vec![ring.one()]), |acc, root| {
            acc.mul(ring, &RingPoly::new(vec![ring.neg(root), ring.one()]))
        })
    }

    pub fn eval(&self, ring: &ChainRing, x: &Elem) -> Elem {
        self.coeffs.iter().rev().fold(ring.zero(), |acc, c| ring.add(&ring.mul(&acc, x), c))
    }

    /// Integer coefficients, when every coefficient lies in `Z_{p^n}`.
    pub fn as_integers(&self) -> Option<Vec<u64>> {
        self.coeffs.iter().map(|c| c.coeffs()[1..].iter().all(|&v| v == 0).then_some(c.coeffs()[0])).collect()
    }

    pub fn from_integers(ring: &ChainRing, coeffs: &[u64]) -> RingPoly {
        RingPoly::new(coeffs.iter().map(|&c| ring.from_int((c % ring.modulus()) as i64)).collect())
    }

    pub fn format(&self, ring: &ChainRing) -> String {
        let mut terms = Vec::new();
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = ring.format(c);
            let cs = if cs.contains(" + ") { format!("({cs})") } else { cs };
            let term = match d {
                0 => cs,
                _ => {
                    let mono = if d == 1 { "X".to_string() } else { format!("X^{d}") };
                    if cs == "1" {
                        mono
                    } else {
                        format!("{cs}{mono}")
                    }
                }
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Product in `R[X]/<X^N - 1>` of two length-`N` coefficient vectors.
pub(crate) fn cyclic_mul(ring: &ChainRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len();
    debug_assert_eq!(n, b.len());
    let mut out = vec![ring.zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                let idx = (i + j) % n;
                out[idx] = ring.add(&out[idx], &ring.mul(x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingParams};

    #[test]
    fn roots_of_unity_product() {
        let ring = make_ring(RingParams::new(2, 2, 2, 1, 1, vec![1]).with_f(vec![1, 1, 1])).unwrap();
        let w = ring.omega();
        let roots = vec![ring.one(), w.clone(), ring.mul(&w, &w)];
        let prod = RingPoly::from_roots(&ring, &roots);
        assert_eq!(prod.as_integers(), Some(vec![3, 0, 0, 1]));
        assert!(prod.eval(&ring, &w).is_zero());
    }
}
