//! Codes as subgroups of `R^N`, stored as generator stacks over `Z_{p^n}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::idempotent::Scalars;
use crate::linalg::{Ambient, GeneratorStack, NormalForm};
use crate::ring::{ChainRing, Elem};

/// Default enumeration cap, `log_2` of the number of codewords.
pub const DEFAULT_CAP_LOG2: u32 = 24;

/// `R^N` viewed as `⊕ Z_{p^{e}}`, coordinate `(c, i, j) ↦ c·rk + i·k + j`.
#[derive(Clone, Debug)]
pub struct VectorSpace {
    pub ring: ChainRing,
    pub len: usize,
}

impl VectorSpace {
    pub fn new(ring: &ChainRing, len: usize) -> Self {
        VectorSpace { ring: ring.clone(), len }
    }

    pub fn ambient(&self) -> Ambient {
        let ring = &self.ring;
        let (n, t, k) = (ring.n(), ring.t() as usize, ring.k() as usize);
        let orders = (0..self.len * ring.dim()).map(|idx| if idx % k < t { n } else { n - 1 }).collect();
        Ambient::new(ring.p(), n, orders)
    }

    pub fn flatten(&self, v: &[Elem]) -> Result<Vec<u64>> {
        if v.len() != self.len {
            return Err(Error::LengthMismatch { expected: self.len, got: v.len() });
        }
        Ok(v.iter().flat_map(|e| e.coeffs().iter().copied()).collect())
    }

    pub fn unflatten(&self, flat: &[u64]) -> Vec<Elem> {
        flat.chunks(self.ring.dim()).map(|c| self.ring.from_flat_reducing(c.to_vec())).collect()
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![self.ring.zero(); self.len]
    }

    /// Z_{p^n}-span of `{s · v}` over the scalar multipliers `s` and the given vectors.
    pub fn span(&self, scalars: Scalars, vectors: &[Vec<Elem>]) -> Result<GeneratorStack> {
        let mults = scalars.multipliers(&self.ring);
        let mut stack = GeneratorStack::empty(self.ambient());
        for v in vectors {
            for s in &mults {
                let sv: Vec<Elem> = v.iter().map(|e| self.ring.mul(s, e)).collect();
                stack.push(self.flatten(&sv)?)?;
            }
        }
        Ok(stack)
    }
}

/// `(a_N, a_1, ..., a_{N-1})`.
pub fn cyclic_shift(v: &[Elem]) -> Vec<Elem> {
    crate::idempotent::shift_by(v, 1)
}

/// Hamming weight over `R`.
pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|e| !e.is_zero()).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Galois,
    Eisenstein,
}

/// A constructed code: its generators, canonical form and size.
#[derive(Clone, Debug)]
pub struct CodeHandle {
    pub space: VectorSpace,
    pub family: Family,
    pub scalars: Scalars,
    pub generators: GeneratorStack,
    pub normal: NormalForm,
    pub log_p_card: u32,
}

impl CodeHandle {
    pub fn from_stack(space: VectorSpace, family: Family, scalars: Scalars, generators: GeneratorStack) -> Self {
        let normal = generators.normal_form();
        let log_p_card = normal.log_order();
        CodeHandle { space, family, scalars, generators, normal, log_p_card }
    }

    pub fn from_vectors(space: VectorSpace, family: Family, scalars: Scalars, vectors: &[Vec<Elem>]) -> Result<Self> {
        let stack = space.span(scalars, vectors)?;
        Ok(Self::from_stack(space, family, scalars, stack))
    }

    pub fn ring(&self) -> &ChainRing {
        &self.space.ring
    }

    pub fn len(&self) -> usize {
        self.space.len
    }

    pub fn is_empty(&self) -> bool {
        self.log_p_card == 0
    }

    pub fn same_code(&self, other: &CodeHandle) -> bool {
        self.normal == other.normal
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        self.normal.contains(&self.space.flatten(v)?)
    }

    /// Canonical generators as `R`-vectors.
    pub fn basis_vectors(&self) -> Vec<Vec<Elem>> {
        self.normal.basis().iter().map(|(row, _)| self.space.unflatten(row)).collect()
    }

    pub fn is_shift_closed(&self) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&cyclic_shift(v)).unwrap_or(false))
    }

    pub fn is_closed_under(&self, scalars: Scalars) -> bool {
        let ring = self.ring();
        let mults = scalars.multipliers(ring);
        self.basis_vectors().iter().all(|v| {
            mults.iter().all(|s| {
                let sv: Vec<Elem> = v.iter().map(|e| ring.mul(s, e)).collect();
                self.contains(&sv).unwrap_or(false)
            })
        })
    }

    /// Visits every codeword once; fails with `TooLarge` above `2^cap_log2` words.
    pub fn for_each_codeword(&self, cap_log2: u32, mut visit: impl FnMut(&[u64])) -> Result<()> {
        let p = self.ring().p() as f64;
        if self.log_p_card as f64 * p.log2() > cap_log2 as f64 {
            return Err(Error::TooLarge(format!("code has p^{} words, above the cap 2^{cap_log2}", self.log_p_card)));
        }
        let basis = self.normal.basis();
        let ambient = &self.normal.ambient;
        let q = ambient.modulus();
        let moduli: Vec<u64> = ambient.orders.iter().map(|&e| ambient.p.pow(e)).collect();
        let mut word = vec![0u64; ambient.len()];
        let mut digits = vec![0u64; basis.len()];
        loop {
            let reduced: Vec<u64> = word.iter().zip(&moduli).map(|(&c, &m)| c % m).collect();
            visit(&reduced);
            let mut i = 0;
            loop {
                if i == basis.len() {
                    return Ok(());
                }
                let (row, order) = &basis[i];
                digits[i] += 1;
                if digits[i] < *order {
                    for (w, &b) in word.iter_mut().zip(row) {
                        *w = (*w + b) % q;
                    }
                    break;
                }
                // wrap: remove (order - 1) copies of the row
                let back = (order - 1) % q;
                for (w, &b) in word.iter_mut().zip(row) {
                    *w = (*w + q - (back * b) % q) % q;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// Weight distribution over all codewords.
    pub fn weight_enumerator(&self, cap_log2: u32) -> Result<BTreeMap<usize, u64>> {
        let dim = self.ring().dim();
        let mut counts = BTreeMap::new();
        self.for_each_codeword(cap_log2, |w| {
            let weight = w.chunks(dim).filter(|c| c.iter().any(|&x| x != 0)).count();
            *counts.entry(weight).or_insert(0) += 1;
        })?;
        Ok(counts)
    }

    /// Minimum nonzero weight, `None` for the zero code.
    pub fn min_weight(&self, cap_log2: u32) -> Result<Option<usize>> {
        Ok(self.weight_enumerator(cap_log2)?.keys().copied().find(|&w| w > 0))
    }

    /// All codewords as `R`-vectors.
    pub fn codewords(&self, cap_log2: u32) -> Result<Vec<Vec<Elem>>> {
        let mut out = Vec::new();
        self.for_each_codeword(cap_log2, |w| out.push(self.space.unflatten(w)))?;
        Ok(out)
    }
}

/// The whole ambient `R^N`.
pub fn full_code(space: VectorSpace, family: Family, scalars: Scalars) -> CodeHandle {
    let stack = GeneratorStack::full(space.ambient());
    CodeHandle::from_stack(space, family, scalars, stack)
}

pub fn zero_code(space: VectorSpace, family: Family, scalars: Scalars) -> CodeHandle {
    let stack = GeneratorStack::empty(space.ambient());
    CodeHandle::from_stack(space, family, scalars, stack)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, RingParams};

    #[test]
    fn repetition_code_weights() {
        let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
        let space = VectorSpace::new(&ring, 3);
        let ones = vec![ring.one(); 3];
        let code = CodeHandle::from_vectors(space.clone(), Family::Eisenstein, Scalars::Integers, &[ones]).unwrap();
        assert_eq!(code.log_p_card, 2);
        let w = code.weight_enumerator(DEFAULT_CAP_LOG2).unwrap();
        assert_eq!(w, BTreeMap::from([(0, 1), (3, 3)]));
        assert!(code.is_shift_closed());
        assert!(!code.is_closed_under(Scalars::Base));
        let zero = zero_code(space.clone(), Family::Eisenstein, Scalars::Integers);
        assert_eq!(zero.weight_enumerator(DEFAULT_CAP_LOG2).unwrap(), BTreeMap::from([(0, 1)]));
        let full = full_code(space, Family::Eisenstein, Scalars::Integers);
        assert_eq!(full.log_p_card, 9);
        let total: u64 = full.weight_enumerator(DEFAULT_CAP_LOG2).unwrap().values().sum();
        assert_eq!(total, 512);
        assert!(matches!(full.weight_enumerator(8), Err(Error::TooLarge(_))));
    }

    #[test]
    fn codewords_are_distinct() {
        let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
        let space = VectorSpace::new(&ring, 2);
        let v = vec![ring.x(), ring.add(&ring.one(), &ring.x())];
        let code = CodeHandle::from_vectors(space, Family::Galois, Scalars::Base, &[v]).unwrap();
        let words = code.codewords(DEFAULT_CAP_LOG2).unwrap();
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), words.len());
        assert_eq!(words.len() as u64, 1 << code.log_p_card);
    }
}
