//! `Z_{p^n}`-linear cyclic codes over rank-one rings `R = Z_{p^n}[x]/<g, p^{n-1}x^t>`
//! and their character-theoretic duals.
//!
//! The additive characters of `R` are `χ_a(z) = ζ_{p^n}^{β(a,z)}` with
//! `β(a, z) = Σ_{j<t} a_j z_j + p Σ_{j>=t} a_j z_j`; all values are kept as
//! exponents modulo `p^n`.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::arith::mul_mod;
use crate::code::{CodeHandle, Family, VectorSpace};
use crate::error::{Error, Result};
use crate::idempotent::{ComponentId, IdempotentSystem, Scalars};
use crate::linalg::{solve_orthogonal, Ambient, GeneratorStack};
use crate::ring::{ChainRing, Elem, RingParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EisensteinCodeSpec {
    pub ring: RingParams,
    #[serde(rename = "N")]
    pub n: u64,
    /// `a[i][j] = 1` includes `x^j K_i`.
    pub a: Vec<Vec<u8>>,
}

fn require_rank_one(ring: &ChainRing) -> Result<()> {
    if ring.rank() != 1 {
        return Err(Error::RankNotOne(ring.rank()));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct EisensteinContext {
    pub ring: ChainRing,
    pub sys: IdempotentSystem,
    pub space: VectorSpace,
}

impl EisensteinContext {
    pub fn new(ring: &ChainRing, n: u64) -> Result<Self> {
        require_rank_one(ring)?;
        let sys = IdempotentSystem::new(ring, n)?;
        Ok(EisensteinContext { ring: ring.clone(), sys, space: VectorSpace::new(ring, n as usize) })
    }

    pub fn empty_spec(&self) -> EisensteinCodeSpec {
        EisensteinCodeSpec {
            ring: self.ring.params().clone(),
            n: self.sys.cls.n,
            a: vec![vec![0; self.ring.m() as usize]; self.sys.cls.v + 1],
        }
    }

    pub fn check_spec(&self, spec: &EisensteinCodeSpec) -> Result<()> {
        if spec.n != self.sys.cls.n {
            return Err(Error::SpecShapeMismatch(format!(
                "spec length {} but context length {}",
                spec.n, self.sys.cls.n
            )));
        }
        let (rows, cols) = (self.sys.cls.v + 1, self.ring.m() as usize);
        if spec.a.len() != rows || spec.a.iter().any(|row| row.len() != cols) {
            return Err(Error::SpecShapeMismatch(format!("indicator matrix must be {rows} x {cols}")));
        }
        if spec.a.iter().flatten().any(|&b| b > 1) {
            return Err(Error::SpecShapeMismatch("indicator entries must be 0 or 1".into()));
        }
        Ok(())
    }

    /// Generators `x^j ε_i X^c` over `Z_{p^n}` for every `a_{i,j} = 1`.
    pub fn build(&self, spec: &EisensteinCodeSpec) -> Result<CodeHandle> {
        self.check_spec(spec)?;
        let ring = &self.ring;
        let mut vectors = Vec::new();
        for (i, row) in spec.a.iter().enumerate() {
            let comp = self.sys.component_basis(ComponentId::K(i))?;
            for (j, _) in row.iter().enumerate().filter(|(_, &b)| b == 1) {
                let xj = ring.x_pow(j as u32);
                for g in &comp.generators {
                    vectors.push(g.iter().map(|c| ring.mul(&xj, c)).collect());
                }
            }
        }
        CodeHandle::from_vectors(self.space.clone(), Family::Eisenstein, Scalars::Integers, &vectors)
    }

    /// Closes the indicator matrix under `j ↦ j + k` and verifies the code is unchanged.
    pub fn normalize_spec(&self, spec: &EisensteinCodeSpec) -> Result<EisensteinCodeSpec> {
        let original = self.build(spec)?;
        let (m, k) = (self.ring.m() as usize, self.ring.k() as usize);
        let mut closed = spec.clone();
        for (i, row) in spec.a.iter().enumerate() {
            for j in (0..m).filter(|&j| row[j] == 1) {
                for jj in (j + k..m).step_by(k) {
                    if closed.a[i][jj] == 0 {
                        let mut single = spec.clone();
                        single.a[i][jj] = 1;
                        if !self.build(&single)?.same_code(&original) {
                            return Err(Error::ClosureChangedCode { component: i, exponent: jj });
                        }
                        closed.a[i][jj] = 1;
                    }
                }
            }
        }
        if !self.build(&closed)?.same_code(&original) {
            return Err(Error::InvariantViolated("closure changed the code jointly".into()));
        }
        Ok(closed)
    }
}

/// `β(a, z)` modulo `p^n`.
pub fn pairing(ring: &ChainRing, a: &Elem, z: &Elem) -> Result<u64> {
    require_rank_one(ring)?;
    let (t, p, q) = (ring.t() as usize, ring.p(), ring.modulus());
    Ok(a.coeffs().iter().zip(z.coeffs()).enumerate().fold(0, |acc, (j, (&x, &y))| {
        let w = if j < t { 1 } else { p };
        (acc + mul_mod(mul_mod(x, y, q), w, q)) % q
    }))
}

/// Weights of the diagonal Gram matrix of `β` on `R^N` in flattened coordinates.
fn gram(ring: &ChainRing, len: usize) -> Vec<Vec<u64>> {
    let (k, t, p) = (ring.k() as usize, ring.t() as usize, ring.p());
    let dim = len * k;
    (0..dim)
        .map(|l| {
            let mut row = vec![0u64; dim];
            row[l] = if l % k < t { 1 } else { p };
            row
        })
        .collect()
}

/// Rows indexed by `a`, columns by `z`, both in lexicographic grid order; entries `β(a, z)`.
pub fn character_table(ring: &ChainRing) -> Result<(Vec<Elem>, Vec<Vec<u64>>)> {
    require_rank_one(ring)?;
    let size = ring
        .size()
        .filter(|&s| s <= 1 << 12)
        .ok_or_else(|| Error::TooLarge("character tables are limited to |R| <= 2^12".into()))?;
    let elems: Vec<Elem> = (0..size).map(|i| ring.from_index(i)).collect();
    let table = elems
        .iter()
        .map(|a| elems.iter().map(|z| pairing(ring, a, z)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((elems, table))
}

/// `(χ_a, χ_b) = |R|^{-1} Σ_z ζ^{β(a,z) - β(b,z)}`, summed exactly in `Z[ζ_{p^n}]`.
pub fn char_inner_product(ring: &ChainRing, a: &Elem, b: &Elem) -> Result<Rational64> {
    require_rank_one(ring)?;
    let size = ring
        .size()
        .filter(|&s| s <= 1 << 20)
        .ok_or_else(|| Error::TooLarge("character sums are limited to |R| <= 2^20".into()))?;
    let (p, n, q) = (ring.p(), ring.n(), ring.modulus());
    let d = ring.sub(a, b);
    let mut counts = vec![0i64; q as usize];
    for z in ring.elements() {
        counts[pairing(ring, &d, &z)? as usize] += 1;
    }
    // reduce Σ counts[e] X^e modulo Φ_{p^n}(X) = Σ_{i<p} X^{i p^{n-1}}
    let step = p.pow(n - 1) as usize;
    let deg = (p as usize - 1) * step;
    for e in (deg..q as usize).rev() {
        let c = counts[e];
        if c == 0 {
            continue;
        }
        counts[e] = 0;
        let s = e - deg;
        for i in 0..p as usize - 1 {
            counts[i * step + s] -= c;
        }
    }
    if counts[1..].iter().any(|&c| c != 0) {
        return Err(Error::InvariantViolated("character sum is not rational".into()));
    }
    Ok(Rational64::new(counts[0], size as i64))
}

/// `{a ∈ R^N : Σ β(a_l, c_l) = 0 for all c ∈ C}`, the character dual.
pub fn eisenstein_dual_code(code: &CodeHandle) -> Result<CodeHandle> {
    let ring = code.ring();
    require_rank_one(ring)?;
    let stack = solve_orthogonal(&gram(ring, code.len()), &code.generators)?;
    Ok(CodeHandle::from_stack(code.space.clone(), Family::Eisenstein, Scalars::Integers, stack))
}

/// `{a ∈ R : β(a, z) = 0 for all z ∈ H}` for `H` generated by `h`.
pub fn annihilator_subgroup(ring: &ChainRing, h: &[Elem]) -> Result<GeneratorStack> {
    require_rank_one(ring)?;
    let space = VectorSpace::new(ring, 1);
    let rows = h.iter().map(|e| space.flatten(std::slice::from_ref(e))).collect::<Result<Vec<_>>>()?;
    let stack = GeneratorStack::new(space.ambient(), rows)?;
    solve_orthogonal(&gram(ring, 1), &stack)
}

/// For `t < k`, the relation `p^{n-1} x^t = 0` with `p^{n-1} ≠ 0` that keeps `R`
/// from being free over `Z_{p^n}`. Returns `(p^{n-1}, t)`.
pub fn non_free_relation(ring: &ChainRing) -> Result<Option<(u64, u32)>> {
    if ring.t() >= ring.k() {
        return Ok(None);
    }
    let c = ring.low_modulus();
    let lhs = ring.scale(&ring.x_pow(ring.t()), c);
    if !lhs.is_zero() || ring.from_int(c as i64).is_zero() {
        return Err(Error::InvariantViolated("expected p^{n-1} x^t = 0 with p^{n-1} != 0".into()));
    }
    Ok(Some((c, ring.t())))
}

/// The ambient group of `R` itself, for subgroup computations.
pub fn ring_ambient(ring: &ChainRing) -> Ambient {
    VectorSpace::new(ring, 1).ambient()
}
