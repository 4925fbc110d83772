//! Primitive idempotents of `S[X]/<X^N - 1>` and `R[X]/<X^N - 1>`, the components
//! they cut out, the involution `μ` and the trace-dual basis.

use serde::Serialize;

use crate::arith::inv_mod;
use crate::error::{Error, Result};
use crate::poly::{
    build_extension, classify_cosets, minimal_polynomial, CosetClassification, Extension, RingPoly, Target,
};
use crate::ring::{ChainRing, Elem};

/// Polynomial of degree `< N` as its coefficient vector.
pub type CyclicPoly = Vec<Elem>;

/// Idempotents `ε_i` over `S` and `ε_{i,h}` over `R`, with minimal polynomials and `μ`.
#[derive(Clone, Debug)]
pub struct IdempotentSystem {
    pub ring: ChainRing,
    pub ext: Extension,
    pub cls: CosetClassification,
    pub eps: Vec<CyclicPoly>,
    /// `eps_split[i][h] = ε_{i,h}` for `i > u`; empty for `i <= u`.
    pub eps_split: Vec<Vec<CyclicPoly>>,
    pub m_polys: Vec<RingPoly>,
    pub m_split: Vec<Vec<RingPoly>>,
    pub mu_perm: Vec<usize>,
    /// `μ(i, h)` for split components.
    pub mu_split: Vec<Vec<(usize, usize)>>,
}

/// Scalar ring a component or code is a module over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scalars {
    /// `Z_{p^n}`.
    Integers,
    /// `S = Z_{p^n}[x]/<g, p^{n-1}x^t>`.
    Base,
    /// `R = S[ω]`.
    Full,
}

impl Scalars {
    /// Additive generators of the scalar ring inside `R`.
    pub fn multipliers(self, ring: &ChainRing) -> Vec<Elem> {
        let k = ring.k() as usize;
        match self {
            Scalars::Integers => vec![ring.one()],
            Scalars::Base => (0..k).map(|j| ring.monomial(0, j)).collect(),
            Scalars::Full => {
                let r = ring.rank() as usize;
                let w = ring.omega();
                let mut out = Vec::with_capacity(r * k);
                for i in 0..r {
                    let wi = ring.pow(&w, i as u64);
                    for j in 0..k {
                        out.push(ring.mul(&wi, &ring.monomial(0, j)));
                    }
                }
                out
            }
        }
    }
}

/// Names a component of the decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentId {
    /// `K_i = ε_i S[X]`.
    K(usize),
    /// `L_i = ε_i R[X]`.
    L(usize),
    /// `K_{i,h} = L_{i,h} = ε_{i,h} R[X]`.
    Split(usize, usize),
}

#[derive(Clone, Debug)]
pub struct ComponentBasis {
    pub id: ComponentId,
    pub scalars: Scalars,
    /// `ε X^c` for `c < κ`.
    pub generators: Vec<CyclicPoly>,
}

impl IdempotentSystem {
    pub fn new(ring: &ChainRing, n: u64) -> Result<Self> {
        let cls = classify_cosets(n, ring.p(), ring.rank())?;
        let ext = build_extension(ring, n)?;
        let big = &ext.big;
        let q = ring.modulus();
        let n_inv = inv_mod(n % q, q).ok_or(Error::NonCoprime(n, ring.p()))?;
        let eta_pows: Vec<Elem> = (0..n).map(|e| big.pow(&ext.eta, e)).collect();

        let idempotent = |coset: &[u64], target: Target| -> Result<CyclicPoly> {
            (0..n)
                .map(|j| {
                    let sum = big.sum(coset.iter().map(|&l| &eta_pows[((n - (j * l) % n) % n) as usize]));
                    ext.coerce(&big.scale(&sum, n_inv), target)
                })
                .collect()
        };

        let mut eps = Vec::new();
        let mut m_polys = Vec::new();
        let mut eps_split = Vec::new();
        let mut m_split = Vec::new();
        for i in 0..=cls.v {
            let coset = cls.coset(i);
            eps.push(idempotent(coset, Target::Base)?);
            m_polys.push(minimal_polynomial(&ext, coset, Target::Base)?);
            let mut parts = Vec::new();
            let mut polys = Vec::new();
            for part in &cls.split[i] {
                parts.push(idempotent(part, Target::Full)?);
                polys.push(minimal_polynomial(&ext, part, Target::Full)?);
            }
            eps_split.push(parts);
            m_split.push(polys);
        }

        let mu_perm = (0..=cls.v).map(|i| cls.coset_index_of((n - cls.leaders[i] % n) % n)).collect();
        let mu_split = (0..=cls.v)
            .map(|i| {
                cls.split[i]
                    .iter()
                    .map(|part| {
                        let neg = (n - part[0]) % n;
                        let i2 = cls.coset_index_of(neg);
                        let h2 = cls.split[i2].iter().position(|c| c.contains(&neg)).expect("split image");
                        (i2, h2)
                    })
                    .collect()
            })
            .collect();

        let sys =
            IdempotentSystem { ring: ring.clone(), ext, cls, eps, eps_split, m_polys, m_split, mu_perm, mu_split };
        sys.check_identities()?;
        Ok(sys)
    }

    pub fn n(&self) -> usize {
        self.cls.n as usize
    }

    /// Verifies the orthogonality, completeness and refinement identities exactly.
    pub fn check_identities(&self) -> Result<()> {
        let ring = &self.ring;
        let n = self.n();
        let zero = vec![ring.zero(); n];
        let mut one = zero.clone();
        one[0] = ring.one();
        let fail = |what: String| Err(Error::InvariantViolated(what));
        for (i, ei) in self.eps.iter().enumerate() {
            for (j, ej) in self.eps.iter().enumerate() {
                let prod = cyclic_mul(ring, ei, ej);
                if (i == j && prod != *ei) || (i != j && prod != zero) {
                    return fail(format!("ε_{i} ε_{j}"));
                }
            }
            for (j, parts) in self.eps_split.iter().enumerate() {
                for (h, ejh) in parts.iter().enumerate() {
                    let prod = cyclic_mul(ring, ei, ejh);
                    let expected = if i == j { ejh } else { &zero };
                    if prod != *expected {
                        return fail(format!("ε_{i} ε_{{{j},{h}}}"));
                    }
                }
            }
        }
        if sum_polys(ring, &self.eps) != one {
            return fail("Σ ε_i = 1".into());
        }
        for (i, parts) in self.eps_split.iter().enumerate() {
            if parts.is_empty() {
                continue;
            }
            for (h, a) in parts.iter().enumerate() {
                for (h2, b) in parts.iter().enumerate() {
                    let prod = cyclic_mul(ring, a, b);
                    if (h == h2 && prod != *a) || (h != h2 && prod != zero) {
                        return fail(format!("ε_{{{i},{h}}} ε_{{{i},{h2}}}"));
                    }
                }
            }
            if sum_polys(ring, parts) != self.eps[i] {
                return fail(format!("Σ_h ε_{{{i},h}} = ε_{i}"));
            }
        }
        for (i, &j) in self.mu_perm.iter().enumerate() {
            if mu(&self.eps[i]) != self.eps[j] {
                return fail(format!("μ(ε_{i}) = ε_{j}"));
            }
        }
        Ok(())
    }

    pub fn kappa(&self, id: ComponentId) -> Result<usize> {
        match id {
            ComponentId::K(i) | ComponentId::L(i) if i <= self.cls.v => Ok(self.cls.kappa[i]),
            ComponentId::Split(i, h) if i > self.cls.u && i <= self.cls.v && h < self.ring.rank() as usize => {
                Ok(self.cls.kappa_split(i, h))
            }
            _ => Err(Error::UnknownComponent(format!("{id:?}"))),
        }
    }

    pub fn idempotent(&self, id: ComponentId) -> Result<&CyclicPoly> {
        self.kappa(id)?;
        Ok(match id {
            ComponentId::K(i) | ComponentId::L(i) => &self.eps[i],
            ComponentId::Split(i, h) => &self.eps_split[i][h],
        })
    }

    /// `{ε X^c : c < κ}` with the scalar ring of the component.
    pub fn component_basis(&self, id: ComponentId) -> Result<ComponentBasis> {
        let kappa = self.kappa(id)?;
        let eps = self.idempotent(id)?;
        let scalars = match id {
            ComponentId::K(_) => Scalars::Base,
            ComponentId::L(_) | ComponentId::Split(..) => Scalars::Full,
        };
        let generators = (0..kappa).map(|c| shift_by(eps, c)).collect();
        Ok(ComponentBasis { id, scalars, generators })
    }
}

/// `μ: a(X) ↦ a(X^{-1})` modulo `X^N - 1`.
pub fn mu(a: &[Elem]) -> Vec<Elem> {
    let n = a.len();
    (0..n).map(|j| a[(n - j) % n].clone()).collect()
}

/// `X^c a(X)` modulo `X^N - 1`.
pub fn shift_by(a: &[Elem], c: usize) -> Vec<Elem> {
    let n = a.len();
    (0..n).map(|j| a[(j + n - c % n) % n].clone()).collect()
}

pub fn cyclic_mul(ring: &ChainRing, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    crate::poly::cyclic_mul(ring, a, b)
}

fn sum_polys(ring: &ChainRing, polys: &[CyclicPoly]) -> CyclicPoly {
    let n = polys.first().map_or(0, Vec::len);
    (0..n).map(|j| ring.sum(polys.iter().map(|p| &p[j]))).collect()
}

/// Both sides of the `μ` lemma: whether `a(X) μ(b(X)) = 0`, and whether the
/// Euclidean products of every cyclic shift of `a` with `b` vanish.
pub fn mu_lemma_sides(ring: &ChainRing, a: &[Elem], b: &[Elem]) -> (bool, bool) {
    let lhs = cyclic_mul(ring, a, &mu(b)).iter().all(Elem::is_zero);
    let rhs = (0..a.len()).all(|h| {
        let shifted = shift_by(a, h);
        ring.sum(shifted.iter().zip(b).map(|(x, y)| ring.mul(x, y)).collect::<Vec<_>>().iter()).is_zero()
    });
    (lhs, rhs)
}

/// `θ_j = γ_j / γ'(ω)` with `f(X)/(X - ω) = Σ γ_j X^j`, the basis trace-dual to `{ω^i}`.
pub fn trace_dual_basis(ring: &ChainRing) -> Result<Vec<Elem>> {
    let r = ring.rank() as usize;
    let f = RingPoly::from_integers(ring, ring.omega_poly());
    let w = ring.omega();
    // synthetic division by X - ω
    let mut gamma = vec![ring.zero(); r];
    let mut carry = ring.zero();
    for d in (1..=r).rev() {
        carry = ring.add(&ring.mul(&carry, &w), &f.coeffs[d]);
        gamma[d - 1] = carry.clone();
    }
    let derivative_at_w = RingPoly::new(gamma.clone()).eval(ring, &w);
    let inv = ring.invert(&derivative_at_w)?;
    let theta: Vec<Elem> = gamma.iter().map(|g| ring.mul(g, &inv)).collect();
    for (i, wi) in (0..r).map(|i| (i, ring.pow(&w, i as u64))) {
        for (j, tj) in theta.iter().enumerate() {
            let tr = ring.trace(&ring.mul(&wi, tj));
            let expected = if i == j { ring.one() } else { ring.zero() };
            if tr != expected {
                return Err(Error::InvariantViolated(format!("Tr(ω^{i} θ_{j}) = {}", ring.format(&tr))));
            }
        }
    }
    Ok(theta)
}
