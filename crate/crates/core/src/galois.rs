//! `S`-linear cyclic codes over `R = S[ω]` and their trace duals.
//!
//! A code is described by an exponent matrix: row `i <= u` gives the exponents
//! of `x^{e_{i,j}} b_j K_i` (with `b_j = ω^j` or the trace-dual `θ_j`), row
//! `i > u` those of `x^{e_{i,h}} K_{i,h}`. An exponent equal to `m` drops the term.

use serde::{Deserialize, Serialize};

use crate::code::{CodeHandle, Family, VectorSpace};
use crate::error::{Error, Result};
use crate::idempotent::{trace_dual_basis, ComponentId, IdempotentSystem, Scalars};
use crate::linalg::annihilator;
use crate::ring::{ChainRing, Elem, RingParams};

/// Which `S`-basis of `R` multiplies the non-split components.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Omega,
    Theta,
}

impl Basis {
    fn swapped(self) -> Self {
        match self {
            Basis::Omega => Basis::Theta,
            Basis::Theta => Basis::Omega,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaloisCodeSpec {
    pub ring: RingParams,
    #[serde(rename = "N")]
    pub n: u64,
    pub e: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "is_omega")]
    pub basis: Basis,
}

fn is_omega(b: &Basis) -> bool {
    *b == Basis::Omega
}

/// Ring, idempotents and trace-dual basis shared by every code of one length.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    pub ring: ChainRing,
    pub sys: IdempotentSystem,
    pub theta: Vec<Elem>,
    pub space: VectorSpace,
}

impl GaloisContext {
    pub fn new(ring: &ChainRing, n: u64) -> Result<Self> {
        let sys = IdempotentSystem::new(ring, n)?;
        let theta = trace_dual_basis(ring)?;
        Ok(GaloisContext { ring: ring.clone(), sys, theta, space: VectorSpace::new(ring, n as usize) })
    }

    pub fn m(&self) -> u32 {
        self.ring.m()
    }

    pub fn rank(&self) -> usize {
        self.ring.rank() as usize
    }

    /// Spec with every exponent equal to `value`.
    pub fn uniform_spec(&self, value: u32) -> GaloisCodeSpec {
        GaloisCodeSpec {
            ring: self.ring.params().clone(),
            n: self.sys.cls.n,
            e: vec![vec![value; self.rank()]; self.sys.cls.v + 1],
            basis: Basis::Omega,
        }
    }

    pub fn check_spec(&self, spec: &GaloisCodeSpec) -> Result<()> {
        if spec.ring != *self.ring.params() && spec.ring.f.is_some() {
            return Err(Error::SpecShapeMismatch("spec ring differs from the context ring".into()));
        }
        if spec.n != self.sys.cls.n {
            return Err(Error::SpecShapeMismatch(format!(
                "spec length {} but context length {}",
                spec.n, self.sys.cls.n
            )));
        }
        let rows = self.sys.cls.v + 1;
        if spec.e.len() != rows || spec.e.iter().any(|row| row.len() != self.rank()) {
            return Err(Error::SpecShapeMismatch(format!("exponent matrix must be {rows} x {}", self.rank())));
        }
        if let Some(&bad) = spec.e.iter().flatten().find(|&&e| e > self.m()) {
            return Err(Error::SpecShapeMismatch(format!("exponent {bad} exceeds m = {}", self.m())));
        }
        Ok(())
    }

    fn basis_element(&self, basis: Basis, j: usize) -> Elem {
        match basis {
            Basis::Omega => self.ring.omega_pow(j as u64),
            Basis::Theta => self.theta[j].clone(),
        }
    }

    /// Generators `x^{e_{i,j}} b_j ε_i X^c` (over `S`) and `x^{e_{i,h}} ε_{i,h} X^c` (over `R`).
    pub fn build(&self, spec: &GaloisCodeSpec) -> Result<CodeHandle> {
        self.check_spec(spec)?;
        let ring = &self.ring;
        let cls = &self.sys.cls;
        let m = self.m();
        let mut stack = crate::linalg::GeneratorStack::empty(self.space.ambient());
        for i in 0..=cls.v {
            for (j, &e) in spec.e[i].iter().enumerate() {
                if e >= m {
                    continue;
                }
                let (id, scale, scalars) = if i <= cls.u {
                    let b = self.basis_element(spec.basis, j);
                    (ComponentId::K(i), ring.mul(&ring.x_pow(e), &b), Scalars::Base)
                } else {
                    (ComponentId::Split(i, j), ring.x_pow(e), Scalars::Full)
                };
                let comp = self.sys.component_basis(id)?;
                let vectors: Vec<Vec<Elem>> =
                    comp.generators.iter().map(|g| g.iter().map(|c| ring.mul(&scale, c)).collect()).collect();
                for row in self.space.span(scalars, &vectors)?.rows {
                    stack.push(row)?;
                }
            }
        }
        Ok(CodeHandle::from_stack(self.space.clone(), Family::Galois, Scalars::Base, stack))
    }

    /// Closed-form trace dual: `e'_{μ(i), j} = m - e_{i,j}` with the basis swapped
    /// (`ω^j ↔ θ_j`), and `e'_{μ(i,h)} = m - e_{i,h}` on split components.
    pub fn dual(&self, spec: &GaloisCodeSpec) -> Result<GaloisCodeSpec> {
        self.check_spec(spec)?;
        let cls = &self.sys.cls;
        let m = self.m();
        let mut e = spec.e.clone();
        for i in 0..=cls.v {
            for j in 0..self.rank() {
                let (ti, tj) = if i <= cls.u { (self.sys.mu_perm[i], j) } else { self.sys.mu_split[i][j] };
                e[ti][tj] = m - spec.e[i][j];
            }
        }
        Ok(GaloisCodeSpec { ring: spec.ring.clone(), n: spec.n, e, basis: spec.basis.swapped() })
    }

    /// `Σ_{i<=u} Σ_j (m - e_{i,j}) κ_i + Σ_{i>u} Σ_h (m - e_{i,h}) r κ_{i,h}`.
    pub fn log_cardinality(&self, spec: &GaloisCodeSpec) -> Result<u32> {
        self.check_spec(spec)?;
        let cls = &self.sys.cls;
        let (m, r) = (self.m(), self.rank() as u32);
        let mut total = 0;
        for i in 0..=cls.v {
            for (j, &e) in spec.e[i].iter().enumerate() {
                let weight = if i <= cls.u { cls.kappa[i] as u32 } else { r * cls.kappa_split(i, j) as u32 };
                total += (m - e) * weight;
            }
        }
        Ok(total)
    }

    /// Whether the built code equals the built closed-form dual.
    pub fn is_self_dual(&self, spec: &GaloisCodeSpec) -> Result<bool> {
        let code = self.build(spec)?;
        let dual = self.build(&self.dual(spec)?)?;
        Ok(code.same_code(&dual))
    }

    /// Recovers an exponent matrix (in the `ω` basis) from a built code and checks the rebuild.
    pub fn decompose_to_spec(&self, code: &CodeHandle) -> Result<GaloisCodeSpec> {
        if !code.is_shift_closed() {
            return Err(Error::NotCyclic);
        }
        if !code.is_closed_under(Scalars::Base) {
            return Err(Error::NotLinear);
        }
        let ring = &self.ring;
        let cls = &self.sys.cls;
        let m = self.m();
        let mut e = vec![vec![m; self.rank()]; cls.v + 1];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let (eps, b) = if i <= cls.u {
                    (&self.sys.eps[i], ring.omega_pow(j as u64))
                } else {
                    (&self.sys.eps_split[i][j], ring.one())
                };
                for w in 0..m {
                    let scale = ring.mul(&ring.x_pow(w), &b);
                    let v: Vec<Elem> = eps.iter().map(|c| ring.mul(&scale, c)).collect();
                    if code.contains(&v)? {
                        *slot = w;
                        break;
                    }
                }
            }
        }
        let spec = GaloisCodeSpec { ring: ring.params().clone(), n: cls.n, e, basis: Basis::Omega };
        if !self.build(&spec)?.same_code(code) {
            return Err(Error::NotDecomposable(format!(
                "largest canonical subcode has exponents {:?} but is strictly smaller",
                spec.e
            )));
        }
        Ok(spec)
    }

    /// Trace dual of an arbitrary code by solving linear congruences.
    pub fn trace_dual_linear(&self, code: &CodeHandle) -> Result<CodeHandle> {
        trace_dual_linear(code)
    }
}

/// `(a, b)_Tr = Σ Tr(a_l b_l)`, an element of `S`.
pub fn trace_inner_product(ring: &ChainRing, a: &[Elem], b: &[Elem]) -> Result<Elem> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch { expected: a.len(), got: b.len() });
    }
    let prods: Vec<Elem> = a.iter().zip(b).map(|(x, y)| ring.mul(x, y)).collect();
    Ok(ring.trace(&ring.sum(prods.iter())))
}

/// `{a : (a, c)_Tr = 0 for all c ∈ C}` via the annihilator of the `Z_{p^n}`-valued
/// coordinate functionals of the trace form. Rejected for Eisenstein-family codes.
pub fn trace_dual_linear(code: &CodeHandle) -> Result<CodeHandle> {
    if code.family == Family::Eisenstein {
        return Err(Error::TraceUnavailable(
            "R is not free over Z_{p^n} when t < k, so the dual uses characters".into(),
        ));
    }
    let space = &code.space;
    let ring = &space.ring;
    let (k, t, p) = (ring.k() as usize, ring.t() as usize, ring.p());
    let q = ring.modulus();
    let monomials: Vec<Elem> =
        (0..ring.rank() as usize).flat_map(|i| (0..k).map(move |j| (i, j))).map(|(i, j)| ring.monomial(i, j)).collect();
    let mut functionals = Vec::new();
    for c in code.basis_vectors() {
        let mut per_output = vec![Vec::with_capacity(space.len * ring.dim()); k];
        for cl in &c {
            for mono in &monomials {
                let tr = ring.trace(&ring.mul(mono, cl));
                for (j, out) in per_output.iter_mut().enumerate() {
                    let v = tr.coeffs()[j];
                    out.push(if j < t { v } else { (v * p) % q });
                }
            }
        }
        functionals.extend(per_output);
    }
    let stack = annihilator(&space.ambient(), &functionals)?;
    Ok(CodeHandle::from_stack(space.clone(), Family::Galois, Scalars::Base, stack))
}
