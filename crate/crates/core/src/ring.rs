//! Exact arithmetic in finite commutative chain rings
//! `R = Z_{p^n}[ω][x] / <g(x), p^{n-1} x^t>` with `g(x) = x^k + p(a_{k-1}x^{k-1} + ... + a_0)`.
//!
//! Elements are stored as the canonical integer grid `a_{i,j}` over the basis
//! `ω^i x^j` (`i < r`, `j < k`), entries reduced modulo `p^n` for `j < t` and
//! modulo `p^{n-1}` for `j >= t`. Equality of elements is equality of grids.

use std::collections::hash_map::DefaultHasher;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::arith::{self, checked_pow, is_prime, mul_mod, neg_mod, valuation};
use crate::error::{Error, Result};
use crate::poly::{find_basic_primitive_poly, ModPolyRing};

/// Defining data of a chain ring.
///
/// `g_tail = [a_0, ..., a_{k-1}]` encodes `g(x) = x^k + p(a_{k-1}x^{k-1} + ... + a_0)`.
/// `f` is the little-endian monic basic primitive polynomial of `ω` over `Z_{p^n}`;
/// when omitted one is discovered deterministically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingParams {
    pub p: u64,
    pub n: u32,
    pub r: u32,
    pub k: u32,
    pub t: u32,
    pub g_tail: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<u64>>,
}

impl RingParams {
    pub fn new(p: u64, n: u32, r: u32, k: u32, t: u32, g_tail: Vec<u64>) -> Self {
        RingParams { p, n, r, k, t, g_tail, f: None }
    }

    pub fn with_f(mut self, f: Vec<u64>) -> Self {
        self.f = Some(f);
        self
    }

    /// Nilpotency index `m = k(n-1) + t`.
    pub fn nilpotency(&self) -> u32 {
        self.k * (self.n - 1) + self.t
    }

    fn validate_shape(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterInvalid(msg));
        if !is_prime(self.p) {
            return bad(format!("p = {} is not prime", self.p));
        }
        if self.n == 0 || self.r == 0 || self.k == 0 {
            return bad("n, r and k must be positive".into());
        }
        if checked_pow(self.p, self.n).is_none() {
            return bad(format!("p^n = {}^{} exceeds 2^31", self.p, self.n));
        }
        if checked_pow(self.p, self.r).is_none() {
            return bad(format!("p^r = {}^{} exceeds 2^31", self.p, self.r));
        }
        if self.n == 1 && self.t != self.k {
            return bad(format!("n = 1 forces t = k, got t = {} and k = {}", self.t, self.k));
        }
        if self.t == 0 || self.t > self.k {
            return bad(format!("t = {} must satisfy 1 <= t <= k = {}", self.t, self.k));
        }
        if self.g_tail.len() != self.k as usize {
            return bad(format!("g_tail has {} entries, expected k = {}", self.g_tail.len(), self.k));
        }
        let bound = if self.n >= 2 { self.p.pow(self.n - 1) } else { self.p };
        if let Some(a) = self.g_tail.iter().find(|&&a| a >= bound) {
            return bad(format!("g_tail entry {a} is outside [0, {bound})"));
        }
        if self.g_tail[0].is_multiple_of(self.p) {
            return bad("a_0 must be a unit (g is not Eisenstein)".into());
        }
        Ok(())
    }
}

/// Canonical element of a [`ChainRing`]: a row-major `r x k` integer grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    tag: u64,
    coeffs: Vec<u64>,
}

impl Elem {
    /// Row-major grid entries (`index = i * k + j`).
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// Sequence of `m` Teichmüller digits `τ_i` with `a = Σ τ_i x^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeichDigits {
    pub digits: Vec<Elem>,
}

/// Ring descriptor with precomputed reduction tables.
#[derive(Clone, Debug)]
pub struct ChainRing {
    params: RingParams,
    f: Vec<u64>,
    q: u64,
    q1: u64,
    m: u32,
    tag: u64,
    /// `ω^{r+d}` reduced to the basis `1, ω, ..., ω^{r-1}`, for `d < r - 1`.
    omega_reduce: Vec<Vec<u64>>,
    /// `x^k = Σ x_tail[l] x^l`.
    x_tail: Vec<u64>,
    /// `(ω^p)^i` in the basis of powers of `ω`.
    frob: Vec<Vec<u64>>,
    /// Inverse of `a_0 + a_1 x + ... + a_{k-1} x^{k-1}`, used to divide by `x`.
    eis_unit_inv: Option<Elem>,
}

/// Builds and validates a chain ring.
pub fn make_ring(params: RingParams) -> Result<ChainRing> {
    ChainRing::new(params)
}

impl ChainRing {
    pub fn new(params: RingParams) -> Result<Self> {
        params.validate_shape()?;
        let f = match &params.f {
            Some(f) => {
                validate_f(&params, f)?;
                f.clone()
            }
            None => find_basic_primitive_poly(params.p, params.n, params.r),
        };
        let ring = Self::build(params, f)?;
        // ω must be a Teichmüller element of order p^r - 1.
        let order = ring.params.p.pow(ring.params.r) - 1;
        if ring.pow(&ring.omega(), order) != ring.one() {
            return Err(Error::ParameterInvalid(
                "f does not divide X^{p^r-1} - 1 over Z_{p^n} (not a Teichmüller lift)".into(),
            ));
        }
        Ok(ring)
    }

    /// Builds the tables for a monic `f` without checking primitivity.
    pub(crate) fn build(mut params: RingParams, f: Vec<u64>) -> Result<Self> {
        let (p, n, r, k) = (params.p, params.n, params.r as usize, params.k as usize);
        let q = p.pow(n);
        let q1 = p.pow(n - 1);
        params.f = Some(f.clone());
        let m = params.nilpotency();

        let zq = ModPolyRing::new(q);
        let mut omega_reduce = Vec::new();
        for d in 0..r.saturating_sub(1) {
            let mut mono = vec![0u64; r + d + 1];
            mono[r + d] = 1;
            let red = zq.rem(&mono, &f);
            omega_reduce.push(pad(red, r));
        }
        let x_tail = params.g_tail.iter().map(|&a| neg_mod(mul_mod(p, a, q), q)).collect();
        let xp = zq.pow_mod(&[0, 1], p, &f);
        let mut frob = Vec::with_capacity(r);
        let mut acc = zq.rem(&[1], &f);
        for _ in 0..r {
            frob.push(pad(acc.clone(), r));
            acc = zq.rem(&zq.mul(&acc, &xp), &f);
        }

        let mut hasher = DefaultHasher::new();
        params.hash(&mut hasher);
        let tag = hasher.finish();

        let mut ring = ChainRing { params, f, q, q1, m, tag, omega_reduce, x_tail, frob, eis_unit_inv: None };
        if n >= 2 {
            let grid: Vec<u64> = (0..r * k).map(|idx| if idx < k { ring.params.g_tail[idx] } else { 0 }).collect();
            let unit = ring.from_flat_reducing(grid);
            ring.eis_unit_inv = Some(ring.invert(&unit)?);
        }
        Ok(ring)
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn n(&self) -> u32 {
        self.params.n
    }

    pub fn rank(&self) -> u32 {
        self.params.r
    }

    pub fn k(&self) -> u32 {
        self.params.k
    }

    pub fn t(&self) -> u32 {
        self.params.t
    }

    /// Characteristic `p^n`.
    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// `p^{n-1}`, the additive order of the `x^j` coordinates with `j >= t`.
    pub fn low_modulus(&self) -> u64 {
        self.q1
    }

    /// Nilpotency index of `x`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// The resolved basic primitive polynomial of `ω`, little-endian.
    pub fn omega_poly(&self) -> &[u64] {
        &self.f
    }

    /// `log_p |R| = r m`.
    pub fn log_size(&self) -> u32 {
        self.params.r * self.m
    }

    /// Number of grid coordinates `r k`.
    pub fn dim(&self) -> usize {
        (self.params.r * self.params.k) as usize
    }

    /// Modulus of grid coordinate `idx` (`p^n` for `j < t`, `p^{n-1}` otherwise).
    pub fn coord_modulus(&self, idx: usize) -> u64 {
        let j = idx % self.params.k as usize;
        if j < self.params.t as usize {
            self.q
        } else {
            self.q1
        }
    }

    /// Total number of elements, when it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        (0..self.dim()).try_fold(1u64, |acc, idx| acc.checked_mul(self.coord_modulus(idx)))
    }

    pub fn same_ring(&self, other: &ChainRing) -> bool {
        self.tag == other.tag
    }

    pub fn owns(&self, a: &Elem) -> bool {
        a.tag == self.tag && a.coeffs.len() == self.dim()
    }

    // ---- constructors ----

    pub fn zero(&self) -> Elem {
        Elem { tag: self.tag, coeffs: vec![0; self.dim()] }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, c: i64) -> Elem {
        let mut e = self.zero();
        e.coeffs[0] = arith::reduce_signed(c, self.q);
        e
    }

    /// `ω^i x^j` for `i < r`, `j < k`.
    pub fn monomial(&self, i: usize, j: usize) -> Elem {
        let k = self.params.k as usize;
        let mut e = self.zero();
        e.coeffs[i * k + j] = 1 % self.coord_modulus(j);
        e
    }

    pub fn omega(&self) -> Elem {
        if self.params.r == 1 {
            // ω is the root of the linear polynomial f = X + f_0
            self.from_int(-(self.f[0] as i64))
        } else {
            self.monomial(1, 0)
        }
    }

    pub fn x(&self) -> Elem {
        if self.params.k == 1 {
            // x = -p a_0
            self.from_flat_reducing({
                let mut v = vec![0; self.dim()];
                v[0] = self.x_tail[0];
                v
            })
        } else {
            self.monomial(0, 1)
        }
    }

    /// `x^e`, zero once `e >= m`.
    pub fn x_pow(&self, e: u32) -> Elem {
        if e >= self.m {
            return self.zero();
        }
        self.pow(&self.x(), e as u64)
    }

    /// `ω^e`.
    pub fn omega_pow(&self, e: u64) -> Elem {
        self.pow(&self.omega(), e)
    }

    /// Element from a row-major grid; entries must already be in canonical range.
    pub fn from_grid(&self, grid: &[Vec<u64>]) -> Result<Elem> {
        let (r, k) = (self.params.r as usize, self.params.k as usize);
        if grid.len() != r || grid.iter().any(|row| row.len() != k) {
            return Err(Error::ParameterInvalid(format!("element grid must be {r} x {k}")));
        }
        let coeffs: Vec<u64> = grid.iter().flatten().copied().collect();
        for (idx, &c) in coeffs.iter().enumerate() {
            if c >= self.coord_modulus(idx) {
                return Err(Error::ParameterInvalid(format!(
                    "grid entry {c} at ({}, {}) out of range",
                    idx / k,
                    idx % k
                )));
            }
        }
        Ok(Elem { tag: self.tag, coeffs })
    }

    /// Element from flat row-major coordinates, reducing every entry.
    pub fn from_flat_reducing(&self, mut coeffs: Vec<u64>) -> Elem {
        assert_eq!(coeffs.len(), self.dim());
        for (idx, c) in coeffs.iter_mut().enumerate() {
            *c %= self.coord_modulus(idx);
        }
        Elem { tag: self.tag, coeffs }
    }

    pub fn grid(&self, a: &Elem) -> Vec<Vec<u64>> {
        a.coeffs.chunks(self.params.k as usize).map(|c| c.to_vec()).collect()
    }

    // ---- enumeration ----

    /// Mixed-radix index of `a`; numeric order equals lexicographic order of grids.
    pub fn index_of(&self, a: &Elem) -> u64 {
        a.coeffs.iter().enumerate().fold(0u64, |acc, (idx, &c)| acc * self.coord_modulus(idx) + c)
    }

    pub fn from_index(&self, mut index: u64) -> Elem {
        let mut coeffs = vec![0u64; self.dim()];
        for idx in (0..self.dim()).rev() {
            let md = self.coord_modulus(idx);
            coeffs[idx] = index % md;
            index /= md;
        }
        Elem { tag: self.tag, coeffs }
    }

    /// All elements in lexicographic grid order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        let size = self.size().expect("ring too large to enumerate");
        (0..size).map(move |i| self.from_index(i))
    }

    // ---- arithmetic ----

    fn check(&self, a: &Elem) {
        assert!(self.owns(a), "element does not belong to this ring");
    }

    pub fn try_add(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if !self.owns(a) || !self.owns(b) {
            return Err(Error::RingMismatch);
        }
        Ok(self.add(a, b))
    }

    pub fn try_mul(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if !self.owns(a) || !self.owns(b) {
            return Err(Error::RingMismatch);
        }
        Ok(self.mul(a, b))
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .enumerate()
            .map(|(idx, (&x, &y))| (x + y) % self.coord_modulus(idx))
            .collect();
        Elem { tag: self.tag, coeffs }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.check(a);
        let coeffs = a.coeffs.iter().enumerate().map(|(idx, &x)| neg_mod(x, self.coord_modulus(idx))).collect();
        Elem { tag: self.tag, coeffs }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    /// Multiplication by an integer.
    pub fn scale(&self, a: &Elem, c: u64) -> Elem {
        self.check(a);
        let coeffs = a
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, &x)| {
                let md = self.coord_modulus(idx);
                mul_mod(x, c % self.q, md)
            })
            .collect();
        Elem { tag: self.tag, coeffs }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        self.check(a);
        self.check(b);
        let (r, k, q) = (self.params.r as usize, self.params.k as usize, self.q);
        let (h, w) = (2 * r - 1, 2 * k - 1);
        let mut buf = vec![0u64; h * w];
        for i1 in 0..r {
            for j1 in 0..k {
                let x = a.coeffs[i1 * k + j1];
                if x == 0 {
                    continue;
                }
                for i2 in 0..r {
                    let row = (i1 + i2) * w + j1;
                    for j2 in 0..k {
                        let y = b.coeffs[i2 * k + j2];
                        if y != 0 {
                            let cell = &mut buf[row + j2];
                            *cell = (*cell + x * y) % q;
                        }
                    }
                }
            }
        }
        self.reduce_buffer(buf, h, w)
    }

    /// Reduces a `h x w` product buffer by `x^k ↦ -p(...)`, `ω^r ↦ (f-tail)` and the clamp `p^{n-1} x^t = 0`.
    fn reduce_buffer(&self, mut buf: Vec<u64>, h: usize, w: usize) -> Elem {
        let (r, k, q) = (self.params.r as usize, self.params.k as usize, self.q);
        for d in (k..w).rev() {
            for i in 0..h {
                let c = buf[i * w + d];
                if c == 0 {
                    continue;
                }
                buf[i * w + d] = 0;
                for (l, &tl) in self.x_tail.iter().enumerate() {
                    if tl != 0 {
                        let cell = &mut buf[i * w + d - k + l];
                        *cell = (*cell + c * tl) % q;
                    }
                }
            }
        }
        for i in (r..h).rev() {
            let red = &self.omega_reduce[i - r];
            for j in 0..k {
                let c = buf[i * w + j];
                if c == 0 {
                    continue;
                }
                buf[i * w + j] = 0;
                for (i2, &rc) in red.iter().enumerate() {
                    if rc != 0 {
                        let cell = &mut buf[i2 * w + j];
                        *cell = (*cell + c * rc) % q;
                    }
                }
            }
        }
        let mut coeffs = vec![0u64; r * k];
        for i in 0..r {
            for j in 0..k {
                coeffs[i * k + j] = buf[i * w + j] % self.coord_modulus(j);
            }
        }
        Elem { tag: self.tag, coeffs }
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a Elem>) -> Elem {
        items.into_iter().fold(self.zero(), |acc, e| self.add(&acc, e))
    }

    // ---- structure ----

    /// The `x`-free part `Σ_i a_{i,0} ω^i`, an element of the coefficient Galois ring.
    pub fn constant_part(&self, a: &Elem) -> Elem {
        let k = self.params.k as usize;
        let mut e = self.zero();
        for i in 0..self.params.r as usize {
            e.coeffs[i * k] = a.coeffs[i * k];
        }
        e
    }

    /// `a ∉ <x>`, i.e. the residue of `a` in `F_{p^r}` is nonzero.
    pub fn is_unit(&self, a: &Elem) -> bool {
        let k = self.params.k as usize;
        (0..self.params.r as usize).any(|i| !a.coeffs[i * k].is_multiple_of(self.params.p))
    }

    /// Inverse by lifting the residue-field inverse with Newton steps `b ← b(2 - ab)`.
    pub fn invert(&self, a: &Elem) -> Result<Elem> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        let residue_order = self.params.p.pow(self.params.r) - 1;
        let mut b = self.pow(&self.constant_part(a), residue_order - 1);
        let one = self.one();
        let two = self.from_int(2);
        // error ideal <x^v> doubles its exponent each step
        for _ in 0..=(64 - (self.m as u64).leading_zeros()) + 1 {
            let ab = self.mul(a, &b);
            if ab == one {
                return Ok(b);
            }
            b = self.mul(&b, &self.sub(&two, &ab));
        }
        if self.mul(a, &b) == one {
            Ok(b)
        } else {
            Err(Error::InvariantViolated("Newton inversion did not converge".into()))
        }
    }

    /// Largest `v` with `a ∈ <x^v>`; `m` for zero.
    pub fn x_valuation(&self, a: &Elem) -> u32 {
        let (r, k, n) = (self.params.r as usize, self.params.k as usize, self.params.n);
        let mut best = self.m;
        for j in 0..k {
            let vp = (0..r).map(|i| valuation(a.coeffs[i * k + j], self.params.p, n)).min().unwrap();
            if vp < n {
                best = best.min(self.params.k * vp + j as u32);
            }
        }
        best
    }

    /// The Teichmüller set `{0, 1, ω, ..., ω^{p^r - 2}}`.
    pub fn teichmuller_set(&self) -> Vec<Elem> {
        let count = self.params.p.pow(self.params.r) - 1;
        let omega = self.omega();
        let mut out = vec![self.zero()];
        let mut acc = self.one();
        for _ in 0..count {
            out.push(acc.clone());
            acc = self.mul(&acc, &omega);
        }
        out
    }

    /// The Teichmüller representative of `a mod <x>`.
    pub fn teichmuller_lift(&self, a: &Elem) -> Elem {
        let residue_size = self.params.p.pow(self.params.r);
        let mut c = self.constant_part(a);
        for _ in 1..self.params.n {
            c = self.pow(&c, residue_size);
        }
        c
    }

    /// Canonical `b` with `x b = c`, for `c ∈ <x>`.
    pub fn div_x(&self, c: &Elem) -> Result<Elem> {
        if self.x_valuation(c) == 0 {
            return Err(Error::InvariantViolated("division by x of an element outside <x>".into()));
        }
        let (r, k, p) = (self.params.r as usize, self.params.k as usize, self.params.p);
        let mut shifted = vec![0u64; r * k];
        let mut w0 = vec![0u64; r * k];
        for i in 0..r {
            for j in 1..k {
                shifted[i * k + j - 1] = c.coeffs[i * k + j];
            }
            w0[i * k] = c.coeffs[i * k] / p;
        }
        let shifted = self.from_flat_reducing(shifted);
        match &self.eis_unit_inv {
            None => Ok(shifted),
            Some(unit_inv) => {
                let w0 = self.from_flat_reducing(w0);
                let x_km1 = self.x_pow(self.params.k - 1);
                let correction = self.mul(&self.mul(&x_km1, unit_inv), &w0);
                Ok(self.sub(&shifted, &correction))
            }
        }
    }

    /// x-adic expansion `a = Σ_{i<m} τ_i x^i` with Teichmüller digits.
    pub fn x_adic_digits(&self, a: &Elem) -> TeichDigits {
        let mut digits = Vec::with_capacity(self.m as usize);
        let mut rest = a.clone();
        for i in 0..self.m {
            let tau = self.teichmuller_lift(&rest);
            let diff = self.sub(&rest, &tau);
            digits.push(tau);
            if i + 1 < self.m {
                rest = self.div_x(&diff).expect("difference lies in <x>");
            }
        }
        TeichDigits { digits }
    }

    pub fn from_digits(&self, d: &TeichDigits) -> Elem {
        let x = self.x();
        d.digits.iter().rev().fold(self.zero(), |acc, tau| self.add(&self.mul(&acc, &x), tau))
    }

    /// Frobenius `φ`: `ω ↦ ω^p`, extended linearly over `Z_{p^n}[x]`.
    pub fn frobenius(&self, a: &Elem) -> Elem {
        self.check(a);
        let (r, k, q) = (self.params.r as usize, self.params.k as usize, self.q);
        let mut out = vec![0u64; r * k];
        for i in 0..r {
            for j in 0..k {
                let c = a.coeffs[i * k + j];
                if c == 0 {
                    continue;
                }
                for (i2, &fc) in self.frob[i].iter().enumerate() {
                    out[i2 * k + j] = (out[i2 * k + j] + c * fc) % q;
                }
            }
        }
        self.from_flat_reducing(out)
    }

    pub fn frobenius_pow(&self, a: &Elem, e: u32) -> Elem {
        (0..e).fold(a.clone(), |acc, _| self.frobenius(&acc))
    }

    /// Generalized trace `Tr(c) = Σ_{j<r} φ^j(c)` onto the base ring `S = Z_{p^n}[x]/<g, p^{n-1}x^t>`.
    pub fn trace(&self, a: &Elem) -> Elem {
        let mut acc = a.clone();
        let mut cur = a.clone();
        for _ in 1..self.params.r {
            cur = self.frobenius(&cur);
            acc = self.add(&acc, &cur);
        }
        acc
    }

    /// Membership in `S`: every `ω^i` coordinate with `i >= 1` vanishes.
    pub fn is_in_base(&self, a: &Elem) -> bool {
        a.coeffs[self.params.k as usize..].iter().all(|&c| c == 0)
    }

    /// Evaluates an integer polynomial (little-endian, residues mod `p^n`) at `a`.
    pub fn eval_int_poly(&self, poly: &[u64], a: &Elem) -> Elem {
        poly.iter().rev().fold(self.zero(), |acc, &c| {
            let c = self.from_int((c % self.q) as i64);
            self.add(&self.mul(&acc, a), &c)
        })
    }

    /// Human-readable form, e.g. `3 + 3w + x`.
    pub fn format(&self, a: &Elem) -> String {
        let k = self.params.k as usize;
        let mut terms = Vec::new();
        for j in 0..k {
            for i in 0..self.params.r as usize {
                let c = a.coeffs[i * k + j];
                if c == 0 {
                    continue;
                }
                let mut s = String::new();
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    (i, j) => {
                        let mut m = String::new();
                        if i == 1 {
                            m.push('w');
                        } else if i > 1 {
                            let _ = write!(m, "w^{i}");
                        }
                        if j == 1 {
                            m.push('x');
                        } else if j > 1 {
                            let _ = write!(m, "x^{j}");
                        }
                        m
                    }
                };
                if c != 1 || mono.is_empty() {
                    let _ = write!(s, "{c}");
                }
                s.push_str(&mono);
                terms.push(s);
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

fn pad(mut v: Vec<u64>, len: usize) -> Vec<u64> {
    v.resize(len, 0);
    v
}

fn validate_f(params: &RingParams, f: &[u64]) -> Result<()> {
    let q = params.p.pow(params.n);
    let r = params.r as usize;
    if f.len() != r + 1 || f[r] != 1 {
        return Err(Error::ParameterInvalid(format!("f must be monic of degree r = {r}")));
    }
    if f.iter().any(|&c| c >= q) {
        return Err(Error::ParameterInvalid("f coefficients must lie in [0, p^n)".into()));
    }
    let fp = ModPolyRing::new(params.p);
    let reduced: Vec<u64> = f.iter().map(|&c| c % params.p).collect();
    if !fp.is_primitive(&reduced) {
        return Err(Error::ParameterInvalid("f mod p is not primitive over F_p".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_eis() -> ChainRing {
        // Z_4[x]/<x^2+2, 2x>
        make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap()
    }

    fn rank_two_ring() -> ChainRing {
        make_ring(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1])).unwrap()
    }

    fn el(ring: &ChainRing, grid: &[&[u64]]) -> Elem {
        ring.from_grid(&grid.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn make_ring_examples() {
        let r = z4_eis();
        assert_eq!((r.m(), r.size()), (3, Some(8)));
        let quasi = make_ring(RingParams::new(2, 1, 1, 3, 3, vec![1, 0, 0])).unwrap();
        assert_eq!((quasi.m(), quasi.size()), (3, Some(8)));
        let r = rank_two_ring();
        assert_eq!((r.m(), r.log_size()), (3, 6));
    }

    #[test]
    fn make_ring_rejects_bad_parameters() {
        let bad = |p: RingParams| matches!(make_ring(p), Err(Error::ParameterInvalid(_)));
        assert!(bad(RingParams::new(4, 2, 1, 2, 1, vec![1, 0])));
        assert!(bad(RingParams::new(2, 2, 1, 2, 1, vec![0, 1])));
        assert!(bad(RingParams::new(2, 2, 1, 2, 3, vec![1, 0])));
        assert!(bad(RingParams::new(2, 1, 1, 2, 1, vec![1, 0])));
        // X^2 + 1 is reducible mod 2
        assert!(bad(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 0, 1])));
        // X - 2 over Z_9: 2 is primitive mod 3 but not a Teichmüller element
        assert!(bad(RingParams::new(3, 2, 1, 1, 1, vec![1]).with_f(vec![7, 1])));
        assert!(bad(RingParams::new(2, 40, 1, 1, 1, vec![1])));
    }

    #[test]
    fn add_examples() {
        let r = z4_eis();
        assert_eq!(r.add(&r.from_int(3), &r.one()), r.zero());
        assert_eq!(r.add(&r.x(), &r.x()), r.zero());
        let g = rank_two_ring();
        let a = el(&g, &[&[3, 0], &[1, 0]]);
        let b = el(&g, &[&[1, 0], &[2, 0]]);
        assert_eq!(g.add(&a, &b), el(&g, &[&[0, 0], &[3, 0]]));
        assert_eq!(g.try_add(&a, &r.one()), Err(Error::RingMismatch));
    }

    #[test]
    fn mul_examples() {
        let r = z4_eis();
        let x = r.x();
        assert_eq!(r.mul(&x, &x), r.from_int(2));
        let xp1 = r.add(&x, &r.one());
        assert_eq!(r.mul(&xp1, &xp1), r.from_int(3));
        let g = rank_two_ring();
        let w = g.omega();
        assert_eq!(g.mul(&w, &w), el(&g, &[&[3, 0], &[3, 0]]));
    }

    #[test]
    fn unit_examples() {
        let g = rank_two_ring();
        let a = el(&g, &[&[1, 0], &[2, 0]]);
        assert_eq!(g.invert(&a).unwrap(), a);
        assert_eq!(g.invert(&g.x()), Err(Error::NotAUnit));
        assert_eq!(g.invert(&g.one()).unwrap(), g.one());
    }

    #[test]
    fn valuation_examples() {
        let r = z4_eis();
        assert_eq!(r.x_valuation(&r.zero()), 3);
        assert_eq!(r.x_valuation(&r.from_int(2)), 2);
        assert_eq!(r.x_valuation(&r.one()), 0);
        assert_eq!(r.x_valuation(&r.x()), 1);
    }

    #[test]
    fn teichmuller_examples() {
        let z4 = make_ring(RingParams::new(2, 2, 1, 1, 1, vec![1])).unwrap();
        assert_eq!(z4.teichmuller_set(), vec![z4.zero(), z4.one()]);
        let gr = make_ring(RingParams::new(2, 2, 2, 1, 1, vec![1]).with_f(vec![1, 1, 1])).unwrap();
        let expected = vec![gr.zero(), gr.one(), gr.omega(), el(&gr, &[&[3], &[3]])];
        assert_eq!(gr.teichmuller_set(), expected);
        let q = gr.p().pow(gr.rank());
        for tau in gr.teichmuller_set() {
            assert_eq!(gr.pow(&tau, q), tau);
        }
    }

    #[test]
    fn digit_examples() {
        let r = z4_eis();
        let one = r.one();
        let d = r.x_adic_digits(&r.add(&one, &r.x()));
        assert_eq!(d.digits, vec![one.clone(), one.clone(), r.zero()]);
        let d = r.x_adic_digits(&r.from_int(3));
        assert_eq!(d.digits, vec![one.clone(), r.zero(), one.clone()]);
        assert_eq!(r.from_digits(&d), r.from_int(3));
        assert!(r.x_adic_digits(&r.zero()).digits.iter().all(Elem::is_zero));
    }

    #[test]
    fn frobenius_and_trace_examples() {
        let g = rank_two_ring();
        let w = g.omega();
        assert_eq!(g.frobenius(&w), el(&g, &[&[3, 0], &[3, 0]]));
        assert_eq!(g.frobenius(&g.x()), g.x());
        assert_eq!(g.frobenius_pow(&w, 2), w);
        assert_eq!(g.trace(&w), g.from_int(3));
        let s = g.add(&g.x(), &g.from_int(3));
        assert_eq!(g.trace(&s), g.scale(&s, 2));
        let theta1 = el(&g, &[&[1, 0], &[2, 0]]);
        assert_eq!(g.trace(&g.mul(&w, &theta1)), g.one());
    }

    #[test]
    fn index_roundtrip_is_lexicographic() {
        let g = rank_two_ring();
        let elems: Vec<Elem> = g.elements().collect();
        assert_eq!(elems.len(), 64);
        for (i, e) in elems.iter().enumerate() {
            assert_eq!(g.index_of(e), i as u64);
        }
        let grids: Vec<Vec<Vec<u64>>> = elems.iter().map(|e| g.grid(e)).collect();
        assert!(grids.windows(2).all(|w| w[0] < w[1]));
    }
}
