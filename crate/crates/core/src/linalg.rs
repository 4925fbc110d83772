//! Linear algebra over `Z_{p^n}` for subgroups of `⊕ Z_{p^{e_l}}`.
//!
//! Subgroups are generated by integer rows; a coordinate of order `p^e` with
//! `e < n` carries the implicit relation row `p^e · e_l`. Canonical forms are
//! Howell forms: pivots `p^v` at strictly increasing columns, entries above a
//! pivot reduced into `[0, p^v)`, and every row combination vanishing on the
//! first `c` columns generated by the rows whose pivot lies at or after `c`.

use crate::arith::{inv_mod, mul_mod, neg_mod, valuation};
use crate::error::{Error, Result};

/// `⊕_l Z_{p^{e_l}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub p: u64,
    pub n: u32,
    pub orders: Vec<u32>,
}

impl Ambient {
    pub fn new(p: u64, n: u32, orders: Vec<u32>) -> Self {
        Ambient { p, n, orders }
    }

    /// `Z_{p^n}^len`.
    pub fn uniform(p: u64, n: u32, len: usize) -> Self {
        Ambient { p, n, orders: vec![n; len] }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn modulus(&self) -> u64 {
        self.p.pow(self.n)
    }

    pub fn log_order(&self) -> u32 {
        self.orders.iter().sum()
    }

    fn relation_rows(&self) -> Vec<Vec<u64>> {
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, &e)| e < self.n)
            .map(|(l, &e)| {
                let mut row = vec![0u64; self.len()];
                row[l] = self.p.pow(e);
                row
            })
            .collect()
    }

    /// Reduces each coordinate into its own range.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        v.iter().zip(&self.orders).map(|(&c, &e)| c % self.p.pow(e)).collect()
    }
}

/// Rows spanning a subgroup of an [`Ambient`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorStack {
    pub ambient: Ambient,
    pub rows: Vec<Vec<u64>>,
}

/// Howell form of a stack; equal subgroups have equal normal forms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    pub ambient: Ambient,
    pub rows: Vec<Vec<u64>>,
    /// `(column, v)` with pivot entry `p^v`, one per row.
    pub pivots: Vec<(usize, u32)>,
}

impl GeneratorStack {
    pub fn new(ambient: Ambient, rows: Vec<Vec<u64>>) -> Result<Self> {
        for row in &rows {
            if row.len() != ambient.len() {
                return Err(Error::LengthMismatch { expected: ambient.len(), got: row.len() });
            }
        }
        Ok(GeneratorStack { ambient, rows })
    }

    pub fn empty(ambient: Ambient) -> Self {
        GeneratorStack { ambient, rows: Vec::new() }
    }

    /// The whole ambient group.
    pub fn full(ambient: Ambient) -> Self {
        let rows = (0..ambient.len())
            .map(|l| {
                let mut row = vec![0u64; ambient.len()];
                row[l] = 1;
                row
            })
            .collect();
        GeneratorStack { ambient, rows }
    }

    pub fn push(&mut self, row: Vec<u64>) -> Result<()> {
        if row.len() != self.ambient.len() {
            return Err(Error::LengthMismatch { expected: self.ambient.len(), got: row.len() });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn normal_form(&self) -> NormalForm {
        let ambient = &self.ambient;
        let mut pool = self.rows.clone();
        pool.extend(ambient.relation_rows());
        let (rows, pivots) = howell(pool, ambient.p, ambient.n);
        NormalForm { ambient: ambient.clone(), rows, pivots }
    }

    pub fn subgroup_order_log_p(&self) -> u32 {
        self.normal_form().log_order()
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        self.normal_form().contains(v)
    }
}

impl NormalForm {
    /// `log_p` of the subgroup order, `Σ (e_c - v)` over pivots `p^v` in columns `c`.
    pub fn log_order(&self) -> u32 {
        self.pivots.iter().map(|&(c, v)| self.ambient.orders[c] - v).sum()
    }

    /// Rows that contribute to the quotient, reduced per coordinate, with the
    /// additive order `p^{e_c - v}` of each. Every element is uniquely
    /// `Σ λ_i row_i` with `λ_i` below that order.
    pub fn basis(&self) -> Vec<(Vec<u64>, u64)> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .filter(|(_, &(c, v))| self.ambient.orders[c] > v)
            .map(|(row, &(c, v))| (self.ambient.reduce(row), self.ambient.p.pow(self.ambient.orders[c] - v)))
            .collect()
    }

    pub fn to_stack(&self) -> GeneratorStack {
        GeneratorStack { ambient: self.ambient.clone(), rows: self.basis().into_iter().map(|(r, _)| r).collect() }
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        if v.len() != self.ambient.len() {
            return Err(Error::LengthMismatch { expected: self.ambient.len(), got: v.len() });
        }
        let q = self.ambient.modulus();
        let p = self.ambient.p;
        let mut w: Vec<u64> = v.iter().map(|&c| c % q).collect();
        for (row, &(col, piv)) in self.rows.iter().zip(&self.pivots) {
            if w[..col].iter().any(|&c| c != 0) {
                return Ok(false);
            }
            let pv = p.pow(piv);
            if !w[col].is_multiple_of(pv) {
                return Ok(false);
            }
            let factor = w[col] / pv;
            if factor != 0 {
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = (*x + neg_mod(mul_mod(factor, y, q), q)) % q;
                }
            }
        }
        Ok(w.iter().all(|&c| c == 0))
    }

    /// Whether every row of `other` lies in this subgroup.
    pub fn contains_all(&self, other: &NormalForm) -> bool {
        other.rows.iter().all(|r| self.contains(r).unwrap_or(false))
    }
}

/// Howell form over `Z_{p^n}` of the rows in `pool` (relation rows included by the caller).
fn howell(mut pool: Vec<Vec<u64>>, p: u64, n: u32) -> (Vec<Vec<u64>>, Vec<(usize, u32)>) {
    let q = p.pow(n);
    for row in pool.iter_mut() {
        for c in row.iter_mut() {
            *c %= q;
        }
    }
    let mut out: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<(usize, u32)> = Vec::new();
    loop {
        pool.retain(|r| r.iter().any(|&c| c != 0));
        if pool.is_empty() {
            break;
        }
        let lead = |r: &Vec<u64>| r.iter().position(|&c| c != 0).unwrap();
        let col = pool.iter().map(lead).min().unwrap();
        let best = (0..pool.len())
            .filter(|&i| pool[i][col] != 0)
            .min_by_key(|&i| (valuation(pool[i][col], p, n), pool[i][col], i))
            .unwrap();
        let mut piv = pool.swap_remove(best);
        let v = valuation(piv[col], p, n);
        let unit = inv_mod(piv[col] / p.pow(v), q).expect("unit part");
        for c in piv.iter_mut() {
            *c = mul_mod(*c, unit, q);
        }
        let pv = p.pow(v);
        for row in pool.iter_mut() {
            let c = row[col];
            if c == 0 {
                continue;
            }
            let factor = c / pv;
            for (x, &y) in row.iter_mut().zip(&piv) {
                *x = (*x + neg_mod(mul_mod(factor, y, q), q)) % q;
            }
        }
        let annihilated: Vec<u64> = piv.iter().map(|&c| mul_mod(c, p.pow(n - v), q)).collect();
        pool.push(annihilated);
        out.push(piv);
        pivots.push((col, v));
    }
    // pivots were found left to right; reduce entries above each pivot
    for i in 0..out.len() {
        let (col, v) = pivots[i];
        let pv = p.pow(v);
        let piv = out[i].clone();
        for row in out.iter_mut().take(i) {
            let factor = row[col] / pv;
            if factor != 0 {
                for (x, &y) in row.iter_mut().zip(&piv) {
                    *x = (*x + neg_mod(mul_mod(factor, y, q), q)) % q;
                }
            }
        }
    }
    (out, pivots)
}

/// Elements `a` of `ambient` with `Σ_l a_l w_l ≡ 0 (mod p^n)` for every functional `w`.
///
/// Each functional must be well defined on the ambient group, i.e. `p^{e_l} w_l ≡ 0`.
pub fn annihilator(ambient: &Ambient, functionals: &[Vec<u64>]) -> Result<GeneratorStack> {
    let len = ambient.len();
    for w in functionals {
        if w.len() != len {
            return Err(Error::LengthMismatch { expected: len, got: w.len() });
        }
    }
    let q = ambient.modulus();
    for w in functionals {
        for (l, &e) in ambient.orders.iter().enumerate() {
            if mul_mod(ambient.p.pow(e), w[l], q) != 0 {
                return Err(Error::InvariantViolated(format!("functional not defined on coordinate {l}")));
            }
        }
    }
    let f = functionals.len();
    let mut pool = Vec::with_capacity(len + len);
    for l in 0..len {
        let image: Vec<u64> = functionals.iter().map(|w| w[l] % q).collect();
        let mut row = image;
        row.extend((0..len).map(|i| u64::from(i == l)));
        pool.push(row.clone());
        let e = ambient.orders[l];
        if e < ambient.n {
            pool.push(row.iter().map(|&c| mul_mod(c, ambient.p.pow(e), q)).collect());
        }
    }
    let (rows, pivots) = howell(pool, ambient.p, ambient.n);
    let kernel = rows
        .into_iter()
        .zip(pivots)
        .filter(|(_, (col, _))| *col >= f)
        .map(|(row, _)| ambient.reduce(&row[f..]))
        .collect();
    Ok(GeneratorStack { ambient: ambient.clone(), rows: kernel })
}

/// `{a : Σ_{l,m} a_l G_{l,m} c_m ≡ 0 for all c in span(stack)}`.
pub fn solve_orthogonal(gram: &[Vec<u64>], stack: &GeneratorStack) -> Result<GeneratorStack> {
    let ambient = &stack.ambient;
    let len = ambient.len();
    if gram.len() != len || gram.iter().any(|row| row.len() != len) {
        return Err(Error::LengthMismatch { expected: len, got: gram.len() });
    }
    let q = ambient.modulus();
    let functionals: Vec<Vec<u64>> = stack
        .normal_form()
        .rows
        .iter()
        .map(|c| {
            (0..len).map(|l| gram[l].iter().zip(c).fold(0, |acc, (&g, &x)| (acc + mul_mod(g, x, q)) % q)).collect()
        })
        .collect();
    annihilator(ambient, &functionals)
}
