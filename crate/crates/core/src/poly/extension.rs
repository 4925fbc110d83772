//! The extension `R̂ = R[ζ]` containing a primitive `N`-th root of unity `η`,
//! together with the embedding `R → R̂` and the coercion of fixed elements back.

use crate::arith::{checked_pow, gcd, inv_mod, mul_mod, neg_mod};
use crate::error::{Error, Result};
use crate::ring::{ChainRing, Elem, RingParams};

use super::{find_basic_primitive_poly, RingPoly};

/// Which subring a coerced element must land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `S`, the fixed ring of `φ̂`.
    Base,
    /// `R`, the fixed ring of `φ̂^r`.
    Full,
}

#[derive(Clone, Debug)]
pub struct Extension {
    pub n: u64,
    /// Least `s` with `(p^r)^s ≡ 1 (mod N)`.
    pub s: u32,
    pub base: ChainRing,
    pub big: ChainRing,
    pub zeta: Elem,
    pub eta: Elem,
    pub omega_embed: Elem,
    omega_powers: Vec<Elem>,
    down_rows: Vec<usize>,
    down_inverse: Vec<Vec<u64>>,
}

pub fn build_extension(ring: &ChainRing, n: u64) -> Result<Extension> {
    let p = ring.p();
    if n == 0 {
        return Err(Error::ParameterInvalid("N must be positive".into()));
    }
    if gcd(n, p) != 1 {
        return Err(Error::NonCoprime(n, p));
    }
    let r = ring.rank();
    let pr = p.pow(r);
    let mut s = 1u32;
    let mut acc = pr % n;
    while acc != 1 % n {
        acc = mul_mod(acc, pr, n);
        s += 1;
    }
    let rs = r * s;
    let big_order =
        checked_pow(p, rs).ok_or_else(|| Error::TooLarge(format!("p^(rs) = {p}^{rs} exceeds 2^31 for N = {n}")))? - 1;
    let base_params = ring.params().clone();
    let big = if s == 1 {
        ring.clone()
    } else {
        let f = find_basic_primitive_poly(p, ring.n(), rs);
        let params = RingParams { r: rs, f: Some(f), ..base_params.clone() };
        ChainRing::new(params)?
    };
    let zeta = big.omega();
    let eta = big.pow(&zeta, big_order / n);

    let f = ring.omega_poly();
    let omega_embed = if s == 1 {
        zeta.clone()
    } else {
        let step = big_order / (pr - 1);
        let fpoly = RingPoly::from_integers(&big, f);
        (1..pr)
            .filter(|&c| gcd(c, pr - 1) == 1)
            .map(|c| big.pow(&zeta, step * c))
            .find(|cand| fpoly.eval(&big, cand).is_zero())
            .ok_or_else(|| Error::InvariantViolated("no conjugate of ζ is a root of f".into()))?
    };
    let omega_powers: Vec<Elem> = (0..r as u64).map(|i| big.pow(&omega_embed, i)).collect();

    // Columns of ω̂^i in the ζ-coordinates; choose r rows with a minor invertible mod p.
    let q = ring.modulus();
    let big_k = big.k() as usize;
    let column = |i: usize, row: usize| omega_powers[i].coeffs()[row * big_k];
    let mut down_rows = Vec::new();
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    for row in 0..rs as usize {
        let mut vec: Vec<u64> = (0..r as usize).map(|i| column(i, row) % p).collect();
        for (piv, basis) in &echelon {
            let c = vec[*piv];
            if c != 0 {
                for (x, b) in vec.iter_mut().zip(basis) {
                    *x = (*x + neg_mod(mul_mod(c, *b, p), p)) % p;
                }
            }
        }
        if let Some(piv) = vec.iter().position(|&c| c != 0) {
            let inv = inv_mod(vec[piv], p).unwrap();
            let vec = vec.iter().map(|&c| mul_mod(c, inv, p)).collect();
            echelon.push((piv, vec));
            down_rows.push(row);
            if down_rows.len() == r as usize {
                break;
            }
        }
    }
    let minor: Vec<Vec<u64>> = down_rows.iter().map(|&row| (0..r as usize).map(|i| column(i, row)).collect()).collect();
    let down_inverse = invert_matrix(&minor, q)
        .ok_or_else(|| Error::InvariantViolated("powers of the embedded ω are dependent".into()))?;

    Ok(Extension { n, s, base: ring.clone(), big, zeta, eta, omega_embed, omega_powers, down_rows, down_inverse })
}

impl Extension {
    /// Image of `a ∈ R` in `R̂`.
    pub fn embed(&self, a: &Elem) -> Elem {
        let (k, q) = (self.base.k() as usize, self.base.modulus());
        let mut out = vec![0u64; self.big.dim()];
        for (i, wi) in self.omega_powers.iter().enumerate() {
            for j in 0..k {
                let c = a.coeffs()[i * k + j];
                if c == 0 {
                    continue;
                }
                // ω̂^i has only x-free coordinates
                for row in 0..self.big.rank() as usize {
                    let cell = &mut out[row * k + j];
                    *cell = (*cell + mul_mod(c, wi.coeffs()[row * k], q)) % q;
                }
            }
        }
        self.big.from_flat_reducing(out)
    }

    /// Coerces `b ∈ R̂` into `R` (or `S`), verifying Frobenius-fixedness first.
    pub fn coerce(&self, b: &Elem, target: Target) -> Result<Elem> {
        let big = &self.big;
        let r = self.base.rank();
        let fixed = match target {
            Target::Base => big.frobenius(b) == *b,
            Target::Full => big.frobenius_pow(b, r) == *b,
        };
        if !fixed {
            return Err(Error::CoercionFailed(format!("{} is not Frobenius-fixed", big.format(b))));
        }
        let (k, q) = (big.k() as usize, big.modulus());
        let r = r as usize;
        let mut coeffs = vec![0u64; r * k];
        for j in 0..k {
            let rhs: Vec<u64> = self.down_rows.iter().map(|&row| b.coeffs()[row * k + j]).collect();
            for i in 0..r {
                let mut acc = 0;
                for (l, &v) in rhs.iter().enumerate() {
                    acc = (acc + mul_mod(self.down_inverse[i][l], v, q)) % q;
                }
                coeffs[i * k + j] = acc;
            }
        }
        let a = self.base.from_flat_reducing(coeffs);
        if self.embed(&a) != *b {
            return Err(Error::CoercionFailed(format!("{} does not lie in R", big.format(b))));
        }
        if target == Target::Base && !self.base.is_in_base(&a) {
            return Err(Error::CoercionFailed(format!("{} does not lie in S", big.format(b))));
        }
        Ok(a)
    }
}

/// `∏_{j ∈ coset} (X - η^j)` expanded in `R̂[X]` and coerced into `S[X]` or `R[X]`.
pub fn minimal_polynomial(ext: &Extension, coset: &[u64], target: Target) -> Result<RingPoly> {
    let roots: Vec<Elem> = coset.iter().map(|&j| ext.big.pow(&ext.eta, j)).collect();
    let big_poly = RingPoly::from_roots(&ext.big, &roots);
    let coeffs = big_poly.coeffs.iter().map(|c| ext.coerce(c, target)).collect::<Result<Vec<_>>>()?;
    Ok(RingPoly::new(coeffs))
}

/// Inverse of a square matrix over `Z_q` whose determinant is a unit.
fn invert_matrix(m: &[Vec<u64>], q: u64) -> Option<Vec<Vec<u64>>> {
    let size = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..size).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..size {
        let piv = (col..size).find(|&row| inv_mod(a[row][col], q).is_some())?;
        a.swap(col, piv);
        let inv = inv_mod(a[col][col], q).unwrap();
        for x in a[col].iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        for row in 0..size {
            if row != col && a[row][col] != 0 {
                let c = a[row][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[row].iter_mut().zip(&pivot_row) {
                    *x = (*x + neg_mod(mul_mod(c, *y, q), q)) % q;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[size..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::classify_cosets;
    use crate::ring::make_ring;

    fn rank_two_ring() -> ChainRing {
        make_ring(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1])).unwrap()
    }

    #[test]
    fn extension_examples() {
        let ring = rank_two_ring();
        let ext = build_extension(&ring, 3).unwrap();
        assert_eq!(ext.s, 1);
        assert_eq!(ext.zeta, ring.omega());
        assert_eq!(ext.eta, ring.omega());

        let eis = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0])).unwrap();
        let ext = build_extension(&eis, 3).unwrap();
        assert_eq!(ext.s, 2);
        assert_eq!(ext.big.size(), Some(64));
        assert_eq!(ext.big.pow(&ext.eta, 3), ext.big.one());
        assert_ne!(ext.eta, ext.big.one());

        let ext = build_extension(&ring, 1).unwrap();
        assert_eq!((ext.s, ext.eta.clone()), (1, ring.one()));
        assert_eq!(build_extension(&ring, 6).unwrap_err(), Error::NonCoprime(6, 2));
    }

    #[test]
    fn omega_embedding_is_a_root_of_f() {
        let ring = rank_two_ring();
        let ext = build_extension(&ring, 5).unwrap();
        assert_eq!(ext.s, 2);
        let f = RingPoly::from_integers(&ext.big, ring.omega_poly());
        assert!(f.eval(&ext.big, &ext.omega_embed).is_zero());
        let w = ring.omega();
        let x = ring.x();
        let a = ring.add(&ring.mul(&w, &x), &ring.from_int(3));
        assert_eq!(ext.coerce(&ext.embed(&a), Target::Full).unwrap(), a);
        assert!(matches!(ext.coerce(&ext.embed(&a), Target::Base), Err(Error::CoercionFailed(_))));
        assert!(matches!(ext.coerce(&ext.zeta, Target::Full), Err(Error::CoercionFailed(_))));
    }

    #[test]
    fn minimal_polynomial_examples() {
        let ring = rank_two_ring();
        let ext = build_extension(&ring, 3).unwrap();
        let ints = |c: &[u64], t| minimal_polynomial(&ext, c, t).unwrap();
        assert_eq!(ints(&[0], Target::Base).as_integers(), Some(vec![3, 1]));
        assert_eq!(ints(&[1, 2], Target::Base).as_integers(), Some(vec![1, 1, 1]));
        let m10 = ints(&[1], Target::Full);
        assert_eq!(m10.coeffs, vec![ring.scale(&ring.omega(), 3), ring.one()]);
        let m11 = ints(&[2], Target::Full);
        assert_eq!(m11.coeffs, vec![ring.add(&ring.omega(), &ring.one()), ring.one()]);
        assert!(matches!(minimal_polynomial(&ext, &[1], Target::Base), Err(Error::CoercionFailed(_))));
        let cls = classify_cosets(3, 2, 2).unwrap();
        assert_eq!(cls.split[1], vec![vec![1], vec![2]]);
    }
}
