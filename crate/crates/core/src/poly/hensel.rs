use crate::error::{Error, Result};

use super::ModPolyRing;

/// Lifts a coprime factorization of `h mod p` to monic factors over `Z_{p^n}`.
///
/// Each factor is peeled off against its cofactor and lifted one power of `p`
/// at a time with a fixed Bézout pair modulo `p`.
pub fn hensel_lift(h: &[u64], factors_modp: &[Vec<u64>], p: u64, n: u32) -> Result<Vec<Vec<u64>>> {
    let q = p.pow(n);
    let zq = ModPolyRing::new(q);
    let fp = ModPolyRing::new(p);
    let h = zq.trim(h.to_vec());
    let factors: Vec<Vec<u64>> = factors_modp.iter().map(|f| fp.make_monic(&fp.trim(f.clone()))).collect();
    let product = factors.iter().fold(vec![1u64], |acc, f| fp.mul(&acc, f));
    if product != fp.trim(h.clone()) {
        return Err(Error::ProductMismatch);
    }
    for (i, a) in factors.iter().enumerate() {
        for b in &factors[i + 1..] {
            if fp.gcd(a, b) != vec![1] {
                return Err(Error::NotCoprime);
            }
        }
    }

    let mut rest = h;
    let mut out = Vec::with_capacity(factors.len());
    for (i, g0) in factors.iter().enumerate() {
        if i + 1 == factors.len() {
            out.push(rest.clone());
            break;
        }
        let k0 = factors[i + 1..].iter().fold(vec![1u64], |acc, f| fp.mul(&acc, f));
        let (g, k) = lift_pair(&rest, g0, &k0, p, n);
        out.push(g);
        rest = k;
    }
    Ok(out)
}

/// Given `h ≡ g0 k0 (mod p)` with `g0, k0` coprime and monic, returns monic `(g, k)` with `h = g k` over `Z_{p^n}`.
fn lift_pair(h: &[u64], g0: &[u64], k0: &[u64], p: u64, n: u32) -> (Vec<u64>, Vec<u64>) {
    let fp = ModPolyRing::new(p);
    let (_, _, t) = fp.xgcd(g0, k0);
    let mut g = g0.to_vec();
    let mut k = k0.to_vec();
    let mut pe = 1u64;
    for _ in 1..n {
        pe *= p;
        let zq = ModPolyRing::new(pe * p);
        let diff = zq.sub(h, &zq.mul(&g, &k));
        debug_assert!(diff.iter().all(|&c| c % pe == 0));
        let d: Vec<u64> = fp.trim(diff.iter().map(|&c| c / pe).collect());
        // d = G k + K g with deg G < deg g
        let big_g = fp.rem(&fp.mul(&d, &t), g0);
        let (big_k, rem) = fp.divrem(&fp.sub(&d, &fp.mul(&big_g, k0)), g0).unwrap();
        debug_assert!(rem.is_empty());
        g = zq.add(&g, &zq.scale(&big_g, pe));
        k = zq.add(&k, &zq.scale(&big_k, pe));
    }
    let q = p.pow(n);
    let zq = ModPolyRing::new(q);
    (zq.trim(g), zq.trim(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hensel_examples() {
        // X^3 - 1 over Z_4 from (X+1)(X^2+X+1) mod 2
        let lifted = hensel_lift(&[3, 0, 0, 1], &[vec![1, 1], vec![1, 1, 1]], 2, 2).unwrap();
        assert_eq!(lifted, vec![vec![3, 1], vec![1, 1, 1]]);
        // single irreducible factor
        assert_eq!(hensel_lift(&[1, 1, 1], &[vec![1, 1, 1]], 2, 2).unwrap(), vec![vec![1, 1, 1]]);
        // X^7 - 1 over Z_4
        let h = [3, 0, 0, 0, 0, 0, 0, 1];
        let lifted = hensel_lift(&h, &[vec![1, 1], vec![1, 1, 0, 1], vec![1, 0, 1, 1]], 2, 2).unwrap();
        let z4 = ModPolyRing::new(4);
        let prod = lifted.iter().fold(vec![1u64], |acc, f| z4.mul(&acc, f));
        assert_eq!(prod, h.to_vec());
        assert!(lifted.iter().all(|f| f.last() == Some(&1)));
    }

    #[test]
    fn hensel_errors() {
        assert_eq!(hensel_lift(&[3, 0, 1], &[vec![1, 1], vec![1, 1]], 2, 2), Err(Error::NotCoprime));
        assert_eq!(hensel_lift(&[3, 0, 0, 1], &[vec![1, 1], vec![0, 1, 1]], 2, 2), Err(Error::ProductMismatch));
    }
}
