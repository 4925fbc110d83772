//! Polynomials: over `Z/q`, over chain rings, cyclotomic cosets, Hensel lifting
//! and the splitting extension of `X^N - 1`.

mod cosets;
mod extension;
mod hensel;
mod modpoly;
mod ringpoly;

pub use cosets::{classify_cosets, cyclotomic_cosets, CosetClassification};
pub use extension::{build_extension, minimal_polynomial, Extension, Target};
pub use hensel::hensel_lift;
pub use modpoly::ModPolyRing;
pub(crate) use ringpoly::cyclic_mul;
pub use ringpoly::RingPoly;

use crate::ring::{ChainRing, RingParams};

/// First monic polynomial of degree `d` over `F_p` (lexicographic, constant term
/// varying fastest) that is primitive, lifted to the basic primitive polynomial
/// over `Z_{p^n}` whose roots are the Teichmüller lifts.
pub fn find_basic_primitive_poly(p: u64, n: u32, d: u32) -> Vec<u64> {
    let fp = ModPolyRing::new(p);
    let d = d as usize;
    let mut cand = vec![0u64; d + 1];
    cand[d] = 1;
    let residue = loop {
        if fp.is_primitive(&cand) {
            break cand;
        }
        let mut idx = 0;
        loop {
            cand[idx] += 1;
            if cand[idx] < p {
                break;
            }
            cand[idx] = 0;
            idx += 1;
            assert!(idx < d, "a primitive polynomial of every degree exists");
        }
    };
    if n == 1 {
        return residue;
    }
    teichmuller_lift_poly(p, n, &residue)
}

/// `∏_{i<d} (X - τ^{p^i})` where `τ` is the Teichmüller lift of a root of `residue`.
fn teichmuller_lift_poly(p: u64, n: u32, residue: &[u64]) -> Vec<u64> {
    let d = residue.len() - 1;
    let params = RingParams::new(p, n, d as u32, 1, 1, vec![1]);
    let gr = ChainRing::build(params, residue.to_vec()).expect("Galois ring from an irreducible polynomial");
    let q_res = p.pow(d as u32);
    let mut tau = gr.omega();
    for _ in 1..n {
        tau = gr.pow(&tau, q_res);
    }
    let mut roots = Vec::with_capacity(d);
    let mut cur = tau;
    for _ in 0..d {
        roots.push(cur.clone());
        cur = gr.pow(&cur, p);
    }
    let poly = RingPoly::from_roots(&gr, &roots);
    poly.as_integers().expect("lifted polynomial has integer coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_primitive_examples() {
        assert_eq!(find_basic_primitive_poly(2, 2, 2), vec![1, 1, 1]);
        assert_eq!(find_basic_primitive_poly(2, 2, 1), vec![3, 1]);
        assert_eq!(find_basic_primitive_poly(2, 1, 3), vec![1, 1, 0, 1]);
        assert_eq!(find_basic_primitive_poly(3, 1, 1), vec![1, 1]);
    }

    #[test]
    fn basic_primitive_divides_cyclotomic() {
        for (p, n, d) in [(2, 2, 3), (2, 3, 2), (3, 2, 2), (5, 2, 1), (2, 2, 4), (3, 2, 1)] {
            let f = find_basic_primitive_poly(p, n, d);
            let q = p.pow(n);
            let zq = ModPolyRing::new(q);
            let order = p.pow(d) - 1;
            let mut target = vec![0u64; order as usize + 1];
            target[0] = q - 1;
            target[order as usize] = 1;
            assert!(zq.rem(&target, &f).is_empty(), "f = {f:?}");
            let reduced: Vec<u64> = f.iter().map(|c| c % p).collect();
            assert!(ModPolyRing::new(p).is_primitive(&reduced));
        }
    }
}
