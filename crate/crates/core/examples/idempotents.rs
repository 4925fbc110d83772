//! Primitive idempotents of R[X]/<X^3 - 1> for the rank-two ring over Z_4.

use chain_codes::idempotent::{trace_dual_basis, IdempotentSystem};
use chain_codes::poly::RingPoly;
use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let ring = make_ring(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1]))?;
    let sys = IdempotentSystem::new(&ring, 3)?;
    let show = |c: &Vec<_>| RingPoly::new(c.clone()).format(&ring);
    for (i, e) in sys.eps.iter().enumerate() {
        println!("eps_{i} = {}", show(e));
        for (h, part) in sys.eps_split[i].iter().enumerate() {
            println!("  eps_{{{i},{h}}} = {}", show(part));
        }
    }
    println!("mu permutes components as {:?}", sys.mu_perm);
    let theta: Vec<String> = trace_dual_basis(&ring)?.iter().map(|t| ring.format(t)).collect();
    println!("trace-dual basis: {theta:?}");
    Ok(())
}
