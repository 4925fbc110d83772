//! Cyclotomic cosets of 7 under 2 and 2^3, and the factors of X^7 - 1 over
//! Z_4[w] with w of order 7.

use chain_codes::idempotent::IdempotentSystem;
use chain_codes::poly::classify_cosets;
use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let cls = classify_cosets(7, 2, 3)?;
    println!("cosets under p:   {:?}", cls.cosets_p);
    println!("cosets under p^r: {:?}", cls.cosets_pr);
    println!("leaders {:?}, u = {}, v = {}", cls.leaders, cls.u, cls.v);

    let ring = make_ring(RingParams::new(2, 2, 3, 1, 1, vec![1]))?;
    let sys = IdempotentSystem::new(&ring, 7)?;
    for (i, m) in sys.m_polys.iter().enumerate() {
        println!("m_{i} = {}", m.format(&ring));
        for (h, part) in sys.m_split[i].iter().enumerate() {
            println!("  m_{{{i},{h}}} = {}", part.format(&ring));
        }
    }
    Ok(())
}
