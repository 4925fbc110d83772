//! Checks closed-form duals against exhaustive enumeration.

use chain_codes::eisenstein::EisensteinContext;
use chain_codes::galois::GaloisContext;
use chain_codes::oracle::{cross_check_eisenstein, cross_check_galois};
use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let ring = make_ring(RingParams::new(2, 2, 2, 1, 1, vec![1]))?;
    let ctx = GaloisContext::new(&ring, 5)?;
    let mut spec = ctx.uniform_spec(1);
    spec.e[0][1] = 0;
    println!("GR(4,2), N = 5: {:?}", cross_check_galois(&ctx, &spec)?);

    let ring = make_ring(RingParams::new(3, 2, 1, 2, 1, vec![1, 0]))?;
    let ctx = EisensteinContext::new(&ring, 2)?;
    let mut spec = ctx.empty_spec();
    spec.a[0][1] = 1;
    spec.a[1][0] = 1;
    println!("Z_9[x]/<x^2 + 3, 3x>, N = 2: {:?}", cross_check_eisenstein(&ctx, &spec)?);
    Ok(())
}
