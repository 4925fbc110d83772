//! An S-linear cyclic code of length 3 and its trace dual.

use chain_codes::galois::{GaloisCodeSpec, GaloisContext};
use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let ring = make_ring(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1]))?;
    let ctx = GaloisContext::new(&ring, 3)?;
    let spec = GaloisCodeSpec { e: vec![vec![0, 2], vec![1, 3]], ..ctx.uniform_spec(0) };
    let code = ctx.build(&spec)?;
    let dual_spec = ctx.dual(&spec)?;
    let dual = ctx.build(&dual_spec)?;
    println!("|C| = 2^{}, |C^perp| = 2^{}", code.log_p_card, dual.log_p_card);
    println!("dual exponents {:?} in the {:?} basis", dual_spec.e, dual_spec.basis);
    println!("minimum weight {:?}", code.min_weight(20)?);
    println!("recovered exponents {:?}", ctx.decompose_to_spec(&code)?.e);
    Ok(())
}
