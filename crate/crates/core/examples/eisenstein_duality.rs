//! Characters of Z_4[x]/<x^2 + 2, 2x> and a character dual of length 3.

use chain_codes::eisenstein::{annihilator_subgroup, character_table, eisenstein_dual_code, EisensteinContext};
use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let ring = make_ring(RingParams::new(2, 2, 1, 2, 1, vec![1, 0]))?;
    let (elems, table) = character_table(&ring)?;
    for (a, row) in elems.iter().zip(&table) {
        println!("{:>6}: {row:?}", ring.format(a));
    }
    let dual_of_s = annihilator_subgroup(&ring, &[ring.one()])?;
    println!("dual of S generated by {:?}", dual_of_s.normal_form().basis());

    let ctx = EisensteinContext::new(&ring, 3)?;
    let mut spec = ctx.empty_spec();
    spec.a = vec![vec![1, 1, 0], vec![0, 1, 0]];
    let code = ctx.build(&spec)?;
    let dual = eisenstein_dual_code(&code)?;
    println!("|C| = 2^{}, |C^perp| = 2^{}", code.log_p_card, dual.log_p_card);
    println!("closed indicator matrix {:?}", ctx.normalize_spec(&spec)?.a);
    Ok(())
}
