//! Lifts the factorisation of X^7 - 1 over F_2 to Z_8.

use chain_codes::poly::{hensel_lift, ModPolyRing};

fn main() -> chain_codes::Result<()> {
    let (p, n) = (2, 3);
    let q = p * p * p;
    let h = [q - 1, 0, 0, 0, 0, 0, 0, 1];
    let mod_p = [vec![1, 1], vec![1, 1, 0, 1], vec![1, 0, 1, 1]];
    let lifted = hensel_lift(&h, &mod_p, p, n)?;
    let zq = ModPolyRing::new(q);
    for f in &lifted {
        println!("{f:?}");
    }
    let product = lifted.iter().fold(vec![1], |acc, f| zq.mul(&acc, f));
    assert_eq!(product, h);
    println!("product = X^7 - 1 over Z_{q}");
    Ok(())
}
