//! Arithmetic in R = Z_4[w][x]/<x^2 + 2, 2x> with w^2 + w + 1 = 0.

use chain_codes::ring::{make_ring, RingParams};

fn main() -> chain_codes::Result<()> {
    let ring = make_ring(RingParams::new(2, 2, 2, 2, 1, vec![1, 0]).with_f(vec![1, 1, 1]))?;
    println!("m = {}, |R| = 2^{}", ring.m(), ring.log_size());

    let (w, x) = (ring.omega(), ring.x());
    let a = ring.add(&ring.from_int(3), &w);
    println!("a = {}", ring.format(&a));
    println!("x^2 = {}", ring.format(&ring.mul(&x, &x)));
    println!("a^-1 = {}", ring.format(&ring.invert(&a)?));
    println!("phi(a) = {}", ring.format(&ring.frobenius(&a)));
    println!("Tr(a) = {}", ring.format(&ring.trace(&a)));

    let b = ring.add(&a, &ring.mul(&w, &x));
    let digits = ring.x_adic_digits(&b);
    let shown: Vec<String> = digits.digits.iter().map(|d| ring.format(d)).collect();
    println!("x-adic digits of {}: [{}]", ring.format(&b), shown.join(", "));
    Ok(())
}
