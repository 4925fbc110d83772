//! Canonical forms of subgroups of Z_4 + Z_4 + Z_2.

use chain_codes::linalg::{annihilator, Ambient, GeneratorStack};

fn main() -> chain_codes::Result<()> {
    let ambient = Ambient::new(2, 2, vec![2, 2, 1]);
    let a = GeneratorStack::new(ambient.clone(), vec![vec![2, 1, 1], vec![0, 2, 0]])?;
    let b = GeneratorStack::new(ambient.clone(), vec![vec![2, 3, 1]])?;
    let (na, nb) = (a.normal_form(), b.normal_form());
    println!("rows {:?}, pivots {:?}, order 2^{}", na.rows, na.pivots, na.log_order());
    println!("same subgroup: {}", na == nb);

    // elements killed by the functional (1, 1, 2)
    let kernel = annihilator(&ambient, &[vec![1, 1, 2]])?;
    println!("kernel basis {:?}", kernel.normal_form().basis());
    Ok(())
}
