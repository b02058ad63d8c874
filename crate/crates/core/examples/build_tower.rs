//! Build GF(2) ⊆ GF(4) ⊆ GF(4^3) and exercise the top field.

use qcyclic::gf::{FieldTower, Level};

fn main() -> qcyclic::Result<()> {
    let tower = FieldTower::build(2, 2, 3)?;
    println!("base  {}", tower.base_poly());
    println!("ext   {}", tower.ext_poly());
    println!("|GF(q^n)| = {:?}", tower.level_order(Level::Top));

    let x = tower.gen();
    let y = tower.add(&x, &tower.one());
    let prod = tower.mul(&x, &y);
    println!("x * (x + 1) = {prod}");
    println!("inverse of x = {}", tower.inv(&x)?);

    // Frobenius: x^q, orbit of size n
    for (j, c) in tower.conjugates(&x).iter().enumerate() {
        println!("x^(q^{j}) = {c}");
    }

    let gamma = tower.primitive_element()?;
    let target = tower.pow(&gamma, 17);
    println!("primitive {gamma}, log(gamma^17) = {}", tower.discrete_log(&gamma, &target)?);
    Ok(())
}
