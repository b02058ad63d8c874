//! Normal elements of GF(2^4) over GF(2) and coordinates in their basis.

use qcyclic::gf::FieldTower;
use qcyclic::normal::NormalBasis;
use qcyclic::poly::format_vector;

fn main() -> qcyclic::Result<()> {
    let tower = FieldTower::build(2, 1, 4)?;
    let normals: Vec<_> = NormalBasis::all(&tower).map(|b| b.alpha().to_text()).collect();
    println!("{} normal elements: {}", normals.len(), normals.join(" | "));

    let basis = NormalBasis::find(&tower);
    println!("alpha = {}", basis.alpha());
    print!("{}", basis.basis_matrix().render());

    let y = tower.from_index(11);
    let c = basis.coords(&y);
    let fy = tower.frobenius(&y, 1);
    println!("coords(y)    = {}", format_vector(&c));
    println!("coords(y^q)  = {}", format_vector(&basis.coords(&fy)));
    assert_eq!(basis.from_coords(&c)?, y);
    Ok(())
}
