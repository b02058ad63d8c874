//! A q-polynomial as a GF(q)-linear map and its image in normal coordinates.

use qcyclic::bridges::{image_code_by_definition, image_code_generator_matrix};
use qcyclic::gf::FieldTower;
use qcyclic::normal::NormalBasis;
use qcyclic::poly::format_vector;
use qcyclic::qpoly::QPolynomial;

fn main() -> qcyclic::Result<()> {
    let tower = FieldTower::build(2, 1, 7)?;
    let basis = NormalBasis::find(&tower);
    let ell = QPolynomial::parse(&tower, "qpoly:1,0,0,0,1,0,1")?;

    let y = tower.from_index(42);
    let direct = basis.coords(&ell.evaluate(&y));
    let conv = ell.evaluate_in_coords(&basis.coords(&y))?;
    println!("ell(y) in coords: {} (convolution: {})", format_vector(&direct), format_vector(&conv));
    assert_eq!(direct, conv);

    println!("kernel dimension {}", ell.kernel_dim());
    let image = image_code_by_definition(&ell, &basis, 1 << 10)?;
    let circ = image_code_generator_matrix(&ell);
    println!("image has {} words; circulant rank {}", image.len(), circ.rank());
    println!("image = column space of the circulant: {}", image == circ.transpose().span(1 << 10)?);
    Ok(())
}
