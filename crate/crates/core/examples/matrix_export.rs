//! Export a generator matrix over GF(4) and read it back.

use std::sync::Arc;

use qcyclic::cyclic::CyclicCode;
use qcyclic::gf::BaseField;
use qcyclic::linalg::Matrix;
use qcyclic::poly::Poly;

fn main() -> qcyclic::Result<()> {
    let field = Arc::new(BaseField::new(2, 2)?);
    // x + ω divides x^3 - 1 over GF(4)
    let g = Poly::parse("2,1", &field)?;
    let code = CyclicCode::from_generator(&field, g, 3)?;
    let doc = code.generator_matrix().to_doc();
    println!("{doc}");

    let back = Matrix::from_doc(&doc)?;
    assert!(back.row_space_equal(&code.generator_matrix())?);
    println!("round trip: {}x{} rank {}", back.rows(), back.cols(), back.rank());

    match Matrix::from_doc("{\n  \"format\": \"gfq-matrix\",\n  \"p\": 2,\n  oops\n}") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
