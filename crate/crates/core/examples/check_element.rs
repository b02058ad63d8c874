//! Codes defined by a check element λ and the dimension bounds on them.

use qcyclic::bridges::{b_lambda_matrix, code_from_lambda, coset_dimension_bound, CheckElement};
use qcyclic::cyclic::CyclicCode;
use qcyclic::gf::FieldTower;
use qcyclic::normal::NormalBasis;

fn main() -> qcyclic::Result<()> {
    let tower = FieldTower::build(2, 1, 4)?;
    let basis = NormalBasis::find(&tower);
    let gamma = tower.primitive_element()?;
    for s in 0..15 {
        let lam = CheckElement::from_power(&tower, &gamma, s)?;
        let code = code_from_lambda(&lam);
        let b = b_lambda_matrix(&lam, &basis);
        let bound = coset_dimension_bound(&lam, &gamma)?;
        let cyclic = CyclicCode::from_words(tower.base(), 4, code.basis())?;
        println!(
            "λ = γ^{s:<2}  dim {}  n - rank(B) = {}  bound {}  g = {}",
            code.dimension(),
            4 - b.rank(),
            bound,
            cyclic.generator()
        );
    }
    Ok(())
}
