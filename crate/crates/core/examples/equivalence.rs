//! Walk each divisor of x^4 - 1 over GF(3) through every representation.

use qcyclic::bridges::{ell_from_generator, lambda_from_parity_check, verify_equivalence};
use qcyclic::cyclic::{divisors_of_xn_minus_1, DEFAULT_CAP};
use qcyclic::gf::FieldTower;
use qcyclic::normal::NormalBasis;
use qcyclic::poly::Poly;

fn main() -> qcyclic::Result<()> {
    let tower = FieldTower::build(3, 1, 4)?;
    let basis = NormalBasis::find(&tower);
    for g in divisors_of_xn_minus_1(tower.base(), 4) {
        let report = verify_equivalence(&g, &basis, DEFAULT_CAP)?;
        let ell = ell_from_generator(&tower, &g)?;
        println!("g = {g}  k = {}  ell = {}", report.k, ell.to_text());
        let h = Poly::parse(&report.parity_check, tower.base())?;
        println!("  h = {h}");
        match lambda_from_parity_check(&h, &basis) {
            Ok(l) => println!("  λ = {}", l.lambda()),
            Err(e) => println!("  λ: {e}"),
        }
        for line in report.lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
