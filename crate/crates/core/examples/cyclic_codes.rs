//! Every cyclic code of length 7 over GF(2), with parameters.

use std::sync::Arc;

use qcyclic::cyclic::{cyclotomic_cosets, divisors_of_xn_minus_1, factor_xn_minus_1, CyclicCode, DEFAULT_CAP};
use qcyclic::gf::BaseField;

fn main() -> qcyclic::Result<()> {
    let field = Arc::new(BaseField::prime(2)?);
    let n = 7;
    for (f, e) in factor_xn_minus_1(&field, n) {
        println!("factor ({f})^{e}");
    }
    println!("cosets mod 7: {:?}", cyclotomic_cosets(7, 2));
    for g in divisors_of_xn_minus_1(&field, n) {
        let code = CyclicCode::from_generator(&field, g, n)?;
        let report = code.report(DEFAULT_CAP);
        println!("{:<10} g = {}", report.label(), code.generator());
    }

    let repeated: Vec<_> = factor_xn_minus_1(&field, 4).iter().map(|(f, e)| format!("({f})^{e}")).collect();
    println!("repeated roots: x^4 - 1 = {}", repeated.join(" "));
    Ok(())
}
