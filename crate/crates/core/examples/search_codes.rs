//! Search circulant q-polynomial codes of length 9 over GF(2) for d ≥ 3.

use qcyclic::cli::{search_codes, Format, RunConfig};
use qcyclic::gf::FieldTower;

fn main() -> qcyclic::Result<()> {
    let cfg = RunConfig {
        cap: 1 << 16,
        dlog_bound: 1 << 24,
        seed: 1,
        format: Format::Text,
    };
    let tower = FieldTower::build(2, 1, 9)?;
    let (hits, visited, _) = search_codes(&cfg, &tower, 3, 10, None)?;
    println!("{visited} q-polynomials scanned");
    for h in hits {
        println!("[{},{},{}]  {}  g = {}", h.n, h.k, h.d, h.ell, h.g);
    }

    // Sampling over GF(3)^10 is reproducible from the seed.
    let tower = FieldTower::build(3, 1, 10)?;
    let (hits, visited, _) = search_codes(&cfg, &tower, 4, 5, Some(200))?;
    println!("{visited} sampled over GF(3)");
    for h in hits {
        println!("[{},{},{}]  g = {}", h.n, h.k, h.d, h.g);
    }
    Ok(())
}
