//! K(u-k, 2u-1) has a g-vector that is not a level sequence.

use gspheres::catalog::{self, LEVEL_VERTEX_CAP};

fn main() -> gspheres::Result<()> {
    for (u, k) in [(3, 1), (4, 1), (6, 2)] {
        let r = catalog::verify_counterexample_level(u, k, 1, LEVEL_VERTEX_CAP)?;
        println!("{} (u = {u}, k = {k})", r.name);
        println!("  g = {:?}, formula = {:?}", r.g, r.formula);
        for f in &r.level_conditions.failures {
            println!("  fails {:?} at {:?}: {}", f.condition, f.witness, f.detail);
        }
        match &r.socle {
            Some(s) => println!("  socle by degree = {s:?}"),
            None => println!("  socle skipped above {LEVEL_VERTEX_CAP} vertices"),
        }
        println!("  holds = {}", r.holds());
    }
    Ok(())
}
