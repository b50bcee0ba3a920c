//! Stresses of a base lift to its cone with the predicted support.

use gspheres::catalog;
use gspheres::stress;

fn main() -> gspheres::Result<()> {
    for (name, i) in [("cycle-4", 1), ("cross-3", 1), ("K(2,4)", 2)] {
        let s = catalog::by_name(name)?;
        let r = stress::cone_lift_check(&s.complex, i, 1)?;
        println!(
            "{name} degree {i}: dim base {}, dim cone {}, lifted {:?}, support {:?}, holds = {}",
            r.dim_base,
            r.dim_cone,
            r.lifted,
            r.support_matches,
            r.holds()
        );
    }
    Ok(())
}
