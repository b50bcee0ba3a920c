//! Independence-number lower bounds for g_i.

use gspheres::catalog;
use gspheres::graphs::{self, DEFAULT_ALPHA_CAP};

fn main() -> gspheres::Result<()> {
    for name in ["cross-5", "cross-7", "K(2,5)", "S0*C5*C6"] {
        let s = catalog::by_name(name)?;
        let r = graphs::verify_alpha_inequalities(&s.complex, DEFAULT_ALPHA_CAP)?;
        println!("{name}: alpha = {}", r.alpha);
        for c in r.applied() {
            println!(
                "  {} [i = {}]: {} vs {} -> {:?}",
                c.statement, c.i, c.lhs, c.rhs, c.holds
            );
        }
    }
    Ok(())
}
