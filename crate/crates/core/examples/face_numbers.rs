//! f, h, g and γ vectors of a few catalog spheres, with McMullen residuals.

use gspheres::catalog;
use gspheres::enumeration::{self, InvariantVectors};

fn main() -> gspheres::Result<()> {
    for name in ["bd-simplex-4", "cross-4", "cycle-6", "K(2,5)", "S0*C4*C5"] {
        let s = catalog::by_name(name)?;
        let inv = InvariantVectors::of(&s.complex)?;
        println!("{name}");
        println!("  f = {:?}", inv.f);
        println!("  h = {:?}", inv.h);
        println!("  g = {:?}", inv.g);
        println!("  gamma = {:?}", inv.gamma);
        println!(
            "  missing faces by dimension = {:?}",
            s.complex.missing_face_counts()
        );
        println!(
            "  u = {:?}, u~ = {:?}",
            enumeration::u_parameter(&s.complex),
            enumeration::u_tilde(&s.complex)
        );
        let residuals = (1..=(s.complex.rank().max(1) - 1) / 2)
            .map(|k| enumeration::mcmullen_residual(&s.complex, k))
            .collect::<gspheres::Result<Vec<_>>>()?;
        println!("  McMullen residuals = {residuals:?}");
    }
    Ok(())
}
