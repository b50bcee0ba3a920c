//! A face-supported stress on the explicit polytope whose support misses
//! every degree-u face of a missing-face group.

use gspheres::catalog;

fn main() -> gspheres::Result<()> {
    for m in [1, 2] {
        let r = catalog::verify_counterexample_support(m)?;
        println!("counterexample-{m} (u = {})", r.u);
        println!("  face supported = {}", r.face_supported);
        println!(
            "  {} operator equations hold = {}",
            r.operator_equations, r.operator_equations_hold
        );
        println!(
            "  dim S_u = {:?}, spans = {:?}",
            r.stress_dim, r.spans_stress_space
        );
        println!("  coefficient of y1^m y2^m y3 = {}", r.coefficient);
        println!(
            "  unsupported faces {} of {}",
            r.unsupported_faces, r.candidate_faces
        );
        println!(
            "  derivative span {:?} vs g_(u-1) = {}",
            r.derivative_span, r.g_u_minus_1
        );
        println!("  holds = {}", r.holds());
    }
    Ok(())
}
