//! Edge contractions, induced Γ copies and the g_2 bound on S(2,4).

use gspheres::catalog;
use gspheres::s24;

fn main() -> gspheres::Result<()> {
    let k = catalog::build_k(2, 5)?.complex;
    let glued = s24::stellar_subdivision(&s24::stellar_subdivision(&k, &[1, 7])?, &[4, 8])?;

    let r = s24::reduce(&glued)?;
    for m in &r.trace {
        println!(
            "contract {:?}: g2 {} -> {}",
            m.edge, m.g2_before, m.g2_after
        );
    }
    println!(
        "reduced to {} vertices, reduced = {}",
        r.result.num_vertices(),
        r.reduced
    );
    for g in &r.induced_gammas {
        println!(
            "induced Γ on {:?}, components {:?}",
            g.subset, g.component_sizes
        );
    }

    let b = s24::verify_theorem_main_s24(&glued)?;
    println!("f0 = {}, g2 = {} >= {}: {}", b.f0, b.g2, b.bound, b.holds);

    if let Some(g) = s24::find_induced_gamma(&glued)?.first() {
        let split = s24::split_along_gamma(&glued, &g.subset)?;
        println!(
            "split g2 {} = {:?} - 2: {}",
            split.g2,
            split.g2_sides,
            split.additivity_holds()
        );
    }
    Ok(())
}
