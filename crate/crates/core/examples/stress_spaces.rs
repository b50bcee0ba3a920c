//! Affine stress dimensions under generic and natural embeddings.

use gspheres::catalog;
use gspheres::enumeration::InvariantVectors;
use gspheres::stress::{self, Embedding};

fn main() -> gspheres::Result<()> {
    let seed = 1;
    for name in ["cycle-5", "cross-3", "K(2,4)", "counterexample-1"] {
        let s = catalog::by_name(name)?;
        let g = InvariantVectors::of(&s.complex)?.g;
        let degrees: Vec<usize> = (0..g.len()).collect();
        let generic = stress::certified_generic_dims(&s.complex, seed, &degrees)?;
        println!("{name}: g = {g:?}, generic dim S_k = {generic:?}");
        if let Some(e) = &s.natural_coords {
            println!(
                "  natural dim S_k for k >= 1 = {:?}",
                stress::stress_dims(&s.complex, e)?
            );
        }
    }

    let s = catalog::cycle(4)?;
    let e = Embedding::generic(&s.complex, seed);
    let b = stress::stress_space(&s.complex, &e, 1)?;
    for w in &b.basis {
        println!(
            "cycle-4 degree-1 stress: {} terms, is stress = {}",
            w.terms.len(),
            w.is_stress(&s.complex, &e)
        );
    }
    Ok(())
}
