//! M-sequence and level-sequence tests.

use gspheres::sequences::{self, is_m_sequence, level_necessary_conditions};

fn main() {
    println!("4 = {:?} in base 3", sequences::macaulay_expansion(4, 3));
    for seq in [
        vec![1, 3, 6, 7],
        vec![1, 2, 4],
        vec![1, 2, 3, 1],
        vec![1, 3, 3, 1],
    ] {
        let m = is_m_sequence(&seq);
        let l = level_necessary_conditions(&seq);
        println!(
            "{seq:?}: M-sequence = {}, level conditions = {}",
            m.holds, l.holds
        );
        for f in l.failures {
            println!("  {:?} at {:?}: {}", f.condition, f.witness, f.detail);
        }
    }
}
