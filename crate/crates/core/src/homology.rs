//! Reduced homology over the two-element field.

use std::collections::HashMap;

use crate::complex::{positions, size, Mask, SimplicialComplex};

/// Rank of a set of GF(2) row vectors packed into `u64` words.
pub(crate) fn gf2_rank(rows: Vec<Vec<u64>>) -> usize {
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for mut row in rows {
        while let Some(lead) = row
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        {
            match pivots.get(&lead) {
                Some(p) => row.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_{dim}` over Z/2.
pub fn reduced_betti_z2(c: &SimplicialComplex) -> Vec<usize> {
    let faces = c.faces_by_size();
    let top = faces.len();
    // ranks[s] = rank of the boundary map from faces of size s to size s-1
    let mut ranks = vec![0usize; top + 1];
    for s in 1..top {
        let index: HashMap<Mask, usize> = faces[s - 1]
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i))
            .collect();
        let words = faces[s - 1].len().div_ceil(64);
        let rows = faces[s]
            .iter()
            .map(|&f| {
                let mut row = vec![0u64; words];
                for p in positions(f) {
                    let j = index[&(f & !(1u128 << p))];
                    row[j / 64] |= 1 << (j % 64);
                }
                row
            })
            .collect();
        ranks[s] = gf2_rank(rows);
    }
    (0..top)
        .map(|s| faces[s].len() - ranks[s] - ranks[s + 1])
        .collect()
}

/// Every link, including the whole complex, must have the reduced homology
/// of a sphere of dimension `dim - |σ|`. Assumes a pure complex.
pub(crate) fn is_z2_homology_sphere(c: &SimplicialComplex) -> bool {
    let dim = c.dim();
    for layer in c.faces_by_size() {
        for &sigma in layer {
            let expect = dim - size(sigma) as isize;
            let lk = c.link_mask(sigma);
            if lk.dim() != expect {
                return false;
            }
            let betti = reduced_betti_z2(&lk);
            let ok = betti
                .iter()
                .enumerate()
                .all(|(i, &b)| b == usize::from(i as isize - 1 == expect));
            if !ok {
                return false;
            }
        }
    }
    true
}
