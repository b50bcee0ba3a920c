//! Face numbers, affine stresses and level sequences of simplicial spheres,
//! all in exact arithmetic.

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod enumeration;
pub mod error;
pub mod graphs;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod s24;
pub mod sequences;
pub mod stress;
pub mod verify;

pub use complex::{MissingFace, SimplicialComplex, Vertex};
pub use error::{Error, Result};
