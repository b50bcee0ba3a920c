use thiserror::Error;

use crate::complex::Vertex;

/// Errors raised by the library.
///
/// Variants are grouped loosely by the module that raises them; the CLI maps
/// them onto exit codes via [`Error::exit_code`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("a complex needs at least one facet")]
    EmptyInput,
    #[error("facets must be nonempty")]
    EmptyFacet,
    #[error("vertex {vertex} appears twice in facet {facet:?}")]
    DuplicateVertex { facet: Vec<Vertex>, vertex: Vertex },
    #[error("{0} vertices exceed the supported maximum of 128")]
    TooManyVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<Vertex>),
    #[error("vertex {0} does not belong to the complex")]
    UnknownVertex(Vertex),
    #[error("the vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("the complex is not pure")]
    NotPure,
    #[error("{u}{v} is not an edge")]
    NotAnEdge { u: Vertex, v: Vertex },
    #[error("edge {edge:?} lies in the missing face {missing_face:?}; lk(uv) != lk(u) ∩ lk(v)")]
    LinkCondition {
        edge: [Vertex; 2],
        missing_face: Vec<Vertex>,
    },
    #[error("vector lengths are inconsistent: {0}")]
    InconsistentLengths(String),
    #[error("h-polynomial is not a combination of t^k(1+t)^(d-2k): remainder {0:?}")]
    GammaRemainder(Vec<i64>),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("class violation: {0}")]
    ClassViolation(String),
    #[error("{vertices} vertices exceed the cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },
    #[error("embedding: {0}")]
    Embedding(String),
    #[error(
        "degenerate embedding: stress dimensions {first:?} and {second:?} disagree between seeds"
    )]
    DegenerateEmbedding {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("linear system of {rows}x{cols} exceeds the size cap")]
    SystemTooLarge { rows: usize, cols: usize },
    #[error("exact kernel computation did not certify after trying all primes")]
    KernelNotCertified,
    #[error("{0:?} does not induce a copy of ∂σ²*∂σ²")]
    NotGamma(Vec<Vertex>),
    #[error("Γ does not separate the complex into two sides ({0} facet classes)")]
    NonSeparating(usize),
    #[error("split refused: side interiors have {0:?} vertices, each side needs at least two")]
    SplitRefused(Vec<usize>),
    #[error("unknown complex name {0:?}")]
    UnknownComplex(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

impl Error {
    /// Exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::DegenerateEmbedding { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
