use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exponent overflow: exponents are limited to 2^31 - 1")]
    ExponentOverflow,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("{what} is limited to {cap} vertices, got {n}")]
    SizeCap { what: &'static str, n: usize, cap: usize },

    #[error("method `{method}` is not applicable: {reason}")]
    MethodMismatch { method: &'static str, reason: String },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph has no edges")]
    Edgeless,

    #[error("graph has no leaf edge")]
    NoLeafEdge,

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("the unit ideal is not allowed here")]
    UnitIdeal,

    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("the void complex is not allowed here")]
    VoidComplex,

    #[error("lcm lattice exceeds {cap} elements; reduce s or the number of variables")]
    LatticeCap { cap: usize },

    #[error("isolated vertex {0} of the witness has no neighbour outside it, bouquets are undefined")]
    UncoverableVertex(usize),

    #[error("time budget exhausted")]
    Timeout,

    #[error("parse error: {0}")]
    Parse(String),
}
