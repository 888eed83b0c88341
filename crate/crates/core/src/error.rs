use thiserror::Error;

use crate::complex::Vertex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("polynomial is not palindromic with respect to degree {n}")]
    NotPalindromic { n: usize },
    #[error("polynomial of degree {degree} exceeds symmetry degree {n}")]
    DegreeExceeds { degree: usize, n: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("truncated series orders differ ({left} vs {right})")]
    SeriesOrderMismatch { left: usize, right: usize },
    #[error("series divisor has a non-invertible constant term")]
    NotInvertible,

    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("vertex {0} is already present")]
    VertexExists(Vertex),
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<Vertex>),
    #[error("{0:?} is not an edge of the complex")]
    NotAnEdge(Vec<Vertex>),

    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("vertex {0} is not an interior vertex")]
    NotInterior(Vertex),

    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("index {0} is not a double descent")]
    NotDoubleDescent(usize),
    #[error("index {0} is not a double ascent")]
    NotDoubleAscent(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
