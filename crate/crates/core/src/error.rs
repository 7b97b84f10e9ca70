use thiserror::Error;

use crate::rational::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rational '{input}': {reason}")]
    InvalidRational { input: String, reason: String },

    #[error("beta must satisfy 0 < beta <= 1, got {0}")]
    BetaOutOfRange(Rational),

    #[error("alpha must satisfy 0 < alpha <= 1, got {0}")]
    AlphaOutOfRange(Rational),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("asymmetric adjacency between {u} and {v}")]
    AsymmetricAdjacency { u: usize, v: usize },

    #[error("set must be a proper subset of the vertex set")]
    NotProper,

    #[error("graph on {n} vertices exceeds the exhaustive cap {cap}; raise --cap (or BETAPACK_CAP) to allow larger instances")]
    CapExceeded { n: usize, cap: usize },

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid graph class spec '{input}': {reason}")]
    ClassSpec { input: String, reason: String },
}
