use thiserror::Error;

/// Errors produced by graph construction, parsing and the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph with {num_vertices} vertices")]
    VertexOutOfRange { vertex: usize, num_vertices: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{i}, {j}}} has non-positive weight {weight}")]
    NonPositiveWeight { i: usize, j: usize, weight: f64 },
    #[error("edge {{{i}, {j}}} has non-finite weight {weight}")]
    NonFiniteWeight { i: usize, j: usize, weight: f64 },
    #[error("graph is disconnected: vertex {unreachable} is not reachable from vertex 0")]
    Disconnected { unreachable: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("function has {got} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("vertex {0} has no neighbours")]
    DegenerateVertex(usize),
    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("matrix data has {got} entries, expected {expected}")]
    BadMatrixShape { expected: usize, got: usize },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
    #[error("root is not bracketed: f({lo}) = {f_lo}, f({hi}) = {f_hi}")]
    NoBracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no closed-form spectrum for n = {0} (supported: 3, 4, 5, 6)")]
    Unsupported(usize),
    #[error("invalid umbrella: {0}")]
    InvalidUmbrella(String),
    #[error("invalid tolerance setting: {0}")]
    InvalidTolerance(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
