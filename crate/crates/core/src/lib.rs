//! Discrete Bakry-Émery ∞-curvature of finite, simple, connected, weighted
//! graphs.
//!
//! The curvature at a vertex `x` is the largest `K` with
//! `Γ₂(f)(x) ≥ K·Γ(f)(x)` for every function `f`, where `Γ` and `Γ₂` are
//! built from the normalised weighted Laplacian
//! `Δf(x) = (1/ω(x)) Σ_{v∼x} ω_xv (f(v) − f(x))`.
//!
//! [`engine`] computes it exactly as the least eigenvalue of a small
//! symmetric matrix; [`operators`] evaluates the same quantities from their
//! definitions and provides a numerical upper bound for cross-checking;
//! [`umbrella`] covers the hub-and-rim family `G_{n,ρ}` and its geodesic
//! embeddings in the sphere, the plane and the hyperbolic plane.
//!
//! ```
//! use becalc_core::{bakry_emery_curvature, WeightedGraph};
//!
//! let path = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
//! let k = bakry_emery_curvature(&path, 0).unwrap().curvature;
//! assert!((k - 1.0).abs() < 1e-12);
//! ```

pub mod ball;
pub mod engine;
pub mod error;
pub mod graph;
pub mod io;
pub mod numeric;
pub mod operators;
pub mod umbrella;

pub use ball::{decompose_ball, BallDecomposition, LinearGroup};
pub use engine::{
    assemble_gamma2_form, bakry_emery_curvature, bakry_emery_curvature_with, curvature_all,
    curvature_all_with, curvature_matrix, eliminate_sphere2, CurvatureResult, ExpandedForm,
    QuadraticForm,
};
pub use error::{Error, Result};
pub use graph::{Edge, WeightedGraph};
pub use io::{format_f64, parse_graph, to_edge_list, to_json, GraphFormat};
pub use numeric::{
    bisect_root, eigen_symmetric, Eigen, SymmetricMatrix, Tolerances, TOLERANCE_ENV,
};
pub use operators::{
    gamma, gamma2_bilinear, gamma2_direct, laplacian, rayleigh_oracle, VertexFunction,
};
pub use umbrella::{
    classify_embedding, classify_embedding_with, closed_form_spectrum, closed_form_values,
    hub_curvature, make_umbrella, rho_euclidean, rho_hyperbolic, rho_spherical, sweep, sweep_with,
    table1, table1_with, EmbeddingInfo, EmbeddingKind, SpectrumBranch, SweepRow, TableRow,
    UmbrellaSpec, HUB,
};
