//! Self-contained numerical kernels.

mod eigen;
mod roots;
mod tolerances;

pub use eigen::{eigen_symmetric, Eigen, SymmetricMatrix};
pub use roots::bisect_root;
pub use tolerances::{Tolerances, TOLERANCE_ENV};
