use crate::error::{Error, Result};

/// Environment variable holding comma-separated `key=value` overrides,
/// e.g. `BECALC_TOL="eigen_tol=1e-13,bisect_tol=1e-10"`.
pub const TOLERANCE_ENV: &str = "BECALC_TOL";

/// Numerical tolerances shared by every module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Jacobi stops once the off-diagonal Frobenius norm drops below
    /// `eigen_tol * ‖A‖_F`.
    pub eigen_tol: f64,
    pub max_sweeps: usize,
    /// Allowed asymmetry of assembled matrices, relative to `max |A_ij|`.
    pub symmetry_tol: f64,
    /// Bracket width at which bisection stops.
    pub bisect_tol: f64,
    pub bisect_max_iter: usize,
    /// `|ρ − ρ⁰|` below which an umbrella counts as Euclidean.
    pub euclidean_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            eigen_tol: 1e-14,
            max_sweeps: 100,
            symmetry_tol: 1e-14,
            bisect_tol: 1e-12,
            bisect_max_iter: 200,
            euclidean_tol: 1e-12,
        }
    }
}

impl Tolerances {
    /// Applies `key=value` overrides separated by commas or whitespace.
    ///
    /// Recognised keys: `eigen_tol`, `bisect_tol`, `symmetry_tol`,
    /// `euclidean_tol`, `max_sweeps`, `bisect_max_iter`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
        {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                Error::InvalidTolerance(format!("expected key=value, got `{item}`"))
            })?;
            let float = || -> Result<f64> {
                value
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite() && *v > 0.0)
                    .ok_or_else(|| Error::InvalidTolerance(format!("{key}: bad value `{value}`")))
            };
            let count = || -> Result<usize> {
                value
                    .parse::<usize>()
                    .ok()
                    .filter(|v| *v > 0)
                    .ok_or_else(|| Error::InvalidTolerance(format!("{key}: bad value `{value}`")))
            };
            match key.trim() {
                "eigen_tol" => self.eigen_tol = float()?,
                "bisect_tol" => self.bisect_tol = float()?,
                "symmetry_tol" => self.symmetry_tol = float()?,
                "euclidean_tol" => self.euclidean_tol = float()?,
                "max_sweeps" => self.max_sweeps = count()?,
                "bisect_max_iter" => self.bisect_max_iter = count()?,
                other => return Err(Error::InvalidTolerance(format!("unknown key `{other}`"))),
            }
        }
        Ok(self)
    }

    /// Defaults with overrides from [`TOLERANCE_ENV`], if set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(TOLERANCE_ENV) {
            Ok(spec) => Self::default().with_overrides(&spec),
            Err(_) => Ok(Self::default()),
        }
    }
}
