//! Umbrella graphs `G_{n,ρ}`: a hub joined by unit spokes to an `n`-cycle
//! whose edges have weight `ρ`.
//!
//! The graph embeds geodesically in the Euclidean plane when `ρ` equals the
//! chord `ρ⁰ = √(2 − 2cos(2π/n))`, on a sphere of radius `R` when `ρ < ρ⁰`
//! and in a hyperbolic plane of curvature `−1/s_h²` when `ρ⁰ < ρ < 2`. The
//! radius and scale come from the spherical and hyperbolic laws of cosines
//! for the isosceles triangle (spoke, spoke, rim edge) with apex `2π/n`:
//!
//! ```text
//! cos(ρ/R)    = cos²(1/R)    + sin²(1/R)  · cos(2π/n)
//! cosh(ρ/s_h) = cosh²(1/s_h) − sinh²(1/s_h)· cos(2π/n)
//! ```
//!
//! Both are evaluated in the equivalent half-angle form
//! `sin(ρ/2R) = sin(1/R)·sin(π/n)` and `sinh(ρ/2s_h) = sinh(1/s_h)·sin(π/n)`,
//! which stays accurate for very large radii.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::bakry_emery_curvature_with;
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::numeric::{bisect_root, Tolerances};

/// Hub vertex index of every generated umbrella.
pub const HUB: usize = 0;

/// Bisection bracket for the sphere radius. The lower end is just above
/// `1/π`, where the whole rim collapses onto the antipode of the hub.
const RADIUS_BRACKET: (f64, f64) = ((1.0 + 1e-9) / PI, 1e6);
const HYPERBOLIC_BRACKET: (f64, f64) = (1e-6, 1e6);

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UmbrellaSpec {
    pub n: usize,
    pub rho: f64,
}

impl UmbrellaSpec {
    pub fn new(n: usize, rho: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidUmbrella(format!(
                "rim size n = {n} must be at least 3"
            )));
        }
        if !(rho.is_finite() && rho > 0.0) {
            return Err(Error::InvalidUmbrella(format!(
                "rim weight rho = {rho} must be positive and finite"
            )));
        }
        Ok(Self { n, rho })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingKind {
    Euclidean,
    Spherical,
    Hyperbolic,
    None,
}

impl EmbeddingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Euclidean => "euclidean",
            Self::Spherical => "spherical",
            Self::Hyperbolic => "hyperbolic",
            Self::None => "none",
        }
    }
}

impl std::fmt::Display for EmbeddingKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingInfo {
    pub kind: EmbeddingKind,
    /// Sphere radius `R` (spherical) or hyperbolic scale `s_h` (hyperbolic).
    pub scale: Option<f64>,
    /// Why no embedding was found, when `kind` is `None`.
    pub diagnostic: Option<String>,
}

/// Builds `G_{n,ρ}`: hub `0`, rim `1..=n`, spokes of weight 1, rim edges `ρ`.
pub fn make_umbrella(spec: &UmbrellaSpec) -> Result<WeightedGraph> {
    let n = spec.n;
    let mut edges = Vec::with_capacity(2 * n);
    for i in 1..=n {
        edges.push((HUB, i, 1.0));
    }
    for i in 1..=n {
        edges.push((i, i % n + 1, spec.rho));
    }
    WeightedGraph::new(n + 1, &edges)
}

fn check_rim(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::InvalidUmbrella(format!(
            "rim size n = {n} must be at least 3"
        )))
    } else {
        Ok(())
    }
}

/// `ρ⁰ = √(2 − 2cos(2π/n))`, the chord for a Euclidean embedding.
pub fn rho_euclidean(n: usize) -> f64 {
    (2.0 - 2.0 * (2.0 * PI / n as f64).cos()).sqrt()
}

/// Rim length for a sphere of radius `R`.
pub fn rho_spherical(n: usize, radius: f64) -> Result<f64> {
    check_rim(n)?;
    let angle = 1.0 / radius;
    if !(radius.is_finite() && angle > 0.0 && angle < PI) {
        return Err(Error::Domain(format!(
            "sphere radius {radius} must satisfy 0 < 1/R < π"
        )));
    }
    let half = (angle.sin() * (PI / n as f64).sin())
        .clamp(-1.0, 1.0)
        .asin();
    Ok(2.0 * radius * half)
}

/// `asinh(k · sinh t)` without overflow for large `t`.
fn asinh_scaled_sinh(k: f64, t: f64) -> f64 {
    if t < 30.0 {
        (k * t.sinh()).asinh()
    } else {
        // sinh t = e^t (1 − e^{−2t}) / 2 and asinh y = ln 2y + O(y^{-2})
        let log_y = t + k.ln() - std::f64::consts::LN_2;
        if log_y > 30.0 {
            log_y + std::f64::consts::LN_2
        } else {
            log_y.exp().asinh()
        }
    }
}

/// Rim length for a hyperbolic plane of curvature `−1/s_h²`.
pub fn rho_hyperbolic(n: usize, scale: f64) -> Result<f64> {
    check_rim(n)?;
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::Domain(format!(
            "hyperbolic scale {scale} must be positive"
        )));
    }
    Ok(2.0 * scale * asinh_scaled_sinh((PI / n as f64).sin(), 1.0 / scale))
}

pub fn classify_embedding(spec: &UmbrellaSpec) -> EmbeddingInfo {
    classify_embedding_with(spec, &Tolerances::default())
}

/// Decides which constant-curvature surface `G_{n,ρ}` embeds into and solves
/// for its radius or scale by bisection.
pub fn classify_embedding_with(spec: &UmbrellaSpec, tol: &Tolerances) -> EmbeddingInfo {
    let none = |diagnostic: String| EmbeddingInfo {
        kind: EmbeddingKind::None,
        scale: None,
        diagnostic: Some(diagnostic),
    };
    let (n, rho) = (spec.n, spec.rho);
    let flat = rho_euclidean(n);
    if (rho - flat).abs() <= tol.euclidean_tol {
        return EmbeddingInfo {
            kind: EmbeddingKind::Euclidean,
            scale: None,
            diagnostic: None,
        };
    }
    if rho >= 2.0 {
        return none(format!("rho = {rho} is not shorter than two unit spokes"));
    }
    let (kind, solved) = if rho < flat {
        let (lo, hi) = RADIUS_BRACKET;
        let residual = |r: f64| rho_spherical(n, r).map_or(f64::NAN, |v| v - rho);
        (
            EmbeddingKind::Spherical,
            bisect_root(residual, lo, hi, tol.bisect_tol, tol.bisect_max_iter),
        )
    } else {
        let (lo, hi) = HYPERBOLIC_BRACKET;
        let residual = |s: f64| rho_hyperbolic(n, s).map_or(f64::NAN, |v| v - rho);
        (
            EmbeddingKind::Hyperbolic,
            bisect_root(residual, lo, hi, tol.bisect_tol, tol.bisect_max_iter),
        )
    };
    match solved {
        Ok(scale) => EmbeddingInfo {
            kind,
            scale: Some(scale),
            diagnostic: None,
        },
        Err(err) => none(format!("no {kind} scale found: {err}")),
    }
}

/// One eigenvalue branch of the hub curvature matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumBranch {
    pub label: &'static str,
    pub value: f64,
    pub multiplicity: usize,
}

/// Known rational eigenvalue curves of the hub curvature matrix for
/// `n ∈ {3, 4, 5, 6}`, in the labelling `λ₁, λ₂, …`.
pub fn closed_form_spectrum(n: usize, rho: f64) -> Result<Vec<SpectrumBranch>> {
    let den = 1.0 + 2.0 * rho;
    let branch = |label, num: f64, multiplicity| SpectrumBranch {
        label,
        value: num / den,
        multiplicity,
    };
    let s5 = 5f64.sqrt();
    let branches = match n {
        3 => vec![
            branch("lambda1", 2.0 + rho, 1),
            branch("lambda2=lambda3", 1.0 + 5.0 * rho, 2),
        ],
        4 => vec![
            branch("lambda1", 2.0 + rho, 1),
            branch("lambda2=lambda3", 1.0 + 3.0 * rho, 2),
            branch("lambda4", 1.0 + 7.0 * rho, 1),
        ],
        5 => vec![
            branch("lambda1", 2.0 + rho, 1),
            branch("lambda2=lambda3", 1.0 + (4.0 - s5) * rho, 2),
            branch("lambda4=lambda5", 1.0 + (4.0 + s5) * rho, 2),
        ],
        6 => vec![
            branch("lambda1", 2.0 + rho, 1),
            branch("lambda2", 1.0 + 7.0 * rho, 1),
            branch("lambda3=lambda4", 1.0 + rho, 2),
            branch("lambda5=lambda6", 1.0 + 5.0 * rho, 2),
        ],
        other => return Err(Error::Unsupported(other)),
    };
    Ok(branches)
}

/// The closed-form eigenvalues with multiplicity, ascending.
pub fn closed_form_values(n: usize, rho: f64) -> Result<Vec<f64>> {
    let mut values: Vec<f64> = closed_form_spectrum(n, rho)?
        .into_iter()
        .flat_map(|b| std::iter::repeat_n(b.value, b.multiplicity))
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// Hub curvature of `G_{n,ρ}`.
pub fn hub_curvature(n: usize, rho: f64, tol: &Tolerances) -> Result<f64> {
    let g = make_umbrella(&UmbrellaSpec::new(n, rho)?)?;
    Ok(bakry_emery_curvature_with(&g, HUB, tol)?.curvature)
}

/// One row of the umbrella table: rim weights for the unit sphere, the plane
/// and the hyperbolic plane of curvature −1, with the hub curvature of each.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub n: usize,
    pub rho_spherical: f64,
    pub k_spherical: f64,
    pub rho_euclidean: f64,
    pub k_euclidean: f64,
    pub rho_hyperbolic: f64,
    pub k_hyperbolic: f64,
}

pub fn table1(rows: &[usize]) -> Result<Vec<TableRow>> {
    table1_with(rows, &Tolerances::default())
}

pub fn table1_with(rows: &[usize], tol: &Tolerances) -> Result<Vec<TableRow>> {
    rows.par_iter()
        .map(|&n| {
            check_rim(n)?;
            let rho_plus = rho_spherical(n, 1.0)?;
            let rho_zero = rho_euclidean(n);
            let rho_minus = rho_hyperbolic(n, 1.0)?;
            Ok(TableRow {
                n,
                rho_spherical: rho_plus,
                k_spherical: hub_curvature(n, rho_plus, tol)?,
                rho_euclidean: rho_zero,
                k_euclidean: hub_curvature(n, rho_zero, tol)?,
                rho_hyperbolic: rho_minus,
                k_hyperbolic: hub_curvature(n, rho_minus, tol)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub rho: f64,
    pub curvature: f64,
    pub kind: EmbeddingKind,
    /// Hub spectrum from the numerical pipeline, ascending.
    pub spectrum: Vec<f64>,
    /// Closed-form spectrum (ascending), for `n ≤ 6`.
    pub closed_form: Option<Vec<f64>>,
}

pub fn sweep(n: usize, rho_min: f64, rho_max: f64, steps: usize) -> Result<Vec<SweepRow>> {
    sweep_with(n, rho_min, rho_max, steps, &Tolerances::default())
}

/// Hub spectrum of `G_{n,ρ}` on a uniform grid of `steps` points spanning
/// `[rho_min, rho_max]`.
pub fn sweep_with(
    n: usize,
    rho_min: f64,
    rho_max: f64,
    steps: usize,
    tol: &Tolerances,
) -> Result<Vec<SweepRow>> {
    check_rim(n)?;
    if !(rho_min > 0.0 && rho_min < rho_max && rho_max.is_finite()) {
        return Err(Error::InvalidUmbrella(format!(
            "sweep range must satisfy 0 < rho_min < rho_max, got [{rho_min}, {rho_max}]"
        )));
    }
    if steps < 2 {
        return Err(Error::InvalidUmbrella(format!(
            "sweep needs at least 2 steps, got {steps}"
        )));
    }
    let step = (rho_max - rho_min) / (steps - 1) as f64;
    (0..steps)
        .into_par_iter()
        .map(|i| {
            let rho = if i == steps - 1 {
                rho_max
            } else {
                rho_min + step * i as f64
            };
            let spec = UmbrellaSpec::new(n, rho)?;
            let g = make_umbrella(&spec)?;
            let result = bakry_emery_curvature_with(&g, HUB, tol)?;
            Ok(SweepRow {
                rho,
                curvature: result.curvature,
                kind: classify_embedding_with(&spec, tol).kind,
                spectrum: result.spectrum,
                closed_form: closed_form_values(n, rho).ok(),
            })
        })
        .collect()
}
