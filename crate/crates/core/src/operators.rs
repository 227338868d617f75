//! Weighted Laplacian, carré du champ and iterated carré du champ evaluated
//! directly from their nested definitions.
//!
//! Nothing here uses the two-ball expansion of the curvature engine, so these
//! functions serve as an independent check on it.

use std::collections::VecDeque;
use std::ops::{Add, Index, Mul};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// A real-valued function on the vertices of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexFunction(pub Vec<f64>);

impl VertexFunction {
    pub fn new(values: Vec<f64>) -> Self {
        Self(values)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![0.0; n])
    }

    pub fn constant(n: usize, c: f64) -> Self {
        Self(vec![c; n])
    }

    /// Indicator of vertex `v`.
    pub fn indicator(n: usize, v: usize) -> Self {
        let mut f = Self::zeros(n);
        f.0[v] = 1.0;
        f
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }
}

impl Index<usize> for VertexFunction {
    type Output = f64;

    fn index(&self, v: usize) -> &f64 {
        &self.0[v]
    }
}

impl Add for &VertexFunction {
    type Output = VertexFunction;

    fn add(self, rhs: &VertexFunction) -> VertexFunction {
        VertexFunction(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Mul<&VertexFunction> for f64 {
    type Output = VertexFunction;

    fn mul(self, rhs: &VertexFunction) -> VertexFunction {
        VertexFunction(rhs.0.iter().map(|a| self * a).collect())
    }
}

fn check_len(g: &WeightedGraph, f: &VertexFunction) {
    assert_eq!(
        f.len(),
        g.num_vertices(),
        "vertex function length does not match the graph"
    );
}

/// `Δf(x) = (1/ω(x)) Σ_{v∼x} ω_xv (f(v) − f(x))`.
///
/// # Panics
///
/// If `f` is not sized to `g` or `x` is out of range.
pub fn laplacian(g: &WeightedGraph, f: &VertexFunction, x: usize) -> f64 {
    check_len(g, f);
    let sum: f64 = g.neighbors(x).iter().map(|&(v, w)| w * (f[v] - f[x])).sum();
    sum / g.vertex_weight(x)
}

/// `Γ(f, h)(x) = (1/(2ω(x))) Σ_{v∼x} ω_xv (f(v) − f(x))(h(v) − h(x))`.
pub fn gamma(g: &WeightedGraph, f: &VertexFunction, h: &VertexFunction, x: usize) -> f64 {
    check_len(g, f);
    check_len(g, h);
    let sum: f64 = g
        .neighbors(x)
        .iter()
        .map(|&(v, w)| w * (f[v] - f[x]) * (h[v] - h[x]))
        .sum();
    sum / (2.0 * g.vertex_weight(x))
}

/// `Γ₂(f, h)(x) = ½ [ΔΓ(f, h)(x) − Γ(f, Δh)(x) − Γ(h, Δf)(x)]`.
///
/// Only the values of `Γ(f, h)`, `Δf` and `Δh` on the closed neighbourhood of
/// `x` are needed, so those are the only ones computed.
pub fn gamma2_bilinear(g: &WeightedGraph, f: &VertexFunction, h: &VertexFunction, x: usize) -> f64 {
    let nbrs = g.neighbors(x);
    let wx = g.vertex_weight(x);

    let gamma_x = gamma(g, f, h, x);
    let delta_gamma: f64 = nbrs
        .iter()
        .map(|&(v, w)| w * (gamma(g, f, h, v) - gamma_x))
        .sum::<f64>()
        / wx;

    let lap_f_x = laplacian(g, f, x);
    let lap_h_x = laplacian(g, h, x);
    let mut cross = 0.0;
    for &(v, w) in nbrs {
        let lap_f_v = laplacian(g, f, v);
        let lap_h_v = laplacian(g, h, v);
        cross += w * (f[v] - f[x]) * (lap_h_v - lap_h_x);
        cross += w * (h[v] - h[x]) * (lap_f_v - lap_f_x);
    }
    // cross holds 2ω(x)·[Γ(f, Δh) + Γ(h, Δf)]
    0.5 * (delta_gamma - cross / (2.0 * wx))
}

/// `Γ₂(f)(x) = ½ [ΔΓ(f)(x) − 2Γ(f, Δf)(x)]`.
pub fn gamma2_direct(g: &WeightedGraph, f: &VertexFunction, x: usize) -> f64 {
    gamma2_bilinear(g, f, f, x)
}

/// Vertices at combinatorial distance 1 or 2 from `x`, ascending, by BFS.
fn punctured_two_ball(g: &WeightedGraph, x: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.num_vertices()];
    dist[x] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(y) = queue.pop_front() {
        if dist[y] == 2 {
            continue;
        }
        for &(v, _) in g.neighbors(y) {
            if dist[v] == usize::MAX {
                dist[v] = dist[y] + 1;
                queue.push_back(v);
            }
        }
    }
    (0..g.num_vertices())
        .filter(|&v| dist[v] == 1 || dist[v] == 2)
        .collect()
}

/// Ratio of two quadratic forms `fᵀAf / fᵀBf` with `A`, `B` dense row-major.
struct RatioProblem {
    dim: usize,
    a: Vec<f64>,
    b: Vec<f64>,
}

/// Descent stops once a sweep improves the ratio by less than this, relatively.
const DESCENT_REL_TOL: f64 = 1e-12;
const DESCENT_MAX_SWEEPS: usize = 10_000;

impl RatioProblem {
    fn mat_vec(&self, m: &[f64], f: &[f64]) -> Vec<f64> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| m[i * self.dim + j] * f[j]).sum())
            .collect()
    }

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    /// Best step `t` along coordinate `i`, given
    /// `r(t) = (a + 2bt + ct²) / (p + 2qt + st²)`; `None` if no step helps.
    fn line_search(a: f64, b: f64, c: f64, p: f64, q: f64, s: f64) -> Option<f64> {
        let ratio = |t: f64| {
            let den = p + 2.0 * q * t + s * t * t;
            if den > 0.0 {
                (a + 2.0 * b * t + c * t * t) / den
            } else {
                f64::INFINITY
            }
        };
        // r'(t) = 0  ⇔  (cq − bs)t² + (cp − as)t + (bp − aq) = 0
        let qa = c * q - b * s;
        let qb = c * p - a * s;
        let qc = b * p - a * q;
        let mut roots = Vec::with_capacity(2);
        if qa == 0.0 {
            if qb != 0.0 {
                roots.push(-qc / qb);
            }
        } else {
            let disc = qb * qb - 4.0 * qa * qc;
            if disc >= 0.0 {
                let sq = disc.sqrt();
                let k = -0.5 * (qb + qb.signum() * sq);
                if k != 0.0 {
                    roots.push(k / qa);
                    roots.push(qc / k);
                } else {
                    roots.push(0.0);
                }
            }
        }
        let base = ratio(0.0);
        roots
            .into_iter()
            .filter(|t| t.is_finite())
            .map(|t| (ratio(t), t))
            .filter(|(r, _)| *r < base)
            .min_by(|x, y| x.0.total_cmp(&y.0))
            .map(|(_, t)| t)
    }

    /// Cyclic coordinate descent with exact line search from `f`.
    fn descend(&self, mut f: Vec<f64>) -> f64 {
        let n = self.dim;
        let mut best = f64::INFINITY;
        for _ in 0..DESCENT_MAX_SWEEPS {
            let mut af = self.mat_vec(&self.a, &f);
            let mut bf = self.mat_vec(&self.b, &f);
            let mut num = Self::dot(&f, &af);
            let mut den = Self::dot(&f, &bf);
            for i in 0..n {
                let (c, s) = (self.a[i * n + i], self.b[i * n + i]);
                let Some(t) = Self::line_search(num, af[i], c, den, bf[i], s) else {
                    continue;
                };
                num += 2.0 * t * af[i] + t * t * c;
                den += 2.0 * t * bf[i] + t * t * s;
                f[i] += t;
                for k in 0..n {
                    af[k] += t * self.a[k * n + i];
                    bf[k] += t * self.b[k * n + i];
                }
            }
            let scale = 1.0 / den.sqrt();
            f.iter_mut().for_each(|v| *v *= scale);
            let current = num / den;
            let improvement = best - current;
            best = best.min(current);
            if improvement.is_finite() && improvement <= DESCENT_REL_TOL * current.abs().max(1e-300)
            {
                break;
            }
        }
        best
    }
}

/// Numerical upper bound on the curvature at `x`: the smallest ratio
/// `Γ₂(f)(x) / Γ(f)(x)` found by `trials` random restarts of coordinate
/// descent over functions on the two-ball with `f(x) = 0`.
///
/// Both quadratic forms are sampled from [`gamma2_bilinear`] and [`gamma`] on
/// indicator functions, so the result does not depend on the curvature
/// engine. Trial `k` draws from stream `k` of a ChaCha generator seeded with
/// `seed`; trials run in parallel and are reduced by `(value, trial index)`.
pub fn rayleigh_oracle(g: &WeightedGraph, x: usize, trials: usize, seed: u64) -> Result<f64> {
    g.check_vertex(x)?;
    if g.degree(x) == 0 {
        return Err(Error::DegenerateVertex(x));
    }
    let trials = trials.max(1);
    let vars = punctured_two_ball(g, x);
    let dim = vars.len();
    let n = g.num_vertices();
    let basis: Vec<VertexFunction> = vars
        .iter()
        .map(|&v| VertexFunction::indicator(n, v))
        .collect();
    let mut a = vec![0.0; dim * dim];
    let mut b = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in i..dim {
            let aij = gamma2_bilinear(g, &basis[i], &basis[j], x);
            let bij = gamma(g, &basis[i], &basis[j], x);
            a[i * dim + j] = aij;
            a[j * dim + i] = aij;
            b[i * dim + j] = bij;
            b[j * dim + i] = bij;
        }
    }
    let problem = RatioProblem { dim, a, b };
    let neighbors: Vec<usize> = (0..dim).filter(|&i| problem.b[i * dim + i] > 0.0).collect();

    let (best, _) = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let mut f: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..1.0)).collect();
            // keep Γ(f)(x) away from zero
            let k = neighbors[rng.random_range(0..neighbors.len())];
            f[k] += if f[k] >= 0.0 { 1.0 } else { -1.0 };
            (problem.descend(f), trial)
        })
        .reduce(
            || (f64::INFINITY, usize::MAX),
            |l, r| match l.0.total_cmp(&r.0) {
                std::cmp::Ordering::Less => l,
                std::cmp::Ordering::Greater => r,
                std::cmp::Ordering::Equal => {
                    if l.1 <= r.1 {
                        l
                    } else {
                        r
                    }
                }
            },
        );
    Ok(best)
}
