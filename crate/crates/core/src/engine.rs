//! Curvature at a vertex through the two-ball expansion of `2Γ₂`.
//!
//! With `f(x) = 0`, `2Γ₂(f)(x)` is a quadratic form in the values of `f` on
//! the first and second spheres around `x`. Each distance-two vertex `u`
//! appears only in its own block of linear terms, so its value can be
//! eliminated by the closed-form minimiser
//!
//! ```text
//! f(u) = 2 Σ c_v f(v) / Σ c_v,   c_v = ω_xv ω_vu / ω(v),
//! ```
//!
//! the sums running over intermediaries `x ∼ v ∼ u`. What remains is a form
//! `fᵀQf` in the neighbours of `x`, and since `Γ(f)(x) = fᵀDf / (2ω(x))` with
//! `D = diag(ω_xv)`, the curvature is the least eigenvalue of
//! `2ω(x) D^{-1/2} Q D^{-1/2}`.

use rayon::prelude::*;

use crate::ball::{decompose_ball, BallDecomposition};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::numeric::{eigen_symmetric, SymmetricMatrix, Tolerances};
use crate::operators::VertexFunction;

/// `2Γ₂(f)(x)` as a quadratic form over sphere-1 then sphere-2 values.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpandedForm {
    pub center: usize,
    /// Vertex of each variable: sphere 1 first, then sphere 2.
    pub variables: Vec<usize>,
    pub num_sphere1: usize,
    /// Represents `2Γ₂`, not `Γ₂`.
    pub matrix: SymmetricMatrix,
}

impl ExpandedForm {
    /// `2Γ₂(f)(x)`, reading `f` at the variables (and assuming `f(x) = 0`).
    pub fn evaluate(&self, f: &VertexFunction) -> f64 {
        let values: Vec<f64> = self.variables.iter().map(|&v| f[v]).collect();
        self.matrix.quadratic_form(&values)
    }
}

/// `Γ₂(f)(x)` after eliminating the second sphere, over sphere-1 values.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    pub center: usize,
    /// Sphere-1 vertices, ascending.
    pub variables: Vec<usize>,
    pub matrix: SymmetricMatrix,
    /// Sphere-2 vertices with their minimising value as a linear combination
    /// of the sphere-1 values (one coefficient per entry of `variables`).
    pub substitution: Vec<(usize, Vec<f64>)>,
}

impl QuadraticForm {
    pub fn evaluate(&self, sphere1_values: &[f64]) -> f64 {
        self.matrix.quadratic_form(sphere1_values)
    }

    /// Full vertex function: `f(x) = 0`, the given sphere-1 values, minimising
    /// sphere-2 values, zero elsewhere.
    pub fn extend(&self, num_vertices: usize, sphere1_values: &[f64]) -> VertexFunction {
        let mut f = VertexFunction::zeros(num_vertices);
        for (&v, &a) in self.variables.iter().zip(sphere1_values) {
            f.0[v] = a;
        }
        for (u, coeffs) in &self.substitution {
            f.0[*u] = coeffs.iter().zip(sphere1_values).map(|(c, a)| c * a).sum();
        }
        f
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvatureResult {
    pub vertex: usize,
    pub curvature: f64,
    /// Eigenvalues of the curvature matrix, ascending.
    pub spectrum: Vec<f64>,
    /// Function on the two-ball attaining `Γ₂/Γ = curvature` at the vertex.
    pub witness: VertexFunction,
}

/// Assembles `2Γ₂(f)(x)` from its triangle, linear and boundary terms.
pub fn assemble_gamma2_form(g: &WeightedGraph, ball: &BallDecomposition) -> ExpandedForm {
    let x = ball.center;
    let d = ball.sphere1.len();
    let variables: Vec<usize> = ball.sphere1.iter().chain(&ball.sphere2).copied().collect();
    let dim = variables.len();
    let mut index = vec![usize::MAX; g.num_vertices()];
    for (k, &v) in variables.iter().enumerate() {
        index[v] = k;
    }
    let wx = g.vertex_weight(x);
    let mut p = vec![0.0; dim * dim];

    // (1/ω(x)) (ω_xv ω_vu / ω(v)) [½(f(u) − f(v))² − f(u)f(v)]
    //   = k [½f(u)² + ½f(v)² − 2f(u)f(v)]
    let triples = ball.triangles.iter().copied().chain(ball.linears());
    for (_, v, u) in triples {
        let k = g.weight(x, v).unwrap() * g.weight(v, u).unwrap() / (g.vertex_weight(v) * wx);
        let (iv, iu) = (index[v], index[u]);
        p[iu * dim + iu] += 0.5 * k;
        p[iv * dim + iv] += 0.5 * k;
        p[iu * dim + iv] -= k;
        p[iv * dim + iu] -= k;
    }

    // (1/(2ω(x))) Σ (ω_xv + ω_xv²/ω(v)) f(v)² + (1/ω(x)²) (Σ ω_xv f(v))²
    for (i, &(v, wv)) in g.neighbors(x).iter().enumerate() {
        p[i * dim + i] += (wv + wv * wv / g.vertex_weight(v)) / (2.0 * wx);
        for (j, &(_, ww)) in g.neighbors(x).iter().enumerate() {
            p[i * dim + j] += wv * ww / (wx * wx);
        }
    }

    // every sphere-2 variable couples only to sphere 1
    for a in d..dim {
        for b in d..dim {
            assert!(
                a == b || p[a * dim + b] == 0.0,
                "sphere-2 variables coupled"
            );
        }
    }

    let matrix = SymmetricMatrix::from_row_major(dim, p, Tolerances::default().symmetry_tol)
        .expect("assembled form is symmetric");
    ExpandedForm {
        center: x,
        variables,
        num_sphere1: d,
        matrix,
    }
}

/// Substitutes the minimising value of every sphere-2 variable and halves
/// the result, giving `Γ₂(f)(x)` as a form in the sphere-1 values.
pub fn eliminate_sphere2(
    g: &WeightedGraph,
    form: &ExpandedForm,
    ball: &BallDecomposition,
) -> QuadraticForm {
    let x = ball.center;
    let d = form.num_sphere1;
    let dim = form.variables.len();

    // substitution map E: full = E · sphere1, identity on sphere 1
    let mut e = vec![0.0; dim * d];
    for i in 0..d {
        e[i * d + i] = 1.0;
    }
    let mut substitution = Vec::with_capacity(ball.linear_groups.len());
    for (offset, group) in ball.linear_groups.iter().enumerate() {
        let u = group.terminal;
        debug_assert_eq!(form.variables[d + offset], u);
        let mut coeffs = vec![0.0; d];
        let mut total = 0.0;
        for &v in &group.intermediaries {
            let c = g.weight(x, v).unwrap() * g.weight(v, u).unwrap() / g.vertex_weight(v);
            let i = ball
                .sphere1
                .binary_search(&v)
                .expect("intermediary is a neighbour");
            coeffs[i] += c;
            total += c;
        }
        for c in &mut coeffs {
            *c *= 2.0 / total;
        }
        e[(d + offset) * d..(d + offset + 1) * d].copy_from_slice(&coeffs);
        substitution.push((u, coeffs));
    }

    // Q = ½ Eᵀ P E
    let p = &form.matrix;
    let mut pe = vec![0.0; dim * d];
    for r in 0..dim {
        for c in 0..d {
            pe[r * d + c] = (0..dim).map(|k| p[(r, k)] * e[k * d + c]).sum();
        }
    }
    let mut q = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            q[i * d + j] = 0.5 * (0..dim).map(|k| e[k * d + i] * pe[k * d + j]).sum::<f64>();
        }
    }
    let matrix = symmetrize(d, q);
    QuadraticForm {
        center: x,
        variables: ball.sphere1.clone(),
        matrix,
        substitution,
    }
}

fn symmetrize(d: usize, mut data: Vec<f64>) -> SymmetricMatrix {
    for i in 0..d {
        for j in (i + 1)..d {
            let avg = 0.5 * (data[i * d + j] + data[j * d + i]);
            data[i * d + j] = avg;
            data[j * d + i] = avg;
        }
    }
    SymmetricMatrix::from_row_major(d, data, 0.0).expect("symmetrised")
}

/// `M = 2ω(x) D^{-1/2} Q D^{-1/2}`, `D = diag(ω_xv)`.
///
/// `M` is similar to `2ω(x) D^{-1} Q`, so both have the same spectrum, and
/// its least eigenvalue is the infimum of `Γ₂(f)(x) / Γ(f)(x)`.
pub fn curvature_matrix(g: &WeightedGraph, q: &QuadraticForm) -> SymmetricMatrix {
    let x = q.center;
    let scale: Vec<f64> = q
        .variables
        .iter()
        .map(|&v| 1.0 / g.weight(x, v).unwrap().sqrt())
        .collect();
    let wx2 = 2.0 * g.vertex_weight(x);
    SymmetricMatrix::from_fn(q.variables.len(), |i, j| {
        wx2 * scale[i] * q.matrix[(i, j)] * scale[j]
    })
}

/// Bakry-Émery ∞-curvature at `x` with default tolerances.
pub fn bakry_emery_curvature(g: &WeightedGraph, x: usize) -> Result<CurvatureResult> {
    bakry_emery_curvature_with(g, x, &Tolerances::default())
}

pub fn bakry_emery_curvature_with(
    g: &WeightedGraph,
    x: usize,
    tol: &Tolerances,
) -> Result<CurvatureResult> {
    let ball = decompose_ball(g, x)?;
    if ball.degree() == 0 {
        return Err(Error::DegenerateVertex(x));
    }
    let expanded = assemble_gamma2_form(g, &ball);
    let reduced = eliminate_sphere2(g, &expanded, &ball);
    let m = curvature_matrix(g, &reduced);
    let eigen = eigen_symmetric(&m, tol)?;

    // back through D^{-1/2}; sign fixed so the largest entry is positive
    let y = &eigen.vectors[0];
    let mut sphere1: Vec<f64> = reduced
        .variables
        .iter()
        .zip(y)
        .map(|(&v, &c)| c / g.weight(x, v).unwrap().sqrt())
        .collect();
    let pivot = sphere1
        .iter()
        .copied()
        .fold(0.0f64, |m, a| if a.abs() > m.abs() { a } else { m });
    if pivot < 0.0 {
        sphere1.iter_mut().for_each(|a| *a = -*a);
    }
    let witness = reduced.extend(g.num_vertices(), &sphere1);

    Ok(CurvatureResult {
        vertex: x,
        curvature: eigen.values[0],
        spectrum: eigen.values,
        witness,
    })
}

/// Curvature at every vertex, in vertex order.
pub fn curvature_all(g: &WeightedGraph) -> Result<Vec<CurvatureResult>> {
    curvature_all_with(g, &Tolerances::default())
}

pub fn curvature_all_with(g: &WeightedGraph, tol: &Tolerances) -> Result<Vec<CurvatureResult>> {
    (0..g.num_vertices())
        .into_par_iter()
        .map(|x| bakry_emery_curvature_with(g, x, tol))
        .collect()
}
