//! Cyclic Jacobi eigensolver for small dense symmetric matrices.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::numeric::Tolerances;

/// Dense symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    /// Validates symmetry (`max |A_ij − A_ji| ≤ tol · max |A|`) and stores
    /// the exactly symmetrised matrix `(A + Aᵀ) / 2`.
    pub fn from_row_major(order: usize, data: Vec<f64>, tol: f64) -> Result<Self> {
        if data.len() != order * order {
            return Err(Error::BadMatrixShape {
                expected: order * order,
                got: data.len(),
            });
        }
        let scale = data.iter().fold(0.0f64, |m, a| m.max(a.abs()));
        let mut asymmetry = 0.0f64;
        for i in 0..order {
            for j in (i + 1)..order {
                asymmetry = asymmetry.max((data[i * order + j] - data[j * order + i]).abs());
            }
        }
        if asymmetry > tol * scale {
            return Err(Error::NotSymmetric { asymmetry });
        }
        let mut m = Self { order, data };
        for i in 0..order {
            for j in (i + 1)..order {
                let avg = 0.5 * (m.data[i * order + j] + m.data[j * order + i]);
                m.data[i * order + j] = avg;
                m.data[j * order + i] = avg;
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let order = rows.len();
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        Self::from_row_major(order, data, Tolerances::default().symmetry_tol)
    }

    /// Builds `A_ij = f(i, j)` for `i ≤ j` and mirrors it.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let a = f(i, j);
                data[i * order + j] = a;
                data[j * order + i] = a;
            }
        }
        Self { order, data }
    }

    pub fn identity(order: usize) -> Self {
        Self::from_fn(order, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|a| a * a).sum::<f64>().sqrt()
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self[(i, i)]).sum()
    }

    /// `xᵀ A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        (0..self.order)
            .map(|i| x[i] * self.row(i).iter().zip(x).map(|(a, b)| a * b).sum::<f64>())
            .sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.order)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }
}

impl Index<(usize, usize)> for SymmetricMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.order + j]
    }
}

/// Eigen-decomposition `A = V Λ Vᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigen {
    /// Eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors; `vectors[k]` belongs to `values[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[i * n + j] * a[i * n + j];
            }
        }
    }
    sum.sqrt()
}

/// Eigenvalues and eigenvectors of a symmetric matrix by cyclic Jacobi
/// rotations.
///
/// Sweeps over all pairs `(p, q)` with `p < q`, annihilating `a_pq` each
/// time, until the off-diagonal Frobenius norm falls below
/// `tol.eigen_tol · ‖A‖_F`. Eigenvalues are returned ascending; equal
/// eigenvalues keep the solver's diagonal order, so ties are deterministic.
pub fn eigen_symmetric(matrix: &SymmetricMatrix, tol: &Tolerances) -> Result<Eigen> {
    let n = matrix.order;
    let mut a = matrix.data.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = tol.eigen_tol * matrix.frobenius_norm();

    let mut sweeps = 0;
    while off_diagonal_norm(&a, n) > threshold {
        if sweeps == tol.max_sweeps {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // tan of the rotation angle, smaller root for stability
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / t.hypot(1.0);
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i * n + k]).collect())
        .collect();
    Ok(Eigen {
        values,
        vectors,
        sweeps,
    })
}
