//! Fixtures shared by the criterion benchmarks.

use becalc_core::{make_umbrella, UmbrellaSpec, WeightedGraph};

pub fn umbrella(n: usize, rho: f64) -> WeightedGraph {
    make_umbrella(&UmbrellaSpec::new(n, rho).expect("valid umbrella")).expect("umbrella builds")
}

/// `rows × cols` grid with weights cycling through `1, 2, 3`.
pub fn grid(rows: usize, cols: usize) -> WeightedGraph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let w = 1.0 + ((r + c) % 3) as f64;
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1), w));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c), w));
            }
        }
    }
    WeightedGraph::new(rows * cols, &edges).expect("grid builds")
}
