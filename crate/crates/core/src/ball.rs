//! Two-ball combinatorics around a centre vertex.
//!
//! For a centre `x`, every pair `v ∼ x`, `u ∼ v` falls into exactly one of
//! three constellations: `u = x`, the triangular position (`u ∼ x`) or the
//! linear position (`u` at distance two from `x`).

use crate::error::Result;
use crate::graph::WeightedGraph;

/// Linear triples `(x, v, u)` sharing the terminal vertex `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearGroup {
    pub terminal: usize,
    /// Intermediaries `v` with `x ∼ v ∼ u`, ascending.
    pub intermediaries: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallDecomposition {
    pub center: usize,
    pub sphere1: Vec<usize>,
    pub sphere2: Vec<usize>,
    /// Triples `(x, v, u)` with `v ∼ x`, `u ∼ v` and `u ∼ x`.
    pub triangles: Vec<(usize, usize, usize)>,
    /// Linear triples grouped by terminal vertex, ascending by terminal.
    pub linear_groups: Vec<LinearGroup>,
}

impl BallDecomposition {
    /// All linear triples `(x, v, u)`, ordered by `(u, v)`.
    pub fn linears(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.linear_groups.iter().flat_map(move |group| {
            group
                .intermediaries
                .iter()
                .map(move |&v| (self.center, v, group.terminal))
        })
    }

    pub fn degree(&self) -> usize {
        self.sphere1.len()
    }
}

/// Splits the two-ball of `x` into its spheres and constellations.
pub fn decompose_ball(g: &WeightedGraph, x: usize) -> Result<BallDecomposition> {
    g.check_vertex(x)?;
    let sphere1: Vec<usize> = g.neighbors(x).iter().map(|&(v, _)| v).collect();

    let mut triangles = Vec::new();
    // indexed by terminal vertex; filled in ascending v order
    let mut by_terminal: Vec<Vec<usize>> = vec![Vec::new(); g.num_vertices()];
    for &v in &sphere1 {
        for &(u, _) in g.neighbors(v) {
            if u == x {
                continue;
            }
            if g.is_adjacent(u, x) {
                triangles.push((x, v, u));
            } else {
                by_terminal[u].push(v);
            }
        }
    }
    let linear_groups: Vec<LinearGroup> = by_terminal
        .into_iter()
        .enumerate()
        .filter(|(_, vs)| !vs.is_empty())
        .map(|(terminal, intermediaries)| LinearGroup {
            terminal,
            intermediaries,
        })
        .collect();
    let sphere2 = linear_groups.iter().map(|grp| grp.terminal).collect();

    Ok(BallDecomposition {
        center: x,
        sphere1,
        sphere2,
        triangles,
        linear_groups,
    })
}
