//! Weighted graph data model.
//!
//! Vertices are dense indices `0..n`. Each undirected edge carries a strictly
//! positive weight, and every vertex caches its weight `ω(x) = Σ_{v∼x} ω_xv`.
//! Adjacency lists are kept sorted by neighbour index so that every derived
//! quantity is produced in a deterministic order.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// An undirected edge `{i, j}` with weight `w`.
pub type Edge = (usize, usize, f64);

/// Finite, simple, connected graph with positive edge weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    adjacency: Vec<Vec<(usize, f64)>>,
    vertex_weight: Vec<f64>,
    num_edges: usize,
}

impl WeightedGraph {
    /// Builds and validates a graph from an edge list.
    ///
    /// Rejects self-loops, duplicate unordered pairs, weights that are not
    /// finite and strictly positive, and disconnected vertex sets.
    pub fn new(num_vertices: usize, edges: &[Edge]) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); num_vertices];
        for &(i, j, w) in edges {
            for vertex in [i, j] {
                if vertex >= num_vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex,
                        num_vertices,
                    });
                }
            }
            if i == j {
                return Err(Error::SelfLoop(i));
            }
            if w.is_nan() || w <= 0.0 {
                return Err(Error::NonPositiveWeight { i, j, weight: w });
            }
            if !w.is_finite() {
                return Err(Error::NonFiniteWeight { i, j, weight: w });
            }
            adjacency[i].push((j, w));
            adjacency[j].push((i, w));
        }
        for (i, list) in adjacency.iter_mut().enumerate() {
            list.sort_by_key(|&(v, _)| v);
            if let Some(pair) = list.windows(2).find(|p| p[0].0 == p[1].0) {
                let j = pair[0].0;
                return Err(Error::DuplicateEdge(i.min(j), i.max(j)));
            }
        }

        // BFS from vertex 0
        let mut seen = vec![false; num_vertices];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            for &(v, _) in &adjacency[x] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if let Some(unreachable) = seen.iter().position(|s| !s) {
            return Err(Error::Disconnected { unreachable });
        }

        let vertex_weight = adjacency
            .iter()
            .map(|list| list.iter().map(|&(_, w)| w).sum())
            .collect();
        Ok(Self {
            adjacency,
            vertex_weight,
            num_edges: edges.len(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    /// Neighbours of `x` with their edge weights, ascending by index.
    pub fn neighbors(&self, x: usize) -> &[(usize, f64)] {
        &self.adjacency[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adjacency[x].len()
    }

    /// `ω(x)`, the sum of the weights of the edges at `x`.
    pub fn vertex_weight(&self, x: usize) -> f64 {
        self.vertex_weight[x]
    }

    /// Edge weight `ω_ij`, or `None` when `i` and `j` are not adjacent.
    pub fn weight(&self, i: usize, j: usize) -> Option<f64> {
        let list = self.adjacency.get(i)?;
        list.binary_search_by_key(&j, |&(v, _)| v)
            .ok()
            .map(|k| list[k].1)
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.weight(i, j).is_some()
    }

    /// Edges `(i, j, w)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(i, list)| {
            list.iter()
                .filter(move |&&(j, _)| j > i)
                .map(move |&(j, w)| (i, j, w))
        })
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.num_vertices() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: x,
                num_vertices: self.num_vertices(),
            })
        }
    }

    /// Copy of this graph with every weight multiplied by `factor`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let edges: Vec<Edge> = self.edges().map(|(i, j, w)| (i, j, w * factor)).collect();
        Self::new(self.num_vertices(), &edges)
    }

    /// Copy of this graph with vertex `v` renamed to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..n`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: self.num_vertices(),
                got: perm.len(),
            });
        }
        let edges: Vec<Edge> = self
            .edges()
            .map(|(i, j, w)| (perm[i], perm[j], w))
            .collect();
        Self::new(self.num_vertices(), &edges)
    }
}
