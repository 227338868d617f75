#![allow(dead_code)]

use becalc_core::{Edge, WeightedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random connected graph: a random spanning tree plus each remaining pair
/// with probability `extra`, weights uniform in `[w_lo, w_hi]`.
pub fn random_connected(
    rng: &mut impl Rng,
    n: usize,
    extra: f64,
    w_lo: f64,
    w_hi: f64,
) -> WeightedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![vec![false; n]; n];
    let mut edges: Vec<Edge> = Vec::new();
    for k in 1..n {
        let i = order[k];
        let j = order[rng.random_range(0..k)];
        present[i][j] = true;
        present[j][i] = true;
        edges.push((i, j, rng.random_range(w_lo..=w_hi)));
    }
    for (i, row) in present.iter().enumerate() {
        for (j, &linked) in row.iter().enumerate().skip(i + 1) {
            if !linked && rng.random_bool(extra) {
                edges.push((i, j, rng.random_range(w_lo..=w_hi)));
            }
        }
    }
    WeightedGraph::new(n, &edges).expect("connected by construction")
}

/// The seeded corpus used by the oracle comparisons: 4–8 vertices, weights
/// in `[0.1, 10]`.
pub fn oracle_corpus(count: usize, seed: u64) -> Vec<WeightedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(4..=8);
            let extra = rng.random_range(0.1..0.7);
            random_connected(&mut rng, n, extra, 0.1, 10.0)
        })
        .collect()
}

pub fn umbrella(n: usize, rho: f64) -> WeightedGraph {
    becalc_core::make_umbrella(&becalc_core::UmbrellaSpec::new(n, rho).unwrap()).unwrap()
}
