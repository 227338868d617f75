//! Acceptance suite. Each criterion prints one `PASS`/`FAIL` line; the
//! process exits non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use becalc_core::{
    bakry_emery_curvature, classify_embedding, closed_form_values, curvature_all, gamma,
    gamma2_direct, make_umbrella, rayleigh_oracle, rho_hyperbolic, rho_spherical, table1,
    EmbeddingKind, TableRow, UmbrellaSpec, VertexFunction, WeightedGraph,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

const TABLE_ROWS: [usize; 9] = [3, 4, 5, 6, 7, 8, 9, 10, 20];

/// Published table: n, ρ⁺, K⁺, ρ⁰, K⁰, ρ⁻, K⁻ (four decimals).
#[allow(clippy::approx_constant)]
const PUBLISHED: [[f64; 7]; 9] = [
    [3.0, 1.6329, 0.8516, 1.7320, 0.8360, 1.7877, 0.8278],
    [4.0, 1.2745, 0.9226, 1.4142, 0.8918, 1.5133, 0.8725],
    [5.0, 1.0347, 0.9204, 1.1755, 0.9171, 1.2901, 0.8918],
    [6.0, 0.8685, 0.6826, 1.0, 0.6667, 1.1163, 0.6546],
    [7.0, 0.7474, 0.5524, 0.8677, 0.5260, 0.9800, 0.5053],
    [8.0, 0.6557, 0.4813, 0.7653, 0.4470, 0.8716, 0.4190],
    [9.0, 0.5835, 0.4440, 0.6840, 0.4037, 0.7836, 0.3699],
    [10.0, 0.5261, 0.4267, 0.6180, 0.3819, 0.7112, 0.3434],
    [20.0, 0.2640, 0.5154, 0.3128, 0.4603, 0.3656, 0.4077],
];

fn row_values(row: &TableRow) -> [f64; 6] {
    [
        row.rho_spherical,
        row.k_spherical,
        row.rho_euclidean,
        row.k_euclidean,
        row.rho_hyperbolic,
        row.k_hyperbolic,
    ]
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let rows = table1(&TABLE_ROWS).expect("table computes");
    let elapsed = start.elapsed();
    let mut worst: f64 = 0.0;
    let mut failures = Vec::new();
    for (row, published) in rows.iter().zip(PUBLISHED) {
        assert_eq!(row.n as f64, published[0]);
        for (col, (got, want)) in row_values(row).iter().zip(&published[1..]).enumerate() {
            let err = (got - want).abs();
            worst = worst.max(err);
            if err > 2e-4 {
                failures.push(format!(
                    "n={} col={} got={got:.6} want={want}",
                    row.n,
                    col + 1
                ));
            }
        }
    }
    let fast = elapsed < Duration::from_secs(5);
    outcome(
        failures.is_empty() && fast,
        format!(
            "54 values, max |err| = {worst:.2e} (tol 2e-4), {:.3}s (limit 5s){}",
            elapsed.as_secs_f64(),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; mismatches: {}", failures.join(", "))
            }
        ),
    )
}

fn hub_spectrum(n: usize, rho: f64) -> Vec<f64> {
    let g = make_umbrella(&UmbrellaSpec::new(n, rho).unwrap()).unwrap();
    bakry_emery_curvature(&g, 0).unwrap().spectrum
}

fn closed_form_equivalence() -> Outcome {
    let mut worst: f64 = 0.0;
    for n in 3..=6 {
        for i in 0..50 {
            // 50 interior points of (0.05, 2.7)
            let rho = 0.05 + (i + 1) as f64 * (2.7 - 0.05) / 51.0;
            let numeric = hub_spectrum(n, rho);
            let closed = closed_form_values(n, rho).unwrap();
            assert_eq!(numeric.len(), closed.len());
            for (a, b) in numeric.iter().zip(&closed) {
                worst = worst.max((a - b).abs());
            }
        }
    }
    let crossings = [(3, 0.25), (4, 0.5), (5, 1.0 / (3.0 - 5f64.sqrt()))];
    let mut worst_gap: f64 = 0.0;
    for (n, rho) in crossings {
        let s = hub_spectrum(n, rho);
        worst_gap = worst_gap.max((s[1] - s[0]).abs());
    }
    outcome(
        worst < 1e-10 && worst_gap < 1e-10,
        format!(
            "200 spectra, max |err| = {worst:.2e} (tol 1e-10); crossing gap max = {worst_gap:.2e} (tol 1e-10)"
        ),
    )
}

fn exact_small_cases() -> Outcome {
    let k2 = WeightedGraph::new(2, &[(0, 1, 1.0)]).unwrap();
    let path = WeightedGraph::new(3, &[(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
    let cases = [
        (
            "K2",
            bakry_emery_curvature(&k2, 0).unwrap().curvature,
            2.0,
            1e-12,
        ),
        (
            "G(3,1)",
            bakry_emery_curvature(&common::umbrella(3, 1.0), 0)
                .unwrap()
                .curvature,
            1.0,
            1e-10,
        ),
        (
            "G(6,1)",
            bakry_emery_curvature(&common::umbrella(6, 1.0), 0)
                .unwrap()
                .curvature,
            2.0 / 3.0,
            1e-10,
        ),
        (
            "path end",
            bakry_emery_curvature(&path, 0).unwrap().curvature,
            1.0,
            1e-10,
        ),
    ];
    let mut ok = true;
    let detail: Vec<String> = cases
        .iter()
        .map(|(name, got, want, tol)| {
            let err = (got - want).abs();
            ok &= err <= *tol;
            format!("{name} err {err:.1e} (tol {tol:.0e})")
        })
        .collect();
    outcome(ok, detail.join("; "))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let graphs = common::oracle_corpus(100, 0x5eed);
    let mut worst: f64 = 0.0;
    let mut below = 0usize;
    let mut vertices = 0usize;
    for (gi, g) in graphs.iter().enumerate() {
        for x in 0..g.num_vertices() {
            let engine = bakry_emery_curvature(g, x).unwrap().curvature;
            let oracle = rayleigh_oracle(g, x, 200, gi as u64 * 1000 + x as u64).unwrap();
            worst = worst.max((engine - oracle).abs());
            if oracle < engine - 1e-6 {
                below += 1;
            }
            vertices += 1;
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst <= 1e-5 && below == 0 && elapsed < Duration::from_secs(60),
        format!(
            "{vertices} vertices on 100 graphs, max |engine - oracle| = {worst:.2e} (tol 1e-5), \
             oracle below engine: {below}, {:.2}s (limit 60s)",
            elapsed.as_secs_f64()
        ),
    )
}

fn curvature_dimension_inequality() -> Outcome {
    let graphs = common::oracle_corpus(100, 0xcd);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_slack = f64::INFINITY;
    let mut worst_vanishing = f64::INFINITY;
    let mut checks = 0usize;
    for g in &graphs {
        let n = g.num_vertices();
        for x in 0..n {
            let k = bakry_emery_curvature(g, x).unwrap().curvature;
            for _ in 0..1000 {
                let f = VertexFunction::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect());
                let gm = gamma(g, &f, &f, x);
                let slack = (gamma2_direct(g, &f, x) - k * gm) / (1.0 + gm.abs());
                worst_slack = worst_slack.min(slack);
                checks += 1;
            }
            let mut f = VertexFunction::new((0..n).map(|_| rng.random_range(-1.0..1.0)).collect());
            f.0[x] = 0.0;
            for &(v, _) in g.neighbors(x) {
                f.0[v] = 0.0;
            }
            worst_vanishing = worst_vanishing.min(gamma2_direct(g, &f, x));
        }
    }
    outcome(
        worst_slack >= -1e-9 && worst_vanishing >= -1e-12,
        format!(
            "{checks} functions, min (Γ₂ − KΓ)/(1+Γ) = {worst_slack:.2e} (≥ -1e-9); \
             min Γ₂ off closed neighbourhood = {worst_vanishing:.2e} (≥ -1e-12)"
        ),
    )
}

fn embedding_round_trip() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut wrong_kind = Vec::new();
    for n in 3..=20 {
        let checks = [
            (rho_spherical(n, 1.0).unwrap(), EmbeddingKind::Spherical),
            (rho_hyperbolic(n, 1.0).unwrap(), EmbeddingKind::Hyperbolic),
        ];
        for (rho, kind) in checks {
            let info = classify_embedding(&UmbrellaSpec::new(n, rho).unwrap());
            if info.kind != kind {
                wrong_kind.push(format!("n={n} {kind}→{}", info.kind));
                continue;
            }
            worst = worst.max((info.scale.unwrap() - 1.0).abs());
        }
    }
    outcome(
        wrong_kind.is_empty() && worst <= 1e-8,
        format!(
            "n = 3..20, max |scale - 1| = {worst:.2e} (tol 1e-8){}",
            if wrong_kind.is_empty() {
                String::new()
            } else {
                format!("; misclassified: {}", wrong_kind.join(", "))
            }
        ),
    )
}

fn invariance() -> Outcome {
    let graphs = common::oracle_corpus(40, 0x1ab);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst_scale: f64 = 0.0;
    let mut worst_relabel: f64 = 0.0;
    for g in &graphs {
        let base: Vec<f64> = curvature_all(g)
            .unwrap()
            .iter()
            .map(|r| r.curvature)
            .collect();
        for c in [0.1, 3.0, 100.0] {
            let scaled = curvature_all(&g.scaled(c).unwrap()).unwrap();
            for (a, b) in base.iter().zip(&scaled) {
                worst_scale = worst_scale.max((a - b.curvature).abs());
            }
        }
        let mut perm: Vec<usize> = (0..g.num_vertices()).collect();
        perm.shuffle(&mut rng);
        let relabeled = curvature_all(&g.relabeled(&perm).unwrap()).unwrap();
        for (v, k) in base.iter().enumerate() {
            worst_relabel = worst_relabel.max((k - relabeled[perm[v]].curvature).abs());
        }
    }
    outcome(
        worst_scale <= 1e-12 && worst_relabel <= 1e-12,
        format!(
            "40 graphs, scaling by 0.1/3/100 max diff = {worst_scale:.2e}, relabeling max diff = \
             {worst_relabel:.2e} (tol 1e-12)"
        ),
    )
}

fn headline_ordering() -> Outcome {
    let rows = table1(&TABLE_ROWS).unwrap();
    let violations: Vec<usize> = rows
        .iter()
        .filter(|r| !(r.k_spherical > r.k_euclidean && r.k_euclidean > r.k_hyperbolic))
        .map(|r| r.n)
        .collect();
    outcome(
        violations.is_empty(),
        format!("K+ > K0 > K- for n in {TABLE_ROWS:?}; violations: {violations:?}"),
    )
}

type Check = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("table reproduction", table_reproduction),
        ("closed-form equivalence", closed_form_equivalence),
        ("exact small cases", exact_small_cases),
        ("oracle equivalence", oracle_equivalence),
        (
            "curvature-dimension inequality",
            curvature_dimension_inequality,
        ),
        ("embedding round-trip", embedding_round_trip),
        ("invariance", invariance),
        ("spherical > euclidean > hyperbolic", headline_ordering),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = check();
        let tag = if result.passed { "PASS" } else { "FAIL" };
        if !result.passed {
            failed += 1;
        }
        println!("[{tag}] {name}: {}", result.detail);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
