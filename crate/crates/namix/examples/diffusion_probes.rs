//! Diffusion through the median graph, route against route.
//!
//! The same instance is diffused with the exact dense eigendecomposition
//! and with the Chebyshev expansion, over times up to 20π. The two
//! routes must agree to solver precision and both must conserve the
//! norm; the per-cardinality probability profile settles near the
//! N_k/N_s weights of the solution census.

use namix::gauge::{cardinality_distribution, AmplitudeVector, GaugeMatrix};
use namix::graph::generate_random_graph;
use namix::propagate::{evolve_series, Method};
use namix::solutions::{enumerate_independent_sets, median_adjacency};
use std::f64::consts::{FRAC_PI_2, PI};

fn main() -> namix::Result<()> {
    let (n, m, seed) = (9, 9, 3);
    let g = generate_random_graph(n, m, seed)?;
    let basis = enumerate_independent_sets(&g)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, FRAC_PI_2);
    let psi0 = AmplitudeVector::basis_state(basis.len(), 0);
    eprintln!("instance n={n} m={m} seed={seed}: N_s = {}", basis.len());

    let times: Vec<f64> = (0..=40).map(|i| i as f64 * 20.0 * PI / 40.0).collect();
    let dense = evolve_series(&gauge, &psi0, &times, Method::DenseEig)?;
    let cheb = evolve_series(&gauge, &psi0, &times, Method::Chebyshev)?;

    let mut worst_gap = 0.0f64;
    let mut worst_drift = 0.0f64;
    for (d, c) in dense.iter().zip(&cheb) {
        let gap = d
            .0
            .iter()
            .zip(&c.0)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        worst_gap = worst_gap.max(gap);
        worst_drift = worst_drift.max((c.norm() - 1.0).abs());
    }
    eprintln!("largest route disagreement over [0, 20π]: {worst_gap:.2e}");
    eprintln!("largest Chebyshev norm drift: {worst_drift:.2e}");
    assert!(worst_gap < 1e-8);
    assert!(worst_drift < 1e-8);

    let final_state = dense.last().unwrap();
    let histogram = basis.cardinality_histogram();
    let ns = basis.len() as f64;
    println!("cardinality,census_weight,probability_at_20pi");
    for (k, p) in cardinality_distribution(&basis, final_state).iter().enumerate() {
        println!("{k},{},{p}", histogram[k] as f64 / ns);
    }
    Ok(())
}
