//! Classical routes to a non-trivial solution, next to the quantum one.
//!
//! Every edge becomes the clause (¬x_u ∨ ¬x_v); satisfying assignments
//! are independent sets. Forcing a candidate pair true and running the
//! implication-graph solver finds a size-2 solution whenever one exists,
//! and a direct non-edge scan must agree with it. For calibration the
//! random-pair guess fails at rate 2m/(n(n−1)), measured here against
//! its expectation, while one quantum loop spreads weight over all N_s
//! solutions at once.

use namix::gauge::{per_trivial_probability, AmplitudeVector, GaugeMatrix};
use namix::graph::generate_random_graph;
use namix::propagate::{holonomy_apply, Method};
use namix::solutions::{enumerate_independent_sets, median_adjacency};
use namix::twosat::{
    find_nontrivial_classical, find_nontrivial_via_2sat, graph_to_clauses, random_pair_baseline,
};
use std::f64::consts::FRAC_PI_2;

fn main() -> namix::Result<()> {
    let (n, m, seed) = (10, 12, 5);
    let g = generate_random_graph(n, m, seed)?;
    eprintln!("instance n={n} m={m} seed={seed}");

    let clauses = graph_to_clauses(&g);
    eprintln!("clause set in DIMACS form:");
    eprint!("{}", clauses.to_dimacs());

    let scan = find_nontrivial_classical(&g);
    let sat = find_nontrivial_via_2sat(&g);
    eprintln!("non-edge scan found: {:?}", scan.map(|s| s.to_string()));
    eprintln!("2-SAT forcing found: {:?}", sat.map(|s| s.to_string()));
    assert_eq!(scan.is_some(), sat.is_some());
    for found in [scan, sat].into_iter().flatten() {
        assert!(g.is_independent(found) && found.cardinality() >= 2);
    }

    let trials = 20_000;
    let expected = 2.0 * m as f64 / (n as f64 * (n as f64 - 1.0));
    let empirical = random_pair_baseline(&g, trials, 99)?;
    eprintln!("random pair failure: expected {expected:.4}, measured {empirical:.4}");

    let basis = enumerate_independent_sets(&g)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, FRAC_PI_2);
    let psi = holonomy_apply(
        &gauge,
        &AmplitudeVector::basis_state(basis.len(), 0),
        Method::Auto,
    )?;
    let cn = per_trivial_probability(&basis, &psi);
    eprintln!(
        "one quantum loop: N_s = {}, per-trivial-solution probability c_n = {cn:.4}",
        basis.len()
    );

    println!("metric,value");
    println!("expected_pair_failure,{expected}");
    println!("empirical_pair_failure,{empirical}");
    println!("quantum_cn,{cn}");
    Ok(())
}
