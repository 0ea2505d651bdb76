//! Single-edge holonomy, fully by hand.
//!
//! One edge has three solutions: the empty set and the two singletons.
//! At cone angle θ = π/2 the gauge matrix couples the empty set to each
//! singleton with strength 1/2 on top of a uniform diagonal, so one loop
//! acts like a spin precessing for an angle 2π/√2 inside the
//! {empty, symmetric-singleton} plane. The returning probabilities are
//! cos²(π√2) on the empty set and equal shares of sin²(π√2) on the
//! singletons, and both propagation routes must land on them exactly.

use namix::gauge::{entropy, normalized_entropy, AmplitudeVector, GaugeMatrix};
use namix::graph::Graph;
use namix::propagate::{holonomy_apply, Method};
use namix::solutions::{enumerate_independent_sets, median_adjacency};
use std::f64::consts::{FRAC_PI_2, PI};

fn main() -> namix::Result<()> {
    let g = Graph::new(2, &[(0, 1)])?;
    let basis = enumerate_independent_sets(&g)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, FRAC_PI_2);

    eprintln!("solutions in canonical order:");
    for (i, s) in basis.solutions().iter().enumerate() {
        eprintln!("  {i}: {s}");
    }
    eprintln!("median pairs: {:?}", median.pairs());
    eprintln!(
        "gauge diagonal {:?}, hop {}",
        gauge.diagonal(),
        gauge.hop()
    );

    let arg = PI * 2.0f64.sqrt();
    let closed_form = [
        arg.cos().powi(2),
        arg.sin().powi(2) / 2.0,
        arg.sin().powi(2) / 2.0,
    ];

    let psi0 = AmplitudeVector::basis_state(basis.len(), 0);
    println!("index,closed_form,dense,chebyshev");
    let dense = holonomy_apply(&gauge, &psi0, Method::DenseEig)?;
    let cheb = holonomy_apply(&gauge, &psi0, Method::Chebyshev)?;
    for i in 0..basis.len() {
        println!(
            "{i},{},{},{}",
            closed_form[i],
            dense.probabilities()[i],
            cheb.probabilities()[i]
        );
        let err = (dense.probabilities()[i] - closed_form[i]).abs();
        assert!(err < 1e-10, "dense route off closed form by {err}");
    }

    eprintln!(
        "entropy S = {:.6}, normalized S̄ = {:.6}",
        entropy(&dense),
        normalized_entropy(&dense)
    );
    Ok(())
}
