//! The median graph of an edgeless instance is the full n-cube.
//!
//! With no edges every subset is a solution, and two subsets are median
//! neighbors exactly when they differ in one vertex: the hypercube.
//! Diffusion generated by the gauge matrix then factorizes per vertex,
//! which makes the cube a good sanity case for the sparse matrix and the
//! canonical ordering. A small path graph at the end shows how real
//! constraints carve a sub-poset out of the cube.

use namix::gauge::GaugeMatrix;
use namix::graph::Graph;
use namix::solutions::{enumerate_independent_sets, median_adjacency};
use std::f64::consts::FRAC_PI_2;

fn main() -> namix::Result<()> {
    let n = 4;
    let g = Graph::edgeless(n);
    let basis = enumerate_independent_sets(&g)?;
    let median = median_adjacency(&basis);
    eprintln!(
        "edgeless n={n}: N_s = {} = 2^{n}, median edges = {} = n·2^(n-1)",
        basis.len(),
        median.len()
    );
    assert_eq!(basis.len(), 1 << n);
    assert_eq!(median.len(), n << (n - 1));
    // Every cube vertex has degree n.
    assert!(median.degrees().iter().all(|&d| d as usize == n));

    eprintln!("cardinality histogram (binomial row): {:?}", basis.cardinality_histogram());

    let gauge = GaugeMatrix::build(&basis, &median, FRAC_PI_2);
    eprintln!(
        "gauge spectral bounds on the cube: {:?}",
        gauge.spectral_bounds()
    );

    let path = Graph::new(3, &[(0, 1), (1, 2)])?;
    let path_basis = enumerate_independent_sets(&path)?;
    let path_median = median_adjacency(&path_basis);
    eprintln!("path on 3 vertices: the median graph keeps 5 of the cube's 8 nodes");
    println!("index,bitmask,popcount,median_degree");
    for (i, s) in path_basis.solutions().iter().enumerate() {
        println!(
            "{i},{},{},{}",
            s.bits(),
            s.cardinality(),
            path_median.degrees()[i]
        );
    }
    Ok(())
}
