//! Non-abelian adiabatic mixing on graph independent-set problems.
//!
//! Every independent set of a graph is a degenerate ground state of an
//! antiferromagnet-like spin Hamiltonian. Dragging the quantization axis
//! once around a cone of angle θ leaves the ground energy alone but mixes
//! the degenerate states through a Wilson-loop holonomy W = exp(2πiÃ),
//! where Ã acts like a hopping matrix on the median graph of solutions
//! (solutions adjacent when they differ in one vertex). Starting from the
//! empty set, one loop spreads amplitude over the whole solution space, so
//! measuring afterwards yields a non-trivial independent set with high
//! probability. This crate simulates that pipeline end to end and carries
//! the classical 2-SAT and random-guess baselines it is measured against.
//!
//! The runnable examples are the front door; each one covers one
//! capability and prints CSV you can plot directly:
//!
//! ```bash
//! cargo run --release --example k2_holonomy          # closed-form anchor
//! cargo run --release --example median_cube          # solution bases and median graphs
//! cargo run --release --example diffusion_probes     # dense vs Chebyshev propagation
//! cargo run --release --example adiabatic_validation # holonomy vs slow 2^n evolution
//! cargo run --release --example entropy_equilibration
//! cargo run --release --example case1_scaling        # sparse regime m = n
//! cargo run --release --example case2_scaling        # dense regime m = n²/4
//! cargo run --release --example classical_comparison # 2-SAT and random baselines
//! ```
//!
//! The same operations are scriptable through the thin `namix` binary
//! (`gen`, `enumerate`, `holonomy`, `diffuse`, `adiabatic-check`,
//! `baseline`, `case1`, `case2`, `entropy-trace`, `fit`).
//!
//! Module map: [`graph`] holds bitmask graphs and the uniform generator,
//! [`solutions`] enumerates independent sets and builds the median graph,
//! [`gauge`] assembles Ã and the amplitude-vector observables,
//! [`propagate`] exponentiates it (dense eigensolver or Chebyshev),
//! [`adiabatic`] runs the full 2^n spin evolution that justifies the
//! holonomy picture, [`twosat`] carries the classical baselines, and
//! [`experiment`] drives the seeded scaling studies behind the CSV
//! artifacts.

pub mod adiabatic;
pub mod error;
pub mod experiment;
pub mod gauge;
pub mod graph;
pub mod propagate;
pub mod solutions;
pub mod twosat;

pub use error::{Error, Result};
pub use gauge::{AmplitudeVector, GaugeMatrix};
pub use graph::{Graph, VertexSet};
pub use solutions::{enumerate_independent_sets, median_adjacency, SolutionBasis};
