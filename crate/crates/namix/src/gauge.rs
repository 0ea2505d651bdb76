//! Effective gauge structure on the degenerate ground manifold.
//!
//! Dragging every spin through one closed loop on the Bloch sphere leaves
//! the ground manifold invariant but mixes its members. To leading order
//! the mixing is generated by a real symmetric matrix acting on solution
//! amplitudes: each solution keeps a diagonal weight set by how many of
//! its vertices are selected, and solutions differing in a single vertex
//! are coupled with strength sin(θ)/2, where θ is the polar angle of the
//! loop axis. The holonomy of the full loop is exp(2πi Ã).

use crate::solutions::{MedianAdjacency, SolutionBasis};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Generator of ground-manifold mixing for one loop, stored sparsely.
#[derive(Debug, Clone)]
pub struct GaugeMatrix {
    dim: usize,
    n: usize,
    theta: f64,
    diagonal: Vec<f64>,
    edges: Vec<(u32, u32)>,
    hop: f64,
}

impl GaugeMatrix {
    /// Assemble the generator for a solution basis and its median adjacency.
    ///
    /// Diagonal entry for a solution with k vertices out of n:
    /// −(k·sin²(θ/2) + (n−k)·cos²(θ/2)).  Off-diagonal entries are
    /// sin(θ)/2 on every median pair.
    pub fn build(basis: &SolutionBasis, median: &MedianAdjacency, theta: f64) -> GaugeMatrix {
        let n = basis.vertex_count();
        let sin_half_sq = (theta / 2.0).sin().powi(2);
        let cos_half_sq = (theta / 2.0).cos().powi(2);
        let diagonal = basis
            .solutions()
            .iter()
            .map(|s| {
                let k = s.cardinality() as f64;
                -(k * sin_half_sq + (n as f64 - k) * cos_half_sq)
            })
            .collect();
        GaugeMatrix {
            dim: basis.len(),
            n,
            theta,
            diagonal,
            edges: median.pairs().to_vec(),
            hop: theta.sin() / 2.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn diagonal(&self) -> &[f64] {
        &self.diagonal
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Off-diagonal coupling sin(θ)/2.
    pub fn hop(&self) -> f64 {
        self.hop
    }

    /// Sparse matrix-vector product y = Ã x.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.dim);
        let mut y: Vec<Complex64> = self
            .diagonal
            .iter()
            .zip(x)
            .map(|(&d, &a)| d * a)
            .collect();
        for &(a, b) in &self.edges {
            let (a, b) = (a as usize, b as usize);
            y[a] += self.hop * x[b];
            y[b] += self.hop * x[a];
        }
        y
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let mut m = DMatrix::zeros(self.dim, self.dim);
        for (i, &d) in self.diagonal.iter().enumerate() {
            m[(i, i)] = d;
        }
        for &(a, b) in &self.edges {
            m[(a as usize, b as usize)] = self.hop;
            m[(b as usize, a as usize)] = self.hop;
        }
        m
    }

    /// Gershgorin interval guaranteed to contain every eigenvalue.
    pub fn spectral_bounds(&self) -> (f64, f64) {
        let mut radius = vec![0.0f64; self.dim];
        for &(a, b) in &self.edges {
            radius[a as usize] += self.hop.abs();
            radius[b as usize] += self.hop.abs();
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (&d, &r) in self.diagonal.iter().zip(&radius) {
            lo = lo.min(d - r);
            hi = hi.max(d + r);
        }
        (lo, hi)
    }
}

/// Complex amplitudes over the solution basis.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeVector(pub Vec<Complex64>);

impl AmplitudeVector {
    /// Unit amplitude on a single solution.
    pub fn basis_state(dim: usize, index: usize) -> AmplitudeVector {
        let mut a = vec![Complex64::ZERO; dim];
        a[index] = Complex64::ONE;
        AmplitudeVector(a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// |a_α|² for every solution.
    pub fn probabilities(&self) -> Vec<f64> {
        self.0.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn inner(&self, other: &AmplitudeVector) -> Complex64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Total probability d_n on the n+1 trivial solutions.
pub fn trivial_probability(basis: &SolutionBasis, psi: &AmplitudeVector) -> f64 {
    basis
        .trivial_indices()
        .into_iter()
        .map(|i| psi.0[i].norm_sqr())
        .sum()
}

/// Per-solution trivial probability c_n = d_n / (n + 1).
pub fn per_trivial_probability(basis: &SolutionBasis, psi: &AmplitudeVector) -> f64 {
    trivial_probability(basis, psi) / (basis.vertex_count() as f64 + 1.0)
}

/// Shannon entropy S = −Σ |a_α|² ln |a_α|² of the amplitude distribution.
pub fn entropy(psi: &AmplitudeVector) -> f64 {
    let s: f64 = psi
        .0
        .iter()
        .map(|a| a.norm_sqr())
        .filter(|&p| p > 1e-30)
        .map(|p| -p * p.ln())
        .sum();
    // A pure basis state sums to −0.0; keep the sign positive.
    s + 0.0
}

/// Entropy normalized to the uniform-distribution value, S̄ = S / ln N_s.
pub fn normalized_entropy(psi: &AmplitudeVector) -> f64 {
    if psi.len() <= 1 {
        return 0.0;
    }
    entropy(psi) / (psi.len() as f64).ln()
}

/// P_k: total probability on solutions of each cardinality, k = 0..=max.
pub fn cardinality_distribution(basis: &SolutionBasis, psi: &AmplitudeVector) -> Vec<f64> {
    let mut out = vec![0.0; basis.max_cardinality() + 1];
    for (s, a) in basis.solutions().iter().zip(&psi.0) {
        out[s.cardinality()] += a.norm_sqr();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_random_graph, max_edges, Graph};
    use crate::solutions::{enumerate_independent_sets, median_adjacency};
    use rand::{RngExt, SeedableRng};
    use rand_pcg::Pcg64Mcg;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn gauge_for(g: &Graph, theta: f64) -> (SolutionBasis, GaugeMatrix) {
        let basis = enumerate_independent_sets(g).unwrap();
        let median = median_adjacency(&basis);
        let gauge = GaugeMatrix::build(&basis, &median, theta);
        (basis, gauge)
    }

    #[test]
    fn k2_matrix_entries() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let (_, a) = gauge_for(&g, FRAC_PI_2);
        assert_eq!(a.dim(), 3);
        for &d in a.diagonal() {
            assert!((d + 1.0).abs() < 1e-12);
        }
        assert!((a.hop() - 0.5).abs() < 1e-12);
        assert_eq!(a.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn p3_is_shifted_adjacency() {
        // At θ = π/2 every diagonal entry of a path on three vertices
        // equals −3/2 regardless of cardinality.
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let (_, a) = gauge_for(&g, FRAC_PI_2);
        let dense = a.to_dense();
        for i in 0..a.dim() {
            assert!((dense[(i, i)] + 1.5).abs() < 1e-12);
        }
        for &(p, q) in a.edges() {
            assert!((dense[(p as usize, q as usize)] - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn poles_have_no_hopping() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        for theta in [0.0, PI] {
            let (basis, a) = gauge_for(&g, theta);
            assert!(a.hop().abs() < 1e-15);
            for (s, &d) in basis.solutions().iter().zip(a.diagonal()) {
                let k = s.cardinality() as f64;
                let expect = if theta == 0.0 { -(3.0 - k) } else { -k };
                assert!((d - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn apply_matches_dense() {
        let mut rng = Pcg64Mcg::seed_from_u64(17);
        for _ in 0..10 {
            let n = rng.random_range(2..=9usize);
            let m = rng.random_range(0..=max_edges(n));
            let g = generate_random_graph(n, m, rng.random()).unwrap();
            let theta = rng.random_range(0.0..PI);
            let (_, a) = gauge_for(&g, theta);
            let x: Vec<Complex64> = (0..a.dim())
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect();
            let y = a.apply(&x);
            let dense = a.to_dense();
            for i in 0..a.dim() {
                let mut want = Complex64::ZERO;
                for j in 0..a.dim() {
                    want += dense[(i, j)] * x[j];
                }
                assert!((y[i] - want).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn spectral_bounds_contain_spectrum() {
        let mut rng = Pcg64Mcg::seed_from_u64(23);
        for _ in 0..8 {
            let n = rng.random_range(2..=8usize);
            let m = rng.random_range(0..=max_edges(n));
            let g = generate_random_graph(n, m, rng.random()).unwrap();
            let (_, a) = gauge_for(&g, rng.random_range(0.0..PI));
            let (lo, hi) = a.spectral_bounds();
            let eig = a.to_dense().symmetric_eigen();
            for &lambda in eig.eigenvalues.iter() {
                assert!(lambda >= lo - 1e-12 && lambda <= hi + 1e-12);
            }
        }
    }

    #[test]
    fn entropy_limits() {
        let delta = AmplitudeVector::basis_state(8, 3);
        assert!(entropy(&delta).abs() < 1e-15);
        assert!(normalized_entropy(&delta).abs() < 1e-15);

        let dim = 16;
        let amp = Complex64::new((1.0 / dim as f64).sqrt(), 0.0);
        let uniform = AmplitudeVector(vec![amp; dim]);
        assert!((entropy(&uniform) - (dim as f64).ln()).abs() < 1e-12);
        assert!((normalized_entropy(&uniform) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trivial_probability_on_basis_states() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let basis = enumerate_independent_sets(&g).unwrap();
        let empty = AmplitudeVector::basis_state(basis.len(), 0);
        assert!((trivial_probability(&basis, &empty) - 1.0).abs() < 1e-15);
        assert!((per_trivial_probability(&basis, &empty) - 0.25).abs() < 1e-15);
        // Index 4 is the only two-vertex solution of the path.
        let pair = AmplitudeVector::basis_state(basis.len(), 4);
        assert!(trivial_probability(&basis, &pair).abs() < 1e-15);
    }

    #[test]
    fn cardinality_distribution_partitions_norm() {
        let mut rng = Pcg64Mcg::seed_from_u64(29);
        let g = generate_random_graph(8, 12, 99).unwrap();
        let basis = enumerate_independent_sets(&g).unwrap();
        let psi = AmplitudeVector(
            (0..basis.len())
                .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                .collect(),
        );
        let dist = cardinality_distribution(&basis, &psi);
        let total: f64 = dist.iter().sum();
        assert!((total - psi.norm().powi(2)).abs() < 1e-12);
        assert_eq!(dist.len(), basis.max_cardinality() + 1);
    }
}
