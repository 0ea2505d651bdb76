//! Unitary evolution generated by the gauge matrix.
//!
//! Two interchangeable routes compute ψ(t) = exp(itÃ)ψ(0): an exact dense
//! eigendecomposition, practical up to a few thousand solutions, and a
//! Chebyshev expansion of the exponential that needs only sparse
//! matrix-vector products. The holonomy of one full loop is the special
//! case t = 2π.

use crate::error::{Error, Result};
use crate::gauge::{AmplitudeVector, GaugeMatrix};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::TAU;

/// Largest dimension at which `Method::Auto` picks the dense route.
pub const AUTO_DENSE_CUTOFF: usize = 512;

/// How to apply exp(itÃ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Dense below [`AUTO_DENSE_CUTOFF`], Chebyshev above.
    Auto,
    DenseEig,
    Chebyshev,
}

impl Method {
    fn resolve(self, dim: usize) -> Method {
        match self {
            Method::Auto => {
                if dim <= AUTO_DENSE_CUTOFF {
                    Method::DenseEig
                } else {
                    Method::Chebyshev
                }
            }
            other => other,
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "auto" => Ok(Method::Auto),
            "dense" => Ok(Method::DenseEig),
            "chebyshev" => Ok(Method::Chebyshev),
            other => Err(Error::InvalidArgument(format!(
                "unknown method '{other}' (expected auto, dense, or chebyshev)"
            ))),
        }
    }
}

/// Cached eigendecomposition Ã = Q Λ Qᵀ; evolution is Q e^{itΛ} Qᵀ ψ.
pub struct DensePropagator {
    dim: usize,
    eigenvalues: Vec<f64>,
    eigenvectors: DMatrix<f64>,
}

impl DensePropagator {
    pub fn new(a: &GaugeMatrix) -> Result<DensePropagator> {
        let eig = a
            .to_dense()
            .try_symmetric_eigen(1e-13, 0)
            .ok_or_else(|| Error::Numerical("symmetric eigensolver failed".into()))?;
        Ok(DensePropagator {
            dim: a.dim(),
            eigenvalues: eig.eigenvalues.iter().copied().collect(),
            eigenvectors: eig.eigenvectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn apply(&self, psi: &AmplitudeVector, t: f64) -> AmplitudeVector {
        assert_eq!(psi.len(), self.dim);
        // Exact identity at t = 0; Q Qᵀ alone would leave ~1e-15 residue.
        if t == 0.0 {
            return psi.clone();
        }
        let q = &self.eigenvectors;
        let mut coeffs = vec![Complex64::ZERO; self.dim];
        for (j, coeff) in coeffs.iter_mut().enumerate() {
            let mut s = Complex64::ZERO;
            for i in 0..self.dim {
                s += q[(i, j)] * psi.0[i];
            }
            *coeff = s * Complex64::from_polar(1.0, t * self.eigenvalues[j]);
        }
        let mut out = vec![Complex64::ZERO; self.dim];
        for (j, &c) in coeffs.iter().enumerate() {
            for (i, o) in out.iter_mut().enumerate() {
                *o += q[(i, j)] * c;
            }
        }
        AmplitudeVector(out)
    }
}

/// J_0(x)..J_kmax(x) for x ≥ 0 by Miller's downward recurrence,
/// normalized with J_0 + 2·Σ J_{2k} = 1.
fn bessel_j_sequence(x: f64, k_max: usize) -> Vec<f64> {
    assert!(x >= 0.0);
    if x == 0.0 {
        let mut out = vec![0.0; k_max + 1];
        out[0] = 1.0;
        return out;
    }
    let mut start = k_max + 20 + (40.0 * (k_max as f64 + 1.0)).sqrt() as usize;
    if start % 2 == 1 {
        start += 1;
    }
    let mut out = vec![0.0; k_max + 1];
    let mut jp1 = 0.0f64;
    let mut j = 1e-300f64;
    let mut norm = 0.0f64;
    for k in (0..=start).rev() {
        if k <= k_max {
            out[k] = j;
        }
        if k % 2 == 0 {
            norm += if k == 0 { j } else { 2.0 * j };
        }
        let jm1 = (2.0 * (k as f64) / x) * j - jp1;
        jp1 = j;
        j = jm1;
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp1 *= 1e-250;
            norm *= 1e-250;
            for v in out.iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // Loop ran one extra step past k = 0; norm already complete.
    for v in out.iter_mut() {
        *v /= norm;
    }
    out
}

fn scaled_apply(a: &GaugeMatrix, center: f64, half_width: f64, v: &[Complex64]) -> Vec<Complex64> {
    let mut y = a.apply(v);
    for (yi, &vi) in y.iter_mut().zip(v) {
        *yi = (*yi - center * vi) / half_width;
    }
    y
}

/// exp(itÃ)ψ by Chebyshev expansion.
///
/// The spectrum is mapped into [−1, 1] with Gershgorin bounds and the
/// exponential expanded as Σ iᵏ(2−δ_{k0}) J_k(ts) T_k(B); the series is
/// summed to where the Bessel coefficients are far below machine
/// precision, so truncation error is negligible against roundoff.
pub fn chebyshev_apply(a: &GaugeMatrix, psi: &AmplitudeVector, t: f64) -> AmplitudeVector {
    assert_eq!(psi.len(), a.dim());
    let (lo, hi) = a.spectral_bounds();
    let center = 0.5 * (hi + lo);
    let half_width = 0.5 * (hi - lo);
    if half_width < 1e-14 {
        let phase = Complex64::from_polar(1.0, t * center);
        return AmplitudeVector(psi.0.iter().map(|&a| phase * a).collect());
    }
    let x = t * half_width;
    let k_max = (x.abs() + 30.0 + 4.0 * x.abs().sqrt()).ceil() as usize;
    let bessel = bessel_j_sequence(x.abs(), k_max);
    // i^k J_k(x) with J_k(−x) = (−1)^k J_k(x) folds into powers of ±i.
    let base = Complex64::new(0.0, if x < 0.0 { -1.0 } else { 1.0 });

    let mut acc: Vec<Complex64> = psi.0.iter().map(|&a| bessel[0] * a).collect();
    let mut t_prev = psi.0.clone();
    let mut t_curr = scaled_apply(a, center, half_width, &t_prev);
    let mut phase = base;
    for (a_i, &t_i) in acc.iter_mut().zip(&t_curr) {
        *a_i += 2.0 * phase * bessel[1] * t_i;
    }
    for bk in bessel.iter().skip(2) {
        let mut t_next = scaled_apply(a, center, half_width, &t_curr);
        for (nx, &prev) in t_next.iter_mut().zip(&t_prev) {
            *nx = 2.0 * *nx - prev;
        }
        phase *= base;
        for (a_i, &t_i) in acc.iter_mut().zip(&t_next) {
            *a_i += 2.0 * phase * bk * t_i;
        }
        t_prev = t_curr;
        t_curr = t_next;
    }
    let global = Complex64::from_polar(1.0, t * center);
    AmplitudeVector(acc.into_iter().map(|a| global * a).collect())
}

/// ψ(t) = exp(itÃ)ψ via the chosen route.
pub fn evolve(a: &GaugeMatrix, psi: &AmplitudeVector, t: f64, method: Method) -> Result<AmplitudeVector> {
    match method.resolve(a.dim()) {
        Method::DenseEig => Ok(DensePropagator::new(a)?.apply(psi, t)),
        Method::Chebyshev => Ok(chebyshev_apply(a, psi, t)),
        Method::Auto => unreachable!("resolve removes Auto"),
    }
}

/// ψ after one full loop: exp(2πiÃ)ψ.
pub fn holonomy_apply(a: &GaugeMatrix, psi: &AmplitudeVector, method: Method) -> Result<AmplitudeVector> {
    evolve(a, psi, TAU, method)
}

/// ψ(tᵢ) at a nondecreasing sequence of times, sharing work across the
/// sequence: the dense route reuses one eigendecomposition, the Chebyshev
/// route steps incrementally from each time to the next.
pub fn evolve_series(
    a: &GaugeMatrix,
    psi: &AmplitudeVector,
    times: &[f64],
    method: Method,
) -> Result<Vec<AmplitudeVector>> {
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidArgument(
            "evolution times must be nondecreasing".into(),
        ));
    }
    match method.resolve(a.dim()) {
        Method::DenseEig => {
            let prop = DensePropagator::new(a)?;
            Ok(times.iter().map(|&t| prop.apply(psi, t)).collect())
        }
        Method::Chebyshev => {
            let mut out = Vec::with_capacity(times.len());
            let mut current = psi.clone();
            let mut now = 0.0;
            for &t in times {
                current = chebyshev_apply(a, &current, t - now);
                now = t;
                out.push(current.clone());
            }
            Ok(out)
        }
        Method::Auto => unreachable!("resolve removes Auto"),
    }
}

/// Full holonomy matrix W = exp(2πiÃ), column by column.
pub fn holonomy_matrix(a: &GaugeMatrix) -> Result<DMatrix<Complex64>> {
    let prop = DensePropagator::new(a)?;
    let dim = a.dim();
    let mut w = DMatrix::zeros(dim, dim);
    for j in 0..dim {
        let col = prop.apply(&AmplitudeVector::basis_state(dim, j), TAU);
        for i in 0..dim {
            w[(i, j)] = col.0[i];
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_random_graph, max_edges, Graph};
    use crate::solutions::{enumerate_independent_sets, median_adjacency};
    use rand::{RngExt, SeedableRng};
    use rand_pcg::Pcg64Mcg;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn gauge_for(g: &Graph, theta: f64) -> GaugeMatrix {
        let basis = enumerate_independent_sets(g).unwrap();
        let median = median_adjacency(&basis);
        GaugeMatrix::build(&basis, &median, theta)
    }

    fn random_gauge(rng: &mut Pcg64Mcg, n_max: usize) -> GaugeMatrix {
        let n = rng.random_range(2..=n_max);
        let m = rng.random_range(0..=max_edges(n));
        let g = generate_random_graph(n, m, rng.random()).unwrap();
        gauge_for(&g, rng.random_range(0.1..PI - 0.1))
    }

    fn random_state(rng: &mut Pcg64Mcg, dim: usize) -> AmplitudeVector {
        let mut v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in v.iter_mut() {
            *a /= norm;
        }
        AmplitudeVector(v)
    }

    /// Quadrature oracle J_k(x) = (1/π)∫₀^π cos(kτ − x sin τ) dτ.
    fn bessel_reference(k: usize, x: f64) -> f64 {
        let n = 20_000;
        let h = PI / n as f64;
        let f = |tau: f64| (k as f64 * tau - x * tau.sin()).cos();
        let mut sum = f(0.0) + f(PI);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            sum += w * f(i as f64 * h);
        }
        sum * h / 3.0 / PI
    }

    #[test]
    fn bessel_matches_quadrature() {
        for &x in &[0.25, 1.0, 5.0, 20.0] {
            let seq = bessel_j_sequence(x, 40);
            for k in 0..=40 {
                assert!(
                    (seq[k] - bessel_reference(k, x)).abs() < 1e-12,
                    "J_{k}({x})"
                );
            }
        }
    }

    #[test]
    fn bessel_sum_of_squares() {
        for &x in &[0.5, 3.0, 15.0, 80.0] {
            let k_max = (x + 60.0) as usize;
            let seq = bessel_j_sequence(x, k_max);
            let total = seq[0] * seq[0]
                + 2.0 * seq[1..].iter().map(|j| j * j).sum::<f64>();
            assert!((total - 1.0).abs() < 1e-12, "x = {x}");
        }
    }

    #[test]
    fn k2_holonomy_closed_form() {
        // One edge, loop angle π/2: starting on the empty solution, the
        // returning amplitudes are cos(√2 π) on it and equal shares of
        // i·sin(√2 π) on the two singletons.
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let a = gauge_for(&g, FRAC_PI_2);
        let psi0 = AmplitudeVector::basis_state(3, 0);
        let arg = PI * 2.0f64.sqrt();
        let expect = [
            arg.cos().powi(2),
            arg.sin().powi(2) / 2.0,
            arg.sin().powi(2) / 2.0,
        ];
        let s_expect: f64 = expect.iter().map(|&p| -p * p.ln()).sum();
        for method in [Method::DenseEig, Method::Chebyshev] {
            let psi = holonomy_apply(&a, &psi0, method).unwrap();
            for (p, e) in psi.probabilities().iter().zip(&expect) {
                assert!((p - e).abs() < 1e-10);
            }
            let s = crate::gauge::entropy(&psi);
            assert!((s - s_expect).abs() < 1e-10);
            let sbar = crate::gauge::normalized_entropy(&psi);
            assert!((sbar - 0.8191685).abs() < 1e-6);
        }
    }

    #[test]
    fn poles_give_identity_holonomy() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for theta in [0.0, PI] {
            let a = gauge_for(&g, theta);
            let mut rng = Pcg64Mcg::seed_from_u64(7);
            let psi0 = random_state(&mut rng, a.dim());
            for method in [Method::DenseEig, Method::Chebyshev] {
                let psi = holonomy_apply(&a, &psi0, method).unwrap();
                for (out, init) in psi.0.iter().zip(&psi0.0) {
                    assert!((out - init).norm() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn zero_time_is_identity() {
        let mut rng = Pcg64Mcg::seed_from_u64(13);
        let a = random_gauge(&mut rng, 7);
        let psi0 = random_state(&mut rng, a.dim());
        for method in [Method::DenseEig, Method::Chebyshev] {
            let psi = evolve(&a, &psi0, 0.0, method).unwrap();
            for (out, init) in psi.0.iter().zip(&psi0.0) {
                assert!((out - init).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn dense_and_chebyshev_agree() {
        let mut rng = Pcg64Mcg::seed_from_u64(41);
        for _ in 0..12 {
            let a = random_gauge(&mut rng, 8);
            let psi0 = random_state(&mut rng, a.dim());
            let t = rng.random_range(0.0..30.0);
            let dense = evolve(&a, &psi0, t, Method::DenseEig).unwrap();
            let cheb = evolve(&a, &psi0, t, Method::Chebyshev).unwrap();
            for (d, c) in dense.0.iter().zip(&cheb.0) {
                assert!((d - c).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn negative_time_inverts() {
        let mut rng = Pcg64Mcg::seed_from_u64(43);
        let a = random_gauge(&mut rng, 7);
        let psi0 = random_state(&mut rng, a.dim());
        let fwd = chebyshev_apply(&a, &psi0, 5.3);
        let back = chebyshev_apply(&a, &fwd, -5.3);
        for (out, init) in back.0.iter().zip(&psi0.0) {
            assert!((out - init).norm() < 1e-11);
        }
    }

    #[test]
    fn three_loops_compose() {
        let mut rng = Pcg64Mcg::seed_from_u64(47);
        let a = random_gauge(&mut rng, 7);
        let psi0 = random_state(&mut rng, a.dim());
        let mut looped = psi0.clone();
        for _ in 0..3 {
            looped = holonomy_apply(&a, &looped, Method::DenseEig).unwrap();
        }
        let direct = evolve(&a, &psi0, 3.0 * TAU, Method::DenseEig).unwrap();
        for (l, d) in looped.0.iter().zip(&direct.0) {
            assert!((l - d).norm() < 1e-9);
        }
    }

    #[test]
    fn series_matches_direct_and_conserves_norm() {
        let mut rng = Pcg64Mcg::seed_from_u64(53);
        let a = random_gauge(&mut rng, 8);
        let psi0 = random_state(&mut rng, a.dim());
        let times: Vec<f64> = (0..=100).map(|i| i as f64 * (10.0 * TAU) / 100.0).collect();
        let dense = evolve_series(&a, &psi0, &times, Method::DenseEig).unwrap();
        let cheb = evolve_series(&a, &psi0, &times, Method::Chebyshev).unwrap();
        for (d, c) in dense.iter().zip(&cheb) {
            assert!((d.norm() - 1.0).abs() < 1e-10);
            assert!((c.norm() - 1.0).abs() < 1e-8);
            for (di, ci) in d.0.iter().zip(&c.0) {
                assert!((di - ci).norm() < 1e-8);
            }
        }
        let direct = evolve(&a, &psi0, times[73], Method::DenseEig).unwrap();
        for (s, d) in cheb[73].0.iter().zip(&direct.0) {
            assert!((s - d).norm() < 1e-8);
        }
    }

    #[test]
    fn series_rejects_decreasing_times() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let a = gauge_for(&g, FRAC_PI_2);
        let psi0 = AmplitudeVector::basis_state(3, 0);
        assert!(evolve_series(&a, &psi0, &[1.0, 0.5], Method::Auto).is_err());
    }

    #[test]
    fn holonomy_matrix_is_unitary() {
        let mut rng = Pcg64Mcg::seed_from_u64(59);
        for _ in 0..5 {
            let a = random_gauge(&mut rng, 7);
            let w = holonomy_matrix(&a).unwrap();
            let gram = w.adjoint() * &w;
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let expect = if i == j { 1.0 } else { 0.0 };
                    assert!((gram[(i, j)] - expect).norm() < 1e-10);
                }
            }
        }
    }
}
