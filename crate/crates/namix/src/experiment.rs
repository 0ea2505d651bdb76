//! Batch experiment harness: scaling studies, entropy traces, fits.
//!
//! Two regimes are studied over random G(n, m) instances. Sparse graphs
//! with m = n keep exponentially many solutions, so one loop leaves every
//! trivial solution with exponentially small probability. Dense graphs
//! with m = ⌊n²/4⌋ have polynomially many solutions and the trivial
//! probability decays as a power law. Both claims are measured per
//! instance, averaged per n, and pinned down with least-squares fits.
//!
//! Instances run in a parallel worker pool; records are sorted by
//! (n, instance index) before emission so output bytes never depend on
//! scheduling, and per-instance seeds derive from the master seed by a
//! fixed mixing function.

use crate::error::{Error, Result};
use crate::gauge::{
    entropy, normalized_entropy, trivial_probability, AmplitudeVector, GaugeMatrix,
};
use crate::graph::{generate_random_graph, Graph};
use crate::propagate::{evolve_series, Method};
use crate::solutions::{
    enumerate_independent_sets_with_limit, median_adjacency, DEFAULT_ENUMERATION_LIMIT,
};
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, TAU};
use std::time::Instant;

/// Ordinary least-squares line fit.
#[derive(Debug, Clone, Serialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    pub slope_stderr: f64,
    pub residual_variance: f64,
    pub points: usize,
}

/// The pinned JSON shape for fit output.
#[derive(Debug, Clone, Serialize)]
pub struct FitSummary {
    pub slope: f64,
    pub intercept: f64,
    pub stderr: f64,
    pub points: usize,
}

impl FitResult {
    pub fn summary(&self) -> FitSummary {
        FitSummary {
            slope: self.slope,
            intercept: self.intercept,
            stderr: self.slope_stderr,
            points: self.points,
        }
    }
}

/// Least-squares line through (xs, ys); slope standard error from the
/// residual variance (zero for a two-point fit).
pub fn fit_linear(xs: &[f64], ys: &[f64]) -> Result<FitResult> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidArgument(
            "fit needs equally many x and y values".into(),
        ));
    }
    let count = xs.len();
    if count < 2 {
        return Err(Error::InvalidArgument("fit needs at least 2 points".into()));
    }
    let mean_x = xs.iter().sum::<f64>() / count as f64;
    let mean_y = ys.iter().sum::<f64>() / count as f64;
    let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
    if sxx < 1e-12 {
        return Err(Error::Numerical(
            "fit abscissa is degenerate (all x equal)".into(),
        ));
    }
    let sxy: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ssr: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - slope * x - intercept).powi(2))
        .sum();
    let residual_variance = if count > 2 {
        ssr / (count - 2) as f64
    } else {
        0.0
    };
    Ok(FitResult {
        slope,
        intercept,
        slope_stderr: (residual_variance / sxx).sqrt(),
        residual_variance,
        points: count,
    })
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Per-instance seed from (master seed, n, instance index): two rounds of
/// a bijective 64-bit mixer, so nearby inputs land far apart.
pub fn derive_seed(master: u64, n: usize, index: usize) -> u64 {
    splitmix(splitmix(master ^ splitmix(n as u64)) ^ index as u64)
}

/// One instance's measured quantities.
#[derive(Debug, Clone, Serialize)]
pub struct ExperimentRecord {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub theta: f64,
    pub ns: usize,
    pub dn: f64,
    pub cn: f64,
    pub sbar_2pi: f64,
    pub sbar_4pi: f64,
    pub sbar_6pi: f64,
    pub max_card: usize,
    pub walltime_ms: f64,
}

/// A per-instance failure kept alongside the successful records.
#[derive(Debug, Clone, Serialize)]
pub struct CaseFailure {
    pub n: usize,
    pub seed: u64,
    pub message: String,
}

/// Instance-averaged quantities at one n.
#[derive(Debug, Clone, Serialize)]
pub struct CaseAverage {
    pub n: usize,
    pub instances: usize,
    pub mean_ns: f64,
    pub mean_cn: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub predicted_max: Option<f64>,
}

/// Full output of one scaling study.
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub records: Vec<ExperimentRecord>,
    pub failures: Vec<CaseFailure>,
    pub averages: Vec<CaseAverage>,
    pub ns_fit: Option<FitResult>,
    pub cn_fit: Option<FitResult>,
}

/// Configuration shared by both scaling studies.
#[derive(Debug, Clone)]
pub struct CaseConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub instances: usize,
    pub theta: f64,
    pub seed: u64,
    /// Average log-values instead of logging averages.
    pub log_first: bool,
    pub enumeration_limit: usize,
}

impl CaseConfig {
    /// Sparse-regime defaults: m = n, θ = π/2, n ∈ [8, 18].
    pub fn case1() -> CaseConfig {
        CaseConfig {
            n_min: 8,
            n_max: 18,
            instances: 200,
            theta: FRAC_PI_2,
            seed: 1,
            log_first: false,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }

    /// Dense-regime defaults: m = ⌊n²/4⌋, θ = 1.2, n ∈ [8, 32].
    ///
    /// The enumeration cap is raised past the library default so the
    /// canonical range reaches n = 32; dense instances stay small.
    pub fn case2() -> CaseConfig {
        CaseConfig {
            n_min: 8,
            n_max: 32,
            instances: 200,
            theta: 1.2,
            seed: 1,
            log_first: false,
            enumeration_limit: 32,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CaseKind {
    Sparse,
    Dense,
}

impl CaseKind {
    fn edge_count(self, n: usize) -> usize {
        match self {
            CaseKind::Sparse => n,
            CaseKind::Dense => n * n / 4,
        }
    }
}

fn run_instance(
    kind: CaseKind,
    cfg: &CaseConfig,
    n: usize,
    index: usize,
) -> std::result::Result<ExperimentRecord, CaseFailure> {
    let seed = derive_seed(cfg.seed, n, index);
    let fail = |message: String| CaseFailure { n, seed, message };
    let m = kind.edge_count(n);
    let start = Instant::now();
    let g = generate_random_graph(n, m, seed).map_err(|e| fail(e.to_string()))?;
    let basis = enumerate_independent_sets_with_limit(&g, cfg.enumeration_limit)
        .map_err(|e| fail(e.to_string()))?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, cfg.theta);
    let psi0 = AmplitudeVector::basis_state(basis.len(), 0);
    let states = evolve_series(&gauge, &psi0, &[TAU, 2.0 * TAU, 3.0 * TAU], Method::Auto)
        .map_err(|e| fail(e.to_string()))?;
    let dn = trivial_probability(&basis, &states[0]);
    Ok(ExperimentRecord {
        n,
        m,
        seed,
        theta: cfg.theta,
        ns: basis.len(),
        dn,
        cn: dn / (n as f64 + 1.0),
        sbar_2pi: normalized_entropy(&states[0]),
        sbar_4pi: normalized_entropy(&states[1]),
        sbar_6pi: normalized_entropy(&states[2]),
        max_card: basis.max_cardinality(),
        walltime_ms: start.elapsed().as_secs_f64() * 1000.0,
    })
}

fn run_case(cfg: &CaseConfig, kind: CaseKind) -> Result<CaseReport> {
    if cfg.n_min < 3 || cfg.n_min > cfg.n_max {
        return Err(Error::InvalidArgument(
            "case study needs 3 ≤ n_min ≤ n_max".into(),
        ));
    }
    if cfg.instances == 0 {
        return Err(Error::InvalidArgument("case study needs instances ≥ 1".into()));
    }
    let tasks: Vec<(usize, usize)> = (cfg.n_min..=cfg.n_max)
        .flat_map(|n| (0..cfg.instances).map(move |i| (n, i)))
        .collect();
    let mut outcomes: Vec<((usize, usize), std::result::Result<ExperimentRecord, CaseFailure>)> =
        tasks
            .into_par_iter()
            .map(|(n, i)| ((n, i), run_instance(kind, cfg, n, i)))
            .collect();
    outcomes.sort_by_key(|&(key, _)| key);

    let mut records = Vec::new();
    let mut failures = Vec::new();
    for (_, outcome) in outcomes {
        match outcome {
            Ok(r) => records.push(r),
            Err(f) => failures.push(f),
        }
    }

    let mut averages: Vec<CaseAverage> = Vec::new();
    for n in cfg.n_min..=cfg.n_max {
        let at_n: Vec<&ExperimentRecord> = records.iter().filter(|r| r.n == n).collect();
        if at_n.is_empty() {
            continue;
        }
        let count = at_n.len() as f64;
        averages.push(CaseAverage {
            n,
            instances: at_n.len(),
            mean_ns: at_n.iter().map(|r| r.ns as f64).sum::<f64>() / count,
            mean_cn: at_n.iter().map(|r| r.cn).sum::<f64>() / count,
            predicted_max: match kind {
                CaseKind::Sparse => None,
                CaseKind::Dense => predicted_max_independent_size(n).ok(),
            },
        });
    }

    // Fit ordinates: either log of the mean or mean of the logs.
    let log_of = |v: f64, base2: bool| if base2 { v.log2() } else { v.ln() };
    let base2 = kind == CaseKind::Sparse;
    let mut xs_ns = Vec::new();
    let mut ys_ns = Vec::new();
    let mut xs_cn = Vec::new();
    let mut ys_cn = Vec::new();
    for avg in &averages {
        let nf = avg.n as f64;
        let (x_ns, x_cn) = match kind {
            CaseKind::Sparse => (nf, nf),
            CaseKind::Dense => ((nf / (nf / 2.0).ln()).ln(), nf.ln()),
        };
        let (y_ns, y_cn) = if cfg.log_first {
            let at_n: Vec<&ExperimentRecord> =
                records.iter().filter(|r| r.n == avg.n && r.cn > 0.0).collect();
            if at_n.is_empty() {
                continue;
            }
            let count = at_n.len() as f64;
            (
                at_n.iter().map(|r| log_of(r.ns as f64, base2)).sum::<f64>() / count,
                at_n.iter().map(|r| log_of(r.cn, base2)).sum::<f64>() / count,
            )
        } else {
            (log_of(avg.mean_ns, base2), log_of(avg.mean_cn, base2))
        };
        xs_ns.push(x_ns);
        ys_ns.push(y_ns);
        xs_cn.push(x_cn);
        ys_cn.push(y_cn);
    }
    let (ns_fit, cn_fit) = if xs_ns.len() >= 3 {
        (
            Some(fit_linear(&xs_ns, &ys_ns)?),
            Some(fit_linear(&xs_cn, &ys_cn)?),
        )
    } else {
        (None, None)
    };

    Ok(CaseReport {
        records,
        failures,
        averages,
        ns_fit,
        cn_fit,
    })
}

/// Sparse study: m = n per instance; fits log₂⟨N_s⟩ and log₂⟨c_n⟩
/// against n.
pub fn run_case1(cfg: &CaseConfig) -> Result<CaseReport> {
    run_case(cfg, CaseKind::Sparse)
}

/// Dense study: m = ⌊n²/4⌋ per instance; fits ln⟨N_s⟩ against
/// ln(n/ln(n/2)) and ln⟨c_n⟩ against ln n.
pub fn run_case2(cfg: &CaseConfig) -> Result<CaseReport> {
    run_case(cfg, CaseKind::Dense)
}

/// Expected largest independent set in the dense regime,
/// 4·(ln(n/(4·ln(n/2))) + 1).
pub fn predicted_max_independent_size(n: usize) -> Result<f64> {
    if n <= 2 {
        return Err(Error::InvalidArgument(
            "predicted size needs n ≥ 3 for a positive log argument".into(),
        ));
    }
    let nf = n as f64;
    Ok(4.0 * ((nf / (4.0 * (nf / 2.0).ln())).ln() + 1.0))
}

/// One sample of an entropy time series.
#[derive(Debug, Clone, Serialize)]
pub struct EntropySample {
    pub t: f64,
    pub s: f64,
    pub sbar: f64,
}

/// Diffusion entropy S(t), S̄(t) at `samples` uniformly spaced times in
/// [0, t_max], starting from the empty solution.
pub fn entropy_trace(
    g: &Graph,
    theta: f64,
    t_max: f64,
    samples: usize,
) -> Result<Vec<EntropySample>> {
    entropy_trace_with_limit(g, theta, t_max, samples, DEFAULT_ENUMERATION_LIMIT)
}

pub fn entropy_trace_with_limit(
    g: &Graph,
    theta: f64,
    t_max: f64,
    samples: usize,
    limit: usize,
) -> Result<Vec<EntropySample>> {
    if samples < 2 || t_max <= 0.0 {
        return Err(Error::InvalidArgument(
            "entropy trace needs samples ≥ 2 and t_max > 0".into(),
        ));
    }
    let basis = enumerate_independent_sets_with_limit(g, limit)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, theta);
    let psi0 = AmplitudeVector::basis_state(basis.len(), 0);
    let times: Vec<f64> = (0..samples)
        .map(|i| t_max * i as f64 / (samples - 1) as f64)
        .collect();
    let states = evolve_series(&gauge, &psi0, &times, Method::Auto)?;
    Ok(times
        .into_iter()
        .zip(states)
        .map(|(t, psi)| EntropySample {
            t,
            s: entropy(&psi),
            sbar: normalized_entropy(&psi),
        })
        .collect())
}

/// Mean and standard deviation of S̄ over the samples with t in
/// [t_lo, t_hi]; None when the window is empty.
pub fn entropy_window_stats(
    samples: &[EntropySample],
    t_lo: f64,
    t_hi: f64,
) -> Option<(f64, f64)> {
    let window: Vec<f64> = samples
        .iter()
        .filter(|s| s.t >= t_lo && s.t <= t_hi)
        .map(|s| s.sbar)
        .collect();
    if window.is_empty() {
        return None;
    }
    let mean = window.iter().sum::<f64>() / window.len() as f64;
    let var = window.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / window.len() as f64;
    Some((mean, var.sqrt()))
}

/// Case CSV with the pinned header. The wall-time column is written as 0
/// so repeated runs with the same flags stay byte-identical; measured
/// times remain in the records for JSON output.
pub fn case_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from("n,m,seed,theta,Ns,dn,cn,Sbar2pi,max_card,walltime_ms\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},0\n",
            r.n, r.m, r.seed, r.theta, r.ns, r.dn, r.cn, r.sbar_2pi, r.max_card
        ));
    }
    out
}

/// Entropy trace CSV: `t,S,Sbar`.
pub fn entropy_csv(samples: &[EntropySample]) -> String {
    let mut out = String::from("t,S,Sbar\n");
    for s in samples {
        out.push_str(&format!("{},{},{}\n", s.t, s.s, s.sbar));
    }
    out
}
