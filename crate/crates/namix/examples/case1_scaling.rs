//! Sparse-regime scaling at desk scale.
//!
//! Random instances with m = n keep exponentially many solutions, and
//! after one loop the probability left on any single trivial solution
//! shrinks exponentially with n. A reduced run (fewer instances, smaller
//! n ceiling than the full study) already shows both exponents: the
//! fitted log₂⟨N_s⟩ slope sits near 0.75 and the log₂⟨c_n⟩ slope is
//! clearly negative.

use namix::experiment::{case_csv, run_case1, CaseConfig};

fn main() -> namix::Result<()> {
    let cfg = CaseConfig {
        n_min: 8,
        n_max: 13,
        instances: 60,
        seed: 42,
        ..CaseConfig::case1()
    };
    eprintln!(
        "case 1: n ∈ [{}, {}], m = n, θ = {:.4}, {} instances per n",
        cfg.n_min, cfg.n_max, cfg.theta, cfg.instances
    );
    let report = run_case1(&cfg)?;
    for avg in &report.averages {
        eprintln!(
            "  n={:2}: ⟨N_s⟩ = {:8.2}  ⟨c_n⟩ = {:.3e}",
            avg.n, avg.mean_ns, avg.mean_cn
        );
    }
    let ns_fit = report.ns_fit.as_ref().expect("three or more n values");
    let cn_fit = report.cn_fit.as_ref().expect("three or more n values");
    eprintln!(
        "log2<Ns> slope {:.4} ± {:.4} (full-size study: 0.748)",
        ns_fit.slope, ns_fit.slope_stderr
    );
    eprintln!(
        "log2<cn> slope {:.4} ± {:.4} (full-size study: -0.654)",
        cn_fit.slope, cn_fit.slope_stderr
    );
    assert!(ns_fit.slope > 0.6 && ns_fit.slope < 0.9);
    assert!(cn_fit.slope < -0.3);

    print!("{}", case_csv(&report.records));
    Ok(())
}
