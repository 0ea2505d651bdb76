//! Dense-regime scaling at desk scale.
//!
//! With m = ⌊n²/4⌋ edges the solution count grows only polynomially and
//! the per-trivial-solution probability c_n decays as a power law, so a
//! random guess is no longer hopeless; the quantum loop still wins by a
//! polynomial factor. The run fits ln⟨N_s⟩ against ln(n/ln(n/2)) and
//! ln⟨c_n⟩ against ln n, and reports the predicted largest independent
//! set beside the measured one.

use namix::experiment::{run_case2, CaseConfig};

fn main() -> namix::Result<()> {
    let cfg = CaseConfig {
        n_min: 8,
        n_max: 20,
        instances: 60,
        seed: 42,
        ..CaseConfig::case2()
    };
    eprintln!(
        "case 2: n ∈ [{}, {}], m = n²/4, θ = {}, {} instances per n",
        cfg.n_min, cfg.n_max, cfg.theta, cfg.instances
    );
    let report = run_case2(&cfg)?;

    println!("n,mean_ns,mean_cn,predicted_max,measured_max");
    for avg in &report.averages {
        let measured_max = report
            .records
            .iter()
            .filter(|r| r.n == avg.n)
            .map(|r| r.max_card)
            .max()
            .unwrap();
        println!(
            "{},{},{},{:.3},{measured_max}",
            avg.n,
            avg.mean_ns,
            avg.mean_cn,
            avg.predicted_max.unwrap()
        );
    }

    let ns_fit = report.ns_fit.as_ref().expect("three or more n values");
    let cn_fit = report.cn_fit.as_ref().expect("three or more n values");
    eprintln!(
        "ln<Ns> vs ln(n/ln(n/2)): slope {:.3} ± {:.3} (full-size study: 5.68)",
        ns_fit.slope, ns_fit.slope_stderr
    );
    eprintln!(
        "ln<cn> vs ln n: slope {:.3} ± {:.3} (full-size study: -1.37)",
        cn_fit.slope, cn_fit.slope_stderr
    );
    assert!(cn_fit.slope < 0.0);
    Ok(())
}
