//! Thin command-line front end: argument parsing, file I/O, and output
//! formatting over the library. Data goes to stdout (or `--out`),
//! narration to stderr. Exit codes: 0 success, 1 usage error, 2 numerical
//! failure, 3 capacity exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use namix::adiabatic::{
    default_steps, evolve_adiabatic_with_limit, ground_projection_fidelity, initial_state,
};
use namix::error::{Error, Result};
use namix::experiment::{
    case_csv, entropy_csv, entropy_trace_with_limit, entropy_window_stats, fit_linear, run_case1,
    run_case2, CaseConfig, CaseReport,
};
use namix::gauge::{
    entropy, normalized_entropy, per_trivial_probability, trivial_probability, AmplitudeVector,
    GaugeMatrix,
};
use namix::graph::{generate_random_graph, Graph};
use namix::propagate::{evolve, holonomy_apply, Method};
use namix::solutions::{
    enumerate_independent_sets_with_limit, median_adjacency, SolutionBasis,
    DEFAULT_ENUMERATION_LIMIT,
};
use namix::twosat::{
    find_nontrivial_classical, find_nontrivial_via_2sat, graph_to_clauses, random_pair_baseline,
    random_triple_baseline,
};
use serde_json::json;
use std::f64::consts::{FRAC_PI_2, PI};
use std::path::PathBuf;
use std::process;

#[derive(Parser)]
#[command(
    name = "namix",
    version,
    about = "Non-abelian adiabatic mixing on graph independent-set problems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a uniform random graph with exactly m edges
    Gen(GenArgs),
    /// Enumerate all independent sets into the canonical solution basis
    Enumerate(EnumerateArgs),
    /// Apply one holonomy loop to the empty-set state
    Holonomy(EvolveArgs),
    /// Diffuse the empty-set state through the median graph for time t
    Diffuse(DiffuseArgs),
    /// Validate the holonomy against full 2^n adiabatic evolution
    AdiabaticCheck(AdiabaticArgs),
    /// Classical 2-SAT and random-guess baselines
    Baseline(BaselineArgs),
    /// Sparse-regime scaling study (m = n)
    Case1(CaseArgs),
    /// Dense-regime scaling study (m = n²/4)
    Case2(CaseArgs),
    /// Entropy time series of median-graph diffusion for one instance
    EntropyTrace(EntropyArgs),
    /// Least-squares line fit, reported as JSON
    Fit(FitArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

/// Instance selection shared by graph-consuming subcommands: read a graph
/// file or generate from (n, m, seed).
#[derive(Args)]
struct GraphSource {
    /// Graph file to read instead of generating
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Vertex count for a generated instance
    #[arg(long)]
    n: Option<usize>,
    /// Edge count for a generated instance
    #[arg(long)]
    m: Option<usize>,
    /// Seed for the generated instance
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

impl GraphSource {
    fn load(&self) -> Result<Graph> {
        if let Some(path) = &self.input {
            return Graph::parse(&std::fs::read_to_string(path)?);
        }
        match (self.n, self.m) {
            (Some(n), Some(m)) => generate_random_graph(n, m, self.seed),
            _ => Err(Error::InvalidArgument(
                "provide --input, or both --n and --m".into(),
            )),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write data here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

impl OutputArgs {
    fn write(&self, content: &str) -> Result<()> {
        match &self.out {
            Some(path) => std::fs::write(path, content)?,
            None => print!("{content}"),
        }
        Ok(())
    }
}

#[derive(Args)]
struct GenArgs {
    /// Vertex count
    #[arg(long)]
    n: usize,
    /// Edge count
    #[arg(long)]
    m: usize,
    /// Generator seed
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write the graph here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Emit the median adjacency (alpha,beta pairs) instead of the basis
    #[arg(long)]
    median: bool,
    /// Vertex-count cap for enumeration
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EvolveArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Loop cone angle θ in radians
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
    /// Propagation route: auto, dense, or chebyshev
    #[arg(long, default_value = "auto")]
    method: String,
    /// Vertex-count cap for enumeration
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DiffuseArgs {
    #[command(flatten)]
    evolve: EvolveArgs,
    /// Diffusion time
    #[arg(long)]
    t: f64,
}

#[derive(Args)]
struct AdiabaticArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Loop cone angle θ in radians
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
    /// Energy scale Δ of the problem Hamiltonian
    #[arg(long, default_value_t = 1.0)]
    delta: f64,
    /// Comma-separated loop durations T
    #[arg(long, default_value = "25,50,100,200,400", value_name = "LIST")]
    horizons: String,
    /// Fixed step count (default: max(1000, ceil(40·T·Δ)))
    #[arg(long)]
    steps: Option<usize>,
    /// Vertex-count cap for the 2^n simulation
    #[arg(long, default_value_t = namix::adiabatic::DEFAULT_SPIN_LIMIT)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BaselineArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Random-guess trials
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Seed for the random-guess draws
    #[arg(long = "trial-seed", default_value_t = 1)]
    trial_seed: u64,
    /// Emit the clause set in DIMACS CNF form instead of metrics
    #[arg(long)]
    dimacs: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CaseArgs {
    /// Smallest n (default: 8)
    #[arg(long = "n-min")]
    n_min: Option<usize>,
    /// Largest n (default: 18 sparse, 32 dense)
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Instances per n
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Loop cone angle θ (default: π/2 sparse, 1.2 dense)
    #[arg(long)]
    theta: Option<f64>,
    /// Master seed; per-instance seeds derive from it
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Average log-values instead of logging averages
    #[arg(long = "log-first")]
    log_first: bool,
    /// Vertex-count cap for enumeration (default: the case preset's cap)
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct EntropyArgs {
    #[command(flatten)]
    source: GraphSource,
    /// Loop cone angle θ in radians
    #[arg(long, default_value_t = FRAC_PI_2)]
    theta: f64,
    /// Largest diffusion time (default 10π)
    #[arg(long = "t-max", default_value_t = 10.0 * PI)]
    t_max: f64,
    /// Number of uniformly spaced samples in [0, t_max]
    #[arg(long, default_value_t = 400)]
    samples: usize,
    /// Vertex-count cap for enumeration
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_LIMIT)]
    limit: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct FitArgs {
    /// Comma-separated x values
    #[arg(long, value_name = "LIST", conflicts_with = "input")]
    xs: Option<String>,
    /// Comma-separated y values
    #[arg(long, value_name = "LIST", conflicts_with = "input")]
    ys: Option<String>,
    /// Two-column CSV file (header row allowed)
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Write the fit JSON here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        process::exit(err.exit_code());
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen(args) => {
            let g = generate_random_graph(args.n, args.m, args.seed)?;
            let text = g.to_text();
            match &args.out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Enumerate(args) => {
            let g = args.source.load()?;
            let basis = enumerate_independent_sets_with_limit(&g, args.limit)?;
            eprintln!(
                "n={} m={}: N_s={} max_card={}",
                g.vertex_count(),
                g.edge_count(),
                basis.len(),
                basis.max_cardinality()
            );
            let content = if args.median {
                let median = median_adjacency(&basis);
                match args.output.format {
                    Format::Csv => median.to_csv(),
                    Format::Json => format!(
                        "{}\n",
                        json!({
                            "ns": basis.len(),
                            "edges": median.len(),
                            "pairs": median.pairs(),
                        })
                    ),
                }
            } else {
                match args.output.format {
                    Format::Csv => basis.to_csv(),
                    Format::Json => format!(
                        "{}\n",
                        json!({
                            "n": g.vertex_count(),
                            "m": g.edge_count(),
                            "ns": basis.len(),
                            "max_card": basis.max_cardinality(),
                            "histogram": basis.cardinality_histogram(),
                        })
                    ),
                }
            };
            args.output.write(&content)
        }
        Command::Holonomy(args) => {
            let g = args.source.load()?;
            let (basis, psi) = evolve_instance(&g, &args, None)?;
            emit_state(&args, &g, &basis, &psi)
        }
        Command::Diffuse(args) => {
            let g = args.evolve.source.load()?;
            let (basis, psi) = evolve_instance(&g, &args.evolve, Some(args.t))?;
            emit_state(&args.evolve, &g, &basis, &psi)
        }
        Command::AdiabaticCheck(args) => run_adiabatic_check(args),
        Command::Baseline(args) => run_baseline(args),
        Command::Case1(args) => run_case_command(args, true),
        Command::Case2(args) => run_case_command(args, false),
        Command::EntropyTrace(args) => {
            let g = args.source.load()?;
            let trace =
                entropy_trace_with_limit(&g, args.theta, args.t_max, args.samples, args.limit)?;
            if let Some((mean, std)) = entropy_window_stats(&trace, 2.0 * PI, args.t_max) {
                eprintln!(
                    "S̄ over [2π, {:.3}]: mean {:.4}, std {:.4}",
                    args.t_max, mean, std
                );
            }
            let content = match args.output.format {
                Format::Csv => entropy_csv(&trace),
                Format::Json => format!("{}\n", serde_json::to_string(&trace).unwrap()),
            };
            args.output.write(&content)
        }
        Command::Fit(args) => run_fit(args),
    }
}

/// Build basis + gauge matrix for one instance and evolve the empty-set
/// state: a full loop when `t` is None, else diffusion for time t.
fn evolve_instance(
    g: &Graph,
    args: &EvolveArgs,
    t: Option<f64>,
) -> Result<(SolutionBasis, AmplitudeVector)> {
    let method: Method = args.method.parse()?;
    let basis = enumerate_independent_sets_with_limit(g, args.limit)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, args.theta);
    let psi0 = AmplitudeVector::basis_state(basis.len(), 0);
    let psi = match t {
        Some(t) => evolve(&gauge, &psi0, t, method)?,
        None => holonomy_apply(&gauge, &psi0, method)?,
    };
    Ok((basis, psi))
}

fn emit_state(
    args: &EvolveArgs,
    g: &Graph,
    basis: &SolutionBasis,
    psi: &AmplitudeVector,
) -> Result<()> {
    let dn = trivial_probability(basis, psi);
    let cn = per_trivial_probability(basis, psi);
    let sbar = normalized_entropy(psi);
    eprintln!(
        "n={} m={} N_s={}: d_n={dn:.6} c_n={cn:.6} S̄={sbar:.4}",
        g.vertex_count(),
        g.edge_count(),
        basis.len()
    );
    let probabilities = psi.probabilities();
    let content = match args.output.format {
        Format::Csv => {
            let mut out = String::from("index,bitmask,probability\n");
            for (i, p) in probabilities.iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", i, basis.solution(i).bits(), p));
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            json!({
                "n": g.vertex_count(),
                "m": g.edge_count(),
                "ns": basis.len(),
                "theta": args.theta,
                "dn": dn,
                "cn": cn,
                "entropy": entropy(psi),
                "sbar": sbar,
                "probabilities": probabilities,
            })
        ),
    };
    args.output.write(&content)
}

fn run_adiabatic_check(args: AdiabaticArgs) -> Result<()> {
    let g = args.source.load()?;
    let horizons: Vec<f64> = args
        .horizons
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad horizon value '{s}'")))
        })
        .collect::<Result<_>>()?;
    if horizons.is_empty() {
        return Err(Error::InvalidArgument("no horizons given".into()));
    }
    let basis = enumerate_independent_sets_with_limit(&g, args.limit)?;
    let median = median_adjacency(&basis);
    let gauge = GaugeMatrix::build(&basis, &median, args.theta);
    let pred = holonomy_apply(
        &gauge,
        &AmplitudeVector::basis_state(basis.len(), 0),
        Method::Auto,
    )?;
    let psi0 = initial_state(g.vertex_count());
    let mut rows = Vec::new();
    for &t_total in &horizons {
        let steps = args.steps.unwrap_or_else(|| default_steps(t_total, args.delta));
        let psi = evolve_adiabatic_with_limit(
            &g,
            args.theta,
            args.delta,
            t_total,
            steps,
            &psi0,
            args.limit,
        )?;
        let (leakage, fidelity) = ground_projection_fidelity(&psi, &basis, &pred);
        eprintln!("T={t_total}: steps={steps} leakage={leakage:.2e} fidelity={fidelity:.6}");
        rows.push((t_total, steps, leakage, fidelity));
    }
    let content = match args.output.format {
        Format::Csv => {
            let mut out = String::from("T,steps,leakage,fidelity\n");
            for (t, steps, leakage, fidelity) in &rows {
                out.push_str(&format!("{t},{steps},{leakage},{fidelity}\n"));
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            json!(rows
                .iter()
                .map(|(t, steps, leakage, fidelity)| json!({
                    "T": t,
                    "steps": steps,
                    "leakage": leakage,
                    "fidelity": fidelity,
                }))
                .collect::<Vec<_>>())
        ),
    };
    args.output.write(&content)
}

fn run_baseline(args: BaselineArgs) -> Result<()> {
    let g = args.source.load()?;
    if args.dimacs {
        return args.output.write(&graph_to_clauses(&g).to_dimacs());
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let expected = if n >= 2 {
        2.0 * m as f64 / (n as f64 * (n as f64 - 1.0))
    } else {
        0.0
    };
    let empirical = if n >= 2 {
        Some(random_pair_baseline(&g, args.trials, args.trial_seed)?)
    } else {
        None
    };
    let triple = if n >= 3 {
        Some(random_triple_baseline(&g, args.trials, args.trial_seed)?)
    } else {
        None
    };
    let scan = find_nontrivial_classical(&g);
    let sat = find_nontrivial_via_2sat(&g);
    let show = |s: Option<namix::graph::VertexSet>| match s {
        Some(set) => set.to_string(),
        None => "none".into(),
    };
    let content = match args.output.format {
        Format::Csv => {
            let mut out = String::from("metric,value\n");
            out.push_str(&format!("n,{n}\nm,{m}\n"));
            out.push_str(&format!("expected_pair_failure,{expected}\n"));
            if let Some(e) = empirical {
                out.push_str(&format!("empirical_pair_failure,{e}\n"));
            }
            if let Some(t) = triple {
                out.push_str(&format!("empirical_triple_failure,{t}\n"));
            }
            out.push_str(&format!("nontrivial_scan,{}\n", show(scan)));
            out.push_str(&format!("nontrivial_2sat,{}\n", show(sat)));
            out
        }
        Format::Json => format!(
            "{}\n",
            json!({
                "n": n,
                "m": m,
                "trials": args.trials,
                "expected_pair_failure": expected,
                "empirical_pair_failure": empirical,
                "empirical_triple_failure": triple,
                "nontrivial_scan": scan.map(|s| s.to_string()),
                "nontrivial_2sat": sat.map(|s| s.to_string()),
            })
        ),
    };
    args.output.write(&content)
}

fn run_case_command(args: CaseArgs, sparse: bool) -> Result<()> {
    let mut cfg = if sparse {
        CaseConfig::case1()
    } else {
        CaseConfig::case2()
    };
    if let Some(n_min) = args.n_min {
        cfg.n_min = n_min;
    }
    if let Some(n_max) = args.n_max {
        cfg.n_max = n_max;
    }
    if let Some(theta) = args.theta {
        cfg.theta = theta;
    }
    cfg.instances = args.instances;
    cfg.seed = args.seed;
    cfg.log_first = args.log_first;
    if let Some(limit) = args.limit {
        cfg.enumeration_limit = limit;
    }
    let report = if sparse {
        run_case1(&cfg)?
    } else {
        run_case2(&cfg)?
    };
    narrate_report(&report, sparse);
    let content = match args.output.format {
        Format::Csv => case_csv(&report.records),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
    };
    args.output.write(&content)
}

fn narrate_report(report: &CaseReport, sparse: bool) {
    for avg in &report.averages {
        let mut line = format!(
            "n={:2}: instances={} ⟨N_s⟩={:.2} ⟨c_n⟩={:.3e}",
            avg.n, avg.instances, avg.mean_ns, avg.mean_cn
        );
        if let Some(k) = avg.predicted_max {
            line.push_str(&format!(" predicted_max={k:.2}"));
        }
        eprintln!("{line}");
    }
    if !report.failures.is_empty() {
        eprintln!("{} instance(s) failed", report.failures.len());
    }
    let (ns_label, cn_label) = if sparse {
        ("log2<Ns> vs n", "log2<cn> vs n")
    } else {
        ("ln<Ns> vs ln(n/ln(n/2))", "ln<cn> vs ln n")
    };
    match &report.ns_fit {
        Some(fit) => eprintln!(
            "{ns_label}: slope {:.4} ± {:.4}, intercept {:.4}",
            fit.slope, fit.slope_stderr, fit.intercept
        ),
        None => eprintln!("{ns_label}: not fitted (fewer than 3 n values)"),
    }
    match &report.cn_fit {
        Some(fit) => eprintln!(
            "{cn_label}: slope {:.4} ± {:.4}, intercept {:.4}",
            fit.slope, fit.slope_stderr, fit.intercept
        ),
        None => eprintln!("{cn_label}: not fitted (fewer than 3 n values)"),
    }
}

fn parse_list(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::InvalidArgument(format!("bad numeric value '{s}'")))
        })
        .collect()
}

fn run_fit(args: FitArgs) -> Result<()> {
    let (xs, ys) = if let Some(path) = &args.input {
        let text = std::fs::read_to_string(path)?;
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() < 2 {
                return Err(Error::Parse {
                    line: i + 1,
                    msg: "expected two comma-separated columns".into(),
                });
            }
            match (fields[0].trim().parse(), fields[1].trim().parse()) {
                (Ok(x), Ok(y)) => {
                    xs.push(x);
                    ys.push(y);
                }
                // A single non-numeric row leading the file is a header.
                _ if i == 0 => continue,
                _ => {
                    return Err(Error::Parse {
                        line: i + 1,
                        msg: "expected numeric columns".into(),
                    })
                }
            }
        }
        (xs, ys)
    } else {
        match (&args.xs, &args.ys) {
            (Some(xs), Some(ys)) => (parse_list(xs)?, parse_list(ys)?),
            _ => {
                return Err(Error::InvalidArgument(
                    "provide --input, or both --xs and --ys".into(),
                ))
            }
        }
    };
    let fit = fit_linear(&xs, &ys)?;
    let content = format!("{}\n", serde_json::to_string(&fit.summary()).unwrap());
    match &args.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}
