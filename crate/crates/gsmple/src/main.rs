use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use gsmple::commands::{cmd_generate, cmd_learn, cmd_sweep};
use gsmple::RunConfig;
use gsmple_core::estimators::{EstimatorConfig, Method};
use gsmple_core::synthgen::GeneratorKind;
use gsmple_core::Learner;

#[derive(Parser)]
#[command(name = "gsmple", version, about = "Markov random field structure learning")]
struct Cli {
    /// TOML run configuration; flags override its values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Generator seed, or base seed for sweeps.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Sweep worker threads (0 = all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a synthetic dataset and its ground-truth graph.
    Generate(GenArgs),
    /// Learn a structure from a dataset CSV.
    Learn(LearnArgs),
    /// Run the ROC sweep over runs, thresholds and learners.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum EstimatorArg {
    Plugin,
    Knn,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Option<GeneratorKind>,
    #[arg(long)]
    n: Option<usize>,
    /// Trajectory length for the HMM generators.
    #[arg(long)]
    t_steps: Option<usize>,
    /// Ising coupling.
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Args)]
struct EstArgs {
    #[arg(long, value_enum)]
    estimator: Option<EstimatorArg>,
    #[arg(long)]
    k: Option<usize>,
    /// Rank-transform continuous columns before k-NN estimation.
    #[arg(long)]
    rank_transform: bool,
    #[arg(long)]
    max_edges: Option<usize>,
}

#[derive(Args)]
struct LearnArgs {
    #[arg(long)]
    data: Option<PathBuf>,
    /// Ground-truth edge file; adds metrics.json.
    #[arg(long)]
    truth: Option<PathBuf>,
    #[arg(long, value_parser = parse_learner)]
    algo: Option<Learner>,
    #[arg(long)]
    lambda: Option<f64>,
    #[command(flatten)]
    est: EstArgs,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    gen: GenArgs,
    /// Comma-separated learner names.
    #[arg(long, value_delimiter = ',', value_parser = parse_learner)]
    learners: Option<Vec<Learner>>,
    /// Comma-separated thresholds.
    #[arg(long, value_delimiter = ',')]
    lambdas: Option<Vec<f64>>,
    #[arg(long)]
    runs: Option<usize>,
    /// Record per-cell wall time (outputs are then not byte-reproducible).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    est: EstArgs,
}

fn parse_kind(s: &str) -> Result<GeneratorKind, String> {
    s.parse().map_err(|e: gsmple_core::Error| e.to_string())
}

fn parse_learner(s: &str) -> Result<Learner, String> {
    s.parse().map_err(|e: gsmple_core::Error| e.to_string())
}

impl GenArgs {
    fn apply(&self, cfg: &mut RunConfig) {
        if let Some(k) = self.kind {
            cfg.generator.kind = k;
        }
        if let Some(n) = self.n {
            cfg.generator.n = n;
        }
        if let Some(t) = self.t_steps {
            cfg.generator.set_t_steps(t);
        }
        if let Some(b) = self.beta {
            cfg.generator.ising.beta = b;
        }
    }
}

impl EstArgs {
    fn apply(&self, cfg: &mut RunConfig) -> Option<usize> {
        match self.estimator {
            Some(EstimatorArg::Plugin) => cfg.estimator.method = Method::PlugIn,
            Some(EstimatorArg::Knn) => cfg.estimator.method = Method::KnnMixed,
            None => {}
        }
        if let Some(k) = self.k {
            cfg.estimator.k = k;
        }
        if self.rank_transform {
            cfg.estimator = EstimatorConfig {
                rank_transform: true,
                ..cfg.estimator
            };
        }
        self.max_edges
    }
}

fn resolve(cli: &Cli) -> anyhow::Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(p) => RunConfig::load(p).with_context(|| format!("loading {}", p.display()))?,
        None => RunConfig::default(),
    };
    if let Some(o) = &cli.out {
        cfg.out = o.clone();
    }
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(j) = cli.jobs {
        cfg.jobs = j;
    }
    match &cli.command {
        Command::Generate(a) => a.apply(&mut cfg),
        Command::Learn(a) => {
            if let Some(d) = &a.data {
                cfg.learn.data = Some(d.clone());
            }
            if let Some(t) = &a.truth {
                cfg.learn.truth = Some(t.clone());
            }
            if let Some(l) = a.algo {
                cfg.learn.algo = l;
            }
            if let Some(l) = a.lambda {
                cfg.learn.lambda = l;
            }
            if let Some(m) = a.est.apply(&mut cfg) {
                cfg.learn.max_edges = Some(m);
            }
        }
        Command::Sweep(a) => {
            a.gen.apply(&mut cfg);
            if let Some(l) = &a.learners {
                cfg.sweep.learners = l.clone();
            }
            if let Some(l) = &a.lambdas {
                cfg.sweep.lambdas = l.clone();
            }
            if let Some(r) = a.runs {
                cfg.sweep.runs = r;
            }
            if a.timing {
                cfg.sweep.timing = true;
            }
            if let Some(m) = a.est.apply(&mut cfg) {
                cfg.sweep.max_edges = Some(m);
            }
        }
    }
    Ok(cfg)
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let cfg = resolve(cli)?;
    match &cli.command {
        Command::Generate(_) => {
            cmd_generate(&cfg).context("generate")?;
            Ok(true)
        }
        Command::Learn(_) => {
            let o = cmd_learn(&cfg).context("learn")?;
            println!("{} edges", o.edges.len());
            Ok(true)
        }
        Command::Sweep(_) => {
            let o = cmd_sweep(&cfg).context("sweep")?;
            println!("{} cells, {} failed", o.n_cells, o.n_failed);
            if !o.healthy {
                eprintln!("error: more than 5% of sweep cells failed");
            }
            Ok(o.n_failed == 0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
