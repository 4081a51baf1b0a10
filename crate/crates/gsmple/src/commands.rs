//! The `generate`, `learn` and `sweep` commands as library functions.

use std::path::PathBuf;
use std::time::Instant;

use gsmple_core::eval::recovery;
use gsmple_core::learners::{gs_mple_cached, LearnTrace};
use gsmple_core::{EdgeSet, Learner};
use gsmple_core::estimators::CmiCache;

use crate::config::{RunConfig, ECHO_FILE};
use crate::error::{Error, Result};
use crate::io::{self, write_atomic};
use crate::sweep::{parallel_sweep, write_sweep};

fn prepare_out(cfg: &RunConfig) -> Result<PathBuf> {
    io::ensure_dir(&cfg.out)?;
    write_atomic(&cfg.out.join(ECHO_FILE), cfg.to_toml().as_bytes())?;
    Ok(cfg.out.clone())
}

/// Writes `data.csv`, `truth.edges` and the config echo.
pub fn cmd_generate(cfg: &RunConfig) -> Result<()> {
    let (data, truth) = cfg.generator.spec(cfg.seed).generate()?;
    let out = prepare_out(cfg)?;
    write_atomic(&out.join("data.csv"), io::dataset_to_string(&data)?.as_bytes())?;
    write_atomic(&out.join("truth.edges"), io::format_edges(&truth.edge_set).as_bytes())
}

#[derive(Debug)]
pub struct LearnOutcome {
    pub edges: EdgeSet,
    pub trace: LearnTrace,
    pub wall_ms: f64,
}

/// Writes `learned.edges`, `trace.log` (empty for learners without a
/// trace), `timing.txt`, the config echo and, when a truth file is
/// configured, `metrics.json`.
pub fn cmd_learn(cfg: &RunConfig) -> Result<LearnOutcome> {
    let path = cfg
        .learn
        .data
        .as_ref()
        .ok_or_else(|| Error::Config("learn needs a dataset (--data)".into()))?;
    let data = io::read_dataset(path)?;
    let truth = cfg.learn.truth.as_deref().map(io::read_edges).transpose()?;
    let lcfg = cfg.learner_config();
    lcfg.validate()?;

    let start = Instant::now();
    let mut cache = CmiCache::new(&data, cfg.estimator)?;
    let (edges, trace) = match cfg.learn.algo {
        Learner::GsMple => gs_mple_cached(&mut cache, &lcfg)?,
        other => (other.learn(&mut cache, &lcfg)?, LearnTrace::default()),
    };
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;

    let out = prepare_out(cfg)?;
    write_atomic(&out.join("learned.edges"), io::format_edges(&edges).as_bytes())?;
    write_atomic(&out.join("trace.log"), io::format_trace(&trace).as_bytes())?;
    let timing = format!(
        "learn_ms {wall_ms:.3}\nmi_evaluations {}\n",
        cache.evaluations()
    );
    write_atomic(&out.join("timing.txt"), timing.as_bytes())?;
    if let Some(truth) = truth {
        let m = recovery(&edges, &truth)?;
        let json = serde_json::json!({
            "tpr": m.tpr,
            "fpr": m.fpr,
            "n_true_edges": m.n_true_edges,
            "n_predicted": m.n_predicted,
        });
        let mut bytes = serde_json::to_vec_pretty(&json).expect("plain json");
        bytes.push(b'\n');
        write_atomic(&out.join("metrics.json"), &bytes)?;
    }
    Ok(LearnOutcome {
        edges,
        trace,
        wall_ms,
    })
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOutcome {
    pub n_cells: usize,
    pub n_failed: usize,
    pub healthy: bool,
}

/// Writes `cells.csv`, `curves.csv`, `summary.json` and the config echo.
/// Failed cells are recorded, not raised.
pub fn cmd_sweep(cfg: &RunConfig) -> Result<SweepOutcome> {
    let spec = cfg.generator.spec(cfg.seed);
    let res = parallel_sweep(&spec, &cfg.sweep_config(), cfg.jobs, cfg.sweep.timing)?;
    let out = prepare_out(cfg)?;
    write_sweep(&out, &res, cfg)?;
    Ok(SweepOutcome {
        n_cells: res.cells.len(),
        n_failed: res.n_failed(),
        healthy: res.ensure_healthy().is_ok(),
    })
}
