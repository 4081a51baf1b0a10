//! Parallel sweep driver and the sweep output files.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use gsmple_core::eval::{evaluate_run, CellRecord, SweepConfig, SweepResult};
use gsmple_core::synthgen::GeneratorSpec;

use crate::config::RunConfig;
use crate::error::{Error, Result};
use crate::io::write_atomic;

/// How recovery rates are defined when the truth or its complement is
/// empty. Copied into `summary.json`.
pub const RATE_CONVENTION: &str =
    "tpr = 1 when the true graph is empty; fpr = 0 when the true graph is complete";

/// Runs `cfg` on up to `jobs` threads (0 = all cores). Runs are the unit of
/// work, so all cells of one run share an estimate cache. The result does
/// not depend on `jobs`.
pub fn parallel_sweep(
    spec: &GeneratorSpec,
    cfg: &SweepConfig,
    jobs: usize,
    timing: bool,
) -> Result<SweepResult> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let cells: Vec<CellRecord> = pool.install(|| {
        (0..cfg.n_runs)
            .into_par_iter()
            .flat_map_iter(|run| {
                if timing {
                    let t0 = Instant::now();
                    let clock = move || t0.elapsed().as_secs_f64() * 1e3;
                    evaluate_run(spec, cfg, run, Some(&clock))
                } else {
                    evaluate_run(spec, cfg, run, None)
                }
            })
            .collect()
    });
    Ok(SweepResult::from_cells(cfg, cells))
}

fn num(x: f64) -> String {
    if x.is_finite() {
        x.to_string()
    } else {
        String::new()
    }
}

pub fn cells_csv(res: &SweepResult) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "learner",
        "lambda",
        "seed",
        "tpr",
        "fpr",
        "n_predicted",
        "wall_ms",
        "error",
    ])?;
    for c in &res.cells {
        let wall = c.wall_ms.map(num).unwrap_or_default();
        let (tpr, fpr, n_pred, err) = match &c.outcome {
            Ok(m) => (num(m.tpr), num(m.fpr), m.n_predicted.to_string(), String::new()),
            Err(e) => (String::new(), String::new(), String::new(), e.clone()),
        };
        w.write_record([
            c.learner.name().to_string(),
            num(c.lambda),
            c.seed.to_string(),
            tpr,
            fpr,
            n_pred,
            wall,
            err,
        ])?;
    }
    Ok(w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?)
}

pub fn curves_csv(res: &SweepResult) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["learner", "lambda", "mean_tpr", "mean_fpr", "n_ok"])?;
    for p in &res.curves {
        w.write_record([
            p.learner.name().to_string(),
            num(p.lambda),
            num(p.mean_tpr),
            num(p.mean_fpr),
            p.n_ok.to_string(),
        ])?;
    }
    Ok(w.into_inner().map_err(|e| Error::Csv(e.into_error().into()))?)
}

/// Counts (learner, run) pairs whose edge count increases somewhere along
/// the λ grid, taken in ascending λ order.
pub fn monotone_sparsity_violations(res: &SweepResult) -> usize {
    use std::collections::BTreeMap;
    let mut by_key: BTreeMap<(&str, usize), Vec<(f64, usize)>> = BTreeMap::new();
    for c in &res.cells {
        if let Ok(m) = &c.outcome {
            by_key
                .entry((c.learner.name(), c.run))
                .or_default()
                .push((c.lambda, m.n_predicted));
        }
    }
    by_key
        .into_values()
        .filter(|v| {
            let mut v = v.clone();
            v.sort_by(|a, b| a.0.total_cmp(&b.0));
            v.windows(2).any(|w| w[1].1 > w[0].1)
        })
        .count()
}

#[derive(Serialize)]
struct Failure<'a> {
    learner: &'a str,
    lambda: f64,
    seed: u64,
    error: &'a str,
}

#[derive(Serialize)]
struct Summary<'a> {
    generator: &'a str,
    n_cells: usize,
    n_failed: usize,
    failed_fraction: f64,
    auc: serde_json::Map<String, serde_json::Value>,
    monotone_sparsity_violations: usize,
    rate_convention: &'static str,
    failures: Vec<Failure<'a>>,
    config: &'a RunConfig,
}

pub fn summary_json(res: &SweepResult, cfg: &RunConfig) -> Result<Vec<u8>> {
    let auc = res
        .auc
        .iter()
        .map(|(l, a)| (l.name().to_string(), serde_json::json!(a)))
        .collect();
    let failures = res
        .cells
        .iter()
        .filter_map(|c| {
            c.outcome.as_ref().err().map(|e| Failure {
                learner: c.learner.name(),
                lambda: c.lambda,
                seed: c.seed,
                error: e,
            })
        })
        .collect();
    let s = Summary {
        generator: cfg.generator.kind.name(),
        n_cells: res.cells.len(),
        n_failed: res.n_failed(),
        failed_fraction: res.failed_fraction(),
        auc,
        monotone_sparsity_violations: monotone_sparsity_violations(res),
        rate_convention: RATE_CONVENTION,
        failures,
        config: cfg,
    };
    let mut out = serde_json::to_vec_pretty(&s).map_err(|e| Error::Config(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

/// Writes `cells.csv`, `curves.csv` and `summary.json` into `dir`.
pub fn write_sweep(dir: &Path, res: &SweepResult, cfg: &RunConfig) -> Result<()> {
    write_atomic(&dir.join("cells.csv"), &cells_csv(res)?)?;
    write_atomic(&dir.join("curves.csv"), &curves_csv(res)?)?;
    write_atomic(&dir.join("summary.json"), &summary_json(res, cfg)?)
}
