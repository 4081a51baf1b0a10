//! Edge-recovery metrics and the ROC sweep protocol.
//!
//! A sweep generates `n_runs` datasets (seed `base_seed + r`), runs every
//! learner at every threshold on each, and averages TPR/FPR per
//! `(learner, λ)` over the runs whose cell succeeded. AUC is the trapezoid
//! area under the mean points sorted by FPR, anchored at (0,0) and (1,1).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{invalid_argument, Error, Result};
use crate::estimators::{CmiCache, EstimatorConfig};
use crate::graph::{pair_count, EdgeSet};
use crate::learners::{Learner, LearnerConfig};
use crate::synthgen::GeneratorSpec;

/// Fraction of a sweep's cells that may fail before the sweep is an error.
pub const MAX_FAILED_FRACTION: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecoveryMetrics {
    pub tpr: f64,
    pub fpr: f64,
    pub n_true_edges: usize,
    pub n_predicted: usize,
}

/// TPR = |Ê ∩ E*| / |E*| and FPR = |Ê ∖ E*| / (D(D−1)/2 − |E*|).
///
/// With an empty truth, TPR is 1 when the prediction is also empty and 0
/// otherwise; with a complete truth, FPR is 0.
pub fn recovery(predicted: &EdgeSet, truth: &EdgeSet) -> Result<RecoveryMetrics> {
    if predicted.d() != truth.d() {
        return Err(Error::DimensionMismatch {
            expected: truth.d(),
            found: predicted.d(),
        });
    }
    let hits = predicted.intersection_len(truth);
    let false_pos = predicted.len() - hits;
    let negatives = pair_count(truth.d()) - truth.len();
    let tpr = if truth.is_empty() {
        if predicted.is_empty() {
            1.0
        } else {
            0.0
        }
    } else {
        hits as f64 / truth.len() as f64
    };
    let fpr = if negatives == 0 {
        0.0
    } else {
        false_pos as f64 / negatives as f64
    };
    Ok(RecoveryMetrics {
        tpr,
        fpr,
        n_true_edges: truth.len(),
        n_predicted: predicted.len(),
    })
}

/// Trapezoid area under `(fpr, tpr)` points after adding the (0,0) and
/// (1,1) anchors and sorting by FPR (then TPR).
pub fn auc(points: &[(f64, f64)]) -> f64 {
    let mut pts: Vec<(f64, f64)> = Vec::with_capacity(points.len() + 2);
    pts.push((0.0, 0.0));
    pts.extend_from_slice(points);
    pts.push((1.0, 1.0));
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[0].1 + w[1].1) / 2.0)
        .sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub learners: Vec<Learner>,
    /// Ascending thresholds.
    pub lambdas: Vec<f64>,
    pub n_runs: usize,
    pub base_seed: u64,
    pub estimator: EstimatorConfig,
    pub max_edges: Option<usize>,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.lambdas.is_empty() {
            return Err(invalid_argument("lambda grid must be non-empty"));
        }
        if self.lambdas.windows(2).any(|w| !(w[0] <= w[1])) {
            return Err(invalid_argument("lambda grid must be sorted ascending"));
        }
        if self.learners.is_empty() {
            return Err(invalid_argument("at least one learner is required"));
        }
        if self.n_runs == 0 {
            return Err(invalid_argument("n_runs must be >= 1"));
        }
        for &lambda in &self.lambdas {
            LearnerConfig::new(lambda, self.estimator).validate()?;
        }
        Ok(())
    }

    pub fn run_seed(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }
}

/// Outcome of one `(learner, λ, run)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellRecord {
    pub learner: Learner,
    pub lambda_index: usize,
    pub lambda: f64,
    pub run: usize,
    pub seed: u64,
    pub outcome: core::result::Result<RecoveryMetrics, String>,
    pub wall_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurvePoint {
    pub learner: Learner,
    pub lambda: f64,
    pub mean_tpr: f64,
    pub mean_fpr: f64,
    /// Runs that contributed to the means.
    pub n_ok: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub cells: Vec<CellRecord>,
    pub curves: Vec<CurvePoint>,
    pub auc: Vec<(Learner, f64)>,
}

/// Runs every learner at every λ on the dataset of run `run`.
///
/// All cells of one run share a single estimate cache. `clock`, when
/// given, returns a monotonic time in milliseconds and is used to time
/// each cell.
pub fn evaluate_run(
    spec: &GeneratorSpec,
    cfg: &SweepConfig,
    run: usize,
    clock: Option<&dyn Fn() -> f64>,
) -> Vec<CellRecord> {
    let seed = cfg.run_seed(run);
    let cell = |learner: Learner, li: usize, outcome, wall_ms| CellRecord {
        learner,
        lambda_index: li,
        lambda: cfg.lambdas[li],
        run,
        seed,
        outcome,
        wall_ms,
    };
    let mut out = Vec::with_capacity(cfg.learners.len() * cfg.lambdas.len());

    let prepared = spec
        .with_seed(seed)
        .generate()
        .and_then(|(data, truth)| cfg.estimator.validate(&data).map(|_| (data, truth)));
    let (data, truth) = match prepared {
        Ok(v) => v,
        Err(e) => {
            let msg = e.to_string();
            for &learner in &cfg.learners {
                for li in 0..cfg.lambdas.len() {
                    out.push(cell(learner, li, Err(msg.clone()), None));
                }
            }
            return out;
        }
    };
    let mut cache = CmiCache::new(&data, cfg.estimator).expect("validated above");

    for &learner in &cfg.learners {
        for (li, &lambda) in cfg.lambdas.iter().enumerate() {
            let lcfg = LearnerConfig {
                lambda,
                estimator: cfg.estimator,
                max_edges: cfg.max_edges,
            };
            let start = clock.map(|c| c());
            let outcome = learner
                .learn(&mut cache, &lcfg)
                .and_then(|es| recovery(&es, &truth.edge_set))
                .map_err(|e| e.to_string());
            let wall_ms = clock.zip(start).map(|(c, s)| c() - s);
            out.push(cell(learner, li, outcome, wall_ms));
        }
    }
    out
}

/// Sequential sweep. See the std companion crate for a parallel driver.
pub fn roc_sweep(spec: &GeneratorSpec, cfg: &SweepConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let cells = (0..cfg.n_runs)
        .flat_map(|r| evaluate_run(spec, cfg, r, None))
        .collect();
    Ok(SweepResult::from_cells(cfg, cells))
}

impl SweepResult {
    /// Assembles a result from cells in any order.
    pub fn from_cells(cfg: &SweepConfig, mut cells: Vec<CellRecord>) -> Self {
        let learner_pos = |l: Learner| cfg.learners.iter().position(|&x| x == l).unwrap_or(usize::MAX);
        cells.sort_by_key(|c| (learner_pos(c.learner), c.lambda_index, c.run));

        let mut curves = Vec::new();
        let mut aucs = Vec::new();
        for &learner in &cfg.learners {
            let mut points = Vec::new();
            for (li, &lambda) in cfg.lambdas.iter().enumerate() {
                let ok: Vec<&RecoveryMetrics> = cells
                    .iter()
                    .filter(|c| c.learner == learner && c.lambda_index == li)
                    .filter_map(|c| c.outcome.as_ref().ok())
                    .collect();
                let n_ok = ok.len();
                let (mean_tpr, mean_fpr) = if n_ok == 0 {
                    (f64::NAN, f64::NAN)
                } else {
                    (
                        ok.iter().map(|m| m.tpr).sum::<f64>() / n_ok as f64,
                        ok.iter().map(|m| m.fpr).sum::<f64>() / n_ok as f64,
                    )
                };
                if n_ok > 0 {
                    points.push((mean_fpr, mean_tpr));
                }
                curves.push(CurvePoint {
                    learner,
                    lambda,
                    mean_tpr,
                    mean_fpr,
                    n_ok,
                });
            }
            aucs.push((learner, auc(&points)));
        }
        Self {
            cells,
            curves,
            auc: aucs,
        }
    }

    pub fn n_failed(&self) -> usize {
        self.cells.iter().filter(|c| c.outcome.is_err()).count()
    }

    pub fn failed_fraction(&self) -> f64 {
        if self.cells.is_empty() {
            0.0
        } else {
            self.n_failed() as f64 / self.cells.len() as f64
        }
    }

    /// Errors when more than [`MAX_FAILED_FRACTION`] of the cells failed.
    pub fn ensure_healthy(&self) -> Result<()> {
        if self.failed_fraction() > MAX_FAILED_FRACTION {
            Err(Error::InvalidData(alloc::format!(
                "{} of {} sweep cells failed",
                self.n_failed(),
                self.cells.len()
            )))
        } else {
            Ok(())
        }
    }

    pub fn auc_of(&self, learner: Learner) -> Option<f64> {
        self.auc.iter().find(|(l, _)| *l == learner).map(|(_, a)| *a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synthgen::{ising_lattice, GeneratorKind};

    #[test]
    fn recovery_examples() {
        let truth = ising_lattice();
        let m = recovery(&truth, &truth).unwrap();
        assert_eq!((m.tpr, m.fpr), (1.0, 0.0));

        let m = recovery(&EdgeSet::empty(9), &truth).unwrap();
        assert_eq!((m.tpr, m.fpr), (0.0, 0.0));

        let mut pred = truth.clone();
        pred.remove(0, 1).unwrap();
        pred.remove(4, 5).unwrap();
        for (i, j) in [(0, 8), (2, 6), (0, 4)] {
            pred.insert(i, j).unwrap();
        }
        let m = recovery(&pred, &truth).unwrap();
        assert!((m.tpr - 10.0 / 12.0).abs() < 1e-15);
        assert!((m.fpr - 0.125).abs() < 1e-15);
        assert_eq!(m.n_predicted, 13);
    }

    #[test]
    fn recovery_degenerate_truths() {
        let empty = EdgeSet::empty(4);
        assert_eq!(recovery(&empty, &empty).unwrap().tpr, 1.0);
        let one = EdgeSet::from_pairs(4, [(0, 1)]).unwrap();
        let m = recovery(&one, &empty).unwrap();
        assert_eq!((m.tpr, m.fpr), (0.0, 1.0 / 6.0));
        let full = EdgeSet::complete(4);
        assert_eq!(recovery(&full, &full).unwrap().fpr, 0.0);
        assert!(recovery(&EdgeSet::empty(3), &empty).is_err());
    }

    #[test]
    fn auc_anchors() {
        assert_eq!(auc(&[(0.0, 1.0)]), 1.0);
        assert_eq!(auc(&[(0.0, 0.0), (0.0, 0.0)]), 0.5);
        assert_eq!(auc(&[]), 0.5);
        assert!((auc(&[(0.5, 0.5)]) - 0.5).abs() < 1e-15);
        let a = auc(&[(0.2, 0.8), (0.1, 0.6)]);
        assert!(a > 0.5 && a <= 1.0);
    }

    #[test]
    fn sweep_validation() {
        let base = SweepConfig {
            learners: alloc::vec![Learner::GsMple],
            lambdas: alloc::vec![0.1, 0.05],
            n_runs: 1,
            base_seed: 0,
            estimator: EstimatorConfig::plugin(),
            max_edges: None,
        };
        assert!(base.validate().is_err());
        let ok = SweepConfig {
            lambdas: alloc::vec![0.05, 0.1],
            ..base.clone()
        };
        assert!(ok.validate().is_ok());
        assert!(SweepConfig { n_runs: 0, ..ok.clone() }.validate().is_err());
        assert!(SweepConfig { lambdas: alloc::vec![], ..ok }.validate().is_err());
    }

    #[test]
    fn estimator_mismatch_fails_cells_not_sweep() {
        let spec = GeneratorSpec::new(GeneratorKind::Gaussian, 30, 0);
        let cfg = SweepConfig {
            learners: alloc::vec![Learner::GsMple, Learner::ChowLiu],
            lambdas: alloc::vec![0.0, 0.1],
            n_runs: 2,
            base_seed: 5,
            estimator: EstimatorConfig::plugin(),
            max_edges: None,
        };
        let res = roc_sweep(&spec, &cfg).unwrap();
        assert_eq!(res.cells.len(), 8);
        assert_eq!(res.n_failed(), 8);
        assert!(res.ensure_healthy().is_err());
        assert!(res.curves.iter().all(|c| c.n_ok == 0));
        assert_eq!(res.auc_of(Learner::GsMple), Some(0.5));
    }
}
