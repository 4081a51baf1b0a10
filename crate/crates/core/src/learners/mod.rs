//! Structure learners: grow-shrink pseudolikelihood search and the
//! independence-test baselines it is compared against.
//!
//! All learners are deterministic. Argmax/argmin ties resolve to the
//! lexicographically smallest canonical pair.

mod chow_liu;
mod gs_mple;
mod iamb;
mod objective;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

pub use chow_liu::{chow_liu, chow_liu_cached};
pub use gs_mple::{gs_mple, gs_mple_cached};
pub use iamb::{gsmn, gsmn_cached, iamb, iamb_cached};
pub use objective::{
    grow_score, grow_score_cached, objective_j, objective_j_cached, shrink_score,
    shrink_score_cached,
};

use crate::dataset::Dataset;
use crate::error::{invalid_argument, Error, Result};
use crate::estimators::{CmiCache, EstimatorConfig};
use crate::graph::{EdgeSet, VariableId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LearnerConfig {
    /// Threshold λ ≥ 0 applied to grow and shrink scores.
    pub lambda: f64,
    pub estimator: EstimatorConfig,
    /// Upper bound on edges added by a grow phase (per node for the
    /// node-wise baselines). `None` means no cap.
    pub max_edges: Option<usize>,
}

impl LearnerConfig {
    pub fn new(lambda: f64, estimator: EstimatorConfig) -> Self {
        Self {
            lambda,
            estimator,
            max_edges: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.lambda.is_finite() || self.lambda < 0.0 {
            return Err(invalid_argument(alloc::format!(
                "lambda must be finite and >= 0, got {}",
                self.lambda
            )));
        }
        Ok(())
    }

    pub(crate) fn edge_cap(&self, d: usize) -> usize {
        let all = crate::graph::pair_count(d);
        self.max_edges.map_or(all, |m| m.min(all))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    Grow,
    Shrink,
}

impl Phase {
    pub fn as_str(self) -> &'static str {
        match self {
            Phase::Grow => "grow",
            Phase::Shrink => "shrink",
        }
    }
}

/// One candidate considered by a grow or shrink step. Every step records
/// the selected pair; the last step of a phase is the rejected one that
/// stopped it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceStep {
    pub phase: Phase,
    pub edge: (VariableId, VariableId),
    pub score: f64,
    pub accepted: bool,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct LearnTrace {
    pub steps: Vec<TraceStep>,
}

impl LearnTrace {
    pub fn accepted(&self, phase: Phase) -> impl Iterator<Item = &TraceStep> {
        self.steps
            .iter()
            .filter(move |s| s.accepted && s.phase == phase)
    }
}

/// The learners available to the sweep harness and the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum Learner {
    GsMple,
    Iamb,
    Gsmn,
    ChowLiu,
}

impl Learner {
    pub const ALL: [Learner; 4] = [Learner::GsMple, Learner::Iamb, Learner::Gsmn, Learner::ChowLiu];

    pub fn name(self) -> &'static str {
        match self {
            Learner::GsMple => "gs-mple",
            Learner::Iamb => "iamb",
            Learner::Gsmn => "gsmn",
            Learner::ChowLiu => "chow-liu",
        }
    }

    /// Runs the learner against a shared estimate cache. The cache's
    /// estimator takes precedence over `cfg.estimator`.
    pub fn learn(self, cache: &mut CmiCache<'_>, cfg: &LearnerConfig) -> Result<EdgeSet> {
        match self {
            Learner::GsMple => gs_mple_cached(cache, cfg).map(|(es, _)| es),
            Learner::Iamb => iamb_cached(cache, cfg),
            Learner::Gsmn => gsmn_cached(cache, cfg),
            Learner::ChowLiu => chow_liu_cached(cache),
        }
    }

    pub fn run(self, data: &Dataset, cfg: &LearnerConfig) -> Result<EdgeSet> {
        let mut cache = CmiCache::new(data, cfg.estimator)?;
        self.learn(&mut cache, cfg)
    }
}

impl fmt::Display for Learner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Learner {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Learner::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| invalid_argument(String::from("unknown learner: ") + s))
    }
}

pub(crate) fn finite(
    phase: &'static str,
    i: VariableId,
    j: VariableId,
    step: usize,
    score: f64,
) -> Result<f64> {
    if score.is_finite() {
        Ok(score)
    } else {
        Err(Error::NonFiniteScore {
            phase,
            i,
            j,
            step,
            score,
        })
    }
}

pub(crate) fn check_dims(data: &Dataset, es: &EdgeSet) -> Result<()> {
    if es.d() != data.n_vars() {
        return Err(Error::DimensionMismatch {
            expected: data.n_vars(),
            found: es.d(),
        });
    }
    Ok(())
}
