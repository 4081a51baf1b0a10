//! Run configuration: a TOML file, overridden by command-line flags, and
//! echoed into every output directory.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use gsmple_core::eval::SweepConfig;
use gsmple_core::learners::LearnerConfig;
use gsmple_core::synthgen::{
    GaussianParams, GeneratorKind, GeneratorParams, GeneratorSpec, HmmContinuousParams,
    HmmDiscreteParams, IsingParams,
};
use gsmple_core::{EstimatorConfig, Learner};

use crate::error::{io_err, Error, Result};

/// File name of the config echo written next to every output.
pub const ECHO_FILE: &str = "config.toml";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Generator seed for `generate`; base seed for `sweep`.
    pub seed: u64,
    pub out: PathBuf,
    /// Worker threads for `sweep`; 0 uses all cores.
    pub jobs: usize,
    pub generator: GeneratorSection,
    pub estimator: EstimatorConfig,
    pub learn: LearnSection,
    pub sweep: SweepSection,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            out: PathBuf::from("out"),
            jobs: 1,
            generator: GeneratorSection::default(),
            estimator: EstimatorConfig::default(),
            learn: LearnSection::default(),
            sweep: SweepSection::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeneratorSection {
    pub kind: GeneratorKind,
    pub n: usize,
    pub ising: IsingParams,
    pub hmm_discrete: HmmDiscreteParams,
    pub gaussian: GaussianParams,
    pub hmm_continuous: HmmContinuousParams,
}

impl Default for GeneratorSection {
    fn default() -> Self {
        Self {
            kind: GeneratorKind::Ising,
            n: 100,
            ising: IsingParams::default(),
            hmm_discrete: HmmDiscreteParams::default(),
            gaussian: GaussianParams::default(),
            hmm_continuous: HmmContinuousParams::default(),
        }
    }
}

impl GeneratorSection {
    pub fn params(&self) -> GeneratorParams {
        match self.kind {
            GeneratorKind::Ising => GeneratorParams::Ising(self.ising),
            GeneratorKind::HmmDiscrete => GeneratorParams::HmmDiscrete(self.hmm_discrete),
            GeneratorKind::Gaussian => GeneratorParams::Gaussian(self.gaussian),
            GeneratorKind::HmmContinuous => GeneratorParams::HmmContinuous(self.hmm_continuous),
        }
    }

    pub fn spec(&self, seed: u64) -> GeneratorSpec {
        GeneratorSpec {
            n_samples: self.n,
            seed,
            params: self.params(),
        }
    }

    /// Sets the trajectory length of both HMM generators.
    pub fn set_t_steps(&mut self, t: usize) {
        self.hmm_discrete.t_steps = t;
        self.hmm_continuous.t_steps = t;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LearnSection {
    pub algo: Learner,
    pub lambda: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<PathBuf>,
    /// Optional ground truth; when set, recovery metrics are reported.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truth: Option<PathBuf>,
}

impl Default for LearnSection {
    fn default() -> Self {
        Self {
            algo: Learner::GsMple,
            lambda: 0.05,
            max_edges: None,
            data: None,
            truth: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SweepSection {
    pub learners: Vec<Learner>,
    pub lambdas: Vec<f64>,
    pub runs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_edges: Option<usize>,
    /// Record per-cell wall time in `cells.csv`. Off by default because
    /// timings break byte-identical reruns.
    pub timing: bool,
}

impl Default for SweepSection {
    fn default() -> Self {
        Self {
            learners: Learner::ALL.to_vec(),
            lambdas: vec![0.0, 0.01, 0.02, 0.03, 0.05, 0.075, 0.1, 0.15, 0.2, 0.3, 0.5, 1.0],
            runs: 100,
            max_edges: None,
            timing: false,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(io_err(path))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always serializable")
    }

    pub fn learner_config(&self) -> LearnerConfig {
        LearnerConfig {
            lambda: self.learn.lambda,
            estimator: self.estimator,
            max_edges: self.learn.max_edges,
        }
    }

    pub fn sweep_config(&self) -> SweepConfig {
        SweepConfig {
            learners: self.sweep.learners.clone(),
            lambdas: self.sweep.lambdas.clone(),
            n_runs: self.sweep.runs,
            base_seed: self.seed,
            estimator: self.estimator,
            max_edges: self.sweep.max_edges,
        }
    }
}
