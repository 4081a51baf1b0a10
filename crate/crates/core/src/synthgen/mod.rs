//! Seeded generators for the four benchmark distributions: a 3×3 Ising
//! lattice, a discrete twin-chain HMM, a sparse Gaussian MRF and a
//! continuous twin-chain HMM with a variance-coupled observation.
//!
//! Every generator is a pure function of its [`GeneratorSpec`]. Each sample
//! row is an independent draw (for the HMMs, an independent trajectory).

mod gaussian;
mod hmm;
mod ising;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use gaussian::{
    gaussian_precision, gen_gaussian, gen_gaussian_with_precision, GaussianParams,
};
pub use hmm::{
    gen_hmm_continuous, gen_hmm_discrete, hmm_truth, HmmContinuousParams, HmmCpts,
    HmmDiscreteParams,
};
pub use ising::{gen_ising, ising_lattice, IsingParams};

use crate::dataset::Dataset;
use crate::error::{invalid_argument, Result};
use crate::graph::GroundTruth;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum GeneratorKind {
    Ising,
    HmmDiscrete,
    Gaussian,
    HmmContinuous,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 4] = [
        GeneratorKind::Ising,
        GeneratorKind::HmmDiscrete,
        GeneratorKind::Gaussian,
        GeneratorKind::HmmContinuous,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Ising => "ising",
            GeneratorKind::HmmDiscrete => "hmm-discrete",
            GeneratorKind::Gaussian => "gaussian",
            GeneratorKind::HmmContinuous => "hmm-continuous",
        }
    }

    pub fn default_params(self) -> GeneratorParams {
        match self {
            GeneratorKind::Ising => GeneratorParams::Ising(IsingParams::default()),
            GeneratorKind::HmmDiscrete => GeneratorParams::HmmDiscrete(HmmDiscreteParams::default()),
            GeneratorKind::Gaussian => GeneratorParams::Gaussian(GaussianParams::default()),
            GeneratorKind::HmmContinuous => {
                GeneratorParams::HmmContinuous(HmmContinuousParams::default())
            }
        }
    }
}

impl core::str::FromStr for GeneratorKind {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        GeneratorKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| invalid_argument(alloc::format!("unknown generator kind: {s}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorParams {
    Ising(IsingParams),
    HmmDiscrete(HmmDiscreteParams),
    Gaussian(GaussianParams),
    HmmContinuous(HmmContinuousParams),
}

impl GeneratorParams {
    pub fn kind(&self) -> GeneratorKind {
        match self {
            GeneratorParams::Ising(_) => GeneratorKind::Ising,
            GeneratorParams::HmmDiscrete(_) => GeneratorKind::HmmDiscrete,
            GeneratorParams::Gaussian(_) => GeneratorKind::Gaussian,
            GeneratorParams::HmmContinuous(_) => GeneratorKind::HmmContinuous,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub n_samples: usize,
    pub seed: u64,
    pub params: GeneratorParams,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, n_samples: usize, seed: u64) -> Self {
        Self {
            n_samples,
            seed,
            params: kind.default_params(),
        }
    }

    pub fn kind(&self) -> GeneratorKind {
        self.params.kind()
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        Self {
            seed,
            ..self.clone()
        }
    }

    pub fn generate(&self) -> Result<(Dataset, GroundTruth)> {
        let (n, seed) = (self.n_samples, self.seed);
        match &self.params {
            GeneratorParams::Ising(p) => gen_ising(n, seed, p),
            GeneratorParams::HmmDiscrete(p) => gen_hmm_discrete(n, seed, p),
            GeneratorParams::Gaussian(p) => gen_gaussian(n, seed, p),
            GeneratorParams::HmmContinuous(p) => gen_hmm_continuous(n, seed, p),
        }
    }
}

pub(crate) fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub(crate) fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(invalid_argument("n_samples must be >= 1"))
    } else {
        Ok(())
    }
}
