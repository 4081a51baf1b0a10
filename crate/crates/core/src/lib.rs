//! Structure learning for Markov random fields from i.i.d. samples.
//!
//! The main entry point is [`learners::gs_mple`], a grow-shrink search over
//! edge sets that greedily minimizes the expected negative log
//! pseudolikelihood of the edge set, written as a sum of per-node
//! conditional mutual informations. Independence-test baselines
//! ([`learners::iamb`], [`learners::gsmn`], [`learners::chow_liu`]), the
//! MI/CMI estimators they share, synthetic benchmark generators and
//! edge-recovery metrics live alongside it.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dataset;
pub mod error;
pub mod estimators;
pub mod eval;
pub mod graph;
pub mod learners;
pub mod synthgen;

pub use dataset::{Column, ColumnKind, Dataset};
pub use error::{Error, Result};
pub use estimators::{EstimatorConfig, Method};
pub use graph::{EdgeSet, GroundTruth, Neighborhood, VariableId};
pub use learners::{Learner, LearnerConfig, LearnTrace};
