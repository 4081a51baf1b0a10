//! Mutual information and conditional mutual information estimation.
//!
//! Two estimators are available: the empirical plug-in estimator for
//! purely discrete groups, and a k-nearest-neighbor estimator that accepts
//! any mix of discrete and continuous columns. Conditional MI is always
//! obtained from two MI estimates,
//! `Î(X;Y|Z) = Î(X,Z;Y) − Î(Y;Z)`.

mod knn;
mod plugin;

use alloc::borrow::Cow;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use knn::mi_knn_mixed;
pub use plugin::mi_plugin;

use crate::dataset::Dataset;
use crate::error::{invalid_argument, Error, Result};
use crate::graph::VariableId;

/// Default neighbor count for [`Method::KnnMixed`].
pub const DEFAULT_K: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Method {
    #[cfg_attr(feature = "serde", serde(rename = "plugin"))]
    PlugIn,
    #[cfg_attr(feature = "serde", serde(rename = "knn"))]
    KnnMixed,
}

/// Which MI estimator to use and how.
///
/// Estimates are deterministic functions of the data; there is no seed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct EstimatorConfig {
    pub method: Method,
    /// Neighbor count; ignored by the plug-in estimator.
    pub k: usize,
    /// Rank-transform continuous columns before estimation.
    pub rank_transform: bool,
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        Self::knn(DEFAULT_K)
    }
}

impl EstimatorConfig {
    pub fn plugin() -> Self {
        Self {
            method: Method::PlugIn,
            k: DEFAULT_K,
            rank_transform: false,
        }
    }

    pub fn knn(k: usize) -> Self {
        Self {
            method: Method::KnnMixed,
            k,
            rank_transform: false,
        }
    }

    pub fn with_rank_transform(mut self, on: bool) -> Self {
        self.rank_transform = on;
        self
    }

    /// Checks the configuration against a dataset.
    pub fn validate(&self, data: &Dataset) -> Result<()> {
        match self.method {
            Method::PlugIn => {
                for (v, col) in data.columns().iter().enumerate() {
                    if !col.kind().is_discrete() {
                        return Err(Error::EstimatorMismatch { column: v });
                    }
                }
                Ok(())
            }
            Method::KnnMixed => {
                if self.k == 0 || self.k >= data.n_samples() {
                    Err(invalid_argument(alloc::format!(
                        "k = {} must satisfy 1 <= k < N = {}",
                        self.k,
                        data.n_samples()
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Applies the configured preprocessing.
    pub fn prepare<'a>(&self, data: &'a Dataset) -> Cow<'a, Dataset> {
        if self.rank_transform {
            Cow::Owned(data.rank_transformed())
        } else {
            Cow::Borrowed(data)
        }
    }

    fn raw_mi(&self, data: &Dataset, xs: &[VariableId], ys: &[VariableId]) -> Result<f64> {
        match self.method {
            Method::PlugIn => mi_plugin(data, xs, ys),
            Method::KnnMixed => mi_knn_mixed(data, xs, ys, self.k),
        }
    }
}

pub(crate) fn check_groups(data: &Dataset, xs: &[VariableId], ys: &[VariableId]) -> Result<()> {
    if xs.is_empty() || ys.is_empty() {
        return Err(invalid_argument("variable groups must be non-empty"));
    }
    for &v in xs.iter().chain(ys) {
        data.column(v)?;
    }
    if let Some(v) = xs.iter().find(|v| ys.contains(v)) {
        return Err(invalid_argument(alloc::format!(
            "variable {v} appears in both groups"
        )));
    }
    Ok(())
}

/// `Î(X;Y)` in nats with the configured estimator.
pub fn mutual_information(
    data: &Dataset,
    xs: &[VariableId],
    ys: &[VariableId],
    cfg: &EstimatorConfig,
) -> Result<f64> {
    cfg.raw_mi(&cfg.prepare(data), xs, ys)
}

/// `Î(x;y|zs) = Î({x}∪zs; {y}) − Î({y}; zs)`; equals `Î(x;y)` for empty `zs`.
pub fn cmi(
    data: &Dataset,
    x: VariableId,
    y: VariableId,
    zs: &[VariableId],
    cfg: &EstimatorConfig,
) -> Result<f64> {
    cmi_groups(data, &[x], &[y], zs, cfg)
}

/// Group version of [`cmi`]: `Î(X,Z;Y) − Î(Y;Z)`.
pub fn cmi_groups(
    data: &Dataset,
    xs: &[VariableId],
    ys: &[VariableId],
    zs: &[VariableId],
    cfg: &EstimatorConfig,
) -> Result<f64> {
    check_cmi_args(xs, ys, zs)?;
    let data = cfg.prepare(data);
    let xz = union(xs, zs);
    let first = cfg.raw_mi(&data, &xz, ys)?;
    if zs.is_empty() {
        return Ok(first);
    }
    Ok(first - cfg.raw_mi(&data, ys, zs)?)
}

fn check_cmi_args(xs: &[VariableId], ys: &[VariableId], zs: &[VariableId]) -> Result<()> {
    let clash = xs.iter().any(|v| ys.contains(v) || zs.contains(v)) || ys.iter().any(|v| zs.contains(v));
    if clash {
        Err(invalid_argument("conditioning groups must be pairwise disjoint"))
    } else {
        Ok(())
    }
}

fn union(a: &[VariableId], b: &[VariableId]) -> Vec<VariableId> {
    let mut out: Vec<VariableId> = a.iter().chain(b).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn sorted(a: &[VariableId]) -> Vec<VariableId> {
    let mut out = a.to_vec();
    out.sort_unstable();
    out
}

/// Memoizing CMI evaluator bound to one dataset and estimator.
///
/// MI terms are keyed by their (sorted) variable groups, so repeated
/// conditional queries along a greedy search, or across a threshold sweep
/// on the same data, reuse earlier estimates. Values are bit-identical to
/// uncached evaluation.
pub struct CmiCache<'a> {
    data: Cow<'a, Dataset>,
    cfg: EstimatorConfig,
    memo: BTreeMap<(Vec<VariableId>, Vec<VariableId>), f64>,
    evaluations: usize,
}

impl<'a> CmiCache<'a> {
    pub fn new(data: &'a Dataset, cfg: EstimatorConfig) -> Result<Self> {
        cfg.validate(data)?;
        Ok(Self {
            data: cfg.prepare(data),
            cfg,
            memo: BTreeMap::new(),
            evaluations: 0,
        })
    }

    pub fn data(&self) -> &Dataset {
        &self.data
    }

    pub fn config(&self) -> &EstimatorConfig {
        &self.cfg
    }

    /// Number of MI estimates actually computed (cache misses).
    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    pub fn mi(&mut self, xs: &[VariableId], ys: &[VariableId]) -> Result<f64> {
        let key = (sorted(xs), sorted(ys));
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let v = self.cfg.raw_mi(&self.data, &key.0, &key.1)?;
        self.evaluations += 1;
        self.memo.insert(key, v);
        Ok(v)
    }

    pub fn cmi(&mut self, x: VariableId, y: VariableId, zs: &[VariableId]) -> Result<f64> {
        self.cmi_groups(&[x], &[y], zs)
    }

    pub fn cmi_groups(
        &mut self,
        xs: &[VariableId],
        ys: &[VariableId],
        zs: &[VariableId],
    ) -> Result<f64> {
        check_cmi_args(xs, ys, zs)?;
        let first = self.mi(&union(xs, zs), ys)?;
        if zs.is_empty() {
            return Ok(first);
        }
        Ok(first - self.mi(ys, zs)?)
    }
}
