//! The edge-set objective and the paired grow/shrink scores.
//!
//! For an edge set `E` the objective is
//! `J(E) = Σ_i I(X_i; X_{V∖N[i]} | X_{N(i)})`, the expected negative log
//! pseudolikelihood of `E` up to a constant. Adding `{i,j}` lowers `J` by
//! `I(X_i;X_j|X_N(i)) + I(X_i;X_j|X_N(j))` (chain rule), and removing it
//! raises `J` by the same sum taken with the partner left out of each
//! conditioning set.

use alloc::vec::Vec;

use super::check_dims;
use crate::dataset::Dataset;
use crate::error::{invalid_argument, Result};
use crate::estimators::{CmiCache, EstimatorConfig};
use crate::graph::{EdgeSet, Neighborhood, VariableId};

/// Variable part of `J(E)` (the constant term is dropped).
pub fn objective_j(data: &Dataset, es: &EdgeSet, cfg: &EstimatorConfig) -> Result<f64> {
    check_dims(data, es)?;
    let mut cache = CmiCache::new(data, *cfg)?;
    objective_j_cached(&mut cache, es)
}

pub fn objective_j_cached(cache: &mut CmiCache<'_>, es: &EdgeSet) -> Result<f64> {
    check_dims(cache.data(), es)?;
    let nb = Neighborhood::new(es);
    let mut total = 0.0;
    for i in 0..es.d() {
        let rest = nb.complement(i);
        if rest.is_empty() {
            continue;
        }
        let given: Vec<VariableId> = nb.open(i).iter().copied().collect();
        total += cache.cmi_groups(&[i], &rest, &given)?;
    }
    Ok(total)
}

/// Decrease of `J` from adding `{i, j}`; requires `j ∉ N[i]`.
pub fn grow_score(
    data: &Dataset,
    es: &EdgeSet,
    i: VariableId,
    j: VariableId,
    cfg: &EstimatorConfig,
) -> Result<f64> {
    check_dims(data, es)?;
    let mut cache = CmiCache::new(data, *cfg)?;
    grow_score_cached(&mut cache, es, i, j)
}

pub fn grow_score_cached(
    cache: &mut CmiCache<'_>,
    es: &EdgeSet,
    i: VariableId,
    j: VariableId,
) -> Result<f64> {
    check_dims(cache.data(), es)?;
    if es.closed_neighborhood(i)?.contains(&j) {
        return Err(invalid_argument(alloc::format!(
            "grow score needs a non-adjacent pair, got ({i}, {j})"
        )));
    }
    es.neighborhood(j)?;
    grow_pair(cache, &Neighborhood::new(es), i, j)
}

/// Increase of `J` from removing `{i, j}`; requires `j ∈ N(i)`.
pub fn shrink_score(
    data: &Dataset,
    es: &EdgeSet,
    i: VariableId,
    j: VariableId,
    cfg: &EstimatorConfig,
) -> Result<f64> {
    check_dims(data, es)?;
    let mut cache = CmiCache::new(data, *cfg)?;
    shrink_score_cached(&mut cache, es, i, j)
}

pub fn shrink_score_cached(
    cache: &mut CmiCache<'_>,
    es: &EdgeSet,
    i: VariableId,
    j: VariableId,
) -> Result<f64> {
    check_dims(cache.data(), es)?;
    if !es.neighborhood(i)?.contains(&j) {
        return Err(invalid_argument(alloc::format!(
            "shrink score needs an existing edge, got ({i}, {j})"
        )));
    }
    shrink_pair(cache, &Neighborhood::new(es), i, j)
}

pub(crate) fn grow_pair(
    cache: &mut CmiCache<'_>,
    nb: &Neighborhood,
    i: VariableId,
    j: VariableId,
) -> Result<f64> {
    let ni: Vec<VariableId> = nb.open(i).iter().copied().collect();
    let nj: Vec<VariableId> = nb.open(j).iter().copied().collect();
    Ok(cache.cmi(i, j, &ni)? + cache.cmi(j, i, &nj)?)
}

pub(crate) fn shrink_pair(
    cache: &mut CmiCache<'_>,
    nb: &Neighborhood,
    i: VariableId,
    j: VariableId,
) -> Result<f64> {
    let ni = nb.open_without(i, j);
    let nj = nb.open_without(j, i);
    Ok(cache.cmi(i, j, &ni)? + cache.cmi(j, i, &nj)?)
}
