use super::objective::{grow_pair, shrink_pair};
use super::{finite, LearnTrace, LearnerConfig, Phase, TraceStep};
use crate::dataset::Dataset;
use crate::error::Result;
use crate::estimators::CmiCache;
use crate::graph::{EdgeSet, Neighborhood, VariableId};

/// Grow-shrink maximum pseudolikelihood estimation of the edge set.
///
/// Grow: starting from the empty graph, add the non-edge with the largest
/// paired score `I(i;j|N(i)) + I(i;j|N(j))` while that score exceeds λ.
/// Shrink: remove the edge with the smallest paired score
/// `I(i;j|N(i)∖j) + I(i;j|N(j)∖i)` while that score is at most λ.
pub fn gs_mple(data: &Dataset, cfg: &LearnerConfig) -> Result<(EdgeSet, LearnTrace)> {
    let mut cache = CmiCache::new(data, cfg.estimator)?;
    gs_mple_cached(&mut cache, cfg)
}

pub fn gs_mple_cached(
    cache: &mut CmiCache<'_>,
    cfg: &LearnerConfig,
) -> Result<(EdgeSet, LearnTrace)> {
    cfg.validate()?;
    let d = cache.data().n_vars();
    let cap = cfg.edge_cap(d);
    let mut es = EdgeSet::empty(d);
    let mut nb = Neighborhood::new(&es);
    let mut trace = LearnTrace::default();

    while es.len() < cap {
        let step = trace.steps.len();
        let mut best: Option<(VariableId, VariableId, f64)> = None;
        for i in 0..d {
            for j in i + 1..d {
                if nb.open(i).contains(&j) {
                    continue;
                }
                let s = finite("grow", i, j, step, grow_pair(cache, &nb, i, j)?)?;
                if best.map_or(true, |(_, _, b)| s > b) {
                    best = Some((i, j, s));
                }
            }
        }
        let Some((i, j, score)) = best else { break };
        let accepted = score > cfg.lambda;
        trace.steps.push(TraceStep {
            phase: Phase::Grow,
            edge: (i, j),
            score,
            accepted,
        });
        if !accepted {
            break;
        }
        es.insert(i, j)?;
        nb.link(i, j);
    }

    loop {
        let step = trace.steps.len();
        let mut best: Option<(VariableId, VariableId, f64)> = None;
        for (i, j) in es.iter() {
            let s = finite("shrink", i, j, step, shrink_pair(cache, &nb, i, j)?)?;
            if best.map_or(true, |(_, _, b)| s < b) {
                best = Some((i, j, s));
            }
        }
        let Some((i, j, score)) = best else { break };
        let accepted = score <= cfg.lambda;
        trace.steps.push(TraceStep {
            phase: Phase::Shrink,
            edge: (i, j),
            score,
            accepted,
        });
        if !accepted {
            break;
        }
        es.remove(i, j)?;
        nb.unlink(i, j);
    }

    Ok((es, trace))
}
