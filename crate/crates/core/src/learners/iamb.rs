//! Node-wise Markov-blanket baselines.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{finite, LearnerConfig};
use crate::dataset::Dataset;
use crate::error::Result;
use crate::estimators::CmiCache;
use crate::graph::{EdgeSet, Neighborhood, VariableId};

/// Incremental association Markov blanket, run per node and symmetrized
/// with the OR rule.
pub fn iamb(data: &Dataset, cfg: &LearnerConfig) -> Result<EdgeSet> {
    let mut cache = CmiCache::new(data, cfg.estimator)?;
    iamb_cached(&mut cache, cfg)
}

pub fn iamb_cached(cache: &mut CmiCache<'_>, cfg: &LearnerConfig) -> Result<EdgeSet> {
    cfg.validate()?;
    let d = cache.data().n_vars();
    let mut es = EdgeSet::empty(d);
    for i in 0..d {
        let mut blanket = grow_blanket(cache, cfg, i)?;
        shrink_blanket(cache, cfg, i, &mut blanket)?;
        for j in blanket {
            es.insert(i, j)?;
        }
    }
    Ok(es)
}

/// Grow-shrink Markov network: node-wise grow, OR-union, then an edge-wise
/// shrink that drops `{i,j}` when either endpoint's conditional MI is at
/// most λ.
pub fn gsmn(data: &Dataset, cfg: &LearnerConfig) -> Result<EdgeSet> {
    let mut cache = CmiCache::new(data, cfg.estimator)?;
    gsmn_cached(&mut cache, cfg)
}

pub fn gsmn_cached(cache: &mut CmiCache<'_>, cfg: &LearnerConfig) -> Result<EdgeSet> {
    cfg.validate()?;
    let d = cache.data().n_vars();
    let mut es = EdgeSet::empty(d);
    for i in 0..d {
        for j in grow_blanket(cache, cfg, i)? {
            es.insert(i, j)?;
        }
    }

    let mut nb = Neighborhood::new(&es);
    let mut step = 0;
    loop {
        let mut removed = false;
        let snapshot: Vec<(VariableId, VariableId)> = es.iter().collect();
        for (i, j) in snapshot {
            let from_i = cache.cmi(i, j, &nb.open_without(i, j))?;
            let from_j = cache.cmi(j, i, &nb.open_without(j, i))?;
            let m = finite("shrink", i, j, step, from_i.min(from_j))?;
            step += 1;
            if m <= cfg.lambda {
                es.remove(i, j)?;
                nb.unlink(i, j);
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    Ok(es)
}

/// Adds the argmax-CMI node to `i`'s blanket until the best score is at
/// most λ.
fn grow_blanket(
    cache: &mut CmiCache<'_>,
    cfg: &LearnerConfig,
    i: VariableId,
) -> Result<BTreeSet<VariableId>> {
    let d = cache.data().n_vars();
    let cap = cfg.max_edges.unwrap_or(d).min(d - 1);
    let mut blanket = BTreeSet::new();
    while blanket.len() < cap {
        let given: Vec<VariableId> = blanket.iter().copied().collect();
        let mut best: Option<(VariableId, f64)> = None;
        for j in (0..d).filter(|&j| j != i && !blanket.contains(&j)) {
            let s = finite("grow", i, j, blanket.len(), cache.cmi(i, j, &given)?)?;
            if best.map_or(true, |(_, b)| s > b) {
                best = Some((j, s));
            }
        }
        match best {
            Some((j, s)) if s > cfg.lambda => {
                blanket.insert(j);
            }
            _ => break,
        }
    }
    Ok(blanket)
}

/// Repeatedly drops the blanket member with the smallest
/// `I(i; j | blanket ∖ j)` while it is at most λ.
fn shrink_blanket(
    cache: &mut CmiCache<'_>,
    cfg: &LearnerConfig,
    i: VariableId,
    blanket: &mut BTreeSet<VariableId>,
) -> Result<()> {
    let mut step = 0;
    loop {
        let mut worst: Option<(VariableId, f64)> = None;
        for &j in blanket.iter() {
            let given: Vec<VariableId> = blanket.iter().copied().filter(|&v| v != j).collect();
            let s = finite("shrink", i, j, step, cache.cmi(i, j, &given)?)?;
            if worst.map_or(true, |(_, w)| s < w) {
                worst = Some((j, s));
            }
        }
        match worst {
            Some((j, s)) if s <= cfg.lambda => {
                blanket.remove(&j);
                step += 1;
            }
            _ => return Ok(()),
        }
    }
}
