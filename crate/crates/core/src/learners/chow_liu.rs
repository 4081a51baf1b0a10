use alloc::vec::Vec;

use super::finite;
use crate::dataset::Dataset;
use crate::error::{invalid_argument, Result};
use crate::estimators::{CmiCache, EstimatorConfig};
use crate::graph::{EdgeSet, VariableId};

/// Maximum-weight spanning tree under pairwise MI weights (undirected
/// skeleton only).
pub fn chow_liu(data: &Dataset, cfg: &EstimatorConfig) -> Result<EdgeSet> {
    let mut cache = CmiCache::new(data, *cfg)?;
    chow_liu_cached(&mut cache)
}

pub fn chow_liu_cached(cache: &mut CmiCache<'_>) -> Result<EdgeSet> {
    let d = cache.data().n_vars();
    if d < 2 {
        return Err(invalid_argument("a spanning tree needs at least 2 variables"));
    }
    let mut weighted: Vec<(f64, VariableId, VariableId)> = Vec::with_capacity(d * (d - 1) / 2);
    for i in 0..d {
        for j in i + 1..d {
            let w = finite("weight", i, j, 0, cache.mi(&[i], &[j])?)?;
            weighted.push((w, i, j));
        }
    }
    // Heaviest first; equal weights keep lexicographic pair order.
    weighted.sort_by(|a, b| b.0.total_cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));

    let mut parent: Vec<usize> = (0..d).collect();
    fn root(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }

    let mut es = EdgeSet::empty(d);
    for (_, i, j) in weighted {
        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
        if ri != rj {
            parent[ri] = rj;
            es.insert(i, j)?;
            if es.len() == d - 1 {
                break;
            }
        }
    }
    Ok(es)
}
