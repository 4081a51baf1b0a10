//! Empirical (plug-in) mutual information over joint contingency tables.

use alloc::vec::Vec;

use crate::dataset::{Column, Dataset};
use crate::error::{Error, Result};
use crate::graph::VariableId;

/// Maps every row to a dense id of its joint category over `vars`.
///
/// Returns the ids together with the number of distinct ids.
pub(crate) fn joint_ids(data: &Dataset, vars: &[VariableId]) -> Result<(Vec<u32>, u32)> {
    let n = data.n_samples();
    let mut ids = alloc::vec![0u32; n];
    let mut levels: u64 = 1;
    for &v in vars {
        let (codes, card) = match data.column(v)? {
            Column::Discrete { codes, cardinality } => (codes, *cardinality as u64),
            Column::Continuous(_) => return Err(Error::EstimatorMismatch { column: v }),
        };
        // ids < levels ≤ n, so the mixed-radix code stays within u64.
        let combined: Vec<u64> = ids
            .iter()
            .zip(codes)
            .map(|(&id, &c)| id as u64 * card + c as u64)
            .collect();
        levels = densify(&combined, &mut ids) as u64;
    }
    Ok((ids, levels as u32))
}

/// Relabels `codes` to dense ids `0..m` preserving order; returns `m`.
fn densify(codes: &[u64], out: &mut [u32]) -> u32 {
    let mut order: Vec<u32> = (0..codes.len() as u32).collect();
    order.sort_unstable_by_key(|&r| codes[r as usize]);
    let mut next = 0u32;
    let mut prev = None;
    for &r in &order {
        let c = codes[r as usize];
        if prev != Some(c) {
            if prev.is_some() {
                next += 1;
            }
            prev = Some(c);
        }
        out[r as usize] = next;
    }
    if codes.is_empty() {
        0
    } else {
        next + 1
    }
}

/// Plug-in `Î(X;Y)` in nats, with `X` and `Y` the joint categories of
/// `xs` and `ys`.
///
/// Computed as `Σ p(x,y) ln(c(x,y)·N / (c(x)·c(y)))`, so a factorizing
/// empirical joint yields exactly `0.0`.
pub fn mi_plugin(data: &Dataset, xs: &[VariableId], ys: &[VariableId]) -> Result<f64> {
    super::check_groups(data, xs, ys)?;
    let (ix, mx) = joint_ids(data, xs)?;
    let (iy, my) = joint_ids(data, ys)?;
    Ok(mi_from_ids(&ix, mx, &iy, my))
}

pub(crate) fn mi_from_ids(ix: &[u32], mx: u32, iy: &[u32], my: u32) -> f64 {
    let n = ix.len();
    let mut cx = alloc::vec![0u64; mx as usize];
    let mut cy = alloc::vec![0u64; my as usize];
    for (&a, &b) in ix.iter().zip(iy) {
        cx[a as usize] += 1;
        cy[b as usize] += 1;
    }
    let mut joint: Vec<u64> = ix
        .iter()
        .zip(iy)
        .map(|(&a, &b)| a as u64 * my as u64 + b as u64)
        .collect();
    joint.sort_unstable();

    let mut terms = Vec::new();
    let mut start = 0;
    while start < joint.len() {
        let code = joint[start];
        let mut end = start + 1;
        while end < joint.len() && joint[end] == code {
            end += 1;
        }
        let c = (end - start) as u64;
        let a = (code / my as u64) as usize;
        let b = (code % my as u64) as usize;
        let ratio = (c * n as u64) as f64 / (cx[a] * cy[b]) as f64;
        terms.push(c as f64 * libm::log(ratio));
        start = end;
    }
    // The multiset of cell terms does not depend on which group is X, so
    // summing in sorted order makes the estimate exactly symmetric.
    terms.sort_unstable_by(f64::total_cmp);
    let acc: f64 = terms.iter().sum();
    // Rounding can leave a negative residue of order 1e-17.
    (acc / n as f64).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use core::f64::consts::LN_2;

    fn ds(cols: Vec<Vec<u32>>) -> Dataset {
        Dataset::new(cols.into_iter().map(Column::discrete_auto).collect()).unwrap()
    }

    #[test]
    fn copy_of_fair_coin_is_ln2() {
        let x: Vec<u32> = (0..100).map(|i| i % 2).collect();
        let d = ds(vec![x.clone(), x]);
        assert!((mi_plugin(&d, &[0], &[1]).unwrap() - LN_2).abs() < 1e-12);
    }

    #[test]
    fn product_table_is_exactly_zero() {
        let d = ds(vec![vec![0, 0, 1, 1, 1, 0, 0, 1], vec![0, 1, 0, 1, 0, 1, 0, 1]]);
        assert_eq!(mi_plugin(&d, &[0], &[1]).unwrap(), 0.0);
    }

    #[test]
    fn three_category_copy_is_ln3() {
        let x: Vec<u32> = (0..99).map(|i| i % 3).collect();
        let d = ds(vec![x.clone(), x]);
        assert!((mi_plugin(&d, &[0], &[1]).unwrap() - libm::log(3.0)).abs() < 1e-12);
    }

    #[test]
    fn continuous_column_is_rejected() {
        let d = Dataset::new(vec![
            Column::discrete(vec![0, 1], 2),
            Column::continuous(vec![0.5, 1.5]),
        ])
        .unwrap();
        assert_eq!(
            mi_plugin(&d, &[0], &[1]),
            Err(Error::EstimatorMismatch { column: 1 })
        );
    }

    #[test]
    fn joint_ids_count_distinct_rows() {
        let d = ds(vec![vec![0, 1, 0, 1, 0], vec![2, 2, 2, 0, 2]]);
        let (ids, m) = joint_ids(&d, &[0, 1]).unwrap();
        assert_eq!(m, 3);
        assert_eq!(ids[0], ids[2]);
        assert_eq!(ids[0], ids[4]);
        assert_ne!(ids[1], ids[3]);
    }
}
