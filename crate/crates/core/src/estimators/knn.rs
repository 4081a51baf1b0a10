//! k-nearest-neighbor mutual information for discrete-continuous mixtures.
//!
//! Distances are max-norms over the coordinates of a group, with absolute
//! difference on continuous coordinates and the 0/1 metric on discrete
//! ones. For sample `i` let `ρ_i` be the joint-space distance to its k-th
//! nearest neighbor. Each sample contributes
//!
//! ```text
//! ψ(k̃_i) + ln N − ψ(n_x,i + 1) − ψ(n_y,i + 1)
//! ```
//!
//! where, for `ρ_i > 0`, `k̃_i = k` and `n_x,i`, `n_y,i` count the other
//! samples strictly inside `ρ_i` in each marginal; for `ρ_i = 0` (repeated
//! points) `k̃_i` is the number of exact joint duplicates and the marginal
//! counts are exact marginal duplicates.

use alloc::vec::Vec;

use crate::dataset::{Column, Dataset};
use crate::error::{invalid_argument, Result};
use crate::graph::VariableId;

struct Coord<'a> {
    column: &'a Column,
}

impl Coord<'_> {
    #[inline]
    fn dist(&self, a: usize, b: usize) -> f64 {
        match self.column {
            Column::Discrete { codes, .. } => (codes[a] != codes[b]) as u8 as f64,
            Column::Continuous(v) => (v[a] - v[b]).abs(),
        }
    }
}

/// `ψ(m)` for `m = 0..=n`, with entry 0 unused.
pub(crate) fn digamma_table(n: usize) -> Vec<f64> {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let mut t = alloc::vec![0.0; n + 1];
    if n >= 1 {
        t[1] = -EULER_GAMMA;
    }
    for m in 2..=n {
        t[m] = t[m - 1] + 1.0 / (m - 1) as f64;
    }
    t
}

/// Estimate of `I(X;Y)` in nats for arbitrary column kinds. May be
/// negative on finite samples.
pub fn mi_knn_mixed(data: &Dataset, xs: &[VariableId], ys: &[VariableId], k: usize) -> Result<f64> {
    super::check_groups(data, xs, ys)?;
    let n = data.n_samples();
    if k == 0 || k >= n {
        return Err(invalid_argument(alloc::format!(
            "k = {k} must satisfy 1 <= k < N = {n}"
        )));
    }
    let cx: Vec<Coord> = xs
        .iter()
        .map(|&v| data.column(v).map(|column| Coord { column }))
        .collect::<Result<_>>()?;
    let cy: Vec<Coord> = ys
        .iter()
        .map(|&v| data.column(v).map(|column| Coord { column }))
        .collect::<Result<_>>()?;

    let psi = digamma_table(n + 1);
    let mut dx = alloc::vec![0.0f64; n];
    let mut dy = alloc::vec![0.0f64; n];
    let mut scratch: Vec<f64> = Vec::with_capacity(n);
    let mut acc = 0.0;

    for i in 0..n {
        scratch.clear();
        for j in 0..n {
            if j == i {
                continue;
            }
            let a = cx.iter().fold(0.0f64, |m, c| m.max(c.dist(i, j)));
            let b = cy.iter().fold(0.0f64, |m, c| m.max(c.dist(i, j)));
            dx[j] = a;
            dy[j] = b;
            scratch.push(a.max(b));
        }
        let (_, kth, _) = scratch.select_nth_unstable_by(k - 1, f64::total_cmp);
        let rho = *kth;

        let (k_eff, nx, ny) = if rho > 0.0 {
            let (mut nx, mut ny) = (0usize, 0usize);
            for j in (0..n).filter(|&j| j != i) {
                nx += (dx[j] < rho) as usize;
                ny += (dy[j] < rho) as usize;
            }
            (k, nx, ny)
        } else {
            let (mut kt, mut nx, mut ny) = (0usize, 0usize, 0usize);
            for j in (0..n).filter(|&j| j != i) {
                let zx = dx[j] == 0.0;
                let zy = dy[j] == 0.0;
                kt += (zx && zy) as usize;
                nx += zx as usize;
                ny += zy as usize;
            }
            (kt, nx, ny)
        };
        acc += psi[k_eff] - psi[nx + 1] - psi[ny + 1];
    }
    Ok(acc / n as f64 + libm::log(n as f64))
}
