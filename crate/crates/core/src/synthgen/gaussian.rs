use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{check_n, rng};
use crate::dataset::{Column, Dataset};
use crate::error::{invalid_argument, invalid_data, Result};
use crate::graph::{EdgeSet, GroundTruth};

/// Sparse Gaussian MRF: off-diagonal precision entries are nonzero with
/// probability `edge_prob`, with magnitudes uniform in `[0.2, 0.6]` and a
/// random sign. The matrix `I + offdiag` is shifted by a multiple of the
/// identity when needed so its smallest eigenvalue is at least `min_eig`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct GaussianParams {
    pub d: usize,
    pub edge_prob: f64,
    pub min_eig: f64,
}

impl Default for GaussianParams {
    fn default() -> Self {
        Self {
            d: 9,
            edge_prob: 0.3,
            min_eig: 0.5,
        }
    }
}

impl GaussianParams {
    pub fn validate(&self) -> Result<()> {
        if self.d == 0 {
            return Err(invalid_argument("d must be >= 1"));
        }
        if !(self.edge_prob > 0.0 && self.edge_prob < 1.0) {
            return Err(invalid_argument("edge_prob must lie in (0, 1)"));
        }
        if !(self.min_eig > 0.0 && self.min_eig.is_finite()) {
            return Err(invalid_argument("min_eig must be finite and > 0"));
        }
        Ok(())
    }
}

/// The random precision matrix `gen_gaussian` draws for `seed`.
pub fn gaussian_precision(seed: u64, p: &GaussianParams) -> Result<DMatrix<f64>> {
    p.validate()?;
    let mut rng = rng(seed, 0);
    let mut theta = DMatrix::<f64>::identity(p.d, p.d);
    for i in 0..p.d {
        for j in i + 1..p.d {
            if rng.random::<f64>() < p.edge_prob {
                let mag = rng.random_range(0.2..0.6);
                let v = if rng.random::<bool>() { mag } else { -mag };
                theta[(i, j)] = v;
                theta[(j, i)] = v;
            }
        }
    }
    let smallest = theta.symmetric_eigenvalues().min();
    if smallest < p.min_eig {
        for i in 0..p.d {
            theta[(i, i)] += p.min_eig - smallest;
        }
    }
    Ok(theta)
}

pub fn gen_gaussian(n: usize, seed: u64, p: &GaussianParams) -> Result<(Dataset, GroundTruth)> {
    let theta = gaussian_precision(seed, p)?;
    gen_gaussian_with_precision(n, seed, &theta)
}

/// Draws `n` rows from `N(0, theta⁻¹)`; the planted graph is the support
/// of the off-diagonal of `theta`.
pub fn gen_gaussian_with_precision(
    n: usize,
    seed: u64,
    theta: &DMatrix<f64>,
) -> Result<(Dataset, GroundTruth)> {
    check_n(n)?;
    let d = theta.nrows();
    if d == 0 || theta.ncols() != d {
        return Err(invalid_argument("precision matrix must be square and non-empty"));
    }
    if theta != &theta.transpose() {
        return Err(invalid_argument("precision matrix must be symmetric"));
    }
    // theta = L Lᵀ; solving Lᵀ x = z for z ~ N(0, I) gives x ~ N(0, theta⁻¹).
    let chol = theta
        .clone()
        .cholesky()
        .ok_or_else(|| invalid_data("precision matrix is not positive definite"))?;
    let lt = chol.l().transpose();

    let mut rng = rng(seed, 1);
    let mut values: Vec<Vec<f64>> = alloc::vec![Vec::with_capacity(n); d];
    for _ in 0..n {
        let z = DVector::<f64>::from_fn(d, |_, _| StandardNormal.sample(&mut rng));
        let x = lt
            .solve_upper_triangular(&z)
            .ok_or_else(|| invalid_data("singular Cholesky factor"))?;
        for (v, col) in values.iter_mut().enumerate() {
            col.push(x[v]);
        }
    }

    let mut truth = EdgeSet::empty(d);
    for i in 0..d {
        for j in i + 1..d {
            if theta[(i, j)] != 0.0 {
                truth.insert(i, j)?;
            }
        }
    }
    let data = Dataset::new(values.into_iter().map(Column::continuous).collect())?;
    Ok((
        data,
        GroundTruth {
            edge_set: truth,
            label: "gaussian".into(),
        },
    ))
}
