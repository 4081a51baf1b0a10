use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use super::{check_n, rng};
use crate::dataset::{Column, Dataset};
use crate::error::{invalid_argument, Result};
use crate::graph::{EdgeSet, GroundTruth};

const SIDE: usize = 3;

/// Zero-field Ising model on a 3×3 free-boundary lattice, sampled by
/// single-site heat-bath Gibbs sweeps.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct IsingParams {
    /// Uniform coupling.
    pub beta: f64,
    /// Sweeps discarded before the first sample.
    pub burnin: usize,
    /// Sweeps between consecutive samples.
    pub thin: usize,
}

impl Default for IsingParams {
    fn default() -> Self {
        Self {
            beta: 0.5,
            burnin: 1000,
            thin: 10,
        }
    }
}

/// The 12 nearest-neighbor edges of the 3×3 grid (node `r * 3 + c`).
pub fn ising_lattice() -> EdgeSet {
    let mut es = EdgeSet::empty(SIDE * SIDE);
    for r in 0..SIDE {
        for c in 0..SIDE {
            let v = r * SIDE + c;
            if c + 1 < SIDE {
                es.insert(v, v + 1).expect("in range");
            }
            if r + 1 < SIDE {
                es.insert(v, v + SIDE).expect("in range");
            }
        }
    }
    es
}

/// Spins are coded 0 for −1 and 1 for +1.
pub fn gen_ising(n: usize, seed: u64, p: &IsingParams) -> Result<(Dataset, GroundTruth)> {
    check_n(n)?;
    if !p.beta.is_finite() {
        return Err(invalid_argument("beta must be finite"));
    }
    if p.thin == 0 {
        return Err(invalid_argument("thin must be >= 1"));
    }
    let lattice = ising_lattice();
    let d = lattice.d();
    let neighbors: Vec<Vec<usize>> = (0..d)
        .map(|v| lattice.neighborhood(v).expect("in range").into_iter().collect())
        .collect();

    let mut rng = rng(seed, 0);
    let mut spins: Vec<i8> = (0..d).map(|_| if rng.random::<bool>() { 1 } else { -1 }).collect();
    let sweep = |spins: &mut [i8], rng: &mut rand_chacha::ChaCha8Rng| {
        for v in 0..d {
            let field: i32 = neighbors[v].iter().map(|&u| spins[u] as i32).sum();
            let p_up = 1.0 / (1.0 + libm::exp(-2.0 * p.beta * field as f64));
            spins[v] = if rng.random::<f64>() < p_up { 1 } else { -1 };
        }
    };
    for _ in 0..p.burnin {
        sweep(&mut spins, &mut rng);
    }

    let mut codes: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(n); d];
    for _ in 0..n {
        for _ in 0..p.thin {
            sweep(&mut spins, &mut rng);
        }
        for (v, &s) in spins.iter().enumerate() {
            codes[v].push((s > 0) as u32);
        }
    }
    let names: Vec<String> = (0..d).map(|v| format!("s{v}")).collect();
    let data = Dataset::with_names(
        names,
        codes.into_iter().map(|c| Column::discrete(c, 2)).collect(),
    )?;
    Ok((
        data,
        GroundTruth {
            edge_set: lattice,
            label: "ising".into(),
        },
    ))
}
