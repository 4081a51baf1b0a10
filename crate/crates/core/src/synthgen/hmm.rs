//! Twin-chain hidden Markov models: two hidden chains `S1`, `S2` that
//! evolve independently and one observation `O_t` depending on both.
//!
//! Columns are laid out per time step as `(S1_t, S2_t, O_t)`. The planted
//! graph is the moralized network: chain edges, both observation edges,
//! and the `S1_t – S2_t` edge marrying the parents of `O_t`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{check_n, rng};
use crate::dataset::{Column, Dataset};
use crate::error::{invalid_argument, Result};
use crate::graph::{EdgeSet, GroundTruth};

/// Moralized twin-chain HMM graph over `3 * t_steps` variables.
pub fn hmm_truth(t_steps: usize) -> EdgeSet {
    let mut es = EdgeSet::empty(3 * t_steps);
    for t in 0..t_steps {
        let (s1, s2, o) = (3 * t, 3 * t + 1, 3 * t + 2);
        es.insert(s1, o).expect("in range");
        es.insert(s2, o).expect("in range");
        es.insert(s1, s2).expect("in range");
        if t + 1 < t_steps {
            es.insert(s1, s1 + 3).expect("in range");
            es.insert(s2, s2 + 3).expect("in range");
        }
    }
    es
}

fn hmm_names(t_steps: usize) -> Vec<String> {
    (1..=t_steps)
        .flat_map(|t| [format!("s1_{t}"), format!("s2_{t}"), format!("o_{t}")])
        .collect()
}

fn check_steps(t_steps: usize) -> Result<()> {
    if t_steps == 0 {
        Err(invalid_argument("t_steps must be >= 1"))
    } else {
        Ok(())
    }
}

/// Conditional probability tables of the binary twin-chain HMM. Each row
/// is a distribution over `{0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct HmmCpts {
    pub init1: [f64; 2],
    pub init2: [f64; 2],
    /// `trans1[prev][next]`.
    pub trans1: [[f64; 2]; 2],
    pub trans2: [[f64; 2]; 2],
    /// `obs[2 * s1 + s2][o]`.
    pub obs: [[f64; 2]; 4],
}

impl Default for HmmCpts {
    fn default() -> Self {
        let stay = [[0.8, 0.2], [0.2, 0.8]];
        Self {
            init1: [0.5, 0.5],
            init2: [0.5, 0.5],
            trans1: stay,
            trans2: stay,
            obs: [[0.9, 0.1], [0.5, 0.5], [0.5, 0.5], [0.1, 0.9]],
        }
    }
}

impl HmmCpts {
    pub fn validate(&self) -> Result<()> {
        let rows = [self.init1, self.init2]
            .into_iter()
            .chain(self.trans1)
            .chain(self.trans2)
            .chain(self.obs);
        for (r, row) in rows.enumerate() {
            if row.iter().any(|p| !p.is_finite() || *p < 0.0) || ((row[0] + row[1]) - 1.0).abs() > 1e-9 {
                return Err(invalid_argument(format!(
                    "CPT row {r} = {row:?} is not a probability distribution"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct HmmDiscreteParams {
    pub t_steps: usize,
    pub cpts: HmmCpts,
}

impl Default for HmmDiscreteParams {
    fn default() -> Self {
        Self {
            t_steps: 3,
            cpts: HmmCpts::default(),
        }
    }
}

#[inline]
fn draw(row: &[f64; 2], rng: &mut impl Rng) -> u32 {
    (rng.random::<f64>() >= row[0]) as u32
}

pub fn gen_hmm_discrete(
    n: usize,
    seed: u64,
    p: &HmmDiscreteParams,
) -> Result<(Dataset, GroundTruth)> {
    check_n(n)?;
    check_steps(p.t_steps)?;
    p.cpts.validate()?;
    let c = &p.cpts;
    let d = 3 * p.t_steps;
    let mut codes: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(n); d];
    let mut rng = rng(seed, 0);
    for _ in 0..n {
        let mut s1 = draw(&c.init1, &mut rng);
        let mut s2 = draw(&c.init2, &mut rng);
        for t in 0..p.t_steps {
            if t > 0 {
                s1 = draw(&c.trans1[s1 as usize], &mut rng);
                s2 = draw(&c.trans2[s2 as usize], &mut rng);
            }
            let o = draw(&c.obs[(2 * s1 + s2) as usize], &mut rng);
            codes[3 * t].push(s1);
            codes[3 * t + 1].push(s2);
            codes[3 * t + 2].push(o);
        }
    }
    let data = Dataset::with_names(
        hmm_names(p.t_steps),
        codes.into_iter().map(|c| Column::discrete(c, 2)).collect(),
    )?;
    Ok((
        data,
        GroundTruth {
            edge_set: hmm_truth(p.t_steps),
            label: "hmm-discrete".into(),
        },
    ))
}

/// Linear-Gaussian twin chains with observation
/// `O_t ~ N(s1_t, exp(coupling * s2_t / 2)^2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(default, deny_unknown_fields))]
pub struct HmmContinuousParams {
    pub t_steps: usize,
    pub a1: f64,
    pub a2: f64,
    pub noise_sd1: f64,
    pub noise_sd2: f64,
    pub init_sd1: f64,
    pub init_sd2: f64,
    /// Scale of `s2` inside the observation's log standard deviation; 0
    /// makes the observation noise constant.
    pub coupling: f64,
}

impl Default for HmmContinuousParams {
    fn default() -> Self {
        Self {
            t_steps: 3,
            a1: 0.8,
            a2: 0.8,
            noise_sd1: 0.5,
            noise_sd2: 0.7,
            init_sd1: 0.5,
            init_sd2: 0.7,
            coupling: 1.0,
        }
    }
}

impl HmmContinuousParams {
    pub fn validate(&self) -> Result<()> {
        check_steps(self.t_steps)?;
        let scales = [self.noise_sd1, self.noise_sd2, self.init_sd1, self.init_sd2];
        if scales.iter().any(|s| !s.is_finite() || *s <= 0.0) {
            return Err(invalid_argument("noise and initial scales must be finite and > 0"));
        }
        if ![self.a1, self.a2, self.coupling].iter().all(|v| v.is_finite()) {
            return Err(invalid_argument("transition coefficients must be finite"));
        }
        Ok(())
    }
}

pub fn gen_hmm_continuous(
    n: usize,
    seed: u64,
    p: &HmmContinuousParams,
) -> Result<(Dataset, GroundTruth)> {
    check_n(n)?;
    p.validate()?;
    let d = 3 * p.t_steps;
    let mut values: Vec<Vec<f64>> = alloc::vec![Vec::with_capacity(n); d];
    let mut rng = rng(seed, 0);
    let mut normal = || -> f64 { StandardNormal.sample(&mut rng) };
    for _ in 0..n {
        let mut s1 = p.init_sd1 * normal();
        let mut s2 = p.init_sd2 * normal();
        for t in 0..p.t_steps {
            if t > 0 {
                s1 = p.a1 * s1 + p.noise_sd1 * normal();
                s2 = p.a2 * s2 + p.noise_sd2 * normal();
            }
            let sd = libm::exp(p.coupling * s2 / 2.0);
            let o = s1 + sd * normal();
            values[3 * t].push(s1);
            values[3 * t + 1].push(s2);
            values[3 * t + 2].push(o);
        }
    }
    let data = Dataset::with_names(
        hmm_names(p.t_steps),
        values.into_iter().map(Column::continuous).collect(),
    )?;
    Ok((
        data,
        GroundTruth {
            edge_set: hmm_truth(p.t_steps),
            label: "hmm-continuous".into(),
        },
    ))
}
