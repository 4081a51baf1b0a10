#![allow(dead_code)]

use std::collections::HashMap;

use gsmple_core::{Column, Dataset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn codes(data: &Dataset, v: usize) -> &[u32] {
    match data.column(v).unwrap() {
        Column::Discrete { codes, .. } => codes,
        Column::Continuous(_) => panic!("column {v} is continuous"),
    }
}

/// Empirical joint entropy in nats, counted with a hash map over row tuples.
pub fn entropy(data: &Dataset, vars: &[usize]) -> f64 {
    if vars.is_empty() {
        return 0.0;
    }
    let n = data.n_samples();
    let mut counts: HashMap<Vec<u32>, usize> = HashMap::new();
    for r in 0..n {
        let key: Vec<u32> = vars.iter().map(|&v| codes(data, v)[r]).collect();
        *counts.entry(key).or_default() += 1;
    }
    let n = n as f64;
    -counts
        .values()
        .map(|&c| {
            let p = c as f64 / n;
            p * p.ln()
        })
        .sum::<f64>()
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().chain(b).copied().collect()
}

pub fn mi_oracle(data: &Dataset, xs: &[usize], ys: &[usize]) -> f64 {
    entropy(data, xs) + entropy(data, ys) - entropy(data, &cat(xs, ys))
}

/// `H(X,Z) + H(Y,Z) − H(X,Y,Z) − H(Z)`.
pub fn cmi_oracle(data: &Dataset, xs: &[usize], ys: &[usize], zs: &[usize]) -> f64 {
    entropy(data, &cat(xs, zs)) + entropy(data, &cat(ys, zs))
        - entropy(data, &cat(&cat(xs, ys), zs))
        - entropy(data, zs)
}

pub fn fair_coins(n: usize, d: usize, seed: u64) -> Dataset {
    let mut r = rng(seed);
    let cols = (0..d)
        .map(|_| Column::discrete((0..n).map(|_| r.random_range(0..2u32)).collect(), 2))
        .collect();
    Dataset::new(cols).unwrap()
}

/// Binary Markov chain X0 → X1 → … where each link copies with
/// probability `stay`.
pub fn binary_chain(n: usize, d: usize, stay: f64, seed: u64) -> Dataset {
    let mut r = rng(seed);
    let mut cols = vec![Vec::with_capacity(n); d];
    for _ in 0..n {
        let mut x = r.random_range(0..2u32);
        cols[0].push(x);
        for col in cols.iter_mut().skip(1) {
            if r.random::<f64>() >= stay {
                x ^= 1;
            }
            col.push(x);
        }
    }
    Dataset::new(cols.into_iter().map(|c| Column::discrete(c, 2)).collect()).unwrap()
}

/// Random discrete data from a random Bayesian-network factorization:
/// each variable depends on up to two earlier ones through a random CPT.
pub fn random_discrete(n: usize, d: usize, seed: u64) -> Dataset {
    let mut r = rng(seed);
    let cards: Vec<u32> = (0..d).map(|_| r.random_range(2..=3u32)).collect();
    let mut parents: Vec<Vec<usize>> = Vec::new();
    for v in 0..d {
        let mut ps: Vec<usize> = (0..v).filter(|_| r.random::<f64>() < 0.5).collect();
        ps.truncate(2);
        parents.push(ps);
    }
    // One categorical distribution per (variable, parent configuration).
    let mut cpts: Vec<HashMap<Vec<u32>, Vec<f64>>> = vec![HashMap::new(); d];
    let mut cols: Vec<Vec<u32>> = vec![Vec::with_capacity(n); d];
    for row in 0..n {
        for v in 0..d {
            let key: Vec<u32> = parents[v].iter().map(|&p| cols[p][row]).collect();
            let k = cards[v] as usize;
            let probs = cpts[v].entry(key).or_insert_with(|| {
                let w: Vec<f64> = (0..k).map(|_| r.random::<f64>().powi(2) + 0.02).collect();
                let s: f64 = w.iter().sum();
                w.into_iter().map(|x| x / s).collect()
            });
            let u: f64 = r.random();
            let mut acc = 0.0;
            let mut x = k as u32 - 1;
            for (c, p) in probs.iter().enumerate() {
                acc += p;
                if u < acc {
                    x = c as u32;
                    break;
                }
            }
            cols[v].push(x);
        }
    }
    Dataset::new(
        cols.into_iter()
            .zip(cards)
            .map(|(c, k)| Column::discrete(c, k))
            .collect(),
    )
    .unwrap()
}

pub fn gaussian_pair(n: usize, rho: f64, seed: u64) -> Dataset {
    let mut r = rng(seed);
    let s = (1.0 - rho * rho).sqrt();
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for _ in 0..n {
        let a: f64 = StandardNormal.sample(&mut r);
        let b: f64 = StandardNormal.sample(&mut r);
        x.push(a);
        y.push(rho * a + s * b);
    }
    Dataset::new(vec![Column::continuous(x), Column::continuous(y)]).unwrap()
}

pub fn mean(xs: impl IntoIterator<Item = f64>) -> f64 {
    let v: Vec<f64> = xs.into_iter().collect();
    v.iter().sum::<f64>() / v.len() as f64
}
