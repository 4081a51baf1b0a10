mod common;

use common::{binary_chain, cmi_oracle, entropy, random_discrete};
use gsmple_core::estimators::EstimatorConfig;
use gsmple_core::learners::{grow_score, objective_j, shrink_score};
use gsmple_core::EdgeSet;
use proptest::prelude::*;

fn plugin() -> EstimatorConfig {
    EstimatorConfig::plugin()
}

#[test]
fn complete_graph_has_zero_objective() {
    let data = random_discrete(100, 4, 3);
    assert_eq!(objective_j(&data, &EdgeSet::complete(4), &plugin()).unwrap(), 0.0);
}

#[test]
fn empty_graph_objective_matches_entropies() {
    let data = random_discrete(300, 4, 11);
    let all: Vec<usize> = (0..4).collect();
    let want: f64 = (0..4)
        .map(|i| {
            let rest: Vec<usize> = all.iter().copied().filter(|&v| v != i).collect();
            entropy(&data, &[i]) + entropy(&data, &rest) - entropy(&data, &all)
        })
        .sum();
    let got = objective_j(&data, &EdgeSet::empty(4), &plugin()).unwrap();
    assert!((got - want).abs() <= 1e-12, "{got} vs {want}");
}

#[test]
fn grow_score_examples() {
    let data = binary_chain(500, 3, 0.85, 1);
    let cfg = plugin();
    let empty = EdgeSet::empty(3);
    let mi01 = gsmple_core::estimators::mi_plugin(&data, &[0], &[1]).unwrap();
    assert_eq!(grow_score(&data, &empty, 0, 1, &cfg).unwrap(), 2.0 * mi01);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        assert_eq!(
            grow_score(&data, &empty, i, j, &cfg).unwrap().to_bits(),
            grow_score(&data, &empty, j, i, &cfg).unwrap().to_bits()
        );
    }
    let e = EdgeSet::from_pairs(3, [(0, 1)]).unwrap();
    let got = grow_score(&data, &e, 1, 2, &cfg).unwrap();
    let want = cmi_oracle(&data, &[1], &[2], &[0]) + cmi_oracle(&data, &[1], &[2], &[]);
    assert!((got - want).abs() <= 1e-12);
    assert!(grow_score(&data, &e, 0, 1, &cfg).is_err());
    assert!(grow_score(&data, &e, 2, 2, &cfg).is_err());
}

#[test]
fn shrink_score_examples() {
    let data = binary_chain(500, 3, 0.85, 2);
    let cfg = plugin();
    let single = EdgeSet::from_pairs(3, [(0, 2)]).unwrap();
    let mi = gsmple_core::estimators::mi_plugin(&data, &[0], &[2]).unwrap();
    assert_eq!(shrink_score(&data, &single, 0, 2, &cfg).unwrap(), 2.0 * mi);
    let e = EdgeSet::from_pairs(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(
        shrink_score(&data, &e, 1, 2, &cfg).unwrap().to_bits(),
        shrink_score(&data, &e, 2, 1, &cfg).unwrap().to_bits()
    );
    assert!(shrink_score(&data, &EdgeSet::empty(3), 0, 1, &cfg).is_err());
}

fn edge_set(d: usize, mask: u32) -> EdgeSet {
    let mut es = EdgeSet::empty(d);
    let mut bit = 0;
    for i in 0..d {
        for j in i + 1..d {
            if mask >> bit & 1 == 1 {
                es.insert(i, j).unwrap();
            }
            bit += 1;
        }
    }
    es
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn grow_and_shrink_identities(d in 3usize..=5, n in 20usize..=200, seed in any::<u64>(),
                                  mask in any::<u32>(), pick in any::<usize>()) {
        let data = random_discrete(n, d, seed);
        let cfg = plugin();
        let es = edge_set(d, mask);
        let non_edges: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| !es.contains(i, j))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (i, j) = non_edges[pick % non_edges.len()];
        let grown = es.add_edge(i, j).unwrap();

        let j_before = objective_j(&data, &es, &cfg).unwrap();
        let j_after = objective_j(&data, &grown, &cfg).unwrap();
        let g = grow_score(&data, &es, i, j, &cfg).unwrap();
        prop_assert!((j_before - j_after - g).abs() <= 1e-9, "grow: {} vs {}", j_before - j_after, g);

        let s = shrink_score(&data, &grown, i, j, &cfg).unwrap();
        prop_assert!((j_before - j_after - s).abs() <= 1e-9, "shrink: {} vs {}", j_before - j_after, s);
        prop_assert_eq!(s.to_bits(), g.to_bits());
    }
}
