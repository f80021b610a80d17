mod common;

use common::{graph_from_mask, Plain};
use edge_ranking::constructive::{self, omega, Reading};
use edge_ranking::graph::{Edge, Graph};
use edge_ranking::oracle::{self, OracleConfig};
use edge_ranking::ranking::{is_valid_ranking, standard_path_ranking, Ranking};
use proptest::prelude::*;

fn pair_count(n: usize) -> u32 {
    (n * (n - 1) / 2) as u32
}

/// A random graph on 1..=max_n vertices.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.9).prop_flat_map(|(n, density)| {
        proptest::collection::vec(prop::bool::weighted(density), pair_count(n) as usize).prop_map(
            move |bits| {
                let mut pairs = Vec::new();
                let mut it = bits.into_iter();
                for a in 1..=n {
                    for b in a + 1..=n {
                        if it.next().unwrap_or(false) {
                            pairs.push((a, b));
                        }
                    }
                }
                Graph::from_edges(n, pairs).unwrap()
            },
        )
    })
}

fn graph_and_labels(max_n: usize) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), proptest::collection::vec(1..=n as u32, n))
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (1..=g.order()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

#[test]
fn checker_matches_path_definition_exhaustively_up_to_four_vertices() {
    for n in 1..=4usize {
        for mask in 0..(1u64 << pair_count(n)) {
            let g = graph_from_mask(n, mask);
            let plain = Plain::new(&g);
            for labels in every_labeling(n, n as u32) {
                let r = Ranking::new(labels.clone()).unwrap();
                assert_eq!(
                    is_valid_ranking(&g, &r).unwrap(),
                    plain.valid_by_paths(&labels),
                    "n={n} mask={mask} labels={labels:?}"
                );
            }
        }
    }
}

fn every_labeling(n: usize, k: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut labels = vec![1; n];
    loop {
        out.push(labels.clone());
        let mut i = 0;
        while i < n && labels[i] == k {
            labels[i] = 1;
            i += 1;
        }
        if i == n {
            return out;
        }
        labels[i] += 1;
    }
}

#[test]
fn path_rank_is_floor_log2_plus_one() {
    for n in 1..=20usize {
        let want = usize::BITS - n.leading_zeros();
        assert_eq!(
            oracle::rank_number(&Graph::path(n).unwrap()).unwrap().0,
            want,
            "P_{n}"
        );
    }
}

#[test]
fn standard_path_ranking_is_the_label_rule() {
    for k in 1..=5u32 {
        let r = standard_path_ranking(k).unwrap();
        for i in 1..(1usize << k) {
            assert_eq!(r.label(i), i.trailing_zeros() + 1);
        }
    }
}

#[test]
fn omega_is_the_next_multiple_above() {
    for m in 1..64u64 {
        let top = 63 - m.leading_zeros();
        let low = m.trailing_zeros();
        for s in low.max(1)..top {
            let n = omega(m, s).unwrap();
            let step = 1u64 << (s + 1);
            assert_eq!(n % step, 0, "m={m} s={s}");
            assert!(n > m && n - m <= step, "m={m} s={s} n={n}");
        }
    }
}

#[test]
fn constructed_sets_avoid_host_edges() {
    for text in [
        "path:3",
        "path:4",
        "path:5",
        "cycle:3",
        "cycle:5",
        "multipartite:4,3,2",
        "joined:7",
    ] {
        let spec = text.parse().unwrap();
        let g = edge_ranking::family::build_family(&spec).unwrap();
        let set = constructive::good_edges(&spec, Reading::Corrected).unwrap();
        let edges = set.edges();
        assert!(edges.windows(2).all(|w| w[0] < w[1]), "{text} not sorted");
        assert!(
            edges.iter().all(|&e| !g.contains_edge(e)),
            "{text} hits a host edge"
        );
        assert_eq!(set.len() as i64, constructive::mu(&spec).unwrap(), "{text}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn checker_matches_path_definition((g, labels) in graph_and_labels(7)) {
        let r = Ranking::new(labels.clone()).unwrap();
        prop_assert_eq!(is_valid_ranking(&g, &r).unwrap(), Plain::new(&g).valid_by_paths(&labels));
    }

    #[test]
    fn rank_matches_plain_recursion(g in graph(10)) {
        prop_assert_eq!(oracle::rank_number(&g).unwrap().0, Plain::new(&g).rank());
    }

    #[test]
    fn exists_switches_at_the_rank(g in graph(10)) {
        let r = oracle::rank_number(&g).unwrap().0;
        prop_assert!(oracle::exists_ranking(&g, r).unwrap());
        prop_assert!(!oracle::exists_ranking(&g, r - 1).unwrap());
    }

    #[test]
    fn adding_an_edge_raises_rank_by_at_most_one(g in graph(9), pick in any::<prop::sample::Index>()) {
        let non = g.non_edges();
        prop_assume!(!non.is_empty());
        let e = non[pick.index(non.len())];
        let v = oracle::classify_edge(&g, e).unwrap();
        prop_assert!(v.augmented_rank == v.base_rank || v.augmented_rank == v.base_rank + 1);
        prop_assert_eq!(v.verdict == oracle::Verdict::Good, v.augmented_rank == v.base_rank);
    }

    #[test]
    fn rank_is_invariant_under_relabeling((g, perm) in graph_and_perm(10)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(oracle::rank_number(&g).unwrap().0, oracle::rank_number(&h).unwrap().0);
    }

    #[test]
    fn memo_does_not_change_results(g in graph(12)) {
        let on = OracleConfig::default();
        let off = OracleConfig { use_memo: false, ..OracleConfig::default() };
        prop_assert_eq!(
            oracle::rank_number_with(&g, &on).unwrap().0,
            oracle::rank_number_with(&g, &off).unwrap().0
        );
    }

    #[test]
    fn maximum_set_matches_plain_search(g in graph(7)) {
        let cfg = OracleConfig::default();
        let best = oracle::max_good_set(&g, &cfg).unwrap();
        prop_assert_eq!(best.mu(), Plain::new(&g).max_addable());
        let (h, dup) = g.add_edges(&best.edges).unwrap();
        prop_assert!(dup.is_empty());
        prop_assert_eq!(oracle::rank_number(&h).unwrap().0, best.rank);
    }

    #[test]
    fn enumeration_matches_plain_labelings(g in graph(6)) {
        let cfg = OracleConfig::default();
        let k = oracle::rank_number(&g).unwrap().0;
        let listed: Vec<Vec<u32>> = oracle::enumerate_optimal_rankings(&g, &cfg)
            .unwrap()
            .into_iter()
            .map(|r| r.labels().to_vec())
            .collect();
        let mut plain = Plain::new(&g).all_rankings(k);
        plain.sort();
        prop_assert_eq!(listed, plain);
    }

    #[test]
    fn valid_rankings_survive_automorphisms(g in graph(7)) {
        let cfg = OracleConfig::default();
        let rankings = oracle::enumerate_optimal_rankings(&g, &cfg).unwrap();
        for p in oracle::automorphisms(&g).unwrap().iter().take(8) {
            for r in rankings.iter().take(8) {
                prop_assert!(is_valid_ranking(&g, &r.permuted(p)).unwrap());
            }
        }
    }

    #[test]
    fn edge_json_round_trips(a in 1usize..=63, b in 1usize..=63) {
        prop_assume!(a != b);
        let e = Edge::new(a, b).unwrap();
        let text = serde_json::to_string(&e).unwrap();
        prop_assert_eq!(serde_json::from_str::<Edge>(&text).unwrap(), e);
    }
}
