use std::collections::{BTreeMap, HashSet};

use proptest::prelude::*;

use induced_universal::enumerate::{all_graphs, graphs_from_file, write_graph6_file};
use induced_universal::iso::{
    automorphism_count, canonical_form, find_embedding, induced_subgraph_iso, is_isomorphic,
    is_valid_embedding, naive_induced_iso,
};
use induced_universal::search::{
    all_induced_universal_graphs, is_induced_universal, order_family, GraphFamily,
    OrderingStrategy, SearchStats, StrategyKind,
};
use induced_universal::verify::cross_check;
use induced_universal::{Graph, VertexSet};

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(graph_of_order)
}

fn graph_of_order(n: usize) -> impl Strategy<Value = Graph> {
    {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut b = bits.iter();
            for j in 1..n {
                for i in 0..j {
                    if *b.next().unwrap() {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    }
}

fn permuted(g: Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let n = g.order();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |p| (g, p))
}

/// Brute force: is there a permutation mapping `a` onto `b`?
fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used >> w & 1 == 0 && (0..v).all(|u| a.has_edge(u, v) == b.has_edge(map[u], w)) {
                map.push(w);
                if go(a, b, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    a.order() == b.order() && go(a, b, &mut Vec::new(), 0)
}

fn brute_automorphisms(g: &Graph) -> u64 {
    fn go(g: &Graph, map: &mut Vec<usize>, used: u64) -> u64 {
        let v = map.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used >> w & 1 == 0 && (0..v).all(|u| g.has_edge(u, v) == g.has_edge(map[u], w)) {
                map.push(w);
                total += go(g, map, used | 1 << w);
                map.pop();
            }
        }
        total
    }
    go(g, &mut Vec::new(), 0)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn graph6_round_trip(g in graph_strategy(64)) {
        prop_assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(20)) {
        prop_assert_eq!(g.complement().complement(), g);
        g.complement().validate().unwrap();
    }

    #[test]
    fn induced_subgraph_commutes_with_complement(g in graph_strategy(20), mask in any::<u64>()) {
        let s = VertexSet(mask & g.vertices().0);
        prop_assert_eq!(g.complement().induced_subgraph(s), g.induced_subgraph(s).complement());
    }

    #[test]
    fn flip_edge_toggles_one_pair(g in graph_strategy(12), v in 0usize..12, w in 0usize..12) {
        prop_assume!(v < g.order() && w < g.order() && v != w);
        let f = g.flip_edge(v, w).unwrap();
        f.validate().unwrap();
        prop_assert_eq!(f.edge_count().abs_diff(g.edge_count()), 1);
        prop_assert_eq!(f.flip_edge(v, w).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, p) in graph_strategy(9).prop_flat_map(permuted)) {
        let h = g.relabelled(&p);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn canonical_form_separates_classes(
        (a, b) in (0usize..=7).prop_flat_map(|n| (graph_of_order(n), graph_of_order(n)))
    ) {
        let same = canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, brute_isomorphic(&a, &b));
        prop_assert_eq!(is_isomorphic(&a, &b), brute_isomorphic(&a, &b));
        prop_assert!(brute_isomorphic(&a, &canonical_form(&a).unwrap()));
    }

    #[test]
    fn automorphisms_match_brute_force(g in graph_strategy(7)) {
        let n = automorphism_count(&g).unwrap();
        prop_assert_eq!(n, brute_automorphisms(&g));
        prop_assert_eq!(n, automorphism_count(&g.complement()).unwrap());
    }

    #[test]
    fn embeddings_are_valid(p in graph_strategy(5), t in graph_strategy(10)) {
        match find_embedding(&p, &t) {
            Some(map) => prop_assert!(is_valid_embedding(&p, &t, &map)),
            None => prop_assert!(!naive_induced_iso(&p, &t)),
        }
    }

    #[test]
    fn solvers_agree_on_random_pairs(p in graph_strategy(6), t in graph_strategy(11)) {
        prop_assert_eq!(induced_subgraph_iso(&p, &t), naive_induced_iso(&p, &t));
        prop_assert_eq!(
            induced_subgraph_iso(&p, &t),
            induced_subgraph_iso(&p.complement(), &t.complement())
        );
    }
}

#[test]
fn automorphism_distribution_of_order_five() {
    let mut dist = BTreeMap::new();
    for g in all_graphs(5).unwrap() {
        *dist
            .entry(automorphism_count(&g.unwrap()).unwrap())
            .or_insert(0) += 1;
    }
    let expected: BTreeMap<u64, usize> = [
        (120, 2),
        (24, 2),
        (12, 6),
        (10, 1),
        (8, 4),
        (6, 2),
        (4, 6),
        (2, 11),
    ]
    .into_iter()
    .collect();
    assert_eq!(dist, expected);
    assert_eq!(automorphism_count(&Graph::cycle(5)).unwrap(), 10);
}

#[test]
fn exhaustive_solver_agreement_small() {
    let patterns: Vec<Graph> = (0..=4)
        .flat_map(|n| all_graphs(n).unwrap().map(Result::unwrap))
        .collect();
    let targets: Vec<Graph> = (0..=6)
        .flat_map(|n| all_graphs(n).unwrap().map(Result::unwrap))
        .collect();
    for p in &patterns {
        for t in &targets {
            assert_eq!(
                induced_subgraph_iso(p, t),
                naive_induced_iso(p, t),
                "{p} in {t}"
            );
        }
    }
}

#[test]
fn split_graphs_avoid_c4() {
    // clique 0..4, independent set 4..8, random-looking cross edges
    let mut edges = vec![];
    for i in 0..4 {
        for j in i + 1..4 {
            edges.push((i, j));
        }
    }
    edges.extend([(0, 4), (1, 5), (2, 6), (3, 7), (0, 5), (1, 6), (2, 7)]);
    let g = Graph::from_edges(8, &edges).unwrap();
    assert!(!induced_subgraph_iso(&Graph::cycle(4), &g));
    assert!(!naive_induced_iso(&Graph::cycle(4), &g));
}

fn fig1a_graphs() -> Vec<Graph> {
    let lists: [&[(usize, usize)]; 5] = [
        &[(0, 3), (0, 4), (1, 4), (3, 4)],
        &[(0, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        &[(0, 3), (1, 3), (0, 4), (2, 4), (3, 4)],
        &[(0, 3), (1, 3), (0, 4), (1, 4), (3, 4)],
        &[(0, 3), (1, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
    ];
    lists
        .iter()
        .map(|e| Graph::from_edges(5, e).unwrap())
        .collect()
}

#[test]
fn fig1a_is_the_full_answer_for_three_vertices() {
    let f3 = GraphFamily::all_graphs(3).unwrap();
    let (found, _) = all_induced_universal_graphs(&f3, all_graphs(5).unwrap(), None).unwrap();
    let mut expected: Vec<Graph> = fig1a_graphs()
        .iter()
        .map(|g| canonical_form(g).unwrap())
        .collect();
    expected.sort_by_cached_key(Graph::to_graph6);
    assert_eq!(found, expected);
    for g in fig1a_graphs() {
        let mut st = SearchStats::default();
        assert!(is_induced_universal(
            &f3,
            &g.with_isolated_vertex(),
            &mut st
        ));
        assert_eq!(st.subiso_calls, 4);
        assert!(cross_check(&g, &f3));
    }
}

#[test]
fn results_do_not_depend_on_strategy_or_jobs() {
    let f4 = GraphFamily::all_graphs(4).unwrap();
    let cands = all_graphs(8).unwrap().into_vec().unwrap();
    let mut reference = None;
    for kind in StrategyKind::ALL {
        let fam = order_family(&f4, &OrderingStrategy::new(kind, 17)).unwrap();
        for jobs in [1, 3] {
            let (found, stats) =
                all_induced_universal_graphs(&fam, cands.iter().copied().map(Ok), Some(jobs))
                    .unwrap();
            assert_eq!(found.len(), 438);
            assert!(stats.subiso_calls >= 438 * 11);
            match &reference {
                None => reference = Some(found),
                Some(r) => assert_eq!(&found, r),
            }
        }
    }
    let (none, _) = all_induced_universal_graphs(&f4, all_graphs(7).unwrap(), None).unwrap();
    assert!(none.is_empty());
}

#[test]
fn random_order_nine_graphs_pass_cross_check() {
    use rand::Rng;
    let f5 = GraphFamily::all_graphs(5).unwrap();
    let mut rng = induced_universal::seed::rng(2024);
    for _ in 0..100 {
        let mut g = Graph::empty(9);
        for j in 1..9 {
            for i in 0..j {
                if rng.gen_bool(0.5) {
                    g = g.flip_edge(i, j).unwrap();
                }
            }
        }
        assert!(cross_check(&g, &f5));
    }
}

#[test]
fn order_five_file_stream_keeps_file_order() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("five.g6");
    let mut gs = all_graphs(5).unwrap().into_vec().unwrap();
    gs.reverse();
    assert_eq!(write_graph6_file(&path, &gs).unwrap(), 34);
    let back = graphs_from_file(&path, 5).unwrap().into_vec().unwrap();
    assert_eq!(back, gs);
    let distinct: HashSet<Graph> = back.iter().map(|g| canonical_form(g).unwrap()).collect();
    assert_eq!(distinct.len(), 34);
    assert!(graphs_from_file(&path, 6).unwrap().next().unwrap().is_err());
}
