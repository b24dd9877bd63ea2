use proptest::prelude::*;
use proptest::test_runner::Config;

use sumchoice_core::choosability::{canonical_assignments, is_choosable, reduce, ListAssignment, SizeFunction, Verdict};
use sumchoice_core::graph::{canonical_form, canonical_labeling, encode_graph6, parse_graph6, FamilySpec, Graph};
use sumchoice_core::sumchoice::{chi_sc, greedy_bound, Engine, EngineOptions, MemoStore};

fn config(cases: u32) -> Config {
    Config { cases, failure_persistence: None, ..Config::default() }
}

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits)))
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// A graph with sizes in `1..=deg + 2`, retried until the total is small
/// enough for the brute-force oracle.
fn graph_and_sizes(max_n: usize, max_total: u32) -> impl Strategy<Value = (Graph, SizeFunction)> {
    graph(max_n)
        .prop_flat_map(|g| {
            let ranges: Vec<_> = (0..g.order()).map(|v| 1..=g.degree(v) as u32 + 2).collect();
            (Just(g), ranges)
        })
        .prop_map(|(g, f)| (g, SizeFunction(f)))
        .prop_filter("small total", move |(_, f)| f.total() <= max_total)
}

fn brute_colorable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    fn rec(g: &Graph, lists: &[Vec<u32>], v: usize, col: &mut Vec<u32>) -> bool {
        if v == lists.len() {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col.push(c);
                if rec(g, lists, v + 1, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    rec(g, lists, 0, &mut Vec::new())
}

/// Every assignment up to renaming, judged without the reduction rules.
fn oracle_choosable(g: &Graph, f: &SizeFunction) -> bool {
    canonical_assignments(g, f).unwrap().all(|a: ListAssignment| brute_colorable(g, &a.lists()))
}

fn assert_witness(g: &Graph, f: &SizeFunction, v: &Verdict) {
    if let Some(w) = v.witness() {
        assert_eq!(&w.sizes(), f, "witness sizes");
        assert!(!brute_colorable(g, &w.lists()), "witness {w:?} is colorable");
    }
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn graph6_round_trips(g in graph(9)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_is_an_isomorphism_invariant((g, perm) in graph(8).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        let lab = canonical_labeling(&g).unwrap();
        prop_assert_eq!(encode_graph6(&lab.graph), lab.key.0.clone());
        prop_assert_eq!(g.permuted(&lab.perm), lab.graph);
    }

    #[test]
    fn reduction_preserves_choosability((g, f) in graph_and_sizes(5, 11)) {
        let v = is_choosable(&g, &f).unwrap();
        prop_assert_eq!(v.is_choosable(), oracle_choosable(&g, &f), "{:?} with {:?}", g, f);
        assert_witness(&g, &f, &v);
        let red = reduce(&g, &f).unwrap();
        if !red.is_trivially_not_choosable() {
            for step in &red.log {
                prop_assert!(!red.kept.contains(&step.vertex));
            }
            for (i, &v) in red.kept.iter().enumerate() {
                let s = red.sizes[i];
                prop_assert!(s >= 2 && s as usize <= red.graph.degree(i), "vertex {} keeps size {}", v, s);
            }
            let residual = is_choosable(&red.graph, &red.sizes).unwrap();
            prop_assert_eq!(residual.is_choosable(), v.is_choosable());
        }
    }

    #[test]
    fn choosability_is_monotone_in_sizes((g, f) in graph_and_sizes(5, 12), pick in any::<usize>()) {
        let v = pick % g.order();
        let base = is_choosable(&g, &f).unwrap();
        assert_witness(&g, &f, &base);
        let mut up = f.clone();
        up.0[v] += 1;
        if base.is_choosable() {
            prop_assert!(is_choosable(&g, &up).unwrap().is_choosable());
        }
        if f[v] > 1 {
            let mut down = f.clone();
            down.0[v] -= 1;
            let lower = is_choosable(&g, &down).unwrap();
            assert_witness(&g, &down, &lower);
            if lower.is_choosable() {
                prop_assert!(base.is_choosable());
            }
        }
    }

    #[test]
    fn verdicts_survive_relabeling((g, f) in graph_and_sizes(5, 14), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left(seed as usize % n.max(1));
        if seed & 1 == 1 {
            perm.reverse();
        }
        let a = is_choosable(&g, &f).unwrap();
        let b = is_choosable(&g.permuted(&perm), &f.permuted(&perm)).unwrap();
        prop_assert_eq!(a.is_choosable(), b.is_choosable());
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn sum_choice_respects_the_greedy_bound_and_relabeling((g, perm) in graph(6).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) })) {
        let memo = MemoStore::in_memory();
        let r = chi_sc(&g, &memo).unwrap();
        prop_assert!(r.chi_sc <= greedy_bound(&g));
        prop_assert!(r.chi_sc >= g.order() as u32);
        prop_assert_eq!(r.sc_greedy, r.chi_sc == greedy_bound(&g));
        prop_assert_eq!(r.optimal_f.total(), r.chi_sc);
        prop_assert!(is_choosable(&g, &r.optimal_f).unwrap().is_choosable());
        let h = g.permuted(&perm);
        let fresh = MemoStore::in_memory();
        let s = chi_sc(&h, &fresh).unwrap();
        prop_assert_eq!(s.chi_sc, r.chi_sc);
        prop_assert!(is_choosable(&h, &s.optimal_f).unwrap().is_choosable());
    }

    #[test]
    fn deleting_an_edge_never_raises_the_value(g in graph(6), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick % edges.len()];
        let mut h = g.clone();
        h.remove_edge(u, v).unwrap();
        let memo = MemoStore::in_memory();
        prop_assert!(chi_sc(&h, &memo).unwrap().chi_sc <= chi_sc(&g, &memo).unwrap().chi_sc);
    }
}

/// Gluing and pendant checks run on the engine with the block shortcut
/// disabled, so the block formula is tested rather than assumed.
mod glue {
    use super::*;

    proptest! {
        #![proptest_config(config(128))]

        #[test]
        fn gluing_at_a_vertex_subtracts_one(g in connected_graph(4), h in connected_graph(4), a in any::<usize>(), b in any::<usize>()) {
            let memo = MemoStore::in_memory();
            let direct = Engine::with_options(&memo, EngineOptions { use_blocks: false, ..Default::default() });
            let glued = g.glue_at_vertex(a % g.order(), &h, b % h.order()).unwrap();
            let expected = direct.chi_sc(&g).unwrap().chi_sc + direct.chi_sc(&h).unwrap().chi_sc - 1;
            prop_assert_eq!(direct.chi_sc(&glued).unwrap().chi_sc, expected);
        }

        #[test]
        fn a_pendant_vertex_adds_two(g in connected_graph(5), a in any::<usize>()) {
            let memo = MemoStore::in_memory();
            let direct = Engine::with_options(&memo, EngineOptions { use_blocks: false, ..Default::default() });
            let mut h = g.clone();
            h.add_vertex(1 << (a % g.order())).unwrap();
            prop_assert_eq!(direct.chi_sc(&h).unwrap().chi_sc, direct.chi_sc(&g).unwrap().chi_sc + 2);
        }
    }
}

proptest! {
    #![proptest_config(config(48))]

    /// K_{2,3} is not sc-greedy, so no graph containing it as an induced
    /// subgraph is.
    #[test]
    fn an_induced_non_greedy_subgraph_is_inherited(nbrs in 0u32..32, extra in any::<bool>(), nbrs2 in 0u32..64) {
        let mut g = "bipartite:2,3".parse::<FamilySpec>().unwrap().generate().unwrap();
        g.add_vertex(nbrs).unwrap();
        if extra {
            g.add_vertex(nbrs2).unwrap();
        }
        let memo = MemoStore::in_memory();
        let r = chi_sc(&g, &memo).unwrap();
        prop_assert!(r.chi_sc < greedy_bound(&g), "{:?} has value {}", g, r.chi_sc);
    }
}
