use sumchoice_core::choosability::{
    find_forcing_assignment, is_choosable, is_list_colorable, ForcingOutcome, ListAssignment, SearchOptions, SizeFunction,
};
use sumchoice_core::graph::{connected_graphs, Graph};
use sumchoice_core::sumchoice::{greedy_bound, Engine, EngineOptions, Extended, MemoStore};

/// Smallest size of a choice function, found by trying every size function
/// with `1 <= f(v) <= deg(v) + 1` in order of total.
fn minimal_choice_size(g: &Graph) -> u32 {
    let n = g.order();
    let bound: Vec<u32> = (0..n).map(|v| g.degree(v) as u32 + 1).collect();
    for total in n as u32..=bound.iter().sum() {
        let mut found = false;
        for_each_size_function(&bound, total, &mut |f| {
            found = found || is_choosable(g, &SizeFunction(f.to_vec())).unwrap().is_choosable();
        });
        if found {
            return total;
        }
    }
    unreachable!("the greedy bound is always attained")
}

fn for_each_size_function(bound: &[u32], total: u32, visit: &mut dyn FnMut(&[u32])) {
    fn rec(bound: &[u32], remaining: u32, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        let i = cur.len();
        if i == bound.len() {
            if remaining == 0 {
                visit(cur);
            }
            return;
        }
        let rest = (bound.len() - i - 1) as u32;
        for x in 1..=bound[i].min(remaining.saturating_sub(rest)) {
            cur.push(x);
            rec(bound, remaining - x, cur, visit);
            cur.pop();
        }
    }
    rec(bound, total, &mut Vec::new(), visit);
}

#[test]
fn rho_tau_minimum_matches_direct_search() {
    let memo = MemoStore::in_memory();
    let engine = Engine::new(&memo);
    for n in 1..=5 {
        for g in connected_graphs(n).unwrap() {
            let direct = minimal_choice_size(&g);
            let rho = engine.rho(&g).unwrap();
            let tau = engine.tau(&g, None).unwrap();
            assert_eq!(rho.min(tau), Extended::Finite(direct), "{g:?}: rho {rho} tau {tau}");
            assert_eq!(engine.chi_sc(&g).unwrap().chi_sc, direct, "{g:?}");
        }
    }
}

#[test]
fn no_smaller_function_is_a_choice_function() {
    // every size function one below the value fails, on every connected
    // graph up to five vertices
    let memo = MemoStore::in_memory();
    for n in 2..=5 {
        for g in connected_graphs(n).unwrap() {
            let chi = Engine::new(&memo).chi_sc(&g).unwrap().chi_sc;
            let bound: Vec<u32> = (0..n).map(|v| g.degree(v) as u32 + 2).collect();
            for_each_size_function(&bound, chi - 1, &mut |f| {
                let f = SizeFunction(f.to_vec());
                let v = is_choosable(&g, &f).unwrap();
                let w = v.witness().unwrap_or_else(|| panic!("{g:?} is {f:?}-choosable below its value"));
                assert!(is_list_colorable(&g, w).is_none());
            });
        }
    }
}

#[test]
fn disjoint_unions_add() {
    let small: Vec<Graph> = (1..=3).flat_map(|n| connected_graphs(n).unwrap()).collect();
    let memo = MemoStore::in_memory();
    for g in &small {
        for h in &small {
            let union = g.disjoint_union(h).unwrap();
            let direct = minimal_choice_size(&union);
            assert_eq!(direct, minimal_choice_size(g) + minimal_choice_size(h));
            assert_eq!(Engine::new(&memo).chi_sc(&union).unwrap().chi_sc, direct);
        }
    }
}

#[test]
fn every_small_connected_graph_is_sc_greedy() {
    let memo = MemoStore::in_memory();
    for n in 1..=4 {
        for g in connected_graphs(n).unwrap() {
            let r = Engine::new(&memo).chi_sc(&g).unwrap();
            assert_eq!(r.chi_sc, greedy_bound(&g), "{g:?}");
        }
    }
}

#[test]
fn blocks_and_direct_routes_agree_on_five_vertices() {
    let with = MemoStore::in_memory();
    let without = MemoStore::in_memory();
    let direct = Engine::with_options(&without, EngineOptions { use_blocks: false, ..Default::default() });
    for g in connected_graphs(5).unwrap() {
        assert_eq!(Engine::new(&with).chi_sc(&g).unwrap().chi_sc, direct.chi_sc(&g).unwrap().chi_sc, "{g:?}");
    }
}

/// An optimal choice function admits, for every vertex and single color,
/// a list assignment that pins that color on the vertex.
#[test]
fn optimal_functions_force_single_colors() {
    let memo = MemoStore::in_memory();
    for n in 2..=4 {
        for g in connected_graphs(n).unwrap() {
            let f = Engine::new(&memo).chi_sc(&g).unwrap().optimal_f;
            for v in 0..n {
                for c in [0, 3, 11] {
                    let out = find_forcing_assignment(&g, &f, v, &[c], &SearchOptions::default()).unwrap();
                    let ForcingOutcome::Found { assignment } = out else { panic!("{g:?} {f:?} v{v} c{c}: {out:?}") };
                    assert_eq!(assignment.sizes(), f);
                    assert!(assignment.list(v).contains(&c));
                    assert!(is_list_colorable(&g, &assignment).is_some());
                    let mut lists = assignment.lists();
                    lists[v].retain(|&x| x != c);
                    let without = ListAssignment::from_lists(&lists).unwrap();
                    assert!(is_list_colorable(&g, &without).is_none(), "{g:?} v{v}: {assignment:?} does not force {c}");
                }
            }
        }
    }
}
