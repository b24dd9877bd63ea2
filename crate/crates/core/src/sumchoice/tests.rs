use super::*;
use crate::choosability::is_choosable;
use crate::graph::{parse_graph6, FamilySpec};

fn family(text: &str) -> Graph {
    text.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn value(text: &str, memo: &MemoStore) -> u32 {
    chi_sc(&family(text), memo).unwrap().chi_sc
}

#[test]
fn greedy_bounds_and_functions() {
    assert_eq!(greedy_bound(&family("cycle:5")), 10);
    assert_eq!(greedy_bound(&family("bipartite:2,3")), 11);
    assert_eq!(greedy_bound(&Graph::empty(1).unwrap()), 1);

    let p3 = family("path:3");
    assert_eq!(greedy_choice_function(&p3, &[0, 1, 2]).unwrap(), SizeFunction(vec![1, 2, 2]));
    let k3 = Graph::complete(3).unwrap();
    assert_eq!(greedy_choice_function(&k3, &[2, 0, 1]).unwrap(), SizeFunction(vec![2, 3, 1]));
    let c4 = family("cycle:4");
    let f = greedy_choice_function(&c4, &[0, 1, 2, 3]).unwrap();
    assert_eq!(f, SizeFunction(vec![1, 2, 2, 3]));
    assert_eq!(f.total(), greedy_bound(&c4));
    assert!(is_choosable(&c4, &f).unwrap().is_choosable());
    assert!(matches!(greedy_choice_function(&p3, &[0, 0, 1]), Err(SumChoiceError::InvalidOrdering)));
    assert!(matches!(greedy_choice_function(&p3, &[0, 1]), Err(SumChoiceError::InvalidOrdering)));
}

#[test]
fn base_cases() {
    let memo = MemoStore::in_memory();
    let empty = Graph::empty(0).unwrap();
    assert_eq!(chi_sc(&empty, &memo).unwrap().chi_sc, 0);
    assert_eq!(rho(&empty, &memo).unwrap(), Extended::Infinite);
    let k1 = parse_graph6("@").unwrap();
    assert_eq!(chi_sc(&k1, &memo).unwrap().chi_sc, 1);
    assert_eq!(rho(&k1, &memo).unwrap(), Extended::Finite(1));
    let k2 = parse_graph6("A_").unwrap();
    assert_eq!(chi_sc(&k2, &memo).unwrap().chi_sc, 3);
    assert_eq!(chi_sc(&Graph::empty(3).unwrap(), &memo).unwrap().chi_sc, 3);
}

#[test]
fn tau_and_rho_examples() {
    let memo = MemoStore::in_memory();
    assert_eq!(tau(&family("path:3"), None).unwrap(), Extended::Infinite);
    assert_eq!(tau(&family("cycle:4"), None).unwrap(), Extended::Finite(8));
    assert_eq!(tau(&family("bipartite:2,3"), None).unwrap(), Extended::Finite(10));
    assert_eq!(tau(&family("bipartite:2,3"), Some(9)).unwrap(), Extended::Infinite);
    assert_eq!(rho(&family("bipartite:2,3"), &memo).unwrap(), Extended::Finite(11));
    assert_eq!(rho(&family("cycle:5"), &memo).unwrap(), Extended::Finite(10));
    assert_eq!(value("bipartite:1,3", &memo), 7);
    assert_eq!(value("path:4", &memo), 7);
}

#[test]
fn named_values() {
    let memo = MemoStore::in_memory();
    let r = chi_sc(&family("bipartite:2,3"), &memo).unwrap();
    assert_eq!((r.chi_sc, r.greedy_bound, r.sc_greedy), (10, 11, false));
    assert_eq!(r.rho, Some(Extended::Finite(11)));
    assert_eq!(r.tau, Some(Extended::Finite(10)));
    assert_eq!(value("wheel:4", &memo), 12);
    assert_eq!(value("cycle:5", &memo), 10);
    assert_eq!(value("theta:0,1,2", &memo), 11);
    assert_eq!(value("brokenwheel:3", &memo), 9);
    assert_eq!(value("complete:4", &memo), 10);
}

#[test]
fn glued_triangles_use_the_block_formula() {
    let k3 = Graph::complete(3).unwrap();
    let bowtie = k3.glue_at_vertex(0, &k3, 0).unwrap();
    let memo = MemoStore::in_memory();
    let r = chi_sc(&bowtie, &memo).unwrap();
    assert_eq!(r.chi_sc, 11);
    assert_eq!(r.route, Route::Blocks);
    let direct = Engine::with_options(&MemoStore::in_memory(), EngineOptions { use_blocks: false, ..Default::default() }).chi_sc(&bowtie).unwrap();
    assert_eq!(direct.chi_sc, 11);
    assert_eq!(direct.route, Route::RhoTau);
}

#[test]
fn optimal_functions_are_choice_functions_on_the_callers_labeling() {
    let memo = MemoStore::in_memory();
    for text in ["bipartite:2,3", "wheel:4", "theta:0,1,2", "path:5", "brokenwheel:4"] {
        let g = family(text);
        let n = g.order();
        // reverse the labeling so canonical and input order differ
        let perm: Vec<usize> = (0..n).rev().collect();
        for h in [g, g.permuted(&perm)] {
            let r = chi_sc(&h, &memo).unwrap();
            assert_eq!(r.optimal_f.total(), r.chi_sc);
            assert!(is_choosable(&h, &r.optimal_f).unwrap().is_choosable(), "{text}: {:?}", r.optimal_f);
        }
    }
}

#[test]
fn sc_greedy_shortcut() {
    let memo = MemoStore::in_memory();
    // K_{2,3} plus a vertex adjacent to one side
    let mut g = family("bipartite:2,3");
    g.add_vertex(0b00100).unwrap();
    assert!(!is_sc_greedy(&g, &memo).unwrap());
    assert!(memo.is_empty(), "answered from the seed set without computing");
    assert!(is_sc_greedy(&family("theta:1,1,2"), &memo).unwrap());
    assert!(is_sc_greedy(&family("brokenwheel:3"), &memo).unwrap());
    assert!(!is_sc_greedy(&family("bipartite:2,3"), &memo).unwrap());
}

#[test]
fn memo_persists_records() {
    let dir = std::env::temp_dir().join(format!("sumchoice-memo-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cache.jsonl");
    let _ = std::fs::remove_file(&path);
    {
        let memo = MemoStore::open(&path).unwrap();
        assert_eq!(value("bipartite:2,3", &memo), 10);
    }
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.lines().count() >= 3);
    let k23 = canonical_labeling(&family("bipartite:2,3")).unwrap().key;
    let line = text.lines().find(|l| l.contains(&format!("\"{}\"", k23.0))).expect("K_{2,3} is cached");
    let json: serde_json::Value = serde_json::from_str(line).unwrap();
    assert_eq!(json["chi_sc"], 10);
    assert_eq!(json["gb"], 11);
    assert_eq!(json["rho"], 11);
    assert_eq!(json["tau"], 10);
    assert_eq!(json["optimal_f"].as_array().unwrap().len(), 5);

    let memo = MemoStore::open(&path).unwrap();
    let r = chi_sc(&family("bipartite:2,3"), &memo).unwrap();
    assert_eq!((r.chi_sc, r.route), (10, Route::Cached));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text, "cache hits append nothing");

    std::fs::write(&path, "{\"canonical_graph6\":\"Bw\",\"chi_sc\":5,\"gb\":6,\"optimal_f\":[1,2,3],\"rho\":null,\"tau\":\"inf\"}\n").unwrap();
    assert!(matches!(MemoStore::open(&path), Err(SumChoiceError::Cache(_))));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn extended_serialization() {
    assert_eq!(serde_json::to_string(&Extended::Infinite).unwrap(), "\"inf\"");
    assert_eq!(serde_json::to_string(&Extended::Finite(7)).unwrap(), "7");
    assert_eq!(serde_json::from_str::<Extended>("\"inf\"").unwrap(), Extended::Infinite);
    assert!(serde_json::from_str::<Extended>("\"many\"").is_err());
    assert!(Extended::Finite(u32::MAX) < Extended::Infinite);
}

#[test]
fn budget_reports_bounds() {
    let memo = MemoStore::in_memory();
    let opts = EngineOptions { budget: Budget::nodes(10), ..Default::default() };
    let g = family("bipartite:3,3");
    match Engine::with_options(&memo, opts).chi_sc(&g) {
        Err(SumChoiceError::Unknown { lower, upper }) => assert!(lower <= 13 && upper >= 13 && upper == 15),
        other => panic!("expected an unknown outcome, got {other:?}"),
    }
}
