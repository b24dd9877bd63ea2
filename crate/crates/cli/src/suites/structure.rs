use serde_json::json;
use sumchoice_core::graph::Graph;
use sumchoice_core::sumchoice::greedy_bound;

use super::{family, key};
use crate::case::{Expected, Observation, Provenance, VerificationCase};
use crate::source::GraphSource;
use crate::HarnessError;

const EDGES: &str = "edge and subdivision examples";

fn c4_with_pendant() -> Graph {
    let mut g = family("cycle:4").expect("valid family");
    g.add_vertex(1).expect("room for a vertex");
    g
}

fn non_edges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !g.has_edge(u, v)).collect()
}

fn with_edge(g: &Graph, u: usize, v: usize) -> Graph {
    let mut h = g.clone();
    h.add_edge(u, v).expect("vertices in range");
    h
}

/// Canonical forms of the graphs obtained by subdividing one edge.
fn subdivision_keys(g: &Graph) -> Result<Vec<String>, HarnessError> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        out.push(key(&g.subdivide_edge(u, v)?)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

pub(super) fn edges_and_subdivisions() -> Vec<VerificationCase> {
    let ex = || Provenance::published(EDGES);
    let mut out = vec![
        VerificationCase::value(
            "edges/c4-plus-pendant",
            "the 4-cycle with a pendant vertex",
            GraphSource::of(&c4_with_pendant()),
            Expected::value(10, 10),
            ex(),
        ),
        VerificationCase::value("edges/k2,3", "K_{2,3}", GraphSource::family("bipartite:2,3"), Expected::value(10, 11), ex()),
        VerificationCase::value("edges/bw3", "broken wheel BW_3", GraphSource::family("brokenwheel:3"), Expected::value(9, 9), ex()),
        VerificationCase::value("edges/theta1,1,2", "theta graph with paths of lengths 2, 2, 3", GraphSource::family("theta:1,1,2"), Expected::value(13, 13), ex()),
    ];

    out.push(VerificationCase::procedure(
        "edges/same-value-one-edge-apart",
        "adding one edge to the 4-cycle with a pendant gives K_{2,3} and leaves the value at 10",
        ex(),
        |ctx| {
            let g = c4_with_pendant();
            let k23 = key(&family("bipartite:2,3")?)?;
            let mut hit = None;
            for (u, v) in non_edges(&g) {
                let h = with_edge(&g, u, v);
                if key(&h)? == k23 {
                    hit = Some(ctx.engine.chi_sc(&h)?.chi_sc);
                    break;
                }
            }
            let base = ctx.engine.chi_sc(&g)?.chi_sc;
            Ok(Observation::compare(json!({ "c4_plus_pendant": 10, "k2,3": 10 }), json!({ "c4_plus_pendant": base, "k2,3": hit })))
        },
    ));

    out.push(VerificationCase::procedure(
        "edges/one-edge-gap-two",
        "some graph formed by adding one edge to K_{2,3} has 7 edges and value 12",
        ex(),
        |ctx| {
            let g = family("bipartite:2,3")?;
            let base = ctx.engine.chi_sc(&g)?.chi_sc;
            let mut supers = Vec::new();
            let mut found = false;
            for (u, v) in non_edges(&g) {
                let h = with_edge(&g, u, v);
                let r = ctx.engine.chi_sc(&h)?;
                found |= h.edge_count() == 7 && r.chi_sc == 12;
                supers.push(json!({ "edge": [u, v], "canonical_graph6": key(&h)?, "chi_sc": r.chi_sc }));
            }
            Ok(Observation::new(
                base == 10 && found,
                json!({ "k2,3": 10, "supergraph_with_value_12": true }),
                json!({ "k2,3": base, "supergraphs": supers }),
            ))
        },
    ));

    out.push(VerificationCase::procedure(
        "edges/subdividing-bw3-gives-k2,3",
        "subdividing an edge of the sc-greedy BW_3 can give K_{2,3}, which is not sc-greedy",
        ex(),
        |ctx| {
            let bw = family("brokenwheel:3")?;
            let k23 = family("bipartite:2,3")?;
            let is_sub = subdivision_keys(&bw)?.contains(&key(&k23)?);
            let (a, b) = (ctx.engine.chi_sc(&bw)?, ctx.engine.chi_sc(&k23)?);
            Ok(Observation::compare(
                json!({ "k2,3_is_a_subdivision": true, "bw3_sc_greedy": true, "k2,3_sc_greedy": false }),
                json!({ "k2,3_is_a_subdivision": is_sub, "bw3_sc_greedy": a.sc_greedy, "k2,3_sc_greedy": b.sc_greedy }),
            ))
        },
    ));

    out.push(VerificationCase::procedure(
        "edges/subdividing-k2,3-gives-theta1,1,2",
        "subdividing an edge of K_{2,3} gives the sc-greedy theta graph with paths 2, 2, 3",
        ex(),
        |ctx| {
            let k23 = family("bipartite:2,3")?;
            let theta = family("theta:1,1,2")?;
            let is_sub = subdivision_keys(&k23)?.contains(&key(&theta)?);
            let t = ctx.engine.chi_sc(&theta)?;
            Ok(Observation::compare(
                json!({ "theta_is_a_subdivision": true, "theta_sc_greedy": true }),
                json!({ "theta_is_a_subdivision": is_sub, "theta_sc_greedy": t.sc_greedy }),
            ))
        },
    ));
    out
}

const CYCLES: &str = "paths and trees of cycles are sc-greedy";

pub(super) fn cycle_structures() -> Vec<VerificationCase> {
    let thm = || Provenance::published(CYCLES);
    let instances = [
        ("cycles/path-4-4", "pathcycles:4,4", 13),
        ("cycles/path-4-5", "pathcycles:4,5", 15),
        ("cycles/tree-4-4-4", "treecycles:4,4@0.0,4@0.2", 18),
        ("cycles/path-4-5-4", "pathcycles:4,5,4", 20),
        ("cycles/path-5-5", "pathcycles:5,5", 17),
        ("cycles/path-6-4", "pathcycles:6,4", 17),
        ("cycles/tree-chain", "treecycles:4,4@0.0,4@1.2", 18),
        ("cycles/tree-branching", "treecycles:6,4@0.0,4@0.2,4@0.4", 27),
    ];
    let mut out: Vec<VerificationCase> = instances
        .iter()
        .map(|&(id, spec, gb)| VerificationCase::value(id, spec, GraphSource::family(spec), Expected::value(gb, gb), thm()))
        .collect();
    out.push(VerificationCase::procedure(
        "cycles/greedy-bound-formula",
        "the greedy bound of k glued cycles of lengths a_i is 2 sum a_i - 3(k - 1)",
        Provenance::published("greedy bound of a path of cycles"),
        move |_| {
            let mut expected = serde_json::Map::new();
            let mut computed = serde_json::Map::new();
            for &(_, spec, _) in &instances {
                let fs: sumchoice_core::graph::FamilySpec = spec.parse()?;
                let lens = fs.cycle_lengths().ok_or_else(|| HarnessError::Input(format!("{spec} has no cycle lengths")))?;
                let k = lens.len() as u32;
                expected.insert(spec.into(), json!(2 * lens.iter().sum::<usize>() as u32 - 3 * (k - 1)));
                computed.insert(spec.into(), json!(greedy_bound(&fs.generate()?)));
            }
            Ok(Observation::compare(expected, computed))
        },
    ));
    out
}

const MINIMAL: &str = "minimally not sc-greedy graphs";

pub(super) fn min_nscg_scan() -> Vec<VerificationCase> {
    let mut out = Vec::new();
    out.push(VerificationCase::procedure(
        "min-nscg/five-vertices",
        "on at most five vertices exactly K_{2,3}, W_4 and one 7-edge graph are minimally not sc-greedy, each one below its greedy bound",
        Provenance::published(MINIMAL),
        |ctx| {
            let found = ctx.engine.classify_minimally_not_sc_greedy(5)?;
            let k23 = key(&family("bipartite:2,3")?)?;
            let w4 = key(&family("wheel:4")?)?;
            let mut keys: Vec<String> = Vec::new();
            let mut seven_edge = 0;
            for m in &found {
                let g = m.graph.as_ref().expect("classification keeps graphs");
                keys.push(key(g)?);
                if m.order == 5 && m.edges == 7 && m.chi_sc == 11 {
                    seven_edge += 1;
                }
            }
            let passed = found.len() == 3
                && keys.contains(&k23)
                && keys.contains(&w4)
                && seven_edge == 1
                && found.iter().all(|m| m.gap_one);
            Ok(Observation::new(
                passed,
                json!({ "count": 3, "includes": ["k2,3", "w4", "seven-edge graph with value 11"], "all_gap_one": true }),
                json!({ "graphs": found }),
            ))
        },
    ));
    out.push(VerificationCase::procedure(
        "min-nscg/min-degree-two",
        "members of minimum degree 2 sit exactly one below their greedy bound",
        Provenance::published(MINIMAL),
        |ctx| {
            let found = ctx.engine.classify_minimally_not_sc_greedy(5)?;
            let low: Vec<_> = found.iter().filter(|m| m.min_degree == 2).collect();
            let gaps: Vec<u32> = low.iter().map(|m| m.greedy_bound - m.chi_sc).collect();
            let passed = !low.is_empty() && gaps.iter().all(|&g| g == 1);
            Ok(Observation::new(passed, json!({ "gap": 1 }), json!({ "gaps": gaps, "graphs": low.iter().map(|m| &m.graph6).collect::<Vec<_>>() })))
        },
    ));
    out.push(VerificationCase::procedure(
        "min-nscg/w4-min-degree",
        "W_4 is the member of minimum degree 3",
        Provenance::published(MINIMAL),
        |ctx| {
            let w4 = family("wheel:4")?;
            let r = ctx.engine.chi_sc(&w4)?;
            let deleted_greedy = (0..w4.order()).all(|v| {
                let h = w4.remove_vertex(v).expect("vertex in range");
                ctx.engine.chi_sc(&h).map(|r| r.sc_greedy).unwrap_or(false)
            });
            let min_degree = w4.min_degree();
            Ok(Observation::compare(
                json!({ "min_degree": 3, "sc_greedy": false, "every_deletion_sc_greedy": true }),
                json!({ "min_degree": min_degree, "sc_greedy": r.sc_greedy, "every_deletion_sc_greedy": deleted_greedy }),
            ))
        },
    ));
    out
}
