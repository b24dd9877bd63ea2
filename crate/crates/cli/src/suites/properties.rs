use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sumchoice_core::choosability::{
    canonical_assignments, find_forcing_assignment, is_choosable_with, reduce, ForcingOutcome, ListAssignment, SizeFunction, Verdict,
};
use sumchoice_core::graph::{connected_graphs, encode_graph6, Graph};
use sumchoice_core::sumchoice::{Engine, EngineOptions, Extended};

use super::family;
use crate::case::{CaseContext, Observation, Provenance, VerificationCase};
use crate::HarnessError;

/// Calls `visit` on every proper coloring from `lists`; stops early when
/// `visit` returns false.
pub fn for_each_coloring(g: &Graph, lists: &[Vec<u32>], visit: &mut dyn FnMut(&[u32]) -> bool) {
    fn rec(g: &Graph, lists: &[Vec<u32>], col: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        let v = col.len();
        if v == lists.len() {
            return visit(col);
        }
        for &c in &lists[v] {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col.push(c);
                let go = rec(g, lists, col, visit);
                col.pop();
                if !go {
                    return false;
                }
            }
        }
        true
    }
    rec(g, lists, &mut Vec::new(), visit);
}

pub fn brute_colorable(g: &Graph, lists: &[Vec<u32>]) -> bool {
    let mut found = false;
    for_each_coloring(g, lists, &mut |_| {
        found = true;
        false
    });
    found
}

/// Every assignment up to renaming, each judged by brute force.
fn oracle_choosable(g: &Graph, f: &SizeFunction) -> Result<bool, HarnessError> {
    Ok(canonical_assignments(g, f)?.all(|a| brute_colorable(g, &a.lists())))
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn random_graph(r: &mut ChaCha8Rng, n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("small order");
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(0.5) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

fn random_connected(r: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = r.gen_range(1..=max_n);
    loop {
        let g = random_graph(r, n);
        if g.is_connected() {
            return g;
        }
    }
}

/// Sizes in `1..=deg + 2`, redrawn until the total is at most `max_total`.
fn random_sizes(r: &mut ChaCha8Rng, g: &Graph, max_total: u32) -> SizeFunction {
    loop {
        let f = SizeFunction((0..g.order()).map(|v| r.gen_range(1..=g.degree(v) as u32 + 2)).collect());
        if f.total() <= max_total {
            return f;
        }
    }
}

fn instance(g: &Graph, f: &SizeFunction) -> Value {
    json!({ "graph6": encode_graph6(g), "sizes": f.as_slice() })
}

/// Counterexamples plus the soundness of every witness seen on the way.
#[derive(Default)]
struct Tally {
    instances: usize,
    witnesses: usize,
    counterexamples: Vec<Value>,
}

impl Tally {
    fn verdict(&mut self, g: &Graph, f: &SizeFunction, v: &Verdict) -> Result<bool, HarnessError> {
        match v {
            Verdict::Choosable { .. } => Ok(true),
            Verdict::NotChoosable { witness } => {
                self.witnesses += 1;
                if &witness.sizes() != f || brute_colorable(g, &witness.lists()) {
                    self.counterexamples.push(json!({ "unsound_witness": instance(g, f), "witness": witness }));
                }
                Ok(false)
            }
            Verdict::Unknown { .. } => Err(HarnessError::Budget),
        }
    }

    fn into_observation(self, min_instances: usize) -> Observation {
        let passed = self.counterexamples.is_empty() && self.instances >= min_instances;
        Observation::new(
            passed,
            json!({ "min_instances": min_instances, "counterexamples": [] }),
            json!({ "instances": self.instances, "witnesses_checked": self.witnesses, "counterexamples": self.counterexamples }),
        )
    }
}

fn verdict(ctx: &CaseContext, g: &Graph, f: &SizeFunction) -> Result<Verdict, HarnessError> {
    Ok(is_choosable_with(g, f, &ctx.search_options())?)
}

fn direct_engine<'m>(ctx: &CaseContext<'m>) -> Engine<'m> {
    Engine::with_options(ctx.engine.memo(), EngineOptions { budget: ctx.budget.clone(), use_blocks: false, ..Default::default() })
}

const INSTANCES: usize = 200;
const GLUED: usize = 100;

fn reduction_equivalence(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let mut r = rng(ctx.seed, 1);
    let mut t = Tally::default();
    while t.instances < INSTANCES {
        let n = r.gen_range(1..=5);
        let g = random_graph(&mut r, n);
        let f = random_sizes(&mut r, &g, 11);
        let red = reduce(&g, &f)?;
        let residual = if red.is_trivially_not_choosable() {
            false
        } else if red.is_trivially_choosable() {
            true
        } else {
            oracle_choosable(&red.graph, &red.sizes)?
        };
        let truth = oracle_choosable(&g, &f)?;
        let engine = t.verdict(&g, &f, &verdict(ctx, &g, &f)?)?;
        if residual != truth || engine != truth {
            t.counterexamples.push(json!({ "instance": instance(&g, &f), "oracle": truth, "residual": residual, "engine": engine }));
        }
        t.instances += 1;
    }
    Ok(t.into_observation(INSTANCES))
}

/// Smallest total of a choice function with `1 <= f(v) <= deg(v) + 1`.
fn minimal_choice_size(ctx: &CaseContext, g: &Graph, t: &mut Tally) -> Result<u32, HarnessError> {
    fn rec(bound: &[u32], remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<SizeFunction>) {
        let i = cur.len();
        if i == bound.len() {
            if remaining == 0 {
                out.push(SizeFunction(cur.clone()));
            }
            return;
        }
        let rest = (bound.len() - i - 1) as u32;
        for x in 1..=bound[i].min(remaining.saturating_sub(rest)) {
            cur.push(x);
            rec(bound, remaining - x, cur, out);
            cur.pop();
        }
    }
    let n = g.order();
    let bound: Vec<u32> = (0..n).map(|v| g.degree(v) as u32 + 1).collect();
    for total in n as u32..=bound.iter().sum() {
        let mut fs = Vec::new();
        rec(&bound, total, &mut Vec::new(), &mut fs);
        for f in fs {
            if t.verdict(g, &f, &verdict(ctx, g, &f)?)? {
                return Ok(total);
            }
        }
    }
    Err(HarnessError::Input("no size function up to the greedy bound is a choice function".into()))
}

fn rho_tau_direct(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let engine = direct_engine(ctx);
    let mut t = Tally::default();
    let mut rows = Vec::new();
    for n in 1..=4 {
        for g in connected_graphs(n)? {
            let rho = engine.rho(&g)?;
            let tau = engine.tau(&g, None)?;
            let direct = minimal_choice_size(ctx, &g, &mut t)?;
            let best = rho.min(tau);
            if best != Extended::Finite(direct) {
                t.counterexamples.push(json!({ "graph6": encode_graph6(&g), "rho": rho.to_string(), "tau": tau.to_string(), "direct": direct }));
            }
            rows.push(json!({ "graph6": encode_graph6(&g), "direct": direct }));
            t.instances += 1;
        }
    }
    let mut obs = t.into_observation(10);
    if let Value::Object(m) = &mut obs.computed {
        m.insert("graphs".into(), Value::Array(rows));
    }
    Ok(obs)
}

fn block_formula(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let engine = direct_engine(ctx);
    let mut r = rng(ctx.seed, 3);
    let mut t = Tally::default();
    while t.instances < GLUED {
        let g = random_connected(&mut r, 4);
        let h = random_connected(&mut r, 4);
        let (a, b) = (r.gen_range(0..g.order()), r.gen_range(0..h.order()));
        let glued = g.glue_at_vertex(a, &h, b)?;
        let expected = engine.chi_sc(&g)?.chi_sc + engine.chi_sc(&h)?.chi_sc - 1;
        let got = engine.chi_sc(&glued)?.chi_sc;
        if got != expected {
            t.counterexamples.push(json!({ "glued": encode_graph6(&glued), "expected": expected, "computed": got }));
        }
        t.instances += 1;
    }
    Ok(t.into_observation(GLUED))
}

fn pendant_plus_two(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let engine = direct_engine(ctx);
    let mut r = rng(ctx.seed, 4);
    let mut t = Tally::default();
    while t.instances < GLUED {
        let g = random_connected(&mut r, 5);
        let mut h = g.clone();
        h.add_vertex(1 << r.gen_range(0..g.order()))?;
        let (base, got) = (engine.chi_sc(&g)?.chi_sc, engine.chi_sc(&h)?.chi_sc);
        if got != base + 2 {
            t.counterexamples.push(json!({ "graph6": encode_graph6(&h), "base": base, "computed": got }));
        }
        t.instances += 1;
    }
    Ok(t.into_observation(GLUED))
}

fn monotone_in_sizes(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let mut r = rng(ctx.seed, 5);
    let mut t = Tally::default();
    while t.instances < INSTANCES {
        let n = r.gen_range(1..=5);
        let g = random_graph(&mut r, n);
        let f = random_sizes(&mut r, &g, 12);
        let bigger = SizeFunction(f.as_slice().iter().map(|&x| x + r.gen_range(0..=1)).collect());
        let small = t.verdict(&g, &f, &verdict(ctx, &g, &f)?)?;
        let large = t.verdict(&g, &bigger, &verdict(ctx, &g, &bigger)?)?;
        if small && !large {
            t.counterexamples.push(json!({ "choosable": instance(&g, &f), "not_choosable": instance(&g, &bigger) }));
        }
        t.instances += 1;
    }
    Ok(t.into_observation(INSTANCES))
}

fn edge_deletion(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let mut r = rng(ctx.seed, 6);
    let mut t = Tally::default();
    while t.instances < INSTANCES {
        let n = r.gen_range(2..=5);
        let g = random_graph(&mut r, n);
        let edges: Vec<_> = g.edges().collect();
        let Some(&(u, v)) = edges.choose(&mut r) else { continue };
        let mut h = g.clone();
        h.remove_edge(u, v)?;
        let (whole, less) = (ctx.engine.chi_sc(&g)?.chi_sc, ctx.engine.chi_sc(&h)?.chi_sc);
        if less > whole {
            t.counterexamples.push(json!({ "graph6": encode_graph6(&g), "edge": [u, v], "chi_sc": whole, "after_deletion": less }));
        }
        t.instances += 1;
    }
    Ok(t.into_observation(INSTANCES))
}

/// Not-choosable instances near the threshold, so that most carry a witness.
fn witness_soundness(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let mut r = rng(ctx.seed, 7);
    let mut t = Tally::default();
    while t.witnesses < INSTANCES {
        let g = random_connected(&mut r, 6);
        let f = SizeFunction((0..g.order()).map(|v| r.gen_range(1..=g.degree(v).max(1) as u32)).collect());
        t.verdict(&g, &f, &verdict(ctx, &g, &f)?)?;
        t.instances += 1;
    }
    Ok(t.into_observation(INSTANCES))
}

/// For each color, the set of vertices whose list holds it, sorted.
fn signature(lists: &[Vec<u32>]) -> Vec<u32> {
    let top = lists.iter().flatten().max().map_or(0, |&c| c + 1);
    let mut sig: Vec<u32> = (0..top)
        .map(|c| lists.iter().enumerate().filter(|(_, l)| l.contains(&c)).fold(0, |m, (v, _)| m | 1 << v))
        .filter(|&m| m != 0)
        .collect();
    sig.sort_unstable();
    sig
}

fn subsets(universe: u32, k: u32) -> Vec<Vec<u32>> {
    (0u32..1 << universe).filter(|m| m.count_ones() == k).map(|m| (0..universe).filter(|&c| m >> c & 1 == 1).collect()).collect()
}

fn naive_signatures(f: &SizeFunction) -> BTreeSet<Vec<u32>> {
    let universe = f.total();
    let choices: Vec<Vec<Vec<u32>>> = f.as_slice().iter().map(|&k| subsets(universe, k)).collect();
    let mut out = BTreeSet::new();
    let mut idx = vec![0; choices.len()];
    'outer: loop {
        let lists: Vec<Vec<u32>> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
        out.insert(signature(&lists));
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    out
}

fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .map(|m| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &e)| e).collect();
            Graph::from_edges(n, &edges).expect("small order")
        })
        .collect()
}

fn canonical_enumeration(_: &CaseContext) -> Result<Observation, HarnessError> {
    let mut t = Tally::default();
    for n in 1..=3usize {
        let mut fs = vec![vec![]];
        for _ in 0..n {
            fs = fs.into_iter().flat_map(|f: Vec<u32>| (1..=5).map(move |x| [f.clone(), vec![x]].concat())).collect();
        }
        for f in fs.into_iter().map(SizeFunction).filter(|f| f.total() <= 7) {
            let naive = naive_signatures(&f);
            for g in all_graphs(n) {
                let listed: Vec<Vec<u32>> = canonical_assignments(&g, &f)?.map(|a: ListAssignment| signature(&a.lists())).collect();
                let distinct: BTreeSet<Vec<u32>> = listed.iter().cloned().collect();
                if distinct.len() != listed.len() || distinct != naive {
                    t.counterexamples.push(json!({
                        "instance": instance(&g, &f),
                        "canonical": listed.len(),
                        "distinct": distinct.len(),
                        "naive": naive.len(),
                    }));
                }
                t.instances += 1;
            }
        }
    }
    Ok(t.into_observation(1))
}

fn forcing_c4(ctx: &CaseContext) -> Result<Observation, HarnessError> {
    let g = family("cycle:4")?;
    let f = SizeFunction::constant(4, 2);
    let mut r = rng(ctx.seed, 9);
    let mut t = Tally::default();
    let mut found = Vec::new();
    for v in 0..4 {
        let mut colors: Vec<u32> = (0..16).collect();
        colors.shuffle(&mut r);
        for &c in &colors[..3] {
            t.instances += 1;
            let out = find_forcing_assignment(&g, &f, v, &[c], &ctx.search_options())?;
            let a = match out {
                ForcingOutcome::Found { assignment } => assignment,
                ForcingOutcome::NotFound => {
                    t.counterexamples.push(json!({ "vertex": v, "color": c, "outcome": "not-found" }));
                    continue;
                }
                ForcingOutcome::Unknown { .. } => return Err(HarnessError::Budget),
            };
            let lists = a.lists();
            let (mut colorings, mut pinned) = (0usize, true);
            for_each_coloring(&g, &lists, &mut |col| {
                colorings += 1;
                pinned &= col[v] == c;
                true
            });
            if a.sizes() != f || colorings == 0 || !pinned {
                t.counterexamples.push(json!({ "vertex": v, "color": c, "assignment": a, "colorings": colorings }));
            }
            found.push(json!({ "vertex": v, "color": c, "assignment": a, "colorings": colorings }));
        }
    }
    let mut obs = t.into_observation(12);
    if let Value::Object(m) = &mut obs.computed {
        m.insert("assignments".into(), Value::Array(found));
    }
    Ok(obs)
}

/// Randomized cases draw from the run seed in their context.
pub(super) fn lemma_properties() -> Vec<VerificationCase> {
    let derived = |s: &str| Provenance::derived(s);
    vec![
        VerificationCase::procedure(
            "lemma/reduction-equivalence",
            "removing vertices with f(v) = 1 or f(v) > deg(v) preserves choosability, on 200 random instances with n <= 5",
            derived("brute-force enumeration of canonical assignments"),
            reduction_equivalence,
        ),
        VerificationCase::procedure(
            "lemma/rho-tau-direct",
            "min(rho, tau) equals the smallest choice function found by direct search, on every connected graph with n <= 4",
            derived("direct search over all size functions"),
            rho_tau_direct,
        ),
        VerificationCase::procedure(
            "lemma/block-formula",
            "gluing two graphs at a vertex gives value chi(G) + chi(H) - 1, on 100 random instances",
            Provenance::published("block formula"),
            block_formula,
        ),
        VerificationCase::procedure(
            "lemma/pendant-plus-two",
            "adding a pendant vertex raises the value by 2, on 100 random instances",
            Provenance::published("pendant vertices add 2"),
            pendant_plus_two,
        ),
        VerificationCase::procedure(
            "lemma/monotone-in-sizes",
            "enlarging lists keeps a graph choosable, on 200 random instances",
            Provenance::Trivial,
            monotone_in_sizes,
        ),
        VerificationCase::procedure(
            "lemma/edge-deletion",
            "deleting an edge never raises the value, on 200 random graphs",
            Provenance::Trivial,
            edge_deletion,
        ),
        VerificationCase::procedure(
            "lemma/witness-soundness",
            "every not-choosable witness has the requested sizes and admits no proper coloring, on 200 witnesses",
            derived("brute-force coloring"),
            witness_soundness,
        ),
        VerificationCase::procedure(
            "lemma/canonical-enumeration",
            "canonical assignments are exactly the assignments up to renaming, for every graph with n <= 3 and total size <= 7",
            derived("naive enumeration over a fixed palette"),
            canonical_enumeration,
        ),
        VerificationCase::procedure(
            "lemma/forcing-c4",
            "for C_4 with all sizes 2, every vertex and three sampled colors admit a list assignment pinning that color",
            Provenance::published("optimal choice functions force single colors"),
            forcing_c4,
        ),
    ]
}
