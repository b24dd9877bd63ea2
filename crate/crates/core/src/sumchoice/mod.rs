//! Sum choice numbers.
//!
//! `chi_sc(G) = min(rho(G), tau(G))` where `rho` extends an optimal choice
//! function of some `G - v` by `deg(v) + 1` at `v` and `tau` is the least
//! size of a choice function with `2 <= f(v) <= deg(v)` everywhere.
//! Disconnected graphs add up over components and graphs with cut vertices
//! use `sum of block values - (number of blocks) + 1`. Every computed value
//! is stored in a [`MemoStore`] under the canonical key of its graph.

mod classify;
mod closed_form;
mod memo;

pub use classify::MinimalNonGreedy;
pub use closed_form::closed_form;
pub use memo::MemoStore;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::choosability::{is_choosable_with, Budget, ChoosabilityError, SearchOptions, SizeFunction, Verdict};
use crate::graph::{blocks, canonical_labeling, members, Graph, GraphError, VertexSet, MAX_CANONICAL_ORDER};

#[derive(Debug, Error)]
pub enum SumChoiceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Choosability(#[from] ChoosabilityError),
    #[error("budget exhausted; value lies in [{lower}, {upper}]")]
    Unknown { lower: u32, upper: u32 },
    #[error("ordering is not a permutation of the vertices")]
    InvalidOrdering,
    #[error("cache: {0}")]
    Cache(String),
}

/// A non-negative integer or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Extended {
    Finite(u32),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<u32> {
        match self {
            Extended::Finite(v) => Some(v),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(v) => s.serialize_u32(*v),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Extended::Finite(v)),
            Raw::Text(t) if t == "inf" => Ok(Extended::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {t:?}"))),
        }
    }
}

/// How a value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Empty graph or a single vertex.
    Base,
    Components,
    Blocks,
    /// `min(rho, tau)` on a graph without cut vertices.
    RhoTau,
    /// Loaded from a persistent cache.
    Cached,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    /// Candidate size functions handed to the choosability search.
    pub size_functions_tested: u64,
    /// Canonical assignments settled by those searches.
    pub assignments_examined: u64,
    /// Graphs whose value was computed rather than found in the memo.
    pub graphs_computed: u64,
}

impl Transcript {
    fn absorb(&mut self, other: &Transcript) {
        self.size_functions_tested += other.size_functions_tested;
        self.assignments_examined += other.assignments_examined;
        self.graphs_computed += other.graphs_computed;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumChoiceRecord {
    pub chi_sc: u32,
    pub greedy_bound: u32,
    pub sc_greedy: bool,
    /// A choice function of size `chi_sc`.
    pub optimal_f: SizeFunction,
    /// Only set on the `rho`/`tau` route; `tau` is reported infinite when no
    /// non-simple choice function lies below `rho`.
    pub rho: Option<Extended>,
    pub tau: Option<Extended>,
    /// Lowest vertex attaining `rho`.
    pub rho_vertex: Option<usize>,
    pub route: Route,
    pub transcript: Transcript,
}

impl SumChoiceRecord {
    fn base(g: &Graph) -> SumChoiceRecord {
        let n = g.order() as u32;
        SumChoiceRecord {
            chi_sc: n,
            greedy_bound: n,
            sc_greedy: true,
            optimal_f: SizeFunction::constant(g.order(), 1),
            rho: (n == 1).then_some(Extended::Finite(1)),
            tau: (n == 1).then_some(Extended::Infinite),
            rho_vertex: (n == 1).then_some(0),
            route: Route::Base,
            transcript: Transcript::default(),
        }
    }

    /// Relabels a record for a graph whose vertex `v` was `perm[v]` here.
    fn pulled_back(&self, perm: &[usize]) -> SumChoiceRecord {
        let mut out = self.clone();
        out.optimal_f = SizeFunction(perm.iter().map(|&c| self.optimal_f[c]).collect());
        out.rho_vertex = self.rho_vertex.and_then(|c| perm.iter().position(|&p| p == c));
        out
    }
}

/// `|V| + |E|`.
pub fn greedy_bound(g: &Graph) -> u32 {
    (g.order() + g.edge_count()) as u32
}

/// `f(v_i) = 1 + |{j < i : v_j ~ v_i}|` for the vertex sequence `ordering`.
pub fn greedy_choice_function(g: &Graph, ordering: &[usize]) -> Result<SizeFunction, SumChoiceError> {
    let n = g.order();
    let mut seen: VertexSet = 0;
    let mut f = vec![0; n];
    if ordering.len() != n {
        return Err(SumChoiceError::InvalidOrdering);
    }
    for &v in ordering {
        if v >= n || seen >> v & 1 == 1 {
            return Err(SumChoiceError::InvalidOrdering);
        }
        f[v] = 1 + (g.neighbors(v) & seen).count_ones();
        seen |= 1 << v;
    }
    Ok(SizeFunction(f))
}

#[derive(Debug, Clone)]
pub struct EngineOptions {
    /// Shared by every choosability search of one engine.
    pub budget: Budget,
    /// Worker threads per choosability search.
    pub jobs: usize,
    /// Split graphs with cut vertices into blocks; when off they go
    /// through `rho`/`tau` like everything else.
    pub use_blocks: bool,
    /// Re-check every optimal choice function that was not itself the
    /// output of a choosability search.
    pub verify: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { budget: Budget::unlimited(), jobs: 1, use_blocks: true, verify: true }
    }
}

pub struct Engine<'m> {
    memo: &'m MemoStore,
    opts: EngineOptions,
}

impl<'m> Engine<'m> {
    pub fn new(memo: &'m MemoStore) -> Self {
        Engine { memo, opts: EngineOptions::default() }
    }

    pub fn with_options(memo: &'m MemoStore, opts: EngineOptions) -> Self {
        Engine { memo, opts }
    }

    pub fn memo(&self) -> &'m MemoStore {
        self.memo
    }

    fn search_options(&self) -> SearchOptions {
        SearchOptions { budget: self.opts.budget.clone(), jobs: self.opts.jobs, ..Default::default() }
    }

    /// The sum choice number with an optimal choice function on `g`'s own
    /// labeling.
    pub fn chi_sc(&self, g: &Graph) -> Result<SumChoiceRecord, SumChoiceError> {
        if g.order() <= 1 {
            return Ok(SumChoiceRecord::base(g));
        }
        if g.order() > MAX_CANONICAL_ORDER {
            return Err(GraphError::Capacity { order: g.order(), max: MAX_CANONICAL_ORDER }.into());
        }
        let lab = canonical_labeling(g)?;
        if let Some(rec) = self.memo.get(&lab.key) {
            return Ok(rec.pulled_back(&lab.perm));
        }
        let rec = self.compute(&lab.graph)?;
        let stored = self.memo.insert(lab.key, rec)?;
        Ok(stored.pulled_back(&lab.perm))
    }

    fn compute(&self, g: &Graph) -> Result<SumChoiceRecord, SumChoiceError> {
        let n = g.order();
        let gb = greedy_bound(g);
        let mut tr = Transcript { graphs_computed: 1, ..Default::default() };
        let comps = g.components();
        let mut rec = if comps.len() > 1 {
            let mut f = vec![0; n];
            let mut total = 0;
            for &c in &comps {
                let r = self.chi_sc(&g.induced(c))?;
                scatter(&mut f, c, &r.optimal_f);
                total += r.chi_sc;
                tr.absorb(&r.transcript);
            }
            self.finish(g, total, SizeFunction(f), None, None, None, Route::Components, tr)?
        } else {
            let dec = blocks(g);
            if self.opts.use_blocks && dec.blocks.len() > 1 {
                let mut f = vec![0u32; n];
                let mut total = 0;
                for &b in &dec.blocks {
                    let r = self.chi_sc(&g.induced(b))?;
                    for (i, v) in members(b).into_iter().enumerate() {
                        f[v] += r.optimal_f[i];
                    }
                    total += r.chi_sc;
                    tr.absorb(&r.transcript);
                }
                for (v, fv) in f.iter_mut().enumerate() {
                    *fv -= dec.blocks_containing(v) as u32 - 1;
                }
                let chi = total + 1 - dec.blocks.len() as u32;
                self.finish(g, chi, SizeFunction(f), None, None, None, Route::Blocks, tr)?
            } else {
                self.rho_tau(g, &mut tr)?
            }
        };
        rec.sc_greedy = rec.chi_sc == gb;
        Ok(rec)
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        &self,
        g: &Graph,
        chi: u32,
        f: SizeFunction,
        rho: Option<Extended>,
        tau: Option<Extended>,
        rho_vertex: Option<usize>,
        route: Route,
        mut tr: Transcript,
    ) -> Result<SumChoiceRecord, SumChoiceError> {
        assert_eq!(f.total(), chi, "optimal choice function must have size chi_sc");
        let gb = greedy_bound(g);
        assert!(chi <= gb, "chi_sc cannot exceed the greedy bound");
        let searched = route == Route::RhoTau && tau == Some(Extended::Finite(chi));
        if self.opts.verify && !searched {
            match is_choosable_with(g, &f, &self.search_options())? {
                Verdict::Choosable { assignments_examined } => tr.assignments_examined += assignments_examined,
                Verdict::NotChoosable { witness } => panic!("optimal choice function {f:?} of {g:?} fails on {witness:?}"),
                Verdict::Unknown { .. } => return Err(SumChoiceError::Unknown { lower: chi, upper: chi }),
            }
        }
        Ok(SumChoiceRecord { chi_sc: chi, greedy_bound: gb, sc_greedy: chi == gb, optimal_f: f, rho, tau, rho_vertex, route, transcript: tr })
    }

    fn rho_tau(&self, g: &Graph, tr: &mut Transcript) -> Result<SumChoiceRecord, SumChoiceError> {
        let (rho, v, sub) = self.rho_parts(g, tr)?;
        let mut f_rho: Vec<u32> = sub.optimal_f.0.clone();
        f_rho.insert(v, g.degree(v) as u32 + 1);
        match self.tau_search(g, Some(rho - 1), tr)? {
            Some((t, f)) => self.finish(g, t, f, Some(Extended::Finite(rho)), Some(Extended::Finite(t)), Some(v), Route::RhoTau, *tr),
            None => self.finish(g, rho, SizeFunction(f_rho), Some(Extended::Finite(rho)), Some(Extended::Infinite), Some(v), Route::RhoTau, *tr),
        }
    }

    /// `rho`, its lowest minimizing vertex and the record of `G - v` there.
    fn rho_parts(&self, g: &Graph, tr: &mut Transcript) -> Result<(u32, usize, SumChoiceRecord), SumChoiceError> {
        let mut best: Option<(u32, usize, SumChoiceRecord)> = None;
        for v in 0..g.order() {
            let r = self.chi_sc(&g.remove_vertex(v)?).map_err(|e| lift_unknown(e, g.degree(v) as u32 + 1, greedy_bound(g)))?;
            tr.absorb(&r.transcript);
            let val = r.chi_sc + g.degree(v) as u32 + 1;
            if best.as_ref().map_or(true, |b| val < b.0) {
                best = Some((val, v, r));
            }
        }
        Ok(best.expect("rho of a nonempty graph"))
    }

    /// `min over v of chi_sc(G - v) + deg(v) + 1`; infinite for the empty
    /// graph.
    pub fn rho(&self, g: &Graph) -> Result<Extended, SumChoiceError> {
        if g.order() == 0 {
            return Ok(Extended::Infinite);
        }
        let mut tr = Transcript::default();
        Ok(Extended::Finite(self.rho_parts(g, &mut tr)?.0))
    }

    /// Least size of an `f`-choice function with `2 <= f(v) <= deg(v)`, if
    /// one of size at most `cap` exists.
    pub fn tau(&self, g: &Graph, cap: Option<u32>) -> Result<Extended, SumChoiceError> {
        let mut tr = Transcript::default();
        Ok(match self.tau_search(g, cap, &mut tr)? {
            Some((t, _)) => Extended::Finite(t),
            None => Extended::Infinite,
        })
    }

    /// Candidates in increasing size, lexicographic within a size. A
    /// candidate is skipped when some connected proper induced subgraph with
    /// a known value gets less than that value in total.
    fn tau_search(&self, g: &Graph, cap: Option<u32>, tr: &mut Transcript) -> Result<Option<(u32, SizeFunction)>, SumChoiceError> {
        let n = g.order();
        let deg: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
        if n == 0 || deg.iter().any(|&d| d < 2) {
            return Ok(None);
        }
        let lo = 2 * n as u32;
        let hi = deg.iter().sum::<u32>().min(cap.unwrap_or(u32::MAX));
        let bounds = self.known_subgraph_bounds(g)?;
        let opts = self.search_options();
        for size in lo..=hi {
            for f in bounded_compositions(&deg, size) {
                if bounds.iter().any(|&(set, need)| members(set).iter().map(|&v| f[v]).sum::<u32>() < need) {
                    continue;
                }
                let f = SizeFunction(f);
                tr.size_functions_tested += 1;
                match is_choosable_with(g, &f, &opts)? {
                    Verdict::Choosable { assignments_examined } => {
                        tr.assignments_examined += assignments_examined;
                        return Ok(Some((size, f)));
                    }
                    Verdict::NotChoosable { .. } => {}
                    Verdict::Unknown { .. } => {
                        return Err(SumChoiceError::Unknown { lower: size.min(cap.map_or(size, |c| c + 1)), upper: greedy_bound(g) });
                    }
                }
            }
        }
        Ok(None)
    }

    /// `(S, chi_sc(G[S]))` for connected proper vertex subsets with at least
    /// two vertices whose value is already in the memo.
    fn known_subgraph_bounds(&self, g: &Graph) -> Result<Vec<(VertexSet, u32)>, SumChoiceError> {
        let all = g.vertices();
        let mut out = Vec::new();
        for set in 1..all {
            if set.count_ones() < 2 || !g.is_connected_within(set) {
                continue;
            }
            let key = canonical_labeling(&g.induced(set))?.key;
            // bounds already implied by f >= 2 are dropped
            if let Some(r) = self.memo.get(&key).filter(|r| r.chi_sc > 2 * set.count_ones()) {
                out.push((set, r.chi_sc));
            }
        }
        Ok(out)
    }

    /// Equivalent to `chi_sc(g) == greedy_bound(g)`, answered early when a
    /// graph already known not to be sc-greedy sits inside `g` as an
    /// induced subgraph.
    pub fn is_sc_greedy(&self, g: &Graph) -> Result<bool, SumChoiceError> {
        if self.memo.contains_non_greedy_induced(g)? {
            return Ok(false);
        }
        let r = self.chi_sc(g)?;
        if !r.sc_greedy {
            self.memo.add_non_greedy(g)?;
        }
        Ok(r.sc_greedy)
    }
}

fn lift_unknown(e: SumChoiceError, extra: u32, gb: u32) -> SumChoiceError {
    match e {
        SumChoiceError::Unknown { .. } => SumChoiceError::Unknown { lower: extra, upper: gb },
        other => other,
    }
}

fn scatter(f: &mut [u32], set: VertexSet, part: &SizeFunction) {
    for (i, v) in members(set).into_iter().enumerate() {
        f[v] = part[i];
    }
}

/// All `f` with `2 <= f[v] <= bound[v]` summing to `total`, in
/// lexicographic order.
fn bounded_compositions(bound: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn rec(bound: &[u32], i: usize, remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bound.len() {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest_min = 2 * (bound.len() - i - 1) as u32;
        let rest_max: u32 = bound[i + 1..].iter().sum();
        for x in 2..=bound[i] {
            if x + rest_min > remaining {
                break;
            }
            if x + rest_max < remaining {
                continue;
            }
            cur.push(x);
            rec(bound, i + 1, remaining - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(bound, 0, total, &mut Vec::with_capacity(bound.len()), &mut out);
    out
}

pub fn chi_sc(g: &Graph, memo: &MemoStore) -> Result<SumChoiceRecord, SumChoiceError> {
    Engine::new(memo).chi_sc(g)
}

pub fn rho(g: &Graph, memo: &MemoStore) -> Result<Extended, SumChoiceError> {
    Engine::new(memo).rho(g)
}

/// `tau` without the help of any stored values.
pub fn tau(g: &Graph, cap: Option<u32>) -> Result<Extended, SumChoiceError> {
    Engine::new(&MemoStore::in_memory()).tau(g, cap)
}

pub fn is_sc_greedy(g: &Graph, memo: &MemoStore) -> Result<bool, SumChoiceError> {
    Engine::new(memo).is_sc_greedy(g)
}

pub fn classify_minimally_not_sc_greedy(n: usize, memo: &MemoStore) -> Result<Vec<MinimalNonGreedy>, SumChoiceError> {
    Engine::new(memo).classify_minimally_not_sc_greedy(n)
}

#[cfg(test)]
mod tests;
