//! List colorability and `f`-choosability.
//!
//! [`is_choosable`] first strips simple vertices with [`reduce`], splits the
//! residual graph into components and then runs an adversarial search over
//! canonical list assignments (one per color-renaming class, see
//! [`canonical_assignments`]). A non-choosable verdict always carries a
//! concrete witness assignment, lifted back through the reduction steps and
//! re-checked before it is returned.

mod assignments;
mod budget;
mod coloring;
mod forcing;
mod search;

pub use assignments::{canonical_assignments, CanonicalAssignments};
pub use budget::Budget;
pub use coloring::is_list_colorable;
pub use forcing::{find_forcing_assignment, ForcingOutcome};
pub use search::{Phase, Progress};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{members, Graph, VertexSet};
use search::{Problem, SearchOutcome};

/// Colors are small integers below this bound; lists are `u64` bit sets.
pub const MAX_COLORS: u32 = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChoosabilityError {
    #[error("size function has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("total list size {total} exceeds the color universe of {max}")]
    ColorUniverse { total: u32, max: u32 },
    #[error("color {0} is outside the supported range 0..64")]
    ColorRange(u32),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("forcing set must contain at least one color")]
    EmptyForcingSet,
    #[error("invalid size function: {0}")]
    Parse(String),
    #[error("resume state does not belong to this problem")]
    ResumeMismatch,
}

/// List size per vertex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SizeFunction(pub Vec<u32>);

impl SizeFunction {
    pub fn new(sizes: Vec<u32>) -> Self {
        SizeFunction(sizes)
    }

    pub fn constant(n: usize, size: u32) -> Self {
        SizeFunction(vec![size; n])
    }

    /// `size(f)`, the sum of all list sizes.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Whether `2 <= f(v) <= deg(v)` holds everywhere.
    pub fn is_non_simple(&self, g: &Graph) -> bool {
        self.0.iter().enumerate().all(|(v, &s)| s >= 2 && s as usize <= g.degree(v))
    }

    /// `self(v) <= other(v)` for every vertex.
    pub fn le(&self, other: &SizeFunction) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Relabels by `perm[v]` = new index of `v`.
    pub fn permuted(&self, perm: &[usize]) -> SizeFunction {
        let mut out = vec![0; self.len()];
        for (v, &s) in self.0.iter().enumerate() {
            out[perm[v]] = s;
        }
        SizeFunction(out)
    }

    /// Restriction to the vertices of `set`, in ascending order.
    pub fn restricted(&self, set: VertexSet) -> SizeFunction {
        SizeFunction(members(set).into_iter().map(|v| self.0[v]).collect())
    }
}

impl std::ops::Index<usize> for SizeFunction {
    type Output = u32;
    fn index(&self, v: usize) -> &u32 {
        &self.0[v]
    }
}

impl fmt::Debug for SizeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f{:?}", self.0)
    }
}

impl fmt::Display for SizeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for SizeFunction {
    type Err = ChoosabilityError;

    /// Comma-separated sizes in vertex order, e.g. `2,2,3,2,2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SizeFunction(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|e| ChoosabilityError::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()
            .map(SizeFunction)
    }
}

/// A color list per vertex, stored as bit sets over colors `0..64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ListAssignment(pub(crate) Vec<u64>);

impl ListAssignment {
    pub fn from_lists<L: AsRef<[u32]>>(lists: &[L]) -> Result<Self, ChoosabilityError> {
        let mut out = Vec::with_capacity(lists.len());
        for list in lists {
            let mut bits = 0u64;
            for &c in list.as_ref() {
                if c >= MAX_COLORS {
                    return Err(ChoosabilityError::ColorRange(c));
                }
                bits |= 1 << c;
            }
            out.push(bits);
        }
        Ok(ListAssignment(out))
    }

    pub fn from_bits(bits: Vec<u64>) -> Self {
        ListAssignment(bits)
    }

    pub fn bits(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted colors of vertex `v`.
    pub fn list(&self, v: usize) -> Vec<u32> {
        bits_to_colors(self.0[v])
    }

    pub fn lists(&self) -> Vec<Vec<u32>> {
        (0..self.len()).map(|v| self.list(v)).collect()
    }

    pub fn sizes(&self) -> SizeFunction {
        SizeFunction(self.0.iter().map(|l| l.count_ones()).collect())
    }

    /// Applies an injective color map `map[c]`.
    pub fn recolored(&self, map: &[u32]) -> Result<Self, ChoosabilityError> {
        let lists: Vec<Vec<u32>> = self.lists().into_iter().map(|l| l.into_iter().map(|c| map[c as usize]).collect()).collect();
        ListAssignment::from_lists(&lists)
    }

    pub fn permuted(&self, perm: &[usize]) -> ListAssignment {
        let mut out = vec![0; self.len()];
        for (v, &l) in self.0.iter().enumerate() {
            out[perm[v]] = l;
        }
        ListAssignment(out)
    }
}

pub(crate) fn bits_to_colors(mut bits: u64) -> Vec<u32> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        out.push(bits.trailing_zeros());
        bits &= bits - 1;
    }
    out
}

impl fmt::Debug for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.lists())
    }
}

impl Serialize for ListAssignment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.lists().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let lists = Vec::<Vec<u32>>::deserialize(d)?;
        ListAssignment::from_lists(&lists).map_err(serde::de::Error::custom)
    }
}

/// A color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.0.len() == g.order() && g.edges().all(|(u, v)| self.0[u] != self.0[v])
    }

    pub fn respects(&self, lists: &ListAssignment) -> bool {
        self.0.len() == lists.len() && self.0.iter().enumerate().all(|(v, &c)| c < MAX_COLORS && lists.0[v] >> c & 1 == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    Choosable {
        /// Canonical assignments settled: complete leaves plus pruned
        /// partial assignments.
        assignments_examined: u64,
    },
    NotChoosable {
        witness: ListAssignment,
    },
    /// The budget ran out before the search settled.
    Unknown {
        progress: Progress,
    },
}

impl Verdict {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Verdict::Choosable { .. })
    }

    pub fn is_not_choosable(&self) -> bool {
        matches!(self, Verdict::NotChoosable { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown { .. })
    }

    pub fn witness(&self) -> Option<&ListAssignment> {
        match self {
            Verdict::NotChoosable { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Worker threads for the top-level subtrees; 1 searches inline.
    pub jobs: usize,
    /// Run the bounded-universe witness hunt before the full sweep.
    pub heuristic_pass: bool,
    /// Try to settle whole subtrees by a coloring of the assigned prefix
    /// that leaves the rest greedily colorable.
    pub prefix_pruning: bool,
    /// Continue an interrupted search.
    pub resume: Option<Progress>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: Budget::unlimited(), jobs: 1, heuristic_pass: true, prefix_pruning: true, resume: None }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SearchOptions { budget, ..Default::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReductionRule {
    /// `f(v) = 1`: `v`'s only color is removed from its neighbours.
    SingleColor,
    /// `f(v) > deg(v)`: `v` can always be colored last.
    ExcessSize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    /// Vertex in the original labeling.
    pub vertex: usize,
    pub rule: ReductionRule,
    /// `v`'s reduced size at the moment it was removed.
    pub size: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Residual graph on the surviving vertices, in ascending original order.
    pub graph: Graph,
    pub sizes: SizeFunction,
    /// Original index of each residual vertex.
    pub kept: Vec<usize>,
    pub log: Vec<ReductionStep>,
    /// A vertex whose size reached 0, which makes the input not choosable.
    pub zero_at: Option<usize>,
}

impl Reduction {
    /// The input is choosable outright.
    pub fn is_trivially_choosable(&self) -> bool {
        self.zero_at.is_none() && self.kept.is_empty()
    }

    pub fn is_trivially_not_choosable(&self) -> bool {
        self.zero_at.is_some()
    }
}

/// Removes simple vertices until `2 <= f(v) <= deg(v)` holds on what is left.
///
/// Vertices with `f(v) = 1` are deleted and their neighbours lose one
/// color; vertices with `f(v) > deg(v)` are deleted outright. The lowest
/// eligible index goes first. Choosability of the residual is equivalent to
/// choosability of the input; a size reaching 0 stops the reduction.
pub fn reduce(g: &Graph, f: &SizeFunction) -> Result<Reduction, ChoosabilityError> {
    check_len(g, f)?;
    let mut alive = g.vertices();
    let mut size: Vec<u32> = f.0.clone();
    let mut log = Vec::new();
    let mut zero_at = members(alive).into_iter().find(|&v| size[v] == 0);
    while zero_at.is_none() {
        let next = members(alive).into_iter().find(|&v| size[v] == 1 || size[v] as usize > (g.neighbors(v) & alive).count_ones() as usize);
        let Some(v) = next else { break };
        alive &= !(1 << v);
        if size[v] == 1 {
            log.push(ReductionStep { vertex: v, rule: ReductionRule::SingleColor, size: 1 });
            for w in members(g.neighbors(v) & alive) {
                size[w] -= 1;
                if size[w] == 0 && zero_at.is_none() {
                    zero_at = Some(w);
                }
            }
        } else {
            log.push(ReductionStep { vertex: v, rule: ReductionRule::ExcessSize, size: size[v] });
        }
    }
    let kept = members(alive);
    Ok(Reduction {
        graph: g.induced(alive),
        sizes: SizeFunction(kept.iter().map(|&v| size[v]).collect()),
        kept,
        log,
        zero_at,
    })
}

fn check_len(g: &Graph, f: &SizeFunction) -> Result<(), ChoosabilityError> {
    if f.len() != g.order() {
        Err(ChoosabilityError::LengthMismatch { expected: g.order(), found: f.len() })
    } else {
        Ok(())
    }
}

/// Decides whether `g` is `f`-choosable.
///
/// A `Choosable` verdict is established by exhausting every canonical
/// assignment (any assignment uses at most `size(f)` colors and verdicts are
/// invariant under renaming colors, so this covers all finite palettes).
pub fn is_choosable(g: &Graph, f: &SizeFunction) -> Result<Verdict, ChoosabilityError> {
    is_choosable_with(g, f, &SearchOptions::default())
}

pub fn is_choosable_with(g: &Graph, f: &SizeFunction, opts: &SearchOptions) -> Result<Verdict, ChoosabilityError> {
    check_len(g, f)?;
    if f.total() > MAX_COLORS {
        return Err(ChoosabilityError::ColorUniverse { total: f.total(), max: MAX_COLORS });
    }
    let red = reduce(g, f)?;
    let n = g.order();
    // current lists on the original labeling, filled in for the residual first
    let mut lists = vec![0u64; n];
    let base = if red.zero_at.is_some() {
        // the zero-size vertex gets an empty list
        for (i, &v) in red.kept.iter().enumerate() {
            lists[v] = low_bits(red.sizes[i]);
        }
        None
    } else if red.kept.is_empty() {
        return Ok(Verdict::Choosable { assignments_examined: 0 });
    } else {
        Some(search_residual(&red, opts, &mut lists)?)
    };
    match base {
        Some(Residual::Choosable(examined)) => return Ok(Verdict::Choosable { assignments_examined: examined }),
        Some(Residual::Unknown(progress)) => return Ok(Verdict::Unknown { progress }),
        Some(Residual::Witness) | None => {}
    }
    lift_witness(g, &red, &mut lists);
    let witness = ListAssignment(lists);
    assert_eq!(witness.sizes(), *f, "witness list sizes must match the size function");
    assert!(is_list_colorable(g, &witness).is_none(), "witness must admit no proper coloring");
    Ok(Verdict::NotChoosable { witness })
}

enum Residual {
    Choosable(u64),
    Witness,
    Unknown(Progress),
}

fn low_bits(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Searches each residual component; on the first non-choosable component
/// fills `lists` (original labeling) with its witness and arbitrary lists on
/// the other residual vertices.
fn search_residual(red: &Reduction, opts: &SearchOptions, lists: &mut [u64]) -> Result<Residual, ChoosabilityError> {
    let mut examined = 0;
    let comps = red.graph.components();
    if let Some(p) = &opts.resume {
        if p.component >= comps.len() {
            return Err(ChoosabilityError::ResumeMismatch);
        }
    }
    for (ci, &comp) in comps.iter().enumerate() {
        let mut sub_opts = opts.clone();
        match &opts.resume {
            Some(p) if ci < p.component => continue,
            Some(p) if ci == p.component => {}
            _ => sub_opts.resume = None,
        }
        let h = red.graph.induced(comp);
        let sizes = red.sizes.restricted(comp);
        let problem = Problem::for_choosability(&h, &sizes);
        match search::run(&problem, &sub_opts, ci)? {
            SearchOutcome::AllColorable { examined: e } => examined += e,
            SearchOutcome::Unknown(progress) => return Ok(Residual::Unknown(progress)),
            SearchOutcome::Witness(w) => {
                for (i, &v) in red.kept.iter().enumerate() {
                    lists[v] = low_bits(red.sizes[i]);
                }
                for (j, local) in members(comp).into_iter().enumerate() {
                    lists[red.kept[local]] = w[j];
                }
                return Ok(Residual::Witness);
            }
        }
    }
    Ok(Residual::Choosable(examined))
}

/// Replays the reduction log backwards, turning a witness for the reduced
/// instance into one for the original graph.
fn lift_witness(g: &Graph, red: &Reduction, lists: &mut [u64]) {
    let mut alive = g.vertices();
    let mut alive_after = Vec::with_capacity(red.log.len());
    for step in &red.log {
        alive &= !(1 << step.vertex);
        alive_after.push(alive);
    }
    for (step, &after) in red.log.iter().zip(&alive_after).rev() {
        let v = step.vertex;
        match step.rule {
            ReductionRule::ExcessSize => lists[v] = low_bits(step.size),
            ReductionRule::SingleColor => {
                let nbrs = g.neighbors(v) & after;
                let used = members(nbrs).into_iter().fold(0u64, |m, w| m | lists[w]);
                let c = (!used).trailing_zeros();
                lists[v] = 1 << c;
                for w in members(nbrs) {
                    lists[w] |= 1 << c;
                }
            }
        }
    }
}
