//! Adversarial search over canonical list assignments.
//!
//! Vertices receive lists in a fixed order. Colors whose membership pattern
//! over the lists assigned so far is identical are interchangeable, so they
//! form a class and a new list is determined, up to renaming, by how many
//! colors it takes from each class plus how many unused colors it takes.
//! Each class is a contiguous id range and taking `k` colors from a class
//! always takes its lowest `k` ids, which yields one assignment per
//! renaming class.
//!
//! A node whose assigned prefix is already uncolorable is a witness (the
//! remaining lists do not matter). A node whose prefix has a coloring after
//! which the unassigned vertices reduce away for any lists is settled
//! without expanding it.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::coloring::color_within;
use super::{ChoosabilityError, SearchOptions, SizeFunction, MAX_COLORS};
use crate::graph::{encode_graph6, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Class {
    pub start: u8,
    pub len: u8,
}

/// Greedily fills `k[from..]` with at most `remaining` colors in total;
/// returns how many were placed.
fn fill(classes: &[Class], from: usize, mut remaining: u32, k: &mut [u8]) -> u32 {
    let mut placed = 0;
    for (j, class) in classes.iter().enumerate().skip(from) {
        let take = remaining.min(class.len as u32);
        k[j] = take as u8;
        remaining -= take;
        placed += take;
    }
    placed
}

/// First count vector in descending lexicographic order, taking `f` colors
/// of which at most `max_new` are unused so far.
pub(crate) fn first_counts(classes: &[Class], f: u32, max_new: u32, k: &mut [u8]) -> bool {
    let placed = fill(classes, 0, f, k);
    f - placed <= max_new
}

/// Advances `k` to its successor in descending lexicographic order.
pub(crate) fn next_counts(classes: &[Class], f: u32, max_new: u32, k: &mut [u8]) -> bool {
    let c = classes.len();
    let mut prefix: u32 = k[..c].iter().map(|&x| x as u32).sum();
    for j in (0..c).rev() {
        prefix -= k[j] as u32;
        if k[j] == 0 {
            continue;
        }
        let head = prefix + k[j] as u32 - 1;
        let room: u32 = classes[j + 1..].iter().map(|cl| cl.len as u32).sum::<u32>().min(f - head);
        if f - head - room <= max_new {
            k[j] -= 1;
            fill(classes, j + 1, f - head, k);
            return true;
        }
    }
    false
}

/// Applies a count vector: returns the new list and writes the refined
/// classes to `out`.
pub(crate) fn apply_counts(classes: &[Class], k: &[u8], f: u32, next: u32, out: &mut Vec<Class>) -> (u64, u32) {
    out.clear();
    let mut list = 0u64;
    let mut taken = 0u32;
    for (cl, &kj) in classes.iter().zip(k) {
        if kj > 0 {
            list |= range_bits(cl.start as u32, kj as u32);
            out.push(Class { start: cl.start, len: kj });
            taken += kj as u32;
        }
        if kj < cl.len {
            out.push(Class { start: cl.start + kj, len: cl.len - kj });
        }
    }
    let fresh = f - taken;
    if fresh > 0 {
        list |= range_bits(next, fresh);
        out.push(Class { start: next as u8, len: fresh as u8 });
    }
    (list, next + fresh)
}

fn range_bits(start: u32, len: u32) -> u64 {
    let ones = if len >= 64 { u64::MAX } else { (1u64 << len) - 1 };
    ones << start
}

/// Which colorings count as success for the adversary to defeat.
#[derive(Debug, Clone)]
pub(crate) struct Problem {
    pub n: usize,
    /// Adjacency in search order.
    pub rows: [u32; 32],
    pub sizes: [u32; 32],
    /// Colors a vertex may actually use.
    pub allowed: [u64; 32],
    /// Lower-bound correction for list sizes of unassigned vertices.
    pub slack: [u32; 32],
    pub init_classes: Vec<Class>,
    pub init_next: u32,
    /// `order[i]` is the input vertex placed at position `i`.
    pub order: Vec<usize>,
    pub fingerprint: String,
}

impl Problem {
    pub fn for_choosability(g: &Graph, f: &SizeFunction) -> Problem {
        Problem::build(g, f, None, 0)
    }

    /// Colorings must avoid the first `forced` colors at `v`.
    pub fn for_forcing(g: &Graph, f: &SizeFunction, v: usize, forced: u32) -> Problem {
        Problem::build(g, f, Some(v), forced)
    }

    fn build(g: &Graph, f: &SizeFunction, pinned: Option<usize>, forced: u32) -> Problem {
        let order = search_order(g);
        let n = g.order();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let h = g.permuted(&pos);
        let mut rows = [0u32; 32];
        rows[..n].copy_from_slice(&h.rows()[..n]);
        let mut sizes = [0u32; 32];
        let mut allowed = [u64::MAX; 32];
        let mut slack = [0u32; 32];
        for v in 0..n {
            sizes[pos[v]] = f[v];
        }
        let mut init_classes = Vec::new();
        if let Some(v) = pinned {
            allowed[pos[v]] = !range_bits(0, forced);
            slack[pos[v]] = forced;
            init_classes.push(Class { start: 0, len: forced as u8 });
        }
        let fingerprint = format!("{}|{}|{:?}|{}", encode_graph6(&h), SizeFunction(sizes[..n].to_vec()), pinned.map(|v| pos[v]), forced);
        Problem { n, rows, sizes, allowed, slack, init_classes, init_next: forced, order, fingerprint }
    }

    fn total(&self) -> u32 {
        self.sizes[..self.n].iter().sum::<u32>() + self.init_next
    }

    fn max_size(&self) -> u32 {
        self.sizes[..self.n].iter().copied().max().unwrap_or(0)
    }
}

/// Highest degree first, then repeatedly the vertex with most neighbours
/// already placed.
fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed: u32 = 0;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }
    order
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Phase {
    /// Witness hunt over a small color universe.
    Heuristic,
    /// Exhaustive sweep.
    Full,
}

/// Resumable state of an interrupted search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Progress {
    pub phase: Phase,
    /// Residual component being searched.
    pub component: usize,
    pub total_subtrees: usize,
    /// Indices of top-level subtrees already exhausted.
    pub completed_subtrees: Vec<usize>,
    pub nodes: u64,
    pub fingerprint: String,
}

pub(crate) enum SearchOutcome {
    AllColorable { examined: u64 },
    /// Lists in the input labeling.
    Witness(Vec<u64>),
    Unknown(Progress),
}

/// Heuristic node cap; the heuristic phase only hunts for witnesses.
const HEURISTIC_NODES: u64 = 20_000;
/// Target number of top-level subtrees.
const SPLIT_TARGET: usize = 64;
const PRUNE_LEAVES: u32 = 24;
const PRUNE_NODES: u32 = 400;

pub(crate) fn run(p: &Problem, opts: &SearchOptions, component: usize) -> Result<SearchOutcome, ChoosabilityError> {
    let total = p.total();
    if total > MAX_COLORS {
        return Err(ChoosabilityError::ColorUniverse { total, max: MAX_COLORS });
    }
    if let Some(r) = &opts.resume {
        if r.fingerprint != p.fingerprint {
            return Err(ChoosabilityError::ResumeMismatch);
        }
    }
    if p.n == 0 {
        return Ok(SearchOutcome::AllColorable { examined: 1 });
    }
    let resume_full = opts.resume.as_ref().is_some_and(|r| r.phase == Phase::Full);
    if opts.heuristic_pass && !resume_full {
        // small universes first: witnesses there are shallow and plentiful
        let base = p.max_size() + p.init_next;
        for small in (base..=base + 2).filter(|&u| u < total) {
            let ctl = Control::new(opts, Some(HEURISTIC_NODES));
            match sweep(p, opts, &ctl, small, Phase::Heuristic, component, None) {
                SearchOutcome::Witness(w) => return Ok(SearchOutcome::Witness(w)),
                SearchOutcome::Unknown(prog) if opts.budget.exhausted() => return Ok(SearchOutcome::Unknown(prog)),
                _ => {}
            }
        }
    }
    let ctl = Control::new(opts, None);
    let skip = opts.resume.as_ref().filter(|r| r.phase == Phase::Full);
    Ok(sweep(p, opts, &ctl, total, Phase::Full, component, skip))
}

struct Control<'a> {
    opts: &'a SearchOptions,
    local_cap: Option<u64>,
    local_used: std::sync::atomic::AtomicU64,
    abort: AtomicBool,
    /// Lowest subtree index holding a witness.
    best: AtomicUsize,
}

impl<'a> Control<'a> {
    fn new(opts: &'a SearchOptions, local_cap: Option<u64>) -> Self {
        Control { opts, local_cap, local_used: 0.into(), abort: AtomicBool::new(false), best: AtomicUsize::new(usize::MAX) }
    }

    fn charge(&self, n: u64) -> bool {
        let used = self.local_used.fetch_add(n, Ordering::Relaxed) + n;
        let ok = self.opts.budget.charge(n) && !self.local_cap.is_some_and(|c| used > c);
        if !ok {
            self.abort.store(true, Ordering::Relaxed);
        }
        ok
    }
}

struct Task {
    lists: Vec<u64>,
    classes: Vec<Class>,
    next: u32,
}

enum TaskResult {
    Done(u64),
    Witness(Vec<u64>),
    Aborted,
    Skipped,
}

/// Expands canonical prefixes level by level until there are enough
/// subtrees to distribute.
fn split(p: &Problem, universe: u32) -> Vec<Task> {
    let mut tasks = vec![Task { lists: Vec::new(), classes: p.init_classes.clone(), next: p.init_next }];
    let mut k = [0u8; 64];
    while tasks.len() < SPLIT_TARGET && tasks[0].lists.len() < p.n.min(3) {
        let mut next_level = Vec::new();
        for t in &tasks {
            let depth = t.lists.len();
            let f = p.sizes[depth];
            let max_new = universe.saturating_sub(t.next);
            if !first_counts(&t.classes, f, max_new, &mut k) {
                continue;
            }
            loop {
                let mut classes = Vec::new();
                let (list, next) = apply_counts(&t.classes, &k, f, t.next, &mut classes);
                let mut lists = t.lists.clone();
                lists.push(list);
                next_level.push(Task { lists, classes, next });
                if !next_counts(&t.classes, f, max_new, &mut k) {
                    break;
                }
            }
        }
        tasks = next_level;
        if tasks.is_empty() {
            break;
        }
    }
    tasks
}

fn sweep(p: &Problem, opts: &SearchOptions, ctl: &Control, universe: u32, phase: Phase, component: usize, skip: Option<&Progress>) -> SearchOutcome {
    let tasks = split(p, universe);
    let done: Vec<bool> = {
        let mut d = vec![false; tasks.len()];
        if let Some(s) = skip {
            for &i in &s.completed_subtrees {
                if i < d.len() {
                    d[i] = true;
                }
            }
        }
        d
    };
    let run_one = |i: usize| -> TaskResult {
        if done[i] {
            return TaskResult::Skipped;
        }
        if ctl.abort.load(Ordering::Relaxed) || ctl.best.load(Ordering::Relaxed) < i {
            return TaskResult::Aborted;
        }
        let mut w = Worker::new(p, ctl, opts.prefix_pruning, universe, i);
        let r = w.run_task(&tasks[i]);
        if let TaskResult::Witness(_) = r {
            ctl.best.fetch_min(i, Ordering::Relaxed);
        }
        r
    };
    let results: Vec<TaskResult> = if opts.jobs <= 1 {
        let mut out = Vec::with_capacity(tasks.len());
        for i in 0..tasks.len() {
            let r = run_one(i);
            let stop = matches!(r, TaskResult::Witness(_));
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build();
        match pool {
            Ok(pool) => pool.install(|| (0..tasks.len()).into_par_iter().map(run_one).collect()),
            Err(_) => (0..tasks.len()).map(run_one).collect(),
        }
    };
    let mut examined = 0;
    let mut completed: Vec<usize> = skip.map(|s| s.completed_subtrees.clone()).unwrap_or_default();
    let mut aborted = false;
    for (i, r) in results.into_iter().enumerate() {
        match r {
            TaskResult::Witness(lists) => return SearchOutcome::Witness(unpermute(p, &lists)),
            TaskResult::Done(e) => {
                examined += e;
                completed.push(i);
            }
            TaskResult::Aborted => aborted = true,
            TaskResult::Skipped => {}
        }
    }
    if aborted || completed.len() < tasks.len() {
        completed.sort_unstable();
        completed.dedup();
        let nodes = skip.map_or(0, |s| s.nodes) + ctl.local_used.load(Ordering::Relaxed);
        return SearchOutcome::Unknown(Progress {
            phase,
            component,
            total_subtrees: tasks.len(),
            completed_subtrees: completed,
            nodes,
            fingerprint: p.fingerprint.clone(),
        });
    }
    SearchOutcome::AllColorable { examined }
}

fn unpermute(p: &Problem, lists: &[u64]) -> Vec<u64> {
    let mut out = vec![0; p.n];
    for (i, &v) in p.order.iter().enumerate() {
        out[v] = lists[i];
    }
    out
}

enum Flow {
    Done,
    Witness,
    Abort,
}

struct Worker<'a> {
    p: &'a Problem,
    ctl: &'a Control<'a>,
    prune: bool,
    universe: u32,
    index: usize,
    lists: [u64; 32],
    /// A proper coloring of the prefix `0..=d`, per depth `d`.
    cols: [[u8; 32]; 32],
    class_bufs: Vec<Vec<Class>>,
    /// Vertices whose lists belong to the witness.
    filled: usize,
    examined: u64,
    pending: u64,
}

impl<'a> Worker<'a> {
    fn new(p: &'a Problem, ctl: &'a Control<'a>, prune: bool, universe: u32, index: usize) -> Self {
        Worker {
            p,
            ctl,
            prune,
            universe,
            index,
            lists: [0; 32],
            cols: [[0; 32]; 32],
            class_bufs: vec![Vec::new(); p.n + 1],
            filled: 0,
            examined: 0,
            pending: 0,
        }
    }

    fn run_task(&mut self, t: &Task) -> TaskResult {
        let depth = t.lists.len();
        self.lists[..depth].copy_from_slice(&t.lists);
        let flow = if depth == 0 {
            self.class_bufs[0] = t.classes.clone();
            self.dfs(0, t.next)
        } else {
            let last = depth - 1;
            if !self.probe_full(last) {
                self.filled = depth;
                Flow::Witness
            } else if depth == self.p.n || (self.prune && self.safe_prune(last)) {
                self.examined += 1;
                Flow::Done
            } else {
                self.class_bufs[depth] = t.classes.clone();
                self.dfs(depth, t.next)
            }
        };
        self.ctl.charge(std::mem::take(&mut self.pending));
        match flow {
            Flow::Witness => {
                self.fill_rest();
                TaskResult::Witness(self.lists[..self.p.n].to_vec())
            }
            Flow::Done => TaskResult::Done(self.examined),
            Flow::Abort => TaskResult::Aborted,
        }
    }

    /// Completes a witness whose prefix is uncolorable.
    fn fill_rest(&mut self) {
        for w in self.filled..self.p.n {
            self.lists[w] = range_bits(0, self.p.sizes[w]);
        }
    }

    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= 1024 {
            let n = std::mem::take(&mut self.pending);
            if !self.ctl.charge(n) {
                return false;
            }
            if self.ctl.best.load(Ordering::Relaxed) < self.index || self.ctl.abort.load(Ordering::Relaxed) {
                return false;
            }
        }
        true
    }

    fn dfs(&mut self, depth: usize, next: u32) -> Flow {
        let p = self.p;
        if depth > 0 && depth + 1 == p.n {
            return self.last_vertex(depth);
        }
        let f = p.sizes[depth];
        let max_new = self.universe.saturating_sub(next);
        let classes = std::mem::take(&mut self.class_bufs[depth]);
        let mut child = std::mem::take(&mut self.class_bufs[depth + 1]);
        let mut k = [0u8; 64];
        let mut flow = Flow::Done;
        if first_counts(&classes, f, max_new, &mut k) {
            loop {
                if !self.tick() {
                    flow = Flow::Abort;
                    break;
                }
                let (list, child_next) = apply_counts(&classes, &k, f, next, &mut child);
                self.lists[depth] = list;
                if !self.probe(depth) {
                    self.filled = depth + 1;
                    flow = Flow::Witness;
                    break;
                }
                // the last two levels are settled exactly by `last_vertex`
                if depth + 1 == p.n || (self.prune && depth + 3 < p.n && self.safe_prune(depth)) {
                    self.examined += 1;
                } else {
                    self.class_bufs[depth + 1] = std::mem::take(&mut child);
                    let sub = self.dfs(depth + 1, child_next);
                    child = std::mem::take(&mut self.class_bufs[depth + 1]);
                    match sub {
                        Flow::Done => {}
                        other => {
                            flow = other;
                            break;
                        }
                    }
                }
                if !next_counts(&classes, f, max_new, &mut k) {
                    break;
                }
            }
        }
        self.class_bufs[depth] = classes;
        self.class_bufs[depth + 1] = child;
        flow
    }

    /// Settles every list of the final vertex `d` at once. A list defeats
    /// the prefix iff each of its usable colors appears on `d`'s neighbours
    /// in every coloring of the prefix, so it is enough to find the colors
    /// common to all those colorings.
    fn last_vertex(&mut self, d: usize) -> Flow {
        if !self.tick() {
            return Flow::Abort;
        }
        let p = self.p;
        let f = p.sizes[d];
        let unusable = !p.allowed[d] & range_bits(0, self.universe);
        let prefix = (1u32 << d) - 1;
        let nbrs = p.rows[d] & prefix;
        let seen = |col: &[u8; 32]| {
            let mut m = nbrs;
            let mut c = 0u64;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                c |= 1 << col[w];
            }
            c
        };
        let mut eff = [0u64; 32];
        for v in 0..d {
            eff[v] = self.lists[v] & p.allowed[v];
        }
        let mut common = seen(&self.cols[d - 1]) & p.allowed[d];
        let mut sure = 0u64;
        loop {
            if common.count_ones() + unusable.count_ones() < f {
                self.examined += 1;
                return Flow::Done;
            }
            let open = common & !sure;
            if open == 0 {
                break;
            }
            let x = open.trailing_zeros();
            let mut lists = eff;
            let mut m = nbrs;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                lists[w] &= !(1 << x);
            }
            let mut forb = [0u64; 32];
            let mut col = [0u8; 32];
            self.pending += 1;
            if color_within(&p.rows, &lists, prefix, &mut forb, &mut col) {
                common &= seen(&col);
            } else {
                sure |= 1 << x;
            }
        }
        let mut list = 0u64;
        for pool in [common, unusable] {
            let mut m = pool;
            while m != 0 && list.count_ones() < f {
                list |= m & m.wrapping_neg();
                m &= m - 1;
            }
        }
        self.lists[d] = list;
        self.filled = d + 1;
        Flow::Witness
    }

    /// Whether the prefix `0..=depth` is colorable, reusing the coloring of
    /// the shorter prefix when the new vertex fits.
    fn probe(&mut self, depth: usize) -> bool {
        if depth == 0 {
            let avail = self.lists[0] & self.p.allowed[0];
            if avail == 0 {
                return false;
            }
            self.cols[0][0] = avail.trailing_zeros() as u8;
            return true;
        }
        let prev = self.cols[depth - 1];
        let mut forb = 0u64;
        let mut m = self.p.rows[depth] & ((1u32 << depth) - 1);
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            forb |= 1 << prev[w];
        }
        let avail = self.lists[depth] & self.p.allowed[depth] & !forb;
        if avail != 0 {
            self.cols[depth] = prev;
            self.cols[depth][depth] = avail.trailing_zeros() as u8;
            return true;
        }
        self.probe_full(depth)
    }

    fn probe_full(&mut self, depth: usize) -> bool {
        let mut eff = [0u64; 32];
        for v in 0..=depth {
            eff[v] = self.lists[v] & self.p.allowed[v];
        }
        let mut forb = [0u64; 32];
        let mut col = [0u8; 32];
        let prefix = if depth + 1 >= 32 { u32::MAX } else { (1u32 << (depth + 1)) - 1 };
        if color_within(&self.p.rows, &eff, prefix, &mut forb, &mut col) {
            self.cols[depth] = col;
            true
        } else {
            false
        }
    }

    /// Looks for a coloring of the prefix after which the unassigned
    /// vertices reduce away whatever their lists are.
    fn safe_prune(&mut self, depth: usize) -> bool {
        let p = self.p;
        let all = if p.n >= 32 { u32::MAX } else { (1u32 << p.n) - 1 };
        let prefix = if depth + 1 >= 32 { u32::MAX } else { (1u32 << (depth + 1)) - 1 };
        let rest = all & !prefix;
        let mut st = PruneState { dmg: [0; 32], col: [0; 32], leaves: 0, nodes: 0 };
        let ok = self.prune_rec(0, depth, rest, &mut st);
        self.pending += st.nodes as u64 / 8;
        ok
    }

    fn prune_rec(&self, v: usize, last: usize, rest: u32, st: &mut PruneState) -> bool {
        let p = self.p;
        if v > last {
            st.leaves += 1;
            return reducible(p, rest, &st.dmg);
        }
        st.nodes += 1;
        let mut forb = 0u64;
        let mut m = p.rows[v] & ((1u32 << v) - 1);
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            forb |= 1 << st.col[w];
        }
        let avail = self.lists[v] & p.allowed[v] & !forb;
        let out = p.rows[v] & rest;
        // cheapest colors first: fewest newly damaged neighbours
        let mut cand: [(u8, u8); 64] = [(0, 0); 64];
        let mut nc = 0;
        let mut a = avail;
        while a != 0 {
            let c = a.trailing_zeros();
            a &= a - 1;
            let mut added = 0u8;
            let mut m = out;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                if st.dmg[w] >> c & 1 == 0 {
                    added += 1;
                }
            }
            cand[nc] = (added, c as u8);
            nc += 1;
        }
        cand[..nc].sort_unstable();
        for &(_, c) in &cand[..nc] {
            st.col[v] = c;
            let saved = st.dmg;
            let mut alive = true;
            let mut m = out;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                st.dmg[w] |= 1 << c;
                if p.sizes[w] < p.slack[w] + st.dmg[w].count_ones() + 1 {
                    alive = false;
                }
            }
            if alive && self.prune_rec(v + 1, last, rest, st) {
                return true;
            }
            st.dmg = saved;
            if st.leaves >= PRUNE_LEAVES || st.nodes >= PRUNE_NODES {
                return false;
            }
        }
        false
    }
}

struct PruneState {
    dmg: [u64; 32],
    col: [u8; 32],
    leaves: u32,
    nodes: u32,
}

/// Whether the vertices of `rest`, with sizes lowered by the colors already
/// seen on their neighbours, reduce to nothing.
fn reducible(p: &Problem, rest: u32, dmg: &[u64; 32]) -> bool {
    let mut size = [0i32; 32];
    let mut m = rest;
    while m != 0 {
        let w = m.trailing_zeros() as usize;
        m &= m - 1;
        size[w] = p.sizes[w] as i32 - p.slack[w] as i32 - dmg[w].count_ones() as i32;
    }
    let mut alive = rest;
    'outer: while alive != 0 {
        let mut m = alive;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            let s = size[w];
            if s <= 0 {
                return false;
            }
            let deg = (p.rows[w] & alive).count_ones() as i32;
            if s == 1 || s > deg {
                alive &= !(1 << w);
                if s == 1 {
                    let mut nb = p.rows[w] & alive;
                    while nb != 0 {
                        let x = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        size[x] -= 1;
                    }
                }
                continue 'outer;
            }
        }
        return false;
    }
    true
}
