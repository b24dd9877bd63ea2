use super::{Coloring, ListAssignment};
use crate::graph::Graph;

/// A proper coloring with `c(v)` in `L(v)`, if one exists.
///
/// Backtracking that always branches on the uncolored vertex with the
/// fewest remaining colors (lowest index on ties), trying colors in
/// ascending order, so the result is deterministic.
///
/// # Panics
///
/// If `lists` does not have one entry per vertex.
pub fn is_list_colorable(g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    assert_eq!(lists.len(), g.order(), "one list per vertex");
    let mut col = [0u8; 32];
    let mut forb = [0u64; 32];
    if color_within(g.rows(), lists.bits(), g.vertices(), &mut forb, &mut col) {
        Some(Coloring((0..g.order()).map(|v| col[v] as u32).collect()))
    } else {
        None
    }
}

/// Colors the vertices of `todo` from `lists[v]` avoiding `forb[v]`;
/// vertices outside `todo` are ignored.
pub(crate) fn color_within(rows: &[u32], lists: &[u64], todo: u32, forb: &mut [u64; 32], col: &mut [u8; 32]) -> bool {
    if todo == 0 {
        return true;
    }
    let mut best = usize::MAX;
    let mut best_avail = 0u64;
    let mut best_count = u32::MAX;
    let mut t = todo;
    while t != 0 {
        let v = t.trailing_zeros() as usize;
        t &= t - 1;
        let avail = lists[v] & !forb[v];
        let c = avail.count_ones();
        if c == 0 {
            return false;
        }
        if c < best_count {
            best = v;
            best_avail = avail;
            best_count = c;
            if c == 1 {
                break;
            }
        }
    }
    let v = best;
    let rest = todo & !(1 << v);
    let nbrs = rows[v] & rest;
    let saved = *forb;
    let mut a = best_avail;
    while a != 0 {
        let c = a.trailing_zeros();
        a &= a - 1;
        col[v] = c as u8;
        let mut m = nbrs;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            forb[w] |= 1 << c;
        }
        if color_within(rows, lists, rest, forb, col) {
            return true;
        }
        *forb = saved;
    }
    false
}
