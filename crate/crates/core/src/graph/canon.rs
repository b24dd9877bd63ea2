//! Canonical labeling by individualization and refinement.
//!
//! The ordered partition is refined to an equitable one, then every vertex
//! of the first non-singleton cell is individualized in turn (skipping
//! vertices that are twins of one already tried, since swapping twins is an
//! automorphism fixing the partition). Every discrete leaf yields a
//! relabeling; the lexicographically least relabeled adjacency wins. The
//! whole search tree is explored, so the result is exact.

use serde::{Deserialize, Serialize};

use super::{encode_graph6, Graph, GraphError};

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_ORDER: usize = 16;

/// graph6 string of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(pub String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone)]
pub struct CanonicalLabeling {
    pub key: CanonicalKey,
    /// `perm[v]` is the canonical index of original vertex `v`.
    pub perm: Vec<usize>,
    /// The relabeled graph, `graph.permuted(&perm)`.
    pub graph: Graph,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalKey, GraphError> {
    canonical_labeling(g).map(|c| c.key)
}

pub fn canonical_labeling(g: &Graph) -> Result<CanonicalLabeling, GraphError> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(GraphError::Capacity { order: n, max: MAX_CANONICAL_ORDER });
    }
    let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
    let cells = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    search(g, cells, &mut best);
    let perm = best.map(|(_, p)| p).unwrap_or_default();
    let graph = g.permuted(&perm);
    Ok(CanonicalLabeling { key: CanonicalKey(encode_graph6(&graph)), perm, graph })
}

fn search(g: &Graph, mut cells: Vec<Vec<usize>>, best: &mut Option<(Vec<u32>, Vec<usize>)>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let mut perm = vec![0; g.order()];
        for (i, cell) in cells.iter().enumerate() {
            perm[cell[0]] = i;
        }
        let cert = g.permuted(&perm).rows().to_vec();
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, perm));
        }
        return;
    };
    let cell = cells[target].clone();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.neighbors(u) & !(1 << v) == g.neighbors(v) & !(1 << u)
}

/// Refines the ordered partition until every cell is equitable with respect
/// to every other. Split cells are ordered by neighbour count, which keeps
/// the result independent of vertex labels.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |m, &v| m | (1 << v));
            let mut split_any = false;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((g.neighbors(v) & splitter).count_ones(), v)).collect();
                keyed.sort_by_key(|&(k, _)| k);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    split_any = true;
                }
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        break;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Brute-force isomorphism: some permutation maps one edge set onto the other.
    fn isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
        a.order() == b.order() && a.edge_count() == b.edge_count() && perms.iter().any(|p| a.permuted(p) == *b)
    }

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        (0u32..(1 << pairs.len()))
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn five_vertex_graphs_fall_into_34_classes() {
        let perms = permutations(5);
        let graphs = all_labeled(5);
        // Oracle: greedy bucketing by explicit permutation search.
        let mut reps: Vec<Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| isomorphic(r, g, &perms)) {
                reps.push(*g);
            }
        }
        assert_eq!(reps.len(), 34);
        let mut keys: Vec<CanonicalKey> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), 34);
    }

    #[test]
    fn keys_are_graph6_of_a_relabeling() {
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        let lab = canonical_labeling(&c5).unwrap();
        assert_eq!(crate::graph::parse_graph6(lab.key.as_str()).unwrap(), c5.permuted(&lab.perm));
    }

    #[test]
    fn distinguishes_and_identifies() {
        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        let p5 = FamilySpec::Path(5).generate().unwrap();
        let shuffled = c5.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&c5).unwrap(), canonical_form(&shuffled).unwrap());
        assert_ne!(canonical_form(&c5).unwrap(), canonical_form(&p5).unwrap());
    }

    #[test]
    fn invariant_under_every_permutation_up_to_six() {
        for n in 0..=6 {
            let perms = permutations(n);
            let graphs = if n <= 4 {
                all_labeled(n)
            } else {
                // a spread of structured graphs for the larger orders
                let mut v = vec![
                    Graph::complete(n).unwrap(),
                    FamilySpec::Cycle(n).generate().unwrap(),
                    FamilySpec::Path(n).generate().unwrap(),
                    FamilySpec::Wheel(n - 1).generate().unwrap(),
                    FamilySpec::BrokenWheel(n - 1).generate().unwrap(),
                ];
                v.push(Graph::from_edges(n, &[(0, 1), (1, 2), (3, 4)]).unwrap());
                v
            };
            for g in graphs {
                let key = canonical_form(&g).unwrap();
                for p in &perms {
                    assert_eq!(canonical_form(&g.permuted(p)).unwrap(), key, "{g:?} under {p:?}");
                }
            }
        }
    }

    #[test]
    fn capacity_error_above_range() {
        let g = Graph::empty(MAX_CANONICAL_ORDER + 1).unwrap();
        assert!(matches!(canonical_form(&g), Err(GraphError::Capacity { .. })));
    }

    #[test]
    fn symmetric_graphs_stay_cheap() {
        // twin pruning collapses the n! leaves of complete and complete bipartite graphs
        for n in [10, 16] {
            canonical_form(&Graph::complete(n).unwrap()).unwrap();
            canonical_form(&Graph::empty(n).unwrap()).unwrap();
        }
        canonical_form(&FamilySpec::CompleteBipartite(6, 6).generate().unwrap()).unwrap();
    }
}
