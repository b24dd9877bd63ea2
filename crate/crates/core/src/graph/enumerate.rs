//! Connected graphs up to isomorphism, by vertex augmentation.
//!
//! Every connected graph on `n` vertices has a vertex whose deletion leaves
//! it connected, so extending each class on `n - 1` vertices by a vertex
//! with every nonempty neighbourhood reaches all classes; canonical keys
//! remove the duplicates.

use std::collections::BTreeMap;

use super::{canonical_labeling, CanonicalKey, Graph, GraphError};

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// One canonically labeled representative per class of connected graphs on
/// `n` vertices, sorted by canonical key.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, GraphError> {
    connected_graphs(n).map(|v| v.into_iter())
}

pub fn connected_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(GraphError::Capacity { order: n, max: MAX_ENUMERATION_ORDER });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)?];
    for _ in 1..n {
        let mut next: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
        for g in &level {
            for nbrs in 1..=g.vertices() {
                let mut h = *g;
                h.add_vertex(nbrs)?;
                let lab = canonical_labeling(&h)?;
                next.entry(lab.key).or_insert(lab.graph);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::HashSet;

    /// Oracle: canonical dedup over every labeled graph on `n` vertices.
    fn brute_force_count(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let mut keys = HashSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                keys.insert(canonical_form(&g).unwrap());
            }
        }
        keys.len()
    }

    #[test]
    fn counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(connected_graphs(n).unwrap().len(), brute_force_count(n), "n = {n}");
        }
        assert_eq!(connected_graphs(3).unwrap().len(), 2);
        assert_eq!(connected_graphs(4).unwrap().len(), 6);
        assert_eq!(connected_graphs(5).unwrap().len(), 21);
    }

    #[test]
    fn larger_orders() {
        assert_eq!(connected_graphs(6).unwrap().len(), 112);
        assert!(matches!(connected_graphs(8), Err(GraphError::Capacity { .. })));
        assert_eq!(enumerate_connected_graphs(0).unwrap().count(), 0);
        let all: Vec<_> = enumerate_connected_graphs(5).unwrap().collect();
        assert!(all.iter().all(|g| g.is_connected() && g.order() == 5));
    }
}
