//! Blocks and cut vertices (Hopcroft–Tarjan low-point DFS).

use super::{members, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks. Isolated vertices form singleton blocks.
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Number of blocks containing `v`.
    pub fn blocks_containing(&self, v: usize) -> usize {
        self.blocks.iter().filter(|&&b| b & (1 << v) != 0).count()
    }
}

pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    let mut st = State {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: 0,
    };
    for root in 0..n {
        if st.disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            st.disc[root] = st.time;
            st.time += 1;
            st.blocks.push(1 << root);
            continue;
        }
        let children = st.dfs(root, usize::MAX);
        if children >= 2 {
            st.cuts |= 1 << root;
        }
    }
    let mut blocks = st.blocks;
    blocks.sort_by_key(|b| (b.trailing_zeros(), *b));
    BlockDecomposition { blocks, cut_vertices: st.cuts }
}

struct State<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<VertexSet>,
    cuts: VertexSet,
}

impl State<'_> {
    /// Returns the number of DFS children of `u`.
    fn dfs(&mut self, u: usize, parent: usize) -> usize {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        let mut children = 0;
        for w in members(self.g.neighbors(u)) {
            if self.disc[w] == usize::MAX {
                children += 1;
                self.stack.push((u, w));
                self.dfs(w, u);
                self.low[u] = self.low[u].min(self.low[w]);
                if self.low[w] >= self.disc[u] {
                    if parent != usize::MAX {
                        self.cuts |= 1 << u;
                    }
                    let mut block: VertexSet = 0;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= (1 << a) | (1 << b);
                        if (a, b) == (u, w) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if w != parent && self.disc[w] < self.disc[u] {
                self.stack.push((u, w));
                self.low[u] = self.low[u].min(self.disc[w]);
            }
        }
        children
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn edges_in(g: &Graph, set: VertexSet) -> Vec<(usize, usize)> {
        g.edges().filter(|&(u, v)| set >> u & 1 == 1 && set >> v & 1 == 1).collect()
    }

    /// An induced block on at least three vertices must survive any single
    /// vertex deletion connected.
    fn two_connected(g: &Graph, set: VertexSet) -> bool {
        g.is_connected_within(set) && members(set).into_iter().all(|v| g.is_connected_within(set & !(1 << v)))
    }

    fn check_partition(g: &Graph) {
        let d = blocks(g);
        let mut seen = std::collections::HashSet::new();
        for &b in &d.blocks {
            if b.count_ones() >= 3 {
                assert!(two_connected(g, b), "{g:?} block {b:b}");
            }
            for e in edges_in(g, b) {
                assert!(seen.insert(e), "edge {e:?} in two blocks of {g:?}");
            }
        }
        assert_eq!(seen.len(), g.edge_count());
        for v in 0..g.order() {
            assert_eq!(d.cut_vertices >> v & 1 == 1, d.blocks_containing(v) >= 2, "{g:?} vertex {v}");
        }
    }

    #[test]
    fn named_examples() {
        let k3 = Graph::complete(3).unwrap();
        let bowtie = k3.glue_at_vertex(0, &k3, 0).unwrap();
        let d = blocks(&bowtie);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, 1);

        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        let d = blocks(&c5);
        assert_eq!(d.blocks, vec![0b11111]);
        assert_eq!(d.cut_vertices, 0);

        let p4 = FamilySpec::Path(4).generate().unwrap();
        let d = blocks(&p4);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, 0b0110);

        let empty = Graph::empty(0).unwrap();
        assert_eq!(blocks(&empty), BlockDecomposition { blocks: vec![], cut_vertices: 0 });
    }

    #[test]
    fn partition_property_on_all_small_graphs() {
        for n in 0..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            let step = if n == 6 { 7 } else { 1 };
            for mask in (0u32..(1 << pairs.len())).step_by(step) {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                check_partition(&Graph::from_edges(n, &edges).unwrap());
            }
        }
    }
}
