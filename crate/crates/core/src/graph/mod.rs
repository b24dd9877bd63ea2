//! Simple undirected graphs on at most 32 vertices.
//!
//! Adjacency is stored as one `u32` bit row per vertex, so a vertex set is
//! just a `u32` mask and most structural queries are a handful of bit
//! operations.

mod blocks;
mod canon;
mod enumerate;
mod family;
mod graph6;
mod ops;

pub use blocks::{blocks, BlockDecomposition};
pub use canon::{canonical_form, canonical_labeling, CanonicalKey, CanonicalLabeling, MAX_CANONICAL_ORDER};
pub use enumerate::{connected_graphs, enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
pub use family::{FamilySpec, TreeOfCyclesAttachment};
pub use graph6::{encode_graph6, parse_graph6};
pub use ops::{cartesian_product, graph_power};

use std::fmt;

use thiserror::Error;

/// Largest order a [`Graph`] can hold.
pub const MAX_ORDER: usize = 32;

/// Set of vertices encoded as a bit mask (bit `v` set iff `v` is a member).
pub type VertexSet = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    Capacity { order: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("malformed graph6 header")]
    Graph6Header,
    #[error("graph6 body is truncated: expected {expected} bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },
    #[error("graph6 body has trailing data or nonzero padding")]
    Graph6Trailing,
    #[error("invalid graph6 byte {0:#04x}")]
    Graph6Byte(u8),
    #[error("invalid family spec: {0}")]
    InvalidFamily(String),
}

/// A simple undirected labeled graph.
///
/// Row `v` of the adjacency has bit `u` set iff `uv` is an edge. The rows
/// are kept symmetric with a clear diagonal by every constructor.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: [u32; MAX_ORDER],
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::Capacity { order, max: MAX_ORDER });
        }
        Ok(Graph { order, rows: [0; MAX_ORDER], edges: 0 })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, symmetrizing them.
    pub(crate) fn from_rows(order: usize, rows: &[u32]) -> Self {
        debug_assert!(order <= MAX_ORDER);
        let mut g = Graph { order, rows: [0; MAX_ORDER], edges: 0 };
        for u in 0..order {
            let mut r = rows[u] & mask_of(order) & !(1 << u);
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                g.rows[u] |= 1 << v;
                g.rows[v] |= 1 << u;
            }
        }
        g.edges = g.rows[..order].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        g
    }

    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        let all = mask_of(order);
        for v in 0..order {
            g.rows[v] = all & !(1 << v);
        }
        g.edges = order * order.saturating_sub(1) / 2;
        Ok(g)
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.rows[u] & (1 << v) == 0 {
            self.rows[u] |= 1 << v;
            self.rows[v] |= 1 << u;
            self.edges += 1;
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.rows[u] & (1 << v) != 0 {
            self.rows[u] &= !(1 << v);
            self.rows[v] &= !(1 << u);
            self.edges -= 1;
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.order })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        mask_of(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.rows[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.order).map(|v| self.degree(v)).min()
    }

    /// Adjacency rows, one per vertex.
    pub fn rows(&self) -> &[u32] {
        &self.rows[..self.order]
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            let mut higher = self.rows[u] & !mask_of(u + 1);
            std::iter::from_fn(move || {
                if higher == 0 {
                    None
                } else {
                    let v = higher.trailing_zeros() as usize;
                    higher &= higher - 1;
                    Some((u, v))
                }
            })
        })
    }

    /// Subgraph induced by `set`, vertices relabeled in ascending original order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph, GraphError> {
        if set & !self.vertices() != 0 {
            let vertex = (set & !self.vertices()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, order: self.order });
        }
        Ok(self.induced(set))
    }

    pub(crate) fn induced(&self, set: VertexSet) -> Graph {
        let members = members(set);
        let mut g = Graph { order: members.len(), rows: [0; MAX_ORDER], edges: 0 };
        for (i, &u) in members.iter().enumerate() {
            let mut row = 0u32;
            for (j, &v) in members.iter().enumerate() {
                if self.rows[u] & (1 << v) != 0 {
                    row |= 1 << j;
                }
            }
            g.rows[i] = row;
        }
        g.edges = g.rows[..g.order].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        g
    }

    /// `G - v`, remaining vertices relabeled in ascending order.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        Ok(self.induced(self.vertices() & !(1 << v)))
    }

    /// Relabels vertex `v` to `perm[v]`; `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order, "permutation length must equal the graph order");
        let mut g = Graph { order: self.order, rows: [0; MAX_ORDER], edges: self.edges };
        for u in 0..self.order {
            let mut r = self.rows[u];
            let mut row = 0u32;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                row |= 1 << perm[v];
            }
            g.rows[perm[u]] = row;
        }
        g
    }

    /// Appends a new vertex adjacent to every vertex of `nbrs`; returns its index.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize, GraphError> {
        if self.order == MAX_ORDER {
            return Err(GraphError::Capacity { order: self.order + 1, max: MAX_ORDER });
        }
        if nbrs & !self.vertices() != 0 {
            let vertex = (nbrs & !self.vertices()).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, order: self.order });
        }
        let v = self.order;
        self.order += 1;
        self.rows[v] = nbrs;
        for u in members(nbrs) {
            self.rows[u] |= 1 << v;
        }
        self.edges += nbrs.count_ones() as usize;
        Ok(v)
    }

    /// Replaces edge `uv` by a path `u - w - v` through a new vertex `w`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            return Err(GraphError::InvalidFamily(format!("{u}{v} is not an edge")));
        }
        let mut g = *self;
        g.remove_edge(u, v)?;
        g.add_vertex((1 << u) | (1 << v))?;
        Ok(g)
    }

    /// Disjoint union, `other`'s vertices shifted past this graph's.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(GraphError::Capacity { order, max: MAX_ORDER });
        }
        let mut g = *self;
        g.order = order;
        for v in 0..other.order {
            g.rows[self.order + v] = other.rows[v] << self.order;
        }
        g.edges += other.edges;
        Ok(g)
    }

    /// Glues `other` onto this graph by identifying `other`'s vertex `at_other`
    /// with this graph's vertex `at_self`. The glued vertex keeps `at_self`'s
    /// index; `other`'s remaining vertices follow in ascending order.
    pub fn glue_at_vertex(&self, at_self: usize, other: &Graph, at_other: usize) -> Result<Graph, GraphError> {
        self.check_vertex(at_self)?;
        other.check_vertex(at_other)?;
        let order = self.order + other.order - 1;
        if order > MAX_ORDER {
            return Err(GraphError::Capacity { order, max: MAX_ORDER });
        }
        let mut map = vec![0usize; other.order];
        let mut next = self.order;
        for (v, slot) in map.iter_mut().enumerate() {
            if v == at_other {
                *slot = at_self;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let mut g = *self;
        g.order = order;
        for (u, v) in other.edges() {
            g.add_edge(map[u], map[v])?;
        }
        Ok(g)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        if source >= self.order {
            return dist;
        }
        dist[source] = Some(0);
        let mut frontier: VertexSet = 1 << source;
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next = 0;
            for u in members(frontier) {
                next |= self.rows[u];
            }
            next &= !seen;
            seen |= next;
            for v in members(next) {
                dist[v] = Some(d);
            }
            frontier = next;
        }
        dist
    }

    /// Vertex set of the connected component containing `v` within `within`.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut comp: VertexSet = 1 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in members(frontier) {
                next |= self.rows[u];
            }
            next &= within & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }

    /// Connected components as vertex masks, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            let comp = self.component_of(v, rest);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Whether the graph is connected; the empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.component_of(0, self.vertices()) == self.vertices()
    }

    /// Whether the subgraph induced by `set` is connected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        set == 0 || self.component_of(set.trailing_zeros() as usize, set) == set
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", encode_graph6(self), self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

impl std::str::FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_graph6(s)
    }
}

#[inline]
pub(crate) fn mask_of(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Members of a vertex mask in ascending order.
pub fn members(mut set: VertexSet) -> Vec<usize> {
    let mut out = Vec::with_capacity(set.count_ones() as usize);
    while set != 0 {
        out.push(set.trailing_zeros() as usize);
        set &= set - 1;
    }
    out
}

/// Vertex mask from a slice of vertex indices.
pub fn vertex_set(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_keeps_invariants() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        for u in 0..4 {
            assert!(!g.has_edge(u, u));
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(Graph::empty(33), Err(GraphError::Capacity { .. })));
    }

    #[test]
    fn induced_subgraphs() {
        let k5 = Graph::complete(5).unwrap();
        let k3 = k5.induced_subgraph(0b10101).unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());

        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p3 = c5.induced_subgraph(0b00111).unwrap();
        assert_eq!(p3, Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap());

        // K_{2,3} with sides {0,1} and {2,3,4}: dropping hub 1 leaves a star.
        let k23 = FamilySpec::CompleteBipartite(2, 3).generate().unwrap();
        let star = k23.induced_subgraph(0b11101).unwrap();
        assert_eq!(star.edge_count(), 3);
        assert_eq!(star.degrees(), vec![3, 1, 1, 1]);

        assert!(matches!(c5.induced_subgraph(1 << 7), Err(GraphError::VertexOutOfRange { vertex: 7, .. })));
    }

    #[test]
    fn gluing_and_subdivision() {
        let k3 = Graph::complete(3).unwrap();
        let bowtie = k3.glue_at_vertex(0, &k3, 2).unwrap();
        assert_eq!(bowtie.order(), 5);
        assert_eq!(bowtie.edge_count(), 6);
        assert_eq!(bowtie.degree(0), 4);

        let sub = k3.subdivide_edge(0, 1).unwrap();
        assert_eq!(sub.order(), 4);
        assert_eq!(sub.edge_count(), 4);
        assert!(!sub.has_edge(0, 1));
    }

    #[test]
    fn components_and_distances() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![0b00111, 0b11000]);
        assert!(!g.is_connected());
        assert_eq!(g.distances_from(0), vec![Some(0), Some(1), Some(2), None, None]);
        assert!(Graph::empty(0).unwrap().is_connected());
    }
}
