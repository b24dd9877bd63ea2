use super::{Graph, GraphError, MAX_ORDER};

/// Cartesian product; vertex `(u, u')` gets index `u * |V(H)| + u'`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let (n, m) = (g.order(), h.order());
    let order = n * m;
    if order > MAX_ORDER {
        return Err(GraphError::Capacity { order, max: MAX_ORDER });
    }
    let mut p = Graph::empty(order)?;
    for u in 0..n {
        for (a, b) in h.edges() {
            p.add_edge(u * m + a, u * m + b)?;
        }
    }
    for (u, v) in g.edges() {
        for a in 0..m {
            p.add_edge(u * m + a, v * m + a)?;
        }
    }
    Ok(p)
}

/// `G^k`: `uv` is an edge iff `1 <= dist(u, v) <= k`.
pub fn graph_power(g: &Graph, k: usize) -> Graph {
    let n = g.order();
    let mut rows = vec![0u32; n];
    for (u, row) in rows.iter_mut().enumerate() {
        for (v, d) in g.distances_from(u).into_iter().enumerate() {
            if matches!(d, Some(d) if d >= 1 && d <= k) {
                *row |= 1 << v;
            }
        }
    }
    Graph::from_rows(n, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, FamilySpec};

    #[test]
    fn products() {
        let p2 = FamilySpec::Path(2).generate().unwrap();
        let p3 = FamilySpec::Path(3).generate().unwrap();
        let k3 = Graph::complete(3).unwrap();
        let c4 = FamilySpec::Cycle(4).generate().unwrap();

        let sq = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(canonical_form(&sq).unwrap(), canonical_form(&c4).unwrap());

        let prism = cartesian_product(&p2, &k3).unwrap();
        assert_eq!((prism.order(), prism.edge_count()), (6, 9));
        assert!(prism.degrees().iter().all(|&d| d == 3));
        // layer u occupies indices 3u..3u+3
        assert!(prism.has_edge(0, 1) && prism.has_edge(1, 2) && prism.has_edge(0, 2));
        assert!(prism.has_edge(0, 3) && prism.has_edge(1, 4) && prism.has_edge(2, 5));

        let ladder = cartesian_product(&p2, &p3).unwrap();
        assert_eq!((ladder.order(), ladder.edge_count()), (6, 7));

        let big = Graph::empty(6).unwrap();
        assert!(matches!(cartesian_product(&big, &big), Err(GraphError::Capacity { order: 36, .. })));
    }

    #[test]
    fn powers() {
        let p5 = FamilySpec::Path(5).generate().unwrap();
        let sq = graph_power(&p5, 2);
        assert_eq!((sq.order(), sq.edge_count()), (5, 7));
        let bw4 = FamilySpec::BrokenWheel(4).generate().unwrap();
        assert_eq!(canonical_form(&sq).unwrap(), canonical_form(&bw4).unwrap());

        let c5 = FamilySpec::Cycle(5).generate().unwrap();
        assert_eq!(graph_power(&c5, 2), Graph::complete(5).unwrap());
        assert_eq!(graph_power(&c5, 1), c5);

        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap();
        for k in 1..5 {
            assert_eq!(graph_power(&graph_power(&g, 1), k), graph_power(&g, k));
        }
    }
}
