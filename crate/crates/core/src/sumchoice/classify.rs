use serde::{Deserialize, Serialize};

use super::{Engine, SumChoiceError};
use crate::graph::{connected_graphs, encode_graph6, Graph};

/// A connected graph that is not sc-greedy although all of its proper
/// induced subgraphs are.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalNonGreedy {
    #[serde(skip)]
    pub graph: Option<Graph>,
    pub graph6: String,
    pub order: usize,
    pub edges: usize,
    pub chi_sc: u32,
    pub greedy_bound: u32,
    pub gap_one: bool,
    pub min_degree: usize,
}

impl Engine<'_> {
    /// Every minimally not sc-greedy connected graph on at most `n`
    /// vertices, by order and then canonical form.
    ///
    /// Checking the vertex-deleted subgraphs suffices: a graph with a
    /// non-sc-greedy induced subgraph is itself not sc-greedy.
    pub fn classify_minimally_not_sc_greedy(&self, n: usize) -> Result<Vec<MinimalNonGreedy>, SumChoiceError> {
        let mut out = Vec::new();
        for k in 1..=n {
            for g in connected_graphs(k)? {
                if self.is_sc_greedy(&g)? {
                    continue;
                }
                let mut minimal = true;
                for v in 0..k {
                    if !self.is_sc_greedy(&g.remove_vertex(v)?)? {
                        minimal = false;
                        break;
                    }
                }
                if minimal {
                    let r = self.chi_sc(&g)?;
                    out.push(MinimalNonGreedy {
                        graph6: encode_graph6(&g),
                        graph: Some(g),
                        order: k,
                        edges: g.edge_count(),
                        chi_sc: r.chi_sc,
                        greedy_bound: r.greedy_bound,
                        gap_one: r.chi_sc + 1 == r.greedy_bound,
                        min_degree: g.min_degree().unwrap_or(0),
                    });
                }
            }
        }
        Ok(out)
    }
}
