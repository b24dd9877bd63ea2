use std::fmt;

use serde::{Deserialize, Serialize};
use sumchoice_core::graph::{parse_graph6, FamilySpec, Graph};

use crate::HarnessError;

/// Where a graph comes from: literal graph6 text or a family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSource {
    Graph6(String),
    Family(String),
}

impl GraphSource {
    pub fn family(spec: &str) -> Self {
        GraphSource::Family(spec.to_string())
    }

    pub fn of(g: &Graph) -> Self {
        GraphSource::Graph6(sumchoice_core::graph::encode_graph6(g))
    }

    pub fn graph(&self) -> Result<Graph, HarnessError> {
        match self {
            GraphSource::Graph6(text) => Ok(parse_graph6(text.trim())?),
            GraphSource::Family(text) => Ok(text.parse::<FamilySpec>()?.generate()?),
        }
    }
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Graph6(t) => write!(f, "graph6:{t}"),
            GraphSource::Family(t) => f.write_str(t),
        }
    }
}
