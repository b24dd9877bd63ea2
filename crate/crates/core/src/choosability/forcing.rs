use serde::{Deserialize, Serialize};

use super::search::{self, Problem, SearchOutcome};
use super::{check_len, ChoosabilityError, ListAssignment, Progress, SearchOptions, SizeFunction, MAX_COLORS};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum ForcingOutcome {
    /// Every proper coloring from `assignment` colors `v` from `S`.
    Found { assignment: ListAssignment },
    /// No `f`-assignment forces `S` at `v`.
    NotFound,
    Unknown { progress: Progress },
}

impl ForcingOutcome {
    pub fn assignment(&self) -> Option<&ListAssignment> {
        match self {
            ForcingOutcome::Found { assignment } => Some(assignment),
            _ => None,
        }
    }
}

/// Searches for an `f`-assignment under which every proper coloring gives
/// `v` a color from `forced`.
///
/// The colors of `forced` are kept distinguished from all others; apart
/// from that the search covers every assignment up to renaming.
pub fn find_forcing_assignment(
    g: &Graph,
    f: &SizeFunction,
    v: usize,
    forced: &[u32],
    opts: &SearchOptions,
) -> Result<ForcingOutcome, ChoosabilityError> {
    check_len(g, f)?;
    if v >= g.order() {
        return Err(ChoosabilityError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let mut s: Vec<u32> = forced.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() {
        return Err(ChoosabilityError::EmptyForcingSet);
    }
    if let Some(&c) = s.iter().find(|&&c| c >= MAX_COLORS) {
        return Err(ChoosabilityError::ColorRange(c));
    }
    let problem = Problem::for_forcing(g, f, v, s.len() as u32);
    let lists = match search::run(&problem, opts, 0)? {
        SearchOutcome::AllColorable { .. } => return Ok(ForcingOutcome::NotFound),
        SearchOutcome::Unknown(progress) => return Ok(ForcingOutcome::Unknown { progress }),
        SearchOutcome::Witness(lists) => lists,
    };
    // internal ids 0..|S| stand for S, the rest for the smallest other colors
    let mut map: Vec<u32> = s.clone();
    map.extend((0..MAX_COLORS).filter(|c| !s.contains(c)));
    let assignment = ListAssignment(lists).recolored(&map)?;
    Ok(ForcingOutcome::Found { assignment })
}
