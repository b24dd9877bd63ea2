//! Named collections of verification cases.

mod properties;
mod structure;
mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use sumchoice_core::graph::{blocks, canonical_form, connected_graphs, Graph};
use sumchoice_core::sumchoice::MemoStore;

use crate::case::{run_case, RunConfig, VerificationCase};
use crate::report::RunReport;
use crate::HarnessError;

pub use properties::{brute_colorable, for_each_coloring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    FourVertex,
    FiveVertex,
    Table1Small,
    EdgesAndSubdivisions,
    CycleStructures,
    LemmaProperties,
    MinNscgScan,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::FourVertex,
        Suite::FiveVertex,
        Suite::Table1Small,
        Suite::EdgesAndSubdivisions,
        Suite::CycleStructures,
        Suite::LemmaProperties,
        Suite::MinNscgScan,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FourVertex => "four-vertex",
            Suite::FiveVertex => "five-vertex",
            Suite::Table1Small => "table1-small",
            Suite::EdgesAndSubdivisions => "edges-and-subdivisions",
            Suite::CycleStructures => "cycle-structures",
            Suite::LemmaProperties => "lemma-properties",
            Suite::MinNscgScan => "min-nscg-scan",
        }
    }

    pub fn cases(self) -> Vec<VerificationCase> {
        match self {
            Suite::FourVertex => tables::four_vertex(),
            Suite::FiveVertex => tables::five_vertex(),
            Suite::Table1Small => tables::small_families(),
            Suite::EdgesAndSubdivisions => structure::edges_and_subdivisions(),
            Suite::CycleStructures => structure::cycle_structures(),
            Suite::LemmaProperties => properties::lemma_properties(),
            Suite::MinNscgScan => structure::min_nscg_scan(),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|x| x.name()).collect();
            HarnessError::Input(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

pub fn run_suite(suite: Suite, memo: &MemoStore, cfg: &RunConfig) -> RunReport {
    run_cases(suite.name(), &suite.cases(), memo, cfg)
}

/// Runs `cases` on up to `cfg.jobs` threads; the report keeps case order.
pub fn run_cases(name: &str, cases: &[VerificationCase], memo: &MemoStore, cfg: &RunConfig) -> RunReport {
    let start = Instant::now();
    let reports = if cfg.jobs <= 1 {
        cases.iter().map(|c| run_case(c, memo, cfg)).collect()
    } else {
        match rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build() {
            Ok(pool) => pool.install(|| cases.par_iter().map(|c| run_case(c, memo, cfg)).collect()),
            Err(_) => cases.iter().map(|c| run_case(c, memo, cfg)).collect(),
        }
    };
    RunReport::new(name, reports, start.elapsed().as_secs_f64() * 1e3)
}

pub(crate) fn key(g: &Graph) -> Result<String, HarnessError> {
    Ok(canonical_form(g)?.0)
}

/// Connected graphs on `n >= 3` vertices without a cut vertex.
pub(crate) fn two_connected(n: usize) -> Result<Vec<Graph>, HarnessError> {
    Ok(connected_graphs(n)?.into_iter().filter(|g| blocks(g).blocks.len() == 1).collect())
}

pub(crate) fn family(spec: &str) -> Result<Graph, HarnessError> {
    Ok(spec.parse::<sumchoice_core::graph::FamilySpec>()?.generate()?)
}
