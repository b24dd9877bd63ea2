use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};
use sumchoice_core::choosability::{Budget, SearchOptions};
use sumchoice_core::graph::canonical_form;
use sumchoice_core::sumchoice::{Engine, EngineOptions, MemoStore, SumChoiceError, Transcript};

use crate::report::{CaseReport, Outcome};
use crate::source::GraphSource;
use crate::HarnessError;

/// Per-case budget used when neither the case nor the caller sets one.
pub const DEFAULT_CASE_BUDGET: Duration = Duration::from_secs(600);

/// Where an expected value comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "source", rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the published results; the string names the statement.
    Published(String),
    /// Established independently here, by an oracle or a second route.
    Derived(String),
    /// Immediate from the definitions.
    Trivial,
}

impl Provenance {
    pub fn published(s: &str) -> Self {
        Provenance::Published(s.to_string())
    }

    pub fn derived(s: &str) -> Self {
        Provenance::Derived(s.to_string())
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Published(s) => write!(f, "published: {s}"),
            Provenance::Derived(s) => write!(f, "derived: {s}"),
            Provenance::Trivial => f.write_str("trivial"),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chi_sc: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub greedy_bound: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sc_greedy: Option<bool>,
}

impl Expected {
    pub fn value(chi_sc: u32, greedy_bound: u32) -> Self {
        Expected { chi_sc: Some(chi_sc), greedy_bound: Some(greedy_bound), sc_greedy: Some(chi_sc == greedy_bound) }
    }

    pub fn is_empty(&self) -> bool {
        self.chi_sc.is_none() && self.greedy_bound.is_none() && self.sc_greedy.is_none()
    }
}

pub type Procedure = Box<dyn Fn(&CaseContext) -> Result<Observation, HarnessError> + Send + Sync>;

pub enum Check {
    /// Compute the sum choice number of one graph and compare.
    Value { source: GraphSource, expected: Expected },
    /// Anything else: multisets, classifications, property sweeps.
    Procedure(Procedure),
}

pub struct VerificationCase {
    pub id: String,
    pub description: String,
    pub provenance: Provenance,
    pub budget: Option<Duration>,
    /// Non-blocking cases are reported but never decide the exit code.
    pub blocking: bool,
    pub check: Check,
}

impl VerificationCase {
    pub fn value(id: &str, description: &str, source: GraphSource, expected: Expected, provenance: Provenance) -> Self {
        VerificationCase {
            id: id.to_string(),
            description: description.to_string(),
            provenance,
            budget: None,
            blocking: true,
            check: Check::Value { source, expected },
        }
    }

    pub fn procedure(
        id: &str,
        description: &str,
        provenance: Provenance,
        run: impl Fn(&CaseContext) -> Result<Observation, HarnessError> + Send + Sync + 'static,
    ) -> Self {
        VerificationCase {
            id: id.to_string(),
            description: description.to_string(),
            provenance,
            budget: None,
            blocking: true,
            check: Check::Procedure(Box::new(run)),
        }
    }

    pub fn non_blocking(mut self) -> Self {
        self.blocking = false;
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> Self {
        self.budget = Some(budget);
        self
    }
}

/// What a case sees while it runs.
pub struct CaseContext<'m> {
    pub engine: Engine<'m>,
    pub budget: Budget,
    pub seed: u64,
}

impl CaseContext<'_> {
    pub fn search_options(&self) -> SearchOptions {
        SearchOptions::with_budget(self.budget.clone())
    }
}

#[derive(Debug, Clone)]
pub struct Observation {
    pub passed: bool,
    pub expected: Value,
    pub computed: Value,
    pub stats: Transcript,
}

impl Observation {
    pub fn new(passed: bool, expected: impl Serialize, computed: impl Serialize) -> Self {
        Observation { passed, expected: to_value(expected), computed: to_value(computed), stats: Transcript::default() }
    }

    /// Passes iff both sides serialize to the same JSON.
    pub fn compare(expected: impl Serialize, computed: impl Serialize) -> Self {
        let (e, c) = (to_value(expected), to_value(computed));
        Observation { passed: e == c, expected: e, computed: c, stats: Transcript::default() }
    }

    pub fn with_stats(mut self, stats: Transcript) -> Self {
        self.stats = stats;
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

/// Settings shared by every case of a run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Overrides every per-case budget.
    pub budget: Option<Duration>,
    /// Cases evaluated concurrently.
    pub jobs: usize,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { budget: None, jobs: 1, seed: crate::DEFAULT_SEED }
    }
}

pub fn run_case(case: &VerificationCase, memo: &MemoStore, cfg: &RunConfig) -> CaseReport {
    let limit = cfg.budget.or(case.budget).unwrap_or(DEFAULT_CASE_BUDGET);
    let budget = Budget::timeout(limit);
    let engine = Engine::with_options(memo, EngineOptions { budget: budget.clone(), ..Default::default() });
    let ctx = CaseContext { engine, budget, seed: cfg.seed };
    let start = Instant::now();
    let result = match &case.check {
        Check::Value { source, expected } => value_check(&ctx, source, expected),
        Check::Procedure(run) => run(&ctx),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let research = matches!(&case.check, Check::Value { expected, .. } if expected.is_empty());
    let (outcome, expected, computed, stats) = match result {
        Ok(obs) => {
            let outcome = if research {
                Outcome::Reported
            } else if obs.passed {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            (outcome, obs.expected, obs.computed, obs.stats)
        }
        Err(HarnessError::SumChoice(SumChoiceError::Unknown { lower, upper })) => {
            (Outcome::Unknown { lower: Some(lower), upper: Some(upper) }, expected_of(case), Value::Null, Transcript::default())
        }
        Err(HarnessError::Budget) => (Outcome::Unknown { lower: None, upper: None }, expected_of(case), Value::Null, Transcript::default()),
        Err(e) => (Outcome::Error { message: e.to_string() }, expected_of(case), Value::Null, Transcript::default()),
    };
    CaseReport {
        id: case.id.clone(),
        description: case.description.clone(),
        provenance: case.provenance.clone(),
        blocking: case.blocking,
        outcome,
        expected,
        computed,
        elapsed_ms,
        stats,
    }
}

fn expected_of(case: &VerificationCase) -> Value {
    match &case.check {
        Check::Value { expected, .. } => to_value(expected),
        Check::Procedure(_) => Value::Null,
    }
}

fn value_check(ctx: &CaseContext, source: &GraphSource, expected: &Expected) -> Result<Observation, HarnessError> {
    let g = source.graph()?;
    let r = ctx.engine.chi_sc(&g)?;
    let passed = expected.chi_sc.map_or(true, |v| v == r.chi_sc)
        && expected.greedy_bound.map_or(true, |v| v == r.greedy_bound)
        && expected.sc_greedy.map_or(true, |v| v == r.sc_greedy);
    let computed = json!({
        "graph": source.to_string(),
        "canonical_graph6": canonical_form(&g)?.0,
        "chi_sc": r.chi_sc,
        "greedy_bound": r.greedy_bound,
        "sc_greedy": r.sc_greedy,
        "optimal_f": r.optimal_f,
    });
    Ok(Observation::new(passed, expected, computed).with_stats(r.transcript))
}
