//! Verification suites and command-line plumbing for the `sumchoice` tool.
//!
//! A suite is a list of [`VerificationCase`]s, each pairing a computation
//! with an expected value and the source of that value. Running a suite
//! yields a [`RunReport`] whose exit code follows [`report::exit`].

pub mod case;
pub mod report;
pub mod source;
pub mod suites;

use thiserror::Error;

pub use case::{run_case, CaseContext, Check, Expected, Observation, Provenance, RunConfig, VerificationCase};
pub use report::{CaseReport, Outcome, RunReport, Summary};
pub use source::GraphSource;
pub use suites::{run_cases, run_suite, Suite};

/// Seed for the randomized property cases unless `--seed` says otherwise.
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Graph(#[from] sumchoice_core::graph::GraphError),
    #[error(transparent)]
    Choosability(#[from] sumchoice_core::choosability::ChoosabilityError),
    #[error(transparent)]
    SumChoice(#[from] sumchoice_core::sumchoice::SumChoiceError),
    #[error("budget exhausted")]
    Budget,
}

impl HarnessError {
    /// Process exit code for an error that ends a command.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::SumChoice(sumchoice_core::sumchoice::SumChoiceError::Unknown { .. }) | HarnessError::Budget => report::exit::UNKNOWN,
            _ => report::exit::INPUT,
        }
    }
}
