//! Acceptance criteria, one line each, at zero tolerance.
//!
//! Runs every suite once on a shared memo and groups the case reports by
//! criterion. Non-blocking cases are printed as flagged but never fail a
//! criterion. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use sumchoice_cli::{run_suite, CaseReport, Outcome, RunConfig, RunReport, Suite};
use sumchoice_core::sumchoice::MemoStore;

struct Criterion {
    number: u32,
    title: &'static str,
    suite: Suite,
    /// Case ids to include; every case of the suite when empty.
    only: &'static [&'static str],
    exclude: &'static [&'static str],
}

const CRITERIA: &[Criterion] = &[
    Criterion { number: 1, title: "every connected graph on at most 4 vertices is sc-greedy", suite: Suite::FourVertex, only: &[], exclude: &[] },
    Criterion { number: 2, title: "five-vertex values and named graphs", suite: Suite::FiveVertex, only: &[], exclude: &[] },
    Criterion {
        number: 3,
        title: "the 7-edge graph with value 11 and W_4 with value 12",
        suite: Suite::FiveVertex,
        only: &["five-vertex/seven-edge-gap-one", "five-vertex/w4"],
        exclude: &[],
    },
    Criterion { number: 4, title: "complete bipartite, product and theta families at small n", suite: Suite::Table1Small, only: &[], exclude: &[] },
    Criterion { number: 5, title: "paths and trees of cycles reach the greedy bound", suite: Suite::CycleStructures, only: &[], exclude: &[] },
    Criterion { number: 6, title: "edge and subdivision examples", suite: Suite::EdgesAndSubdivisions, only: &[], exclude: &[] },
    Criterion { number: 7, title: "minimally not sc-greedy graphs on at most 5 vertices", suite: Suite::MinNscgScan, only: &[], exclude: &[] },
    Criterion { number: 8, title: "seeded property sweeps", suite: Suite::LemmaProperties, only: &[], exclude: &["lemma/forcing-c4"] },
    Criterion { number: 9, title: "forcing single colors on C_4", suite: Suite::LemmaProperties, only: &["lemma/forcing-c4"], exclude: &[] },
];

fn selected<'r>(c: &Criterion, report: &'r RunReport) -> Vec<&'r CaseReport> {
    report
        .cases
        .iter()
        .filter(|r| (c.only.is_empty() || c.only.contains(&r.id.as_str())) && !c.exclude.contains(&r.id.as_str()))
        .collect()
}

fn main() -> ExitCode {
    // `cargo test -- <filter>` passes arguments through; a filter that does
    // not name this target skips it.
    if std::env::args().skip(1).any(|a| !a.starts_with('-') && !"acceptance".contains(a.as_str())) {
        return ExitCode::SUCCESS;
    }
    let memo = MemoStore::in_memory();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let cfg = RunConfig { jobs, ..RunConfig::default() };

    let mut reports: Vec<(Suite, RunReport)> = Vec::new();
    for suite in Suite::ALL {
        let start = Instant::now();
        let report = run_suite(suite, &memo, &cfg);
        eprintln!("ran {suite} in {:.1} s", start.elapsed().as_secs_f64());
        reports.push((suite, report));
    }

    let mut failed = 0;
    for c in CRITERIA {
        let report = &reports.iter().find(|(s, _)| *s == c.suite).expect("every suite ran").1;
        let cases = selected(c, report);
        let blocking: Vec<_> = cases.iter().filter(|r| r.blocking).collect();
        let passed = blocking.iter().filter(|r| r.outcome == Outcome::Pass).count();
        let ok = !blocking.is_empty() && passed == blocking.len();
        let secs: f64 = cases.iter().map(|r| r.elapsed_ms).sum::<f64>() / 1e3;
        let mark = if ok { "PASS" } else { "FAIL" };
        println!("criterion {}: {mark}  {} ({passed}/{} cases, {secs:.1} s)", c.number, c.title, blocking.len());
        for r in cases.iter().filter(|r| r.outcome != Outcome::Pass) {
            let kind = if r.blocking { "failing" } else { "flagged" };
            println!("    {kind} {} {:?}", r.id, r.outcome);
        }
        for r in cases.iter().filter(|r| !r.blocking && r.outcome == Outcome::Pass) {
            println!("    extended {} pass", r.id);
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
