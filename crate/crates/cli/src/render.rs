//! Text and JSON renderings of games, traces, solution sets and reports.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use threehat_core::engine::{Action, GameTrace, Transcript, TurnEvent};
use threehat_core::verify::CheckReport;
use threehat_core::{Configuration, Outcome, Seat, SolutionSet, TranscriptError};

/// Structured form of a simulated game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimulationJson {
    pub input: Configuration,
    pub events: Vec<TurnEvent>,
    pub declarer: Seat,
    pub turn: u64,
    pub value: u64,
}

impl SimulationJson {
    pub fn new(input: Configuration, transcript: &Transcript) -> Self {
        let Outcome {
            turn,
            declarer,
            value,
        } = transcript.outcome();
        SimulationJson {
            input,
            events: transcript.events().to_vec(),
            declarer,
            turn,
            value,
        }
    }

    pub fn transcript(&self) -> Result<Transcript, TranscriptError> {
        Transcript::try_from(self.events.clone())
    }
}

fn summary(outcome: Outcome) -> String {
    format!(
        "{} declares {} on turn {}",
        outcome.declarer, outcome.value, outcome.turn
    )
}

pub fn transcript_text(transcript: &Transcript) -> String {
    let mut out = String::new();
    for event in transcript.events() {
        writeln!(out, "{event}").unwrap();
    }
    writeln!(out, "{}", summary(transcript.outcome())).unwrap();
    out
}

pub fn configs_text(configs: &[Configuration]) -> String {
    configs
        .iter()
        .map(Configuration::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

/// One row per turn: acting player (starred when holding the cue of the
/// current head), action, and that player's remaining chain.
pub fn trace_text(trace: &GameTrace) -> String {
    let mut out = String::new();
    for row in &trace.rows {
        let player = format!("{}{}", row.seat, if row.held_cue { "*" } else { "" });
        let action = match row.event.action {
            Action::Pass => "Pass".to_string(),
            Action::Declare { value } => format!("declares {value}"),
        };
        writeln!(
            out,
            "{:>3}  Player {:<2}  {:<12}  {}",
            row.event.turn,
            player,
            action,
            configs_text(&row.remaining)
        )
        .unwrap();
    }
    writeln!(out, "{}", summary(trace.outcome())).unwrap();
    out
}

pub fn solutions_text(set: &SolutionSet) -> String {
    let mut out = String::new();
    for s in set.iter() {
        let [a, b, c] = s.entries();
        writeln!(out, "{a} {b} {c}").unwrap();
    }
    out
}

pub fn reports_text(max: u64, reports: &[CheckReport]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "verifying all configurations with largest entry <= {max}"
    )
    .unwrap();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        write!(
            out,
            "{status}  {:<22} {:>8} checked, {} violations",
            r.name, r.checked, r.violations
        )
        .unwrap();
        if let Some(first) = &r.first_violation {
            write!(out, " (first: {first})").unwrap();
        }
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize)]
pub struct VerifyJson<'a> {
    pub max: u64,
    pub passed: bool,
    pub checks: &'a [CheckReport],
}
