//! Outcome of a game computed without playing it.
//!
//! The sum holder of a configuration cannot speak until the alternative
//! where his number is the difference has been ruled out, and that happens
//! exactly when the game for the reduced configuration would have ended.
//! So the declaration falls on the first turn of the sum holder strictly
//! after the reduced game's declaration turn; a base configuration ends on
//! the sum holder's first turn.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configuration::{enumerate_configurations, Configuration, Seat};
use crate::engine;

/// How a game ends: who speaks, on which global turn, and the number named.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Outcome {
    pub turn: u64,
    pub declarer: Seat,
    pub value: u64,
}

/// Walks the chain of `s` base-first, advancing to the next turn of each
/// configuration's sum holder.
pub fn end_turn(s: &Configuration) -> Outcome {
    let chain = s.chain();
    let mut configs = chain.iter();
    let base = configs.next().expect("chains are never empty");
    let mut turn = base.sum_seat().index();
    for config in configs {
        turn = config.sum_seat().next_turn_after(turn);
    }
    Outcome {
        turn,
        declarer: s.sum_seat(),
        value: s.sum_value(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub configuration: Configuration,
    pub simulated: Outcome,
    pub recurrence: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub bound: u64,
    pub configurations_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl EquivalenceReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the simulated game against [`end_turn`] on every configuration
/// whose largest entry is at most `bound`. Mismatches come back in
/// lexicographic order of the configuration.
pub fn check_equivalence(bound: u64) -> EquivalenceReport {
    let configs = enumerate_configurations(bound);
    let mismatches = configs
        .par_iter()
        .filter_map(|s| {
            let simulated = engine::simulate(s).outcome();
            let recurrence = end_turn(s);
            (simulated != recurrence).then_some(Mismatch {
                configuration: *s,
                simulated,
                recurrence,
            })
        })
        .collect();
    EquivalenceReport {
        bound,
        configurations_checked: configs.len(),
        mismatches,
    }
}
