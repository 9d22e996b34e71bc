//! Recovering the hats from an observed game.
//!
//! The declarer always holds the sum, so a query with a declared value `v`
//! only has to try the `v - 1` ordered splits of `v` over the two silent
//! seats. Without a value every `v` up to `max_sum` is tried.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::configuration::{Configuration, Seat};
use crate::engine;
use crate::error::QueryError;
use crate::pattern::TranscriptPattern;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PuzzleQuery {
    pub declarer: Seat,
    pub turns: u64,
    pub value: Option<u64>,
    /// Largest declared value to try when `value` is absent. Ignored when a
    /// value is given.
    pub max_sum: Option<u64>,
}

impl PuzzleQuery {
    pub fn with_value(declarer: Seat, turns: u64, value: u64) -> Self {
        PuzzleQuery {
            declarer,
            turns,
            value: Some(value),
            max_sum: None,
        }
    }

    fn validate(&self) -> Result<(), QueryError> {
        if self.turns == 0 {
            return Err(QueryError::ZeroTurns);
        }
        match (self.value, self.max_sum) {
            (Some(v), _) if v < 2 => Err(QueryError::ValueTooSmall(v)),
            (None, None) => Err(QueryError::MissingBound),
            _ => Ok(()),
        }
    }
}

/// Configurations reproducing a query, sorted lexicographically.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SolutionSet {
    pub configurations: Vec<Configuration>,
}

impl SolutionSet {
    pub fn is_empty(&self) -> bool {
        self.configurations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.configurations.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Configuration> {
        self.configurations.iter()
    }
}

/// Candidates in which `declarer` holds `value`, one per ordered split.
fn splits(declarer: Seat, value: u64) -> impl Iterator<Item = Configuration> {
    let [first, second] = declarer.others();
    (1..value).map(move |x| {
        let mut entries = [0; 3];
        entries[declarer.position()] = value;
        entries[first.position()] = x;
        entries[second.position()] = value - x;
        Configuration::try_from(entries).expect("a split of the sum is always valid")
    })
}

pub fn solve(query: &PuzzleQuery) -> Result<SolutionSet, QueryError> {
    query.validate()?;
    if Seat::of_turn(query.turns) != query.declarer {
        return Ok(SolutionSet::default());
    }
    let matches = |s: &Configuration| {
        let outcome = engine::simulate(s).outcome();
        outcome.turn == query.turns && outcome.declarer == query.declarer
    };
    let mut configurations: Vec<Configuration> = match query.value {
        Some(v) => splits(query.declarer, v).filter(matches).collect(),
        None => {
            let max_sum = query.max_sum.expect("validated");
            (2..=max_sum)
                .into_par_iter()
                .flat_map_iter(|v| splits(query.declarer, v).filter(matches))
                .collect()
        }
    };
    configurations.sort_unstable();
    configurations.dedup();
    Ok(SolutionSet { configurations })
}

/// Solves the query described by a dialogue pattern. `max_sum` bounds the
/// search when the pattern's declaration carries no value.
pub fn solve_transcript(
    pattern: &TranscriptPattern,
    max_sum: Option<u64>,
) -> Result<SolutionSet, QueryError> {
    solve(&PuzzleQuery {
        declarer: pattern.declarer(),
        turns: pattern.events,
        value: pattern.value,
        max_sum,
    })
}
