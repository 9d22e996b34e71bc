use thiserror::Error;

use crate::configuration::Seat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("entries must be positive (seat {seat} holds 0)")]
    NonPositive { seat: Seat },
    #[error("no entry of {entries:?} is the sum of the other two")]
    NoSumEntry { entries: [u64; 3] },
    #[error("more than one entry of {entries:?} is the sum of the other two")]
    MultipleSumEntries { entries: [u64; 3] },
    #[error("entries of {entries:?} are too large: pairwise sums overflow u64")]
    Overflow { entries: [u64; 3] },
    #[error("unknown seat {0:?}, expected A, B or C")]
    UnknownSeat(String),
    #[error("configuration chain is empty")]
    EmptyChain,
    #[error("configuration chain is broken at index {index}")]
    BrokenChain { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranscriptError {
    #[error("transcript has no events")]
    Empty,
    #[error("event {index} has turn {found}, expected {expected}")]
    TurnOutOfSequence {
        index: usize,
        expected: u64,
        found: u64,
    },
    #[error("event at turn {turn} is attributed to seat {found}, expected {expected}")]
    WrongSeat {
        turn: u64,
        expected: Seat,
        found: Seat,
    },
    #[error("transcript must end with a declaration")]
    NoDeclaration,
    #[error("declaration at turn {turn} is not the last event")]
    DeclarationNotLast { turn: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("transcript pattern is empty")]
    Empty,
    #[error("event {index} is empty")]
    EmptyEvent { index: usize },
    #[error("event {index} ({text:?}) is not P, D or D=<integer>")]
    BadEvent { index: usize, text: String },
    #[error("event {index} has a non-integer value {text:?}")]
    BadValue { index: usize, text: String },
    #[error("declared value {value} is below 2")]
    ValueTooSmall { value: u64 },
    #[error("pattern contains more than one declaration")]
    MultipleDeclarations,
    #[error("declaration must be the last event")]
    DeclarationNotLast,
    #[error("pattern has no declaration")]
    NoDeclaration,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QueryError {
    #[error("a search bound (max_sum) is required when no value is given")]
    MissingBound,
    #[error("turn count must be at least 1")]
    ZeroTurns,
    #[error("declared value {0} is below 2")]
    ValueTooSmall(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AuxError {
    #[error("two hat numbers must be consecutive positive integers, got {0} and {1}")]
    NotConsecutive(u64, u64),
    #[error("color hat game needs at least one red hat")]
    NoRedHat,
    #[error("unknown hat color {0:?}, expected R or B")]
    UnknownColor(char),
}
