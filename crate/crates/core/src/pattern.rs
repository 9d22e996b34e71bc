//! Observed dialogue patterns such as `P,P,P,D=50`.
//!
//! ```text
//! transcript := event ("," event)*
//! event      := "P" | "D" ["=" integer]
//! ```
//!
//! Whitespace around commas is ignored. Exactly one `D` is allowed and it
//! must come last. Seats are implied cyclically starting at A.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::configuration::Seat;
use crate::error::PatternError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TranscriptPattern {
    /// Total number of events, the declaration included.
    pub events: u64,
    pub value: Option<u64>,
}

impl TranscriptPattern {
    pub fn declarer(&self) -> Seat {
        Seat::of_turn(self.events)
    }
}

pub fn parse_transcript(text: &str) -> Result<TranscriptPattern, PatternError> {
    if text.trim().is_empty() {
        return Err(PatternError::Empty);
    }
    let mut events = 0u64;
    let mut declaration: Option<(usize, Option<u64>)> = None;
    for (index, raw) in text.split(',').enumerate() {
        let token = raw.trim();
        events += 1;
        match token {
            "" => return Err(PatternError::EmptyEvent { index }),
            "P" => {
                if declaration.is_some() {
                    return Err(PatternError::DeclarationNotLast);
                }
            }
            _ if token.starts_with('D') => {
                if declaration.is_some() {
                    return Err(PatternError::MultipleDeclarations);
                }
                let value = match token[1..].strip_prefix('=') {
                    None if token.len() == 1 => None,
                    None => {
                        return Err(PatternError::BadEvent {
                            index,
                            text: token.to_string(),
                        })
                    }
                    Some(digits) => Some(parse_value(index, digits)?),
                };
                declaration = Some((index, value));
            }
            _ => {
                return Err(PatternError::BadEvent {
                    index,
                    text: token.to_string(),
                })
            }
        }
    }
    let (_, value) = declaration.ok_or(PatternError::NoDeclaration)?;
    Ok(TranscriptPattern { events, value })
}

fn parse_value(index: usize, digits: &str) -> Result<u64, PatternError> {
    let bad = || PatternError::BadValue {
        index,
        text: digits.to_string(),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let value: u64 = digits.parse().map_err(|_| bad())?;
    if value < 2 {
        return Err(PatternError::ValueTooSmall { value });
    }
    Ok(value)
}

impl FromStr for TranscriptPattern {
    type Err = PatternError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_transcript(s)
    }
}

impl fmt::Display for TranscriptPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for _ in 1..self.events {
            f.write_str("P,")?;
        }
        match self.value {
            Some(v) => write!(f, "D={v}"),
            None => f.write_str("D"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn dialogue_shapes() {
        let p = parse_transcript("P,P,P,D=50").unwrap();
        assert_eq!((p.events, p.declarer(), p.value), (4, Seat::A, Some(50)));
        let p = parse_transcript("P,P,P,P,P,P,P,P,D=60").unwrap();
        assert_eq!((p.events, p.declarer(), p.value), (9, Seat::C, Some(60)));
        let p = parse_transcript("D").unwrap();
        assert_eq!((p.events, p.declarer(), p.value), (1, Seat::A, None));
    }

    #[test]
    fn whitespace_around_commas() {
        let p = parse_transcript(" P , P ,D=7 ").unwrap();
        assert_eq!((p.events, p.value), (3, Some(7)));
    }

    #[test]
    fn grammar_violations() {
        assert_eq!(
            parse_transcript("D=5,P"),
            Err(PatternError::DeclarationNotLast)
        );
        assert_eq!(
            parse_transcript("D,D"),
            Err(PatternError::MultipleDeclarations)
        );
        assert_eq!(parse_transcript(""), Err(PatternError::Empty));
        assert_eq!(parse_transcript("   "), Err(PatternError::Empty));
        assert_eq!(parse_transcript("P,P"), Err(PatternError::NoDeclaration));
        assert_eq!(
            parse_transcript("P,,D"),
            Err(PatternError::EmptyEvent { index: 1 })
        );
        assert!(matches!(
            parse_transcript("P,D=x"),
            Err(PatternError::BadValue { .. })
        ));
        assert!(matches!(
            parse_transcript("P,D=+5"),
            Err(PatternError::BadValue { .. })
        ));
        assert!(matches!(
            parse_transcript("P,D="),
            Err(PatternError::BadValue { .. })
        ));
        assert!(matches!(
            parse_transcript("P,D5"),
            Err(PatternError::BadEvent { .. })
        ));
        assert!(matches!(
            parse_transcript("Q,D"),
            Err(PatternError::BadEvent { .. })
        ));
        assert!(matches!(
            parse_transcript("D=99999999999999999999999"),
            Err(PatternError::BadValue { .. })
        ));
        assert_eq!(
            parse_transcript("D=1"),
            Err(PatternError::ValueTooSmall { value: 1 })
        );
        assert_eq!(
            parse_transcript("D=0"),
            Err(PatternError::ValueTooSmall { value: 0 })
        );
    }

    proptest! {
        #[test]
        fn display_parses_back(events in 1u64..40, value in proptest::option::of(2u64..10_000)) {
            let p = TranscriptPattern { events, value };
            prop_assert_eq!(parse_transcript(&p.to_string()).unwrap(), p);
        }
    }
}
