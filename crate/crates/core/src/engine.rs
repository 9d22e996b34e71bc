//! Turn-by-turn play of the chain reduction strategy, plus the slow
//! "wait until your n-th turn" baseline.
//!
//! Every player writes down the chain of his working configuration. Those
//! chains agree except that the two players without the sum carry one extra
//! configuration at the end, so the game is tracked as one shared chain with
//! a head pointer. A player whose remaining chain has a single configuration
//! declares; otherwise he passes, and if he holds the cue of the shared head
//! the head is crossed out for everyone.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::configuration::{Configuration, Seat};
use crate::epistemic::Outcome;
use crate::error::{ConfigError, TranscriptError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Action {
    Pass,
    Declare { value: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TurnEvent {
    pub turn: u64,
    pub seat: Seat,
    #[serde(flatten)]
    pub action: Action,
}

impl TurnEvent {
    pub fn pass(turn: u64) -> Self {
        TurnEvent {
            turn,
            seat: Seat::of_turn(turn),
            action: Action::Pass,
        }
    }

    pub fn declare(turn: u64, value: u64) -> Self {
        TurnEvent {
            turn,
            seat: Seat::of_turn(turn),
            action: Action::Declare { value },
        }
    }

    pub fn is_declaration(&self) -> bool {
        matches!(self.action, Action::Declare { .. })
    }
}

impl fmt::Display for TurnEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.action {
            Action::Pass => write!(f, "Player {}: Pass.", self.seat),
            Action::Declare { value } => write!(f, "Player {}: My number is {value}.", self.seat),
        }
    }
}

/// A finished game: passes on turns 1, 2, ... and a single closing
/// declaration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "Vec<TurnEvent>")]
pub struct Transcript {
    events: Vec<TurnEvent>,
}

impl Transcript {
    pub fn events(&self) -> &[TurnEvent] {
        &self.events
    }

    /// Number of turns played, the declaration included.
    pub fn len(&self) -> u64 {
        self.events.len() as u64
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn outcome(&self) -> Outcome {
        let last = self.events[self.events.len() - 1];
        let Action::Declare { value } = last.action else {
            unreachable!("transcripts always end with a declaration")
        };
        Outcome {
            turn: last.turn,
            declarer: last.seat,
            value,
        }
    }
}

impl TryFrom<Vec<TurnEvent>> for Transcript {
    type Error = TranscriptError;

    fn try_from(events: Vec<TurnEvent>) -> Result<Self, Self::Error> {
        if events.is_empty() {
            return Err(TranscriptError::Empty);
        }
        for (index, event) in events.iter().enumerate() {
            let expected = index as u64 + 1;
            if event.turn != expected {
                return Err(TranscriptError::TurnOutOfSequence {
                    index,
                    expected,
                    found: event.turn,
                });
            }
            let seat = Seat::of_turn(event.turn);
            if event.seat != seat {
                return Err(TranscriptError::WrongSeat {
                    turn: event.turn,
                    expected: seat,
                    found: event.seat,
                });
            }
            if event.is_declaration() && index + 1 != events.len() {
                return Err(TranscriptError::DeclarationNotLast { turn: event.turn });
            }
        }
        if !events[events.len() - 1].is_declaration() {
            return Err(TranscriptError::NoDeclaration);
        }
        Ok(Transcript { events })
    }
}

impl<'de> Deserialize<'de> for Transcript {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let events = Vec::<TurnEvent>::deserialize(deserializer)?;
        Transcript::try_from(events).map_err(serde::de::Error::custom)
    }
}

impl From<Transcript> for Vec<TurnEvent> {
    fn from(value: Transcript) -> Self {
        value.events
    }
}

/// What happened on one turn of a traced game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRow {
    pub seat: Seat,
    /// The acting player's chain at the start of the turn.
    pub remaining: Vec<Configuration>,
    /// Whether the acting player holds the cue of the shared head.
    pub held_cue: bool,
    /// Whether the head was crossed out after this turn.
    pub crossed: bool,
    pub event: TurnEvent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GameTrace {
    pub input: Configuration,
    /// Each player's full chain before the first turn, in seat order.
    pub initial_chains: [Vec<Configuration>; 3],
    pub rows: Vec<TraceRow>,
}

impl GameTrace {
    pub fn outcome(&self) -> Outcome {
        let last = &self.rows[self.rows.len() - 1].event;
        let Action::Declare { value } = last.action else {
            unreachable!("traces always end with a declaration")
        };
        Outcome {
            turn: last.turn,
            declarer: last.seat,
            value,
        }
    }

    pub fn transcript(&self) -> Transcript {
        Transcript {
            events: self.rows.iter().map(|r| r.event).collect(),
        }
    }
}

struct Step {
    seat: Seat,
    head: usize,
    held_cue: bool,
    crossed: bool,
    event: TurnEvent,
}

/// Shared-chain state of a game in progress.
struct ChainGame {
    actual: Configuration,
    shared: Vec<Configuration>,
    head: usize,
    turn: u64,
    finished: bool,
}

impl ChainGame {
    fn new(actual: Configuration) -> Self {
        ChainGame {
            actual,
            shared: actual.chain().into_vec(),
            head: 0,
            turn: 0,
            finished: false,
        }
    }

    fn remaining_len(&self, seat: Seat) -> usize {
        let tail = usize::from(seat != self.actual.sum_seat());
        self.shared.len() - self.head + tail
    }

    fn step(&mut self) -> Option<Step> {
        if self.finished {
            return None;
        }
        self.turn += 1;
        let seat = Seat::of_turn(self.turn);
        let head = self.head;
        let held_cue = self.shared[head].sum_seat() == seat;
        if self.remaining_len(seat) == 1 {
            self.finished = true;
            let [x, y] = self.actual.visible_from(seat);
            return Some(Step {
                seat,
                head,
                held_cue,
                crossed: false,
                event: TurnEvent::declare(self.turn, x + y),
            });
        }
        if held_cue {
            self.head += 1;
        }
        Some(Step {
            seat,
            head,
            held_cue,
            crossed: held_cue,
            event: TurnEvent::pass(self.turn),
        })
    }
}

impl Iterator for ChainGame {
    type Item = Step;

    fn next(&mut self) -> Option<Step> {
        self.step()
    }
}

/// Plays the chain reduction strategy on `s` and records every turn.
pub fn simulate(s: &Configuration) -> Transcript {
    Transcript {
        events: ChainGame::new(*s).map(|step| step.event).collect(),
    }
}

/// Number of turns the chain reduction strategy needs, declaration included.
pub fn turn_count(s: &Configuration) -> u64 {
    ChainGame::new(*s).count() as u64
}

/// Like [`simulate`], keeping each acting player's remaining chain.
///
/// Fails only when a working configuration is not representable, which
/// needs entries close to `u64::MAX / 2`.
pub fn full_trace(s: &Configuration) -> Result<GameTrace, ConfigError> {
    let sum_seat = s.sum_seat();
    let mut tails = [None; 3];
    for seat in sum_seat.others() {
        tails[seat.position()] = Some(s.working_configuration(seat)?);
    }
    let game = ChainGame::new(*s);
    let shared = game.shared.clone();
    let view = |seat: Seat, head: usize| -> Vec<Configuration> {
        let mut chain = shared[head..].to_vec();
        chain.extend(tails[seat.position()]);
        chain
    };
    let initial_chains = Seat::ALL.map(|seat| view(seat, 0));
    let rows = game
        .map(|step| TraceRow {
            seat: step.seat,
            remaining: view(step.seat, step.head),
            held_cue: step.held_cue,
            crossed: step.crossed,
            event: step.event,
        })
        .collect();
    Ok(GameTrace {
        input: *s,
        initial_chains,
        rows,
    })
}

/// The viable but slow baseline: each player takes the larger of the two
/// numbers he sees as `n`, passes his first `n - 1` turns and declares the
/// sum of what he sees on his `n`-th turn.
pub fn simulate_naive(s: &Configuration) -> Transcript {
    let patience = Seat::ALL.map(|seat| {
        let [x, y] = s.visible_from(seat);
        x.max(y)
    });
    let mut events = Vec::new();
    for turn in 1.. {
        let seat = Seat::of_turn(turn);
        let own_turn = (turn - 1) / 3 + 1;
        if own_turn == patience[seat.position()] {
            let [x, y] = s.visible_from(seat);
            events.push(TurnEvent::declare(turn, x + y));
            break;
        }
        events.push(TurnEvent::pass(turn));
    }
    Transcript { events }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::enumerate_configurations;

    fn cfg(a: u64, b: u64, c: u64) -> Configuration {
        Configuration::new(a, b, c).unwrap()
    }

    fn chain_of(entries: &[[u64; 3]]) -> Vec<Configuration> {
        entries.iter().map(|&[a, b, c]| cfg(a, b, c)).collect()
    }

    fn outcome(turn: u64, declarer: Seat, value: u64) -> Outcome {
        Outcome {
            turn,
            declarer,
            value,
        }
    }

    #[test]
    fn first_puzzle_dialogue() {
        let t = simulate(&cfg(50, 20, 30));
        let expected = vec![
            TurnEvent::pass(1),
            TurnEvent::pass(2),
            TurnEvent::pass(3),
            TurnEvent::declare(4, 50),
        ];
        assert_eq!(t.events(), expected.as_slice());
        assert_eq!(t.events()[3].seat, Seat::A);
    }

    #[test]
    fn simulate_examples() {
        assert_eq!(simulate(&cfg(3, 10, 7)).outcome(), outcome(8, Seat::B, 10));
        assert_eq!(
            simulate(&cfg(60, 36, 24)).outcome(),
            outcome(7, Seat::A, 60)
        );
        assert_eq!(simulate(&cfg(2, 1, 1)).outcome(), outcome(1, Seat::A, 2));
    }

    #[test]
    fn turn_count_examples() {
        assert_eq!(turn_count(&cfg(25, 35, 60)), 9);
        assert_eq!(turn_count(&cfg(1, 2, 1)), 2);
        assert_eq!(turn_count(&cfg(10, 20, 30)), 3);
    }

    #[test]
    fn example_two_trace_rows() {
        let trace = full_trace(&cfg(3, 10, 7)).unwrap();
        assert_eq!(trace.rows.len(), 8);
        assert_eq!(
            trace.rows[0].remaining,
            chain_of(&[
                [1, 2, 1],
                [3, 2, 1],
                [3, 4, 1],
                [3, 4, 7],
                [3, 10, 7],
                [17, 10, 7]
            ])
        );
        assert_eq!(
            trace.rows[2].remaining,
            chain_of(&[[3, 2, 1], [3, 4, 1], [3, 4, 7], [3, 10, 7], [3, 10, 13]])
        );
        assert_eq!(trace.rows[7].remaining, chain_of(&[[3, 10, 7]]));
        assert_eq!(trace.rows[7].event, TurnEvent::declare(8, 10));
        let stars: Vec<bool> = trace.rows.iter().map(|r| r.held_cue).collect();
        assert_eq!(stars, [false, true, false, true, true, true, false, true]);
        assert!(!trace.rows[7].crossed);
    }

    #[test]
    fn base_trace_declares_immediately() {
        let trace = full_trace(&cfg(2, 1, 1)).unwrap();
        assert_eq!(trace.rows.len(), 1);
        assert_eq!(trace.rows[0].remaining, chain_of(&[[2, 1, 1]]));
        assert_eq!(trace.rows[0].event, TurnEvent::declare(1, 2));
    }

    #[test]
    fn naive_examples() {
        assert_eq!(
            simulate_naive(&cfg(2, 1, 1)).outcome(),
            outcome(1, Seat::A, 2)
        );
        assert_eq!(
            simulate_naive(&cfg(1, 1, 2)).outcome(),
            outcome(3, Seat::C, 2)
        );
        assert_eq!(
            simulate_naive(&cfg(50, 20, 30)).outcome(),
            outcome(88, Seat::A, 50)
        );
    }

    #[test]
    fn naive_matches_closed_form() {
        // each seat X would declare on global turn 3 * n_X - (3 - index(X))
        for s in enumerate_configurations(60) {
            let expected = Seat::ALL
                .iter()
                .map(|&seat| {
                    let [x, y] = s.visible_from(seat);
                    3 * x.max(y) - (3 - seat.index())
                })
                .min()
                .unwrap();
            assert_eq!(simulate_naive(&s).len(), expected, "{s}");
        }
    }

    #[test]
    fn transcript_validation() {
        let ok = vec![TurnEvent::pass(1), TurnEvent::declare(2, 2)];
        assert!(Transcript::try_from(ok).is_ok());
        assert_eq!(Transcript::try_from(vec![]), Err(TranscriptError::Empty));
        assert_eq!(
            Transcript::try_from(vec![TurnEvent::pass(1)]),
            Err(TranscriptError::NoDeclaration)
        );
        assert_eq!(
            Transcript::try_from(vec![TurnEvent::declare(1, 2), TurnEvent::pass(2)]),
            Err(TranscriptError::DeclarationNotLast { turn: 1 })
        );
        let wrong_seat = TurnEvent {
            turn: 1,
            seat: Seat::B,
            action: Action::Pass,
        };
        assert!(matches!(
            Transcript::try_from(vec![wrong_seat, TurnEvent::declare(2, 2)]),
            Err(TranscriptError::WrongSeat { .. })
        ));
    }

    #[test]
    fn transcript_json_round_trip() {
        let t = simulate(&cfg(3, 10, 7));
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.starts_with(r#"[{"turn":1,"seat":"A","kind":"pass"}"#));
        assert!(json.ends_with(r#"{"turn":8,"seat":"B","kind":"declare","value":10}]"#));
        let back: Transcript = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn sum_holder_declares_correctly() {
        for s in enumerate_configurations(300) {
            let o = simulate(&s).outcome();
            assert_eq!(o.declarer, s.sum_seat(), "{s}");
            assert_eq!(o.value, s.sum_value(), "{s}");
        }
    }

    #[test]
    fn heads_coincide_until_the_end() {
        for s in enumerate_configurations(80) {
            let trace = full_trace(&s).unwrap();
            let mut game = ChainGame::new(s);
            let sum_seat = s.sum_seat();
            for row in &trace.rows {
                if row.event.is_declaration() {
                    break;
                }
                // the three views share the head; only the last entry may differ
                let views: Vec<Vec<Configuration>> = Seat::ALL
                    .iter()
                    .map(|&seat| {
                        let mut v = game.shared[game.head..].to_vec();
                        if seat != sum_seat {
                            v.push(s.working_configuration(seat).unwrap());
                        }
                        v
                    })
                    .collect();
                assert!(views.iter().all(|v| v[0] == views[0][0]));
                let shortest = views.iter().map(Vec::len).min().unwrap();
                for v in &views {
                    assert!(v.len() - shortest <= 1);
                }
                game.step();
            }
        }
    }

    #[test]
    fn chains_shrink_from_the_front() {
        for s in enumerate_configurations(60) {
            let trace = full_trace(&s).unwrap();
            for row in &trace.rows {
                let initial = &trace.initial_chains[row.seat.position()];
                assert!(initial.ends_with(&row.remaining), "{s}");
            }
        }
    }

    #[test]
    fn naive_is_viable_and_never_faster() {
        for s in enumerate_configurations(300) {
            let naive = simulate_naive(&s);
            let o = naive.outcome();
            assert_eq!((o.declarer, o.value), (s.sum_seat(), s.sum_value()), "{s}");
            assert!(naive.len() >= turn_count(&s), "{s}");
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn outcome_is_scale_invariant(x in 1u64..50, y in 1u64..50, rot in 0usize..3, k in 2u64..=5) {
                let s = cfg(x + y, x, y).rotated(rot);
                let scaled = s.scaled(k).unwrap();
                let (a, b) = (simulate(&s).outcome(), simulate(&scaled).outcome());
                prop_assert_eq!(a.turn, b.turn);
                prop_assert_eq!(a.declarer, b.declarer);
                prop_assert_eq!(a.value * k, b.value);
            }
        }
    }
}
