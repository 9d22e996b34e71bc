//! The two hat game with consecutive numbers and the simultaneous
//! red/blue color hat game.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::AuxError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwoHatPlayer {
    P1,
    P2,
}

impl fmt::Display for TwoHatPlayer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoHatPlayer::P1 => f.write_str("P1"),
            TwoHatPlayer::P2 => f.write_str("P2"),
        }
    }
}

/// Who opens the two hat game. Turns alternate strictly afterwards.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TwoHatOrder {
    #[default]
    P1First,
    P2First,
}

impl TwoHatOrder {
    fn player_of_turn(self, turn: u64) -> TwoHatPlayer {
        let first = turn % 2 == 1;
        match (self, first) {
            (TwoHatOrder::P1First, true) | (TwoHatOrder::P2First, false) => TwoHatPlayer::P1,
            _ => TwoHatPlayer::P2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoHatInstance {
    p1: u64,
    p2: u64,
}

impl TwoHatInstance {
    pub fn new(p1: u64, p2: u64) -> Result<Self, AuxError> {
        if p1 == 0 || p2 == 0 || p1.abs_diff(p2) != 1 {
            return Err(AuxError::NotConsecutive(p1, p2));
        }
        Ok(TwoHatInstance { p1, p2 })
    }

    pub fn numbers(&self) -> (u64, u64) {
        (self.p1, self.p2)
    }

    fn number_of(&self, player: TwoHatPlayer) -> u64 {
        match player {
            TwoHatPlayer::P1 => self.p1,
            TwoHatPlayer::P2 => self.p2,
        }
    }

    fn seen_by(&self, player: TwoHatPlayer) -> u64 {
        match player {
            TwoHatPlayer::P1 => self.p2,
            TwoHatPlayer::P2 => self.p1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoHatOutcome {
    /// Global turn of the declaration, counted from 1.
    pub turn: u64,
    pub declarer: TwoHatPlayer,
    pub value: u64,
    /// Whether the declared value equals the declarer's number.
    pub correct: bool,
}

/// A player seeing `n` passes until his `n`-th own turn and then declares
/// `n + 1`.
pub fn two_hat_simulate(inst: &TwoHatInstance, order: TwoHatOrder) -> TwoHatOutcome {
    let mut own_turns = [0u64; 2];
    for turn in 1.. {
        let player = order.player_of_turn(turn);
        let slot = match player {
            TwoHatPlayer::P1 => 0,
            TwoHatPlayer::P2 => 1,
        };
        own_turns[slot] += 1;
        let seen = inst.seen_by(player);
        if own_turns[slot] == seen {
            let value = seen + 1;
            return TwoHatOutcome {
                turn,
                declarer: player,
                value,
                correct: value == inst.number_of(player),
            };
        }
    }
    unreachable!("someone sees a positive number and eventually declares")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HatColor {
    Red,
    Blue,
}

impl TryFrom<char> for HatColor {
    type Error = AuxError;

    fn try_from(c: char) -> Result<Self, Self::Error> {
        match c {
            'R' | 'r' => Ok(HatColor::Red),
            'B' | 'b' => Ok(HatColor::Blue),
            other => Err(AuxError::UnknownColor(other)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColorHatInstance {
    hats: Vec<HatColor>,
}

impl ColorHatInstance {
    pub fn new(hats: Vec<HatColor>) -> Result<Self, AuxError> {
        if !hats.contains(&HatColor::Red) {
            return Err(AuxError::NoRedHat);
        }
        Ok(ColorHatInstance { hats })
    }

    pub fn hats(&self) -> &[HatColor] {
        &self.hats
    }

    pub fn red_count(&self) -> usize {
        self.hats.iter().filter(|&&h| h == HatColor::Red).count()
    }
}

impl FromStr for ColorHatInstance {
    type Err = AuxError;

    /// Parses strings like `RBB`, one character per player.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let hats = s
            .trim()
            .chars()
            .map(HatColor::try_from)
            .collect::<Result<Vec<_>, _>>()?;
        ColorHatInstance::new(hats)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorHatResult {
    pub ending_round: u64,
    /// 1-based player numbers.
    pub declarers: BTreeSet<usize>,
    pub declared_color: HatColor,
    /// Whether every declarer is actually wearing red.
    pub all_correct: bool,
}

/// Rounds are simultaneous. A player seeing `n` red hats passes for `n`
/// rounds and declares red in round `n + 1`.
pub fn color_hat_simulate(inst: &ColorHatInstance) -> ColorHatResult {
    let total_red = inst.red_count();
    let seen_red: Vec<usize> = inst
        .hats
        .iter()
        .map(|&h| total_red - usize::from(h == HatColor::Red))
        .collect();
    for round in 1u64.. {
        let declarers: BTreeSet<usize> = seen_red
            .iter()
            .enumerate()
            .filter(|&(_, &seen)| seen as u64 + 1 == round)
            .map(|(i, _)| i + 1)
            .collect();
        if !declarers.is_empty() {
            let all_correct = declarers.iter().all(|&p| inst.hats[p - 1] == HatColor::Red);
            return ColorHatResult {
                ending_round: round,
                declarers,
                declared_color: HatColor::Red,
                all_correct,
            };
        }
    }
    unreachable!("red wearers declare by round total_red")
}
