//! Hat configurations, the reduction map and configuration chains.
//!
//! A configuration is the triple of numbers worn by players A, B and C, in
//! that order. Exactly one entry is the sum of the other two. The reduction
//! map replaces that sum entry by the difference of the other two, which
//! walks the triple down the subtractive Euclidean algorithm until two
//! entries coincide.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// One of the three seats around the table. Turns always go A, B, C.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Seat {
    A,
    B,
    C,
}

impl Seat {
    pub const ALL: [Seat; 3] = [Seat::A, Seat::B, Seat::C];

    /// 1-based seat index: A = 1, B = 2, C = 3.
    pub fn index(self) -> u64 {
        self.position() as u64 + 1
    }

    /// 0-based position of this seat's entry in a configuration.
    pub fn position(self) -> usize {
        match self {
            Seat::A => 0,
            Seat::B => 1,
            Seat::C => 2,
        }
    }

    pub fn from_position(position: usize) -> Seat {
        Seat::ALL[position % 3]
    }

    /// Seat acting on global turn `turn` (1-based).
    ///
    /// Panics if `turn` is zero.
    pub fn of_turn(turn: u64) -> Seat {
        assert!(turn >= 1, "turns are numbered from 1");
        Seat::from_position(((turn - 1) % 3) as usize)
    }

    /// Smallest turn strictly after `after` that belongs to this seat.
    pub fn next_turn_after(self, after: u64) -> u64 {
        let offset = (self.index() + 3 - after % 3) % 3;
        after + if offset == 0 { 3 } else { offset }
    }

    /// Seat reached by moving `steps` places forward (A -> B -> C -> A).
    pub fn rotated(self, steps: usize) -> Seat {
        Seat::from_position(self.position() + steps % 3)
    }

    /// The two seats other than this one, in turn order.
    pub fn others(self) -> [Seat; 2] {
        match self {
            Seat::A => [Seat::B, Seat::C],
            Seat::B => [Seat::A, Seat::C],
            Seat::C => [Seat::A, Seat::B],
        }
    }
}

impl fmt::Display for Seat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Seat::A => "A",
            Seat::B => "B",
            Seat::C => "C",
        };
        f.write_str(name)
    }
}

impl std::str::FromStr for Seat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Seat::A),
            "B" | "b" => Ok(Seat::B),
            "C" | "c" => Ok(Seat::C),
            other => Err(ConfigError::UnknownSeat(other.to_string())),
        }
    }
}

/// A valid three hat configuration.
///
/// Every value of this type has positive entries, exactly one entry equal to
/// the sum of the other two, and pairwise sums that fit in a `u64`. The last
/// condition keeps working configurations representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u64; 3]", into = "[u64; 3]")]
pub struct Configuration([u64; 3]);

impl Configuration {
    /// Validates a triple. Seat A gets `a`, B gets `b`, C gets `c`.
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self, ConfigError> {
        let entries = [a, b, c];
        if let Some(position) = entries.iter().position(|&e| e == 0) {
            return Err(ConfigError::NonPositive {
                seat: Seat::from_position(position),
            });
        }
        let mut overflow = false;
        let mut sums = 0;
        for position in 0..3 {
            let x = entries[(position + 1) % 3];
            let y = entries[(position + 2) % 3];
            match x.checked_add(y) {
                Some(total) if total == entries[position] => sums += 1,
                Some(_) => {}
                None => overflow = true,
            }
        }
        if overflow {
            return Err(ConfigError::Overflow { entries });
        }
        match sums {
            0 => Err(ConfigError::NoSumEntry { entries }),
            1 => Ok(Configuration(entries)),
            _ => Err(ConfigError::MultipleSumEntries { entries }),
        }
    }

    pub fn entries(&self) -> [u64; 3] {
        self.0
    }

    pub fn get(&self, seat: Seat) -> u64 {
        self.0[seat.position()]
    }

    pub fn max_entry(&self) -> u64 {
        self.0[self.sum_seat().position()]
    }

    /// The seat holding the sum of the other two entries (the cue holder).
    pub fn sum_seat(&self) -> Seat {
        let [a, b, c] = self.0;
        if a == b + c {
            Seat::A
        } else if b == a + c {
            Seat::B
        } else {
            Seat::C
        }
    }

    /// The sum entry, i.e. the number the cue holder would declare.
    pub fn sum_value(&self) -> u64 {
        self.get(self.sum_seat())
    }

    /// The two entries `seat` can see, in turn order.
    pub fn visible_from(&self, seat: Seat) -> [u64; 2] {
        let [x, y] = seat.others();
        [self.get(x), self.get(y)]
    }

    /// True when two entries coincide. Base configurations are exactly the
    /// fixed points of [`Configuration::sigma`].
    pub fn is_base(&self) -> bool {
        let [a, b, c] = self.0;
        a == b || b == c || a == c
    }

    /// One step of the reduction map: the sum entry is replaced by the
    /// difference of the other two. Base configurations map to themselves.
    pub fn sigma(&self) -> Configuration {
        if self.is_base() {
            return *self;
        }
        let seat = self.sum_seat();
        let [x, y] = self.visible_from(seat);
        let mut entries = self.0;
        entries[seat.position()] = x.abs_diff(y);
        Configuration(entries)
    }

    /// The configuration `seat` would be facing if its own number were the
    /// sum of the two it sees.
    pub fn working_configuration(&self, seat: Seat) -> Result<Configuration, ConfigError> {
        let [x, y] = self.visible_from(seat);
        let mut entries = self.0;
        entries[seat.position()] = x
            .checked_add(y)
            .ok_or(ConfigError::Overflow { entries: self.0 })?;
        Configuration::new(entries[0], entries[1], entries[2])
    }

    /// Iterates the reduction map down to the first base configuration and
    /// returns the sequence base-first. Raw entries are kept; no gcd is
    /// divided out.
    pub fn chain(&self) -> ConfigurationChain {
        let mut configs = vec![*self];
        let mut current = *self;
        while !current.is_base() {
            current = current.sigma();
            configs.push(current);
        }
        configs.reverse();
        ConfigurationChain { configs }
    }

    pub fn normalize(&self) -> NormalizationResult {
        let [a, b, c] = self.0;
        let factor = a.gcd(&b).gcd(&c);
        NormalizationResult {
            reduced: Configuration([a / factor, b / factor, c / factor]),
            factor,
        }
    }

    /// Multiplies every entry by `k`.
    pub fn scaled(&self, k: u64) -> Result<Configuration, ConfigError> {
        let mut entries = [0; 3];
        for (out, &e) in entries.iter_mut().zip(self.0.iter()) {
            *out = e
                .checked_mul(k)
                .ok_or(ConfigError::Overflow { entries: self.0 })?;
        }
        Configuration::new(entries[0], entries[1], entries[2])
    }

    /// Moves every number `steps` seats forward: with one step, B receives
    /// A's number, C receives B's and A receives C's.
    pub fn rotated(&self, steps: usize) -> Configuration {
        let mut entries = [0; 3];
        for seat in Seat::ALL {
            entries[seat.rotated(steps).position()] = self.get(seat);
        }
        Configuration(entries)
    }
}

impl TryFrom<[u64; 3]> for Configuration {
    type Error = ConfigError;

    fn try_from(value: [u64; 3]) -> Result<Self, Self::Error> {
        Configuration::new(value[0], value[1], value[2])
    }
}

impl From<Configuration> for [u64; 3] {
    fn from(value: Configuration) -> Self {
        value.0
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "[{a},{b},{c}]")
    }
}

/// Free-function spelling of [`Configuration::new`].
pub fn make_configuration(a: u64, b: u64, c: u64) -> Result<Configuration, ConfigError> {
    Configuration::new(a, b, c)
}

pub fn sum_seat(s: &Configuration) -> Seat {
    s.sum_seat()
}

pub fn is_base(s: &Configuration) -> bool {
    s.is_base()
}

pub fn sigma(s: &Configuration) -> Configuration {
    s.sigma()
}

pub fn working_configuration(s: &Configuration, seat: Seat) -> Result<Configuration, ConfigError> {
    s.working_configuration(seat)
}

pub fn build_chain(s: &Configuration) -> ConfigurationChain {
    s.chain()
}

pub fn normalize(s: &Configuration) -> NormalizationResult {
    s.normalize()
}

/// Configurations from a base configuration up to a working configuration,
/// each one mapping to its predecessor under the reduction map.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConfigurationChain {
    configs: Vec<Configuration>,
}

impl ConfigurationChain {
    /// Checks the chain invariants: non-empty, base first, linked by the
    /// reduction map, and no base configuration after the first.
    pub fn from_configs(configs: Vec<Configuration>) -> Result<Self, ConfigError> {
        let first = configs.first().ok_or(ConfigError::EmptyChain)?;
        if !first.is_base() {
            return Err(ConfigError::BrokenChain { index: 0 });
        }
        for (i, pair) in configs.windows(2).enumerate() {
            if pair[1].is_base() || pair[1].sigma() != pair[0] {
                return Err(ConfigError::BrokenChain { index: i + 1 });
            }
        }
        Ok(ConfigurationChain { configs })
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    pub fn base(&self) -> Configuration {
        self.configs[0]
    }

    /// The configuration the chain was built from.
    pub fn top(&self) -> Configuration {
        self.configs[self.configs.len() - 1]
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Configuration> {
        self.configs.iter()
    }

    pub fn into_vec(self) -> Vec<Configuration> {
        self.configs
    }
}

impl<'a> IntoIterator for &'a ConfigurationChain {
    type Item = &'a Configuration;
    type IntoIter = std::slice::Iter<'a, Configuration>;

    fn into_iter(self) -> Self::IntoIter {
        self.configs.iter()
    }
}

impl fmt::Display for ConfigurationChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_configs(f, &self.configs)
    }
}

pub(crate) fn write_configs(f: &mut fmt::Formatter<'_>, configs: &[Configuration]) -> fmt::Result {
    for (i, config) in configs.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{config}")?;
    }
    Ok(())
}

/// A configuration with the common divisor of its entries divided out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalizationResult {
    pub reduced: Configuration,
    pub factor: u64,
}

/// Every valid configuration whose largest entry is at most `bound`, sorted
/// lexicographically. Covers all three placements of the sum entry.
pub fn enumerate_configurations(bound: u64) -> Vec<Configuration> {
    let mut out = Vec::new();
    for total in 2..=bound {
        for x in 1..total {
            let y = total - x;
            out.push(Configuration([total, x, y]));
            out.push(Configuration([x, total, y]));
            out.push(Configuration([x, y, total]));
        }
    }
    out.sort_unstable();
    out
}
