//! The three hat puzzle: three players wear positive numbers, one of which
//! is the sum of the other two, and take turns either naming their own
//! number or passing.
//!
//! - [`configuration`]: valid triples, the reduction map and chains.
//! - [`engine`]: turn-by-turn play of the chain reduction strategy and the
//!   naive baseline.
//! - [`epistemic`]: the same outcome computed by recurrence, and an
//!   exhaustive cross-check against the simulation.
//! - [`inverse`]: every configuration consistent with an observed game.
//! - [`aux_puzzles`]: the two hat and color hat games.
//! - [`verify`]: bounded exhaustive property checks.

pub mod aux_puzzles;
pub mod configuration;
pub mod engine;
pub mod epistemic;
pub mod error;
pub mod inverse;
pub mod pattern;
pub mod verify;

pub use configuration::{
    build_chain, enumerate_configurations, is_base, make_configuration, normalize, sigma, sum_seat,
    working_configuration, Configuration, ConfigurationChain, NormalizationResult, Seat,
};
pub use engine::{
    full_trace, simulate, simulate_naive, turn_count, GameTrace, Transcript, TurnEvent,
};
pub use epistemic::{check_equivalence, end_turn, EquivalenceReport, Outcome};
pub use error::{AuxError, ConfigError, PatternError, QueryError, TranscriptError};
pub use inverse::{solve, solve_transcript, PuzzleQuery, SolutionSet};
pub use pattern::{parse_transcript, TranscriptPattern};
