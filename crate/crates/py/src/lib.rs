//! Python bindings.
//!
//! Seats cross the boundary as the strings "A", "B" and "C"; games come
//! back as lists of `(turn, seat, kind, value)` tuples where `value` is
//! `None` for passes.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use threehat_core::aux_puzzles::{self, ColorHatInstance, TwoHatInstance, TwoHatOrder};
use threehat_core::engine::{Action, Transcript};
use threehat_core::{self as core, Seat};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_seat(seat: &str) -> PyResult<Seat> {
    seat.parse().map_err(value_error)
}

/// A valid three hat configuration `[a, b, c]`.
#[pyclass(
    name = "Configuration",
    module = "threehat",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyConfiguration(core::Configuration);

#[pymethods]
impl PyConfiguration {
    #[new]
    fn new(a: u64, b: u64, c: u64) -> PyResult<Self> {
        core::Configuration::new(a, b, c)
            .map(PyConfiguration)
            .map_err(value_error)
    }

    #[getter]
    fn entries(&self) -> (u64, u64, u64) {
        let [a, b, c] = self.0.entries();
        (a, b, c)
    }

    fn sum_seat(&self) -> String {
        self.0.sum_seat().to_string()
    }

    fn is_base(&self) -> bool {
        self.0.is_base()
    }

    fn sigma(&self) -> Self {
        PyConfiguration(self.0.sigma())
    }

    fn working_configuration(&self, seat: &str) -> PyResult<Self> {
        self.0
            .working_configuration(parse_seat(seat)?)
            .map(PyConfiguration)
            .map_err(value_error)
    }

    fn chain(&self) -> Vec<PyConfiguration> {
        self.0
            .chain()
            .iter()
            .copied()
            .map(PyConfiguration)
            .collect()
    }

    /// Returns `(reduced, factor)`.
    fn normalize(&self) -> (PyConfiguration, u64) {
        let n = self.0.normalize();
        (PyConfiguration(n.reduced), n.factor)
    }

    fn __repr__(&self) -> String {
        format!("Configuration{}", self.0)
    }
}

type EventTuple = (u64, String, &'static str, Option<u64>);
type TraceRowTuple = (u64, String, bool, Vec<PyConfiguration>, &'static str);

fn events(transcript: &Transcript) -> Vec<EventTuple> {
    transcript
        .events()
        .iter()
        .map(|e| match e.action {
            Action::Pass => (e.turn, e.seat.to_string(), "pass", None),
            Action::Declare { value } => (e.turn, e.seat.to_string(), "declare", Some(value)),
        })
        .collect()
}

/// Chain reduction game as a list of events.
#[pyfunction]
fn simulate(s: &PyConfiguration) -> Vec<EventTuple> {
    events(&core::simulate(&s.0))
}

#[pyfunction]
fn simulate_naive(s: &PyConfiguration) -> Vec<EventTuple> {
    events(&core::simulate_naive(&s.0))
}

#[pyfunction]
fn turn_count(s: &PyConfiguration) -> u64 {
    core::turn_count(&s.0)
}

/// `(turn, seat, value)` from the recurrence, without simulating.
#[pyfunction]
fn end_turn(s: &PyConfiguration) -> (u64, String, u64) {
    let o = core::end_turn(&s.0);
    (o.turn, o.declarer.to_string(), o.value)
}

/// Per-turn rows `(turn, seat, held_cue, remaining_chain, kind)`.
#[pyfunction]
fn full_trace(s: &PyConfiguration) -> PyResult<Vec<TraceRowTuple>> {
    let trace = core::full_trace(&s.0).map_err(value_error)?;
    Ok(trace
        .rows
        .iter()
        .map(|row| {
            let kind = if row.event.is_declaration() {
                "declare"
            } else {
                "pass"
            };
            (
                row.event.turn,
                row.seat.to_string(),
                row.held_cue,
                row.remaining.iter().copied().map(PyConfiguration).collect(),
                kind,
            )
        })
        .collect())
}

/// Number of mismatches between the simulation and the recurrence, and
/// the number of configurations compared.
#[pyfunction]
fn check_equivalence(bound: u64) -> (usize, usize) {
    let report = core::check_equivalence(bound);
    (report.mismatches.len(), report.configurations_checked)
}

#[pyfunction]
#[pyo3(signature = (declarer, turns, value=None, max_sum=None))]
fn solve(
    declarer: &str,
    turns: u64,
    value: Option<u64>,
    max_sum: Option<u64>,
) -> PyResult<Vec<PyConfiguration>> {
    let query = core::PuzzleQuery {
        declarer: parse_seat(declarer)?,
        turns,
        value,
        max_sum,
    };
    let set = core::solve(&query).map_err(value_error)?;
    Ok(set.iter().copied().map(PyConfiguration).collect())
}

#[pyfunction]
#[pyo3(signature = (pattern, max_sum=None))]
fn solve_transcript(pattern: &str, max_sum: Option<u64>) -> PyResult<Vec<PyConfiguration>> {
    let pattern = core::parse_transcript(pattern).map_err(value_error)?;
    let set = core::solve_transcript(&pattern, max_sum).map_err(value_error)?;
    Ok(set.iter().copied().map(PyConfiguration).collect())
}

/// `(turn, declarer, value)` with declarer "P1" or "P2".
#[pyfunction]
#[pyo3(signature = (p1, p2, p2_first=false))]
fn two_hat(p1: u64, p2: u64, p2_first: bool) -> PyResult<(u64, String, u64)> {
    let inst = TwoHatInstance::new(p1, p2).map_err(value_error)?;
    let order = if p2_first {
        TwoHatOrder::P2First
    } else {
        TwoHatOrder::P1First
    };
    let o = aux_puzzles::two_hat_simulate(&inst, order);
    Ok((o.turn, o.declarer.to_string(), o.value))
}

/// `(ending_round, declarers)` for a hat string such as "RBR".
#[pyfunction]
fn color_hat(hats: &str) -> PyResult<(u64, Vec<usize>)> {
    let inst: ColorHatInstance = hats.parse().map_err(value_error)?;
    let r = aux_puzzles::color_hat_simulate(&inst);
    Ok((r.ending_round, r.declarers.into_iter().collect()))
}

#[pymodule]
fn threehat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyConfiguration>()?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(simulate_naive, m)?)?;
    m.add_function(wrap_pyfunction!(turn_count, m)?)?;
    m.add_function(wrap_pyfunction!(end_turn, m)?)?;
    m.add_function(wrap_pyfunction!(full_trace, m)?)?;
    m.add_function(wrap_pyfunction!(check_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_transcript, m)?)?;
    m.add_function(wrap_pyfunction!(two_hat, m)?)?;
    m.add_function(wrap_pyfunction!(color_hat, m)?)?;
    Ok(())
}
