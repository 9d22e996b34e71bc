//! Exhaustive property checks over every configuration up to a bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::configuration::{enumerate_configurations, Configuration};
use crate::{engine, epistemic};

pub const DEFAULT_MAX: u64 = 300;
/// Scaling is checked for bases up to this size and factors `2..=SCALE_FACTORS`.
pub const SCALE_MAX: u64 = 100;
pub const SCALE_FACTORS: u64 = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub checked: usize,
    pub violations: usize,
    pub first_violation: Option<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

fn run_check<F>(name: &'static str, configs: &[Configuration], check: F) -> CheckReport
where
    F: Fn(&Configuration) -> Result<(), String> + Sync,
{
    let failures: Vec<String> = configs.par_iter().filter_map(|s| check(s).err()).collect();
    CheckReport {
        name,
        checked: configs.len(),
        violations: failures.len(),
        first_violation: failures.into_iter().next(),
    }
}

pub fn sigma_closure(configs: &[Configuration]) -> CheckReport {
    run_check("sigma closure", configs, |s| {
        let next = s.sigma();
        let [a, b, c] = next.entries();
        match Configuration::new(a, b, c) {
            Ok(_) if s.is_base() == (next == *s) => {}
            Ok(_) => return Err(format!("{s}: fixed point mismatch")),
            Err(e) => return Err(format!("{s}: sigma gives invalid {next}: {e}")),
        }
        if !s.is_base() && next.max_entry() >= s.max_entry() {
            return Err(format!("{s}: no descent"));
        }
        Ok(())
    })
}

pub fn sum_holder_declares(configs: &[Configuration]) -> CheckReport {
    run_check("sum holder declares", configs, |s| {
        let o = engine::simulate(s).outcome();
        if o.declarer == s.sum_seat() && o.value == s.sum_value() {
            Ok(())
        } else {
            Err(format!("{s}: {} declared {}", o.declarer, o.value))
        }
    })
}

pub fn scaling_invariance(configs: &[Configuration], max_factor: u64) -> CheckReport {
    run_check("scaling invariance", configs, |s| {
        let base = engine::simulate(s).outcome();
        for k in 2..=max_factor {
            let scaled = s.scaled(k).map_err(|e| format!("{s} x{k}: {e}"))?;
            let o = engine::simulate(&scaled).outcome();
            if o.turn != base.turn || o.declarer != base.declarer {
                return Err(format!("{s} x{k}: turn {} vs {}", o.turn, base.turn));
            }
        }
        Ok(())
    })
}

pub fn recurrence(configs: &[Configuration]) -> CheckReport {
    run_check("turn recurrence", configs, |s| {
        let turns = engine::turn_count(s);
        let expected = if s.is_base() {
            s.sum_seat().index()
        } else {
            s.sum_seat().next_turn_after(engine::turn_count(&s.sigma()))
        };
        if turns == expected {
            Ok(())
        } else {
            Err(format!("{s}: {turns} turns, recurrence gives {expected}"))
        }
    })
}

pub fn engine_equivalence(bound: u64) -> CheckReport {
    let report = epistemic::check_equivalence(bound);
    CheckReport {
        name: "engine equivalence",
        checked: report.configurations_checked,
        violations: report.mismatches.len(),
        first_violation: report.mismatches.first().map(|m| {
            format!(
                "{}: simulated turn {}, recurrence turn {}",
                m.configuration, m.simulated.turn, m.recurrence.turn
            )
        }),
    }
}

pub fn naive_dominance(configs: &[Configuration]) -> CheckReport {
    run_check("naive dominance", configs, |s| {
        let naive = engine::simulate_naive(s);
        let o = naive.outcome();
        if o.declarer != s.sum_seat() || o.value != s.sum_value() {
            return Err(format!("{s}: naive {} declared {}", o.declarer, o.value));
        }
        let fast = engine::turn_count(s);
        if naive.len() < fast {
            return Err(format!("{s}: naive {} < {fast}", naive.len()));
        }
        Ok(())
    })
}

/// Runs every check with configurations up to `max`. Scaling uses bases up
/// to `min(max, SCALE_MAX)`.
pub fn run_all(max: u64) -> Vec<CheckReport> {
    let configs = enumerate_configurations(max);
    let small = enumerate_configurations(max.min(SCALE_MAX));
    vec![
        sigma_closure(&configs),
        sum_holder_declares(&configs),
        scaling_invariance(&small, SCALE_FACTORS),
        recurrence(&configs),
        engine_equivalence(max),
        naive_dominance(&configs),
    ]
}
