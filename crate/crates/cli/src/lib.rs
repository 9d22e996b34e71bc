//! Argument handling for the `threehat` binary.
//!
//! [`run`] never touches the process streams; it returns the exit code and
//! the text destined for stdout and stderr so tests can call it directly.

pub mod render;

use clap::{Parser, Subcommand};
use threehat_core::aux_puzzles::{
    color_hat_simulate, two_hat_simulate, ColorHatInstance, TwoHatInstance, TwoHatOrder,
};
use threehat_core::{
    engine, inverse, parse_transcript, verify, Configuration, PuzzleQuery, Seat, SolutionSet,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_EMPTY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "threehat",
    about = "Chain reduction solver for the three hat puzzle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Play the chain reduction strategy on a configuration.
    Simulate {
        a: u64,
        b: u64,
        c: u64,
        /// Print every player's remaining chain per turn.
        #[arg(long)]
        trace: bool,
        #[arg(long, conflicts_with = "trace")]
        json: bool,
    },
    /// Print the configuration chain, optionally of a player's working configuration.
    Chain {
        a: u64,
        b: u64,
        c: u64,
        #[arg(long)]
        seat: Option<Seat>,
    },
    /// List every configuration consistent with an observed game.
    Solve {
        /// Dialogue pattern such as "P,P,P,D=50".
        #[arg(long, conflicts_with_all = ["declarer", "turns", "value"])]
        transcript: Option<String>,
        #[arg(long, requires = "turns", required_unless_present = "transcript")]
        declarer: Option<Seat>,
        #[arg(long, requires = "declarer")]
        turns: Option<u64>,
        #[arg(long, requires = "declarer")]
        value: Option<u64>,
        /// Largest declared value to search when none is given.
        #[arg(long)]
        max_sum: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Run the exhaustive property checks.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_MAX)]
        max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Play the two hat game with consecutive numbers.
    Twohat {
        a: u64,
        b: u64,
        /// Let the second player open.
        #[arg(long)]
        p2_first: bool,
    },
    /// Play the color hat game; one R or B per player.
    Colorhat { hats: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        CliOutput {
            code: EXIT_INVALID,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (program name first) and executes the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(err) => {
            let text = err.render().to_string();
            if err.use_stderr() {
                CliOutput {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput::ok(text)
            }
        }
    }
}

fn config(a: u64, b: u64, c: u64) -> Result<Configuration, CliOutput> {
    Configuration::new(a, b, c).map_err(CliOutput::invalid)
}

fn execute(command: Command) -> CliOutput {
    let result = match command {
        Command::Simulate {
            a,
            b,
            c,
            trace,
            json,
        } => simulate(a, b, c, trace, json),
        Command::Chain { a, b, c, seat } => chain(a, b, c, seat),
        Command::Solve {
            transcript,
            declarer,
            turns,
            value,
            max_sum,
            json,
        } => solve(transcript, declarer, turns, value, max_sum, json),
        Command::Verify { max, json } => Ok(verify_all(max, json)),
        Command::Twohat { a, b, p2_first } => twohat(a, b, p2_first),
        Command::Colorhat { hats } => colorhat(&hats),
    };
    result.unwrap_or_else(|e| e)
}

fn simulate(a: u64, b: u64, c: u64, trace: bool, json: bool) -> Result<CliOutput, CliOutput> {
    let s = config(a, b, c)?;
    let text = if trace {
        let trace = engine::full_trace(&s).map_err(CliOutput::invalid)?;
        render::trace_text(&trace)
    } else if json {
        let report = render::SimulationJson::new(s, &engine::simulate(&s));
        serde_json::to_string_pretty(&report).expect("serializable") + "\n"
    } else {
        render::transcript_text(&engine::simulate(&s))
    };
    Ok(CliOutput::ok(text))
}

fn chain(a: u64, b: u64, c: u64, seat: Option<Seat>) -> Result<CliOutput, CliOutput> {
    let mut s = config(a, b, c)?;
    if let Some(seat) = seat {
        s = s.working_configuration(seat).map_err(CliOutput::invalid)?;
    }
    let mut out = String::new();
    for link in s.chain().iter() {
        out.push_str(&link.to_string());
        out.push('\n');
    }
    Ok(CliOutput::ok(out))
}

fn solve(
    transcript: Option<String>,
    declarer: Option<Seat>,
    turns: Option<u64>,
    value: Option<u64>,
    max_sum: Option<u64>,
    json: bool,
) -> Result<CliOutput, CliOutput> {
    let set: SolutionSet = match transcript {
        Some(text) => {
            let pattern = parse_transcript(&text).map_err(CliOutput::invalid)?;
            inverse::solve_transcript(&pattern, max_sum)
        }
        None => {
            let query = PuzzleQuery {
                declarer: declarer.expect("clap requires --declarer"),
                turns: turns.expect("clap requires --turns"),
                value,
                max_sum,
            };
            inverse::solve(&query)
        }
    }
    .map_err(CliOutput::invalid)?;
    let stdout = if json {
        serde_json::to_string(&set).expect("serializable") + "\n"
    } else {
        render::solutions_text(&set)
    };
    let code = if set.is_empty() { EXIT_EMPTY } else { EXIT_OK };
    Ok(CliOutput {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn verify_all(max: u64, json: bool) -> CliOutput {
    let reports = verify::run_all(max);
    let passed = reports.iter().all(|r| r.passed());
    let stdout = if json {
        let body = render::VerifyJson {
            max,
            passed,
            checks: &reports,
        };
        serde_json::to_string_pretty(&body).expect("serializable") + "\n"
    } else {
        render::reports_text(max, &reports)
    };
    CliOutput {
        code: if passed { EXIT_OK } else { EXIT_INVALID },
        stdout,
        stderr: String::new(),
    }
}

fn twohat(a: u64, b: u64, p2_first: bool) -> Result<CliOutput, CliOutput> {
    let inst = TwoHatInstance::new(a, b).map_err(CliOutput::invalid)?;
    let order = if p2_first {
        TwoHatOrder::P2First
    } else {
        TwoHatOrder::P1First
    };
    let o = two_hat_simulate(&inst, order);
    Ok(CliOutput::ok(format!(
        "{} declares {} on turn {}\n",
        o.declarer, o.value, o.turn
    )))
}

fn colorhat(hats: &str) -> Result<CliOutput, CliOutput> {
    let inst: ColorHatInstance = hats.parse().map_err(CliOutput::invalid)?;
    let r = color_hat_simulate(&inst);
    let players = r
        .declarers
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    Ok(CliOutput::ok(format!(
        "round {}: players {players} declare red\n",
        r.ending_round
    )))
}
