//! `grot`: orbit tables, orbit censuses, orbit boards and exhaustive
//! verification sweeps.
//!
//! Exit status: 0 on success, 1 when a verification sweep finds a failure,
//! 2 on invalid input.

mod commands;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grot_core::encoding::DecomposeMode;
use grot_core::sweep::{parse_range, Scope};
use grot_core::Execution;

use commands::{Failure, Space};
use output::Format;

#[derive(Parser, Debug)]
#[command(
    name = "grot",
    version,
    about = "Generalized rotation, its orbits and the toggle system"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Run sweeps and censuses on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Necklace,
    Enumerate,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The rho-orbit of a word, in application order.
    Orbit {
        word: String,
        #[arg(long)]
        m: usize,
        /// Add the ore, rw, qw and bqw columns.
        #[arg(long)]
        encoding: bool,
    },
    /// Frequency table of the cumulative sums over the orbit.
    Freq {
        word: String,
        #[arg(long)]
        m: usize,
        /// Use right cumulative sums.
        #[arg(long)]
        right: bool,
        /// Show a single column.
        #[arg(long)]
        j: Option<usize>,
    },
    /// Extension trace, index classes and (with --j) the M table.
    Trace {
        word: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Partition a state space into orbits.
    Decompose {
        #[arg(long = "n", visible_alias = "N")]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Space::Rho)]
        space: Space,
        /// Census algorithm for the rho space.
        #[arg(long, value_enum, default_value_t = Mode::Necklace)]
        mode: Mode,
        /// Raise the size cap to this value (acknowledges a large run).
        #[arg(long)]
        seed_cap: Option<usize>,
    },
    /// Exhaustive sweep of one identity over ranges such as 1..12.
    Verify {
        /// theorem1, lemmas, corollary, conjugacy, orbit-size, snake,
        /// snaketail, phi-symmetry, column-frequency, fast-size, bijection
        /// or z-conjecture.
        scope: Scope,
        #[arg(long = "n", visible_alias = "N", value_parser = parse_range)]
        n: std::ops::RangeInclusive<usize>,
        #[arg(long, value_parser = parse_range)]
        m: std::ops::RangeInclusive<usize>,
    },
    /// Orbit board of a spread-out word with its snakes labelled.
    Board {
        word: String,
        #[arg(long)]
        m: usize,
    },
}

fn run(cli: &Cli) -> Result<output::Rendered, Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::auto()
    };
    match &cli.command {
        Command::Orbit { word, m, encoding } => commands::orbit_cmd(word, *m, *encoding),
        Command::Freq { word, m, right, j } => commands::freq_cmd(word, *m, *right, *j),
        Command::Trace { word, m, j } => commands::trace_cmd(word, *m, *j),
        Command::Decompose {
            n,
            m,
            space,
            mode,
            seed_cap,
        } => {
            if let Some(cap) = seed_cap {
                eprintln!("warning: size cap overridden to {cap}; large runs may take long");
            }
            let mode = match mode {
                Mode::Necklace => DecomposeMode::Necklace,
                Mode::Enumerate => DecomposeMode::Enumerate,
            };
            commands::decompose_cmd(*n, *m, *space, mode, exec, *seed_cap)
        }
        Command::Verify { scope, n, m } => commands::verify_cmd(*scope, n.clone(), m.clone(), exec),
        Command::Board { word, m } => commands::board_cmd(word, *m),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(rendered) => match rendered.render(cli.format) {
            Ok(text) => {
                let mut out = std::io::stdout().lock();
                if out
                    .write_all(text.as_bytes())
                    .and_then(|_| out.flush())
                    .is_err()
                {
                    return ExitCode::from(2);
                }
                if rendered.failed {
                    ExitCode::from(1)
                } else {
                    ExitCode::SUCCESS
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
