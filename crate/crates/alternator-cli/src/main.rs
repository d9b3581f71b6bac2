//! `alternator` — strategies and exact bounds for the alternator-coin
//! puzzle, on the command line.
//!
//! Exit codes: 0 success (or a valid tree), 1 verification failure,
//! 2 usage or malformed-input error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use alternator::jacobsthal::{
    count_admissible_strings, enumerate_admissible_strings, jacobsthal, min_weighings_bound,
    trivial_bounds,
};
use alternator::model::{AlternatorState, CoinId, InitialState, World};
use alternator::search::{extract_optimal_tree, optimal_weighings};
use alternator::strategy::{RunError, StrategyTree};
use alternator::tree_doc;
use alternator::verifier::verify;

/// Largest string length the CLI will print.
const MAX_STRINGS_LENGTH: u32 = 12;
/// Largest search budget the CLI accepts.
const MAX_SEARCH_BUDGET: u32 = 10;

#[derive(Parser)]
#[command(
    name = "alternator",
    about = "Find the alternator coin: bounds, strategies, verification, search",
    long_about = "Find the alternator coin: bounds, strategies, verification, search.\n\n\
        One coin among N switches between weighing light (fake) and weighing \
        normal (real) each time it is placed on the balance scale. Starting \
        states: f = will act fake next, r = will act real next, a = unknown.\n\n\
        Coin ids are 0-indexed everywhere (puzzle write-ups usually count from 1)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print exact and elementary bounds for a range of coin counts.
    Bounds {
        /// Smallest coin count (>= 1).
        #[arg(long)]
        from: usize,
        /// Largest coin count.
        #[arg(long)]
        to: usize,
    },
    /// Build the optimal strategy tree and write it as a JSON document.
    Build {
        /// Number of coins (>= 1).
        #[arg(long)]
        coins: usize,
        /// Starting state of the alternator.
        #[arg(long, value_enum)]
        state: StateArg,
        /// Output path for the tree document.
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustively verify a tree document; exit 0 iff it is valid.
    Verify {
        /// Path to a tree document.
        path: PathBuf,
    },
    /// Play a tree against one concrete world and print the transcript.
    Simulate {
        /// Path to a tree document.
        path: PathBuf,
        /// Which coin is the alternator (0-indexed).
        #[arg(long)]
        alternator: usize,
        /// The alternator's true starting state.
        #[arg(long, value_enum)]
        start: StartArg,
    },
    /// Compute the exact optimum by adversarial game search.
    Search {
        /// Number of coins (>= 1).
        #[arg(long)]
        coins: usize,
        /// Starting state of the alternator.
        #[arg(long, value_enum)]
        state: StateArg,
        /// Depth budget for the search (<= 10).
        #[arg(long)]
        budget: u32,
        /// Also write one optimal tree found by the search.
        #[arg(long)]
        emit_tree: Option<PathBuf>,
        /// Cap on the coin count; raise it only if you accept the runtime.
        #[arg(long, default_value_t = 15)]
        max_coins: usize,
    },
    /// List every admissible outcome string of a given length.
    Strings {
        /// String length (<= 12).
        #[arg(long)]
        length: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StateArg {
    F,
    R,
    A,
}

impl From<StateArg> for InitialState {
    fn from(arg: StateArg) -> InitialState {
        match arg {
            StateArg::F => InitialState::Fake,
            StateArg::R => InitialState::Real,
            StateArg::A => InitialState::Unknown,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StartArg {
    F,
    R,
}

impl From<StartArg> for AlternatorState {
    fn from(arg: StartArg) -> AlternatorState {
        match arg {
            StartArg::F => AlternatorState::Fake,
            StartArg::R => AlternatorState::Real,
        }
    }
}

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

/// Streams line-oriented output, treating a closed pipe (e.g. `| head`)
/// as a normal end of output.
fn emit(write: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match write(&mut out).and_then(|()| out.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) if error.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Bounds { from, to } => cmd_bounds(from, to),
        Command::Build { coins, state, out } => cmd_build(coins, state.into(), &out),
        Command::Verify { path } => cmd_verify(&path),
        Command::Simulate {
            path,
            alternator,
            start,
        } => cmd_simulate(&path, alternator, start.into()),
        Command::Search {
            coins,
            state,
            budget,
            emit_tree,
            max_coins,
        } => cmd_search(coins, state.into(), budget, emit_tree.as_deref(), max_coins),
        Command::Strings { length } => cmd_strings(length),
    }
}

fn cmd_bounds(from: usize, to: usize) -> ExitCode {
    if from < 1 || from > to {
        return usage_error(format!("need 1 <= from <= to, got {from}..{to}"));
    }
    emit(|out| {
        writeln!(
            out,
            "{:>6} {:>4} {:>4} {:>4}  {:<12} {:<12} interval (a/r)",
            "N", "f", "r", "a", "trivial f", "trivial a/r"
        )?;
        for n in from..=to {
            let f = min_weighings_bound(n, InitialState::Fake);
            let r = min_weighings_bound(n, InitialState::Real);
            let a = min_weighings_bound(n, InitialState::Unknown);
            let (triv_f, triv_ar, interval) = if n >= 2 {
                let (flo, fhi) = trivial_bounds(n, InitialState::Fake).expect("n >= 2");
                let (alo, ahi) = trivial_bounds(n, InitialState::Unknown).expect("n >= 2");
                let j = |i: u32| {
                    jacobsthal(i)
                        .map(|v| v.to_string())
                        .unwrap_or_else(|_| format!("(2^{i}-(-1)^{i})/3"))
                };
                (
                    format!("{flo}..{fhi}"),
                    format!("{alo}..{ahi}"),
                    format!("J_{}={} < N <= J_{}={}", a, j(a), a + 1, j(a + 1)),
                )
            } else {
                ("-".to_string(), "-".to_string(), "-".to_string())
            };
            writeln!(
                out,
                "{n:>6} {f:>4} {r:>4} {a:>4}  {triv_f:<12} {triv_ar:<12} {interval}"
            )?;
        }
        Ok(())
    })
}

fn cmd_build(coins: usize, state: InitialState, out: &Path) -> ExitCode {
    if coins < 1 {
        return usage_error("need at least one coin");
    }
    let tree = StrategyTree::build(coins, state);
    match fs::write(out, tree_doc::to_json(&tree)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: cannot write {}: {error}", out.display());
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn load_tree(path: &Path) -> Result<StrategyTree, ExitCode> {
    let text = fs::read_to_string(path).map_err(|error| {
        eprintln!("error: cannot read {}: {error}", path.display());
        ExitCode::from(EXIT_USAGE)
    })?;
    tree_doc::from_json(&text).map_err(|error| {
        eprintln!("error: {}: {error}", path.display());
        ExitCode::from(EXIT_USAGE)
    })
}

fn cmd_verify(path: &Path) -> ExitCode {
    let tree = match load_tree(path) {
        Ok(tree) => tree,
        Err(code) => return code,
    };
    let report = verify(&tree);
    print!("{report}");
    let bound = min_weighings_bound(tree.n_coins(), tree.initial_state());
    println!(
        "optimal bound: {bound} ({})",
        if report.max_depth <= bound {
            "met"
        } else {
            "exceeded"
        }
    );
    if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVALID)
    }
}

fn cmd_simulate(path: &Path, alternator: usize, start: AlternatorState) -> ExitCode {
    let tree = match load_tree(path) {
        Ok(tree) => tree,
        Err(code) => return code,
    };
    if alternator >= tree.n_coins() {
        return usage_error(format!(
            "alternator {alternator} out of range for {} coins",
            tree.n_coins()
        ));
    }
    if !tree.initial_state().admits(start) {
        return usage_error(format!(
            "tree assumes starting state '{}' but the world starts in '{}'",
            tree.initial_state(),
            start.letter()
        ));
    }
    let world = World::new(tree.n_coins(), CoinId(alternator), start)
        .expect("arguments validated above");
    match tree.run(&world) {
        Ok(record) => {
            let mut current = world;
            for (step, (weighing, outcome)) in record.transcript.iter().enumerate() {
                let before = current.state();
                let (_, next) = current.weigh(weighing).expect("transcript weighings fit");
                let note = if weighing.contains(current.alternator()) {
                    format!("alternator weighed, state {} -> {}", before, next.state())
                } else {
                    format!("alternator off scale, state stays {before}")
                };
                println!("{}: weigh {weighing} -> {outcome}  ({note})", step + 1);
                current = next;
            }
            println!("alternator: {}", record.identified);
            ExitCode::SUCCESS
        }
        Err(RunError::ReachedUnreachable { outcomes }) => {
            eprintln!(
                "error: strategy is unsound for this world: reached an \
                 unreachable branch after \"{outcomes}\""
            );
            ExitCode::from(EXIT_INVALID)
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn cmd_search(
    coins: usize,
    state: InitialState,
    budget: u32,
    emit_tree: Option<&Path>,
    max_coins: usize,
) -> ExitCode {
    if coins < 1 {
        return usage_error("need at least one coin");
    }
    if coins > max_coins {
        return usage_error(format!(
            "searching {coins} coins exceeds the cap of {max_coins}; \
             pass --max-coins {coins} to accept the runtime"
        ));
    }
    if budget > MAX_SEARCH_BUDGET {
        return usage_error(format!(
            "budget {budget} exceeds the maximum {MAX_SEARCH_BUDGET}"
        ));
    }
    match optimal_weighings(coins, state, budget) {
        Some(value) => {
            let bound = min_weighings_bound(coins, state);
            if value == bound {
                println!("{value} (matches bound)");
            } else {
                println!("{value} (bound says {bound})");
            }
            if let Some(path) = emit_tree {
                let tree = extract_optimal_tree(coins, state, budget)
                    .expect("a tree exists whenever the value fits the budget");
                if let Err(error) = fs::write(path, tree_doc::to_json(&tree)) {
                    eprintln!("error: cannot write {}: {error}", path.display());
                    return ExitCode::from(EXIT_INVALID);
                }
            }
            ExitCode::SUCCESS
        }
        None => {
            println!("> {budget} (budget exhausted)");
            if emit_tree.is_some() {
                eprintln!("error: no tree within budget {budget}");
                return ExitCode::from(EXIT_INVALID);
            }
            ExitCode::SUCCESS
        }
    }
}

fn cmd_strings(length: u32) -> ExitCode {
    if length > MAX_STRINGS_LENGTH {
        return usage_error(format!(
            "length {length} exceeds the maximum {MAX_STRINGS_LENGTH}"
        ));
    }
    let count = count_admissible_strings(length).expect("length is small");
    let strings = enumerate_admissible_strings(length).expect("length is small");
    emit(move |out| {
        writeln!(out, "{count}")?;
        for string in &strings {
            writeln!(out, "{string}")?;
        }
        Ok(())
    })
}
