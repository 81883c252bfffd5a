//! `semitotal`: command-line front end for the solvers, verifiers and
//! reductions of `semitotal-core`.
//!
//! Every command writes one JSON document to standard output (`gen` without
//! `--output` writes the instance itself). Exit codes: 0 success, 1 invalid
//! input, 2 verification failure, 3 infeasible instance, 4 size cap exceeded.

mod args;
mod commands;
mod formats;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use serde_json::Value;

use args::{Cli, Command};
use output::{CliError, EXIT_INPUT, EXIT_OK};

fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.exit_code() == 0 { EXIT_OK } else { EXIT_INPUT };
        }
    };
    let result = match &cli.command {
        Command::Solve(a) => commands::solve(a),
        Command::Verify(a) => commands::verify_set(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::CheckReduction(a) => commands::check(a),
        Command::Gen(a) => commands::generate(a),
        Command::Bench(a) => commands::bench(a),
    };
    match result {
        Ok(outcome) => {
            emit(&outcome.document);
            outcome.exit_code
        }
        Err(e) => fail(&e),
    }
}

// Write errors (a closed pipe, say) are ignored: the exit code still
// reports the outcome.
fn emit(doc: &Value) {
    let mut out = std::io::stdout().lock();
    let _ = match doc {
        Value::String(text) => write!(out, "{text}"),
        other => writeln!(out, "{}", serde_json::to_string_pretty(other).expect("documents serialize")),
    };
}

fn fail(e: &CliError) -> i32 {
    eprintln!("error: {e}");
    emit(&e.document());
    e.exit_code()
}

fn main() {
    std::process::exit(run(std::env::args_os()));
}
