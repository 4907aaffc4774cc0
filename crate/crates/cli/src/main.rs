mod commands;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use binomial_semigroups::{Error, Nat};
use clap::{ArgGroup, Parser, Subcommand};

use commands::CoreSource;
use output::{envelope, Format, Outcome};

const EXIT_MISMATCH: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Frobenius numbers, Apéry sets and core partitions for semigroups generated by binomial coefficients.
#[derive(Parser)]
#[command(name = "binsg", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form invariants of S(B_n) for composite n.
    Report { n: u64 },
    /// Invariants of the semigroup generated by the given integers.
    Semigroup {
        #[arg(required = true)]
        generators: Vec<Nat>,
        /// Element of S whose Apéry set is listed (defaults to the multiplicity).
        #[arg(long)]
        apery_base: Option<Nat>,
    },
    /// Writes C(n, m) over the minimal generators of S(B_n).
    Decompose { n: u64, m: u64 },
    /// Partition, hook set and A(S) of a numerical set.
    #[command(group(ArgGroup::new("source").required(true).args(["gaps", "semigroup"])))]
    Core {
        /// The gaps of the set (may be empty).
        #[arg(long, num_args = 0..)]
        gaps: Option<Vec<u64>>,
        /// Generators of a numerical semigroup.
        #[arg(long, num_args = 1..)]
        semigroup: Option<Vec<u64>>,
    },
    /// Runs the admissible-triple construction on S(B_n).
    Admissible {
        n: u64,
        seed: u64,
        p: u64,
        /// Allow prime powers, scanning Ap(S, p^{m-1}).
        #[arg(long)]
        force_base: bool,
    },
    /// Checks closed forms against the generic engine and the arithmetic identities.
    Verify {
        #[arg(long, default_value_t = 30)]
        max_n: u64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Report { .. } => "report",
            Command::Semigroup { .. } => "semigroup",
            Command::Decompose { .. } => "decompose",
            Command::Core { .. } => "core",
            Command::Admissible { .. } => "admissible",
            Command::Verify { .. } => "verify",
        }
    }
}

enum Failure {
    Usage(String),
    Library(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    Ok(match command {
        Command::Report { n } => commands::report(*n)?,
        Command::Semigroup { generators, apery_base } => commands::semigroup(generators, apery_base.clone())?,
        Command::Decompose { n, m } => commands::decompose_cmd(*n, *m)?,
        Command::Core { gaps, semigroup } => {
            let source = match (gaps, semigroup) {
                (_, Some(gens)) => CoreSource::Semigroup(gens.clone()),
                (Some(g), None) => CoreSource::Gaps(g.clone()),
                (None, None) => return Err(Failure::Usage("pass --gaps or --semigroup".into())),
            };
            commands::core(&source)?
        }
        Command::Admissible { n, seed, p, force_base } => commands::admissible(*n, *seed, *p, *force_base)?,
        Command::Verify { max_n } => {
            if *max_n > verify::MAX_VERIFY_N {
                return Err(Failure::Usage(format!("--max-n {max_n} exceeds the limit of {}", verify::MAX_VERIFY_N)));
            }
            verify::verify(*max_n)?
        }
    })
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_DOMAIN,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let started = Instant::now();
    let outcome = match run(&cli.command) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Library(e)) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_code_for(&e));
        }
    };
    let elapsed = started.elapsed().as_millis();
    let rendered = match cli.format {
        Format::Json => {
            let doc = envelope(cli.command.name(), &outcome, elapsed);
            serde_json::to_string_pretty(&doc).expect("JSON values always serialize")
        }
        Format::Text => outcome.text.join("\n"),
    };
    // A closed pipe (`binsg ... | head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{rendered}");
    if outcome.status != 0 {
        return ExitCode::from(EXIT_MISMATCH);
    }
    ExitCode::SUCCESS
}
