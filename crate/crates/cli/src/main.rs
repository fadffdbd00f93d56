mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact bi-orderability analysis for groups `ℤ ⋉ F_n`.
#[derive(Debug, Parser)]
#[command(name = "biorder", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the obstruction pipeline on a presentation file or `corpus:NAME`.
    Analyze(AnalyzeArgs),
    /// Inspect or self-test the bundled presentations.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
    /// Run a randomized order-property probe.
    Probe(ProbeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Path to a presentation file, or `corpus:NAME`.
    source: String,
    #[arg(long, default_value_t = 1)]
    max_level: usize,
    /// Largest quotient rank the pipeline will factor.
    #[arg(long, default_value_t = 8)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Show {
        name: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    Verify {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProbeName {
    Subgroup,
    Normality,
    Dominance,
    Commutator,
    OrderPreservation,
    Invariance,
    WeakComparability,
}

#[derive(Debug, Args)]
struct ProbeArgs {
    #[arg(value_enum)]
    name: ProbeName,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 10)]
    max_word_length: usize,
    /// Search bound for weak comparability.
    #[arg(long, default_value_t = 3)]
    bound: usize,
    /// Reference element for subgroup, normality, dominance and weak comparability.
    #[arg(long, default_value = "x")]
    g: String,
    /// First element for weak comparability.
    #[arg(long, default_value = "x")]
    f: String,
    /// Generator names used to read words.
    #[arg(long, default_value = "x y")]
    generators: String,
    /// Map for order-preservation and invariance: a presentation file or
    /// `corpus:NAME`. Its generators replace `--generators`.
    #[arg(long)]
    map: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(commands::EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Analyze(args) => commands::analyze(&args),
        Command::Corpus { action } => commands::corpus(&action),
        Command::Probe(args) => commands::probe(&args),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
