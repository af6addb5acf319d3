use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod output;

use output::Format;

#[derive(Parser)]
#[command(name = "lawvere", version, about = "Quasi-metric spaces, approach spaces, completion and sobrification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate every space, approach table, order and topology in a file.
    Check { file: PathBuf },
    /// Structural and Smyth flags of each space.
    Classify { file: PathBuf },
    /// Yoneda completion of each space.
    Complete { file: PathBuf },
    /// Sobrification of each space and approach table.
    Sobrify { file: PathBuf },
    /// Sobriety of each space and approach table, with a witness on failure.
    IsSober { file: PathBuf },
    /// Cauchy classification and Yoneda limits of each net.
    Net { file: PathBuf },
    /// Finite topologies.
    Top {
        #[command(subcommand)]
        command: TopCommand,
    },
    /// Commutativity of the functor squares on seeded instances.
    Squares {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
    /// The exemplar half-line spaces.
    Halfline {
        #[command(subcommand)]
        command: HalflineCommand,
    },
    /// The seeded law suite.
    Props {
        #[command(subcommand)]
        command: PropsCommand,
    },
}

#[derive(Subcommand)]
enum TopCommand {
    /// Sobriety of each topology and of the Alexandroff topology of each order.
    Sober { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Distance {
    #[value(name = "deltaP")]
    DeltaP,
    #[value(name = "gammaDR")]
    GammaDr,
}

#[derive(Subcommand)]
enum HalflineCommand {
    /// Evaluate a distance from a point to an abstract subset.
    Eval {
        #[arg(value_enum)]
        distance: Distance,
        #[arg(long)]
        x: String,
        /// Supremum of the subset; ignored with --empty.
        #[arg(long, default_value = "0")]
        sup: String,
        #[arg(long)]
        contains_inf: bool,
        #[arg(long)]
        empty: bool,
    },
    /// Classify a described sequence.
    Seq {
        #[arg(long, default_value = "dR")]
        metric: String,
        /// `[v,...;] const v | affine a b | harmonic L c | diverge v1,v2,...`
        #[arg(long)]
        desc: String,
    },
}

#[derive(Subcommand)]
enum PropsCommand {
    /// Run every law, or one law with --law.
    Run(RunArgs),
    /// Re-run one law on a serialized counterexample.
    Replay {
        #[arg(long)]
        law: String,
        file: PathBuf,
    },
    /// List the registered laws.
    List,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    cases: usize,
    #[arg(long, default_value_t = 6)]
    max_points: usize,
    #[arg(long, default_value_t = 10)]
    samples: usize,
    #[arg(long)]
    law: Option<String>,
    /// Break the first generated space after generation.
    #[arg(long)]
    mutate: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = cli.format;
    let result = match cli.command {
        Command::Check { file } => commands::check(&file, f),
        Command::Classify { file } => commands::classify(&file, f),
        Command::Complete { file } => commands::complete(&file, f),
        Command::Sobrify { file } => commands::sobrify(&file, f),
        Command::IsSober { file } => commands::is_sober(&file, f),
        Command::Net { file } => commands::net(&file, f),
        Command::Top { command: TopCommand::Sober { file } } => commands::top_sober(&file, f),
        Command::Squares { seed, cases } => commands::squares(seed, cases, f),
        Command::Halfline { command } => match command {
            HalflineCommand::Eval {
                distance,
                x,
                sup,
                contains_inf,
                empty,
            } => commands::halfline_eval(matches!(distance, Distance::DeltaP), &x, &sup, contains_inf, empty, f),
            HalflineCommand::Seq { metric, desc } => commands::halfline_seq(&metric, &desc, f),
        },
        Command::Props { command } => match command {
            PropsCommand::Run(a) => commands::props_run(
                lawvere::SuiteConfig {
                    seed: a.seed,
                    cases: a.cases,
                    max_points: a.max_points,
                    samples: a.samples,
                    mutate: a.mutate,
                    ..lawvere::SuiteConfig::default()
                },
                a.law.as_deref(),
                f,
            ),
            PropsCommand::Replay { law, file } => commands::props_replay(&law, &file, f),
            PropsCommand::List => commands::props_list(f),
        },
    };
    match result {
        Ok(outcome) => outcome.exit_code(),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
