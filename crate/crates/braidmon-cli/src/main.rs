use std::path::PathBuf;
use std::process::ExitCode;

use braidmon::factorization::Doubling;
use braidmon_cli::pipeline::{self, Method, Report};
use braidmon_cli::CliError;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "braidmon", version, about = "Braid monodromy factorizations and the groups they present")]
struct Cli {
    /// Factorization file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Shipped fixture name (see `fixtures list`).
    #[arg(long, global = true)]
    fixture: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rs,
    Mcg,
}

#[derive(Clone, Copy, ValueEnum)]
enum DoublingArg {
    First,
    Second,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the product against the full twist, the census and the forgetting degrees.
    Validate,
    /// Count branch points, nodes, cusps and tangencies.
    Census,
    /// Degree of the forgetting map onto one doubled pair, or all of them.
    Forget {
        #[arg(long)]
        pair: Option<u32>,
    },
    /// Replace one factor by its regeneration.
    Regenerate {
        /// 1-based factor index.
        #[arg(long)]
        factor: usize,
        #[arg(long)]
        rule: u8,
        #[arg(long, value_enum, default_value_t = DoublingArg::Second)]
        doubling: DoublingArg,
    },
    /// Append the branch points missing from each doubled pair.
    Complete,
    /// Presentation of the curve complement.
    Pi1 {
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        simplify: bool,
        #[arg(long)]
        abelianize: bool,
    },
    /// Fundamental group of the surface minus its singular points.
    SurfacePi1 {
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long)]
        monodromy: Option<PathBuf>,
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
    /// Lift the factorization to the mapping class group of the torus.
    Lift {
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
    /// Fixture directory operations.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List the shipped factorizations.
    List,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    if let Command::Fixtures { action: FixturesAction::List } = cli.command {
        return pipeline::fixtures_list();
    }
    let src = pipeline::load(cli.input.as_deref(), cli.fixture.as_deref())?;
    match &cli.command {
        Command::Validate => pipeline::validate(&src),
        Command::Census => pipeline::census(&src),
        Command::Forget { pair } => pipeline::forget(&src, *pair),
        Command::Regenerate { factor, rule, doubling } => {
            let d = match doubling {
                DoublingArg::First => Doubling::First,
                DoublingArg::Second => Doubling::Second,
                DoublingArg::Both => Doubling::Both,
            };
            pipeline::regenerate(&src, *factor, *rule, d)
        }
        Command::Complete => pipeline::complete(&src),
        Command::Pi1 { projective, simplify, abelianize } => pipeline::pi1(&src, *projective, *simplify, *abelianize),
        Command::SurfacePi1 { method, monodromy, seeds } => {
            let m = match method {
                MethodArg::Rs => Method::Rs,
                MethodArg::Mcg => Method::Mcg,
            };
            pipeline::surface_pi1(&src, m, monodromy.as_deref(), seeds.as_deref())
        }
        Command::Lift { seeds } => pipeline::lift(&src, seeds.as_deref()),
        Command::Fixtures { .. } => unreachable!("handled above"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Text => print!("{}", report.text),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&report.json).expect("json values serialize"))
                }
            }
            ExitCode::from(report.status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
