mod complete;
mod dehn;
mod free;
mod group;
mod hom;
mod knot;
mod quandle;
mod report;
mod sources;

use std::io::Write;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};

use report::CmdResult;

#[derive(Parser, Debug)]
#[command(name = "dehnkit", version, about = "Finite quandles from groups, surfaces and knots")]
struct Cli {
    /// Machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite groups from presets or generator files
    Group {
        #[command(subcommand)]
        action: group::Action,
    },
    /// Finite quandle tables
    Quandle {
        #[command(subcommand)]
        action: quandle::Action,
    },
    /// Dehn quandles D(A^G)
    Dehn {
        #[command(subcommand)]
        action: dehn::Action,
    },
    /// Homological quandles and symplectic groups
    Hom {
        #[command(subcommand)]
        action: hom::Action,
    },
    /// Complete an involutory presentation to a finite quandle
    Complete(complete::CompleteArgs),
    /// Knot diagrams, colorings and the trefoil torus model
    Knot {
        #[command(subcommand)]
        action: knot::Action,
    },
    /// Free and free involutory quandle words
    Free {
        #[command(subcommand)]
        action: free::Action,
    },
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Group { action } => group::run(action),
        Command::Quandle { action } => quandle::run(action, cli.seed),
        Command::Dehn { action } => dehn::run(action),
        Command::Hom { action } => hom::run(action, cli.seed),
        Command::Complete(args) => complete::run(args),
        Command::Knot { action } => knot::run(action),
        Command::Free { action } => free::run(action),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = out.write_all(report.render(cli.json).as_bytes());
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let name = Cli::command().get_name().to_string();
            eprintln!("error: {e}\n\nUsage: {name} [--json] [--seed N] <COMMAND>\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}
