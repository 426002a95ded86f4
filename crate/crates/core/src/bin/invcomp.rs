use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use invariant_compact::config::{self, RunConfig};

#[derive(Parser)]
#[command(version, about = "Compact and symmetry-preserving finite-difference experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, clap::Args)]
struct Opts {
    /// key=value config file
    #[arg(long)]
    config: Option<PathBuf>,
    /// key=value overrides applied after the file
    overrides: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Evolve one configuration and write its final profile
    Run(Opts),
    /// Grid-refinement study per scheme
    Converge(Opts),
    /// Boosted viscous Burgers comparison
    Galilean(Opts),
    /// Built-in quick checks
    Selftest(Opts),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    let result = config::configure_threads().and_then(|()| match &cli.command {
        Command::Selftest(_) => config::cmd_selftest(&mut out),
        Command::Run(o) | Command::Converge(o) | Command::Galilean(o) => {
            let cfg = RunConfig::load(o.config.as_deref(), &o.overrides)?;
            match cli.command {
                Command::Run(_) => config::cmd_run(&cfg, &mut out).map(|_| true),
                Command::Converge(_) => config::cmd_converge(&cfg, &mut out).map(|_| true),
                _ => config::cmd_galilean(&cfg, &mut out).map(|_| true),
            }
        }
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
