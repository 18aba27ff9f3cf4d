use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tjm_cli::{run_show_model, run_sweep, run_verify, CliError, Config, Outcome, OutputFormat, RunOptions};

#[derive(Parser)]
#[command(name = "tjm", version, about = "Exact checks for twisted Jacquet modules of depth-zero Speh representations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the check suite at one parameter point.
    Verify(Common),
    /// Run the check suite over a parameter grid.
    Sweep(Common),
    /// Print the pinned field polynomials, generators and conventions.
    ShowModel(Common),
}

#[derive(Args)]
struct Common {
    /// Flat TOML configuration file.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    /// Check group to run; repeatable. Overrides `checks` in the config.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Allow models larger than the default size limit.
    #[arg(long)]
    allow_large: bool,
    /// Write the report here instead of standard output.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn dispatch(cmd: Command) -> Result<(Outcome, Option<PathBuf>), CliError> {
    let (common, f): (Common, fn(&Config, &RunOptions) -> Result<Outcome, CliError>) = match cmd {
        Command::Verify(c) => (c, run_verify),
        Command::Sweep(c) => (c, run_sweep),
        Command::ShowModel(c) => (c, run_show_model),
    };
    let cfg = Config::load(&common.config)?;
    let opts = RunOptions { output: common.output, checks: common.checks, allow_large: common.allow_large };
    Ok((f(&cfg, &opts)?, common.report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((outcome, path)) => {
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, &outcome.text) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                    println!("{}: report written to {}", if outcome.passed { "PASS" } else { "FAIL" }, p.display());
                }
                None => print!("{}", outcome.text),
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
