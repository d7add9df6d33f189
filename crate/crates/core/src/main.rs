use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use active_irs::cli;
use active_irs::config::{parse_config, ExperimentKind};

#[derive(Parser, Debug)]
#[command(author, version, about = "Active-IRS link simulator", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Achievable rate versus BS-user distance
    Fig5(RunArgs),
    /// Received SNR versus number of elements
    Fig6(RunArgs),
    /// Best IRS position along a segment
    Placement(RunArgs),
    /// Single-point evaluation of every configured system
    Snr(RunArgs),
    /// SNR versus phase resolution
    QuantizeSweep(RunArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Reserved; all experiments are deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let (kind, args) = match &cli.command {
        Command::Fig5(a) => (ExperimentKind::Fig5, a),
        Command::Fig6(a) => (ExperimentKind::Fig6, a),
        Command::Placement(a) => (ExperimentKind::Placement, a),
        Command::Snr(a) => (ExperimentKind::Snr, a),
        Command::QuantizeSweep(a) => (ExperimentKind::QuantizeSweep, a),
    };
    let _ = args.seed;
    let config = parse_config(&args.config).with_context(|| format!("reading {}", args.config.display()))?;
    if config.kind != kind {
        bail!(
            "{} declares experiment `{}` but subcommand `{}` was given",
            args.config.display(),
            config.kind.name(),
            kind.name()
        );
    }
    let summary = cli::run(&config, args.out.as_deref())?;
    println!("{summary}");
    Ok(())
}
