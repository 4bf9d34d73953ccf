use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use chancoh_cli::{ad_sweep, classify, phase_cov, report, CliError, PhaseCovArgs};
use clap::{Parser, Subcommand};

/// Coherence measures of quantum channels via their Choi states.
#[derive(Parser)]
#[command(name = "chancoh", version)]
struct Cli {
    /// Validation tolerance for channel documents (completeness, Choi checks).
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every coherence measure of a channel document as JSON.
    Report { file: PathBuf },
    /// Print structural predicates (and the qubit affine form) as JSON.
    Classify { file: PathBuf },
    /// Amplitude-damping coherence sweep over p in [0, 1].
    AdSweep {
        #[arg(long, default_value_t = 101, value_parser = clap::value_parser!(u64).range(2..))]
        steps: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Phase-covariant trajectory with the monotonicity witness.
    PhaseCov {
        /// Coupling ratio gamma_0 / lambda.
        #[arg(long = "R")]
        r: f64,
        /// Ohmicity of the dephasing bath.
        #[arg(long)]
        s: f64,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        /// Cutoff ratio omega_c / lambda.
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 20.0)]
        tmax: f64,
        #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u64).range(1..))]
        steps: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Report { file } => report(&file, cli.tol),
        Command::Classify { file } => classify(&file, cli.tol),
        Command::AdSweep { steps, out } => {
            ad_sweep(steps as usize, &out)?;
            Ok(format!("wrote {}", out.display()))
        }
        Command::PhaseCov {
            r,
            s,
            alpha,
            beta,
            tmax,
            steps,
            out,
        } => {
            let args = PhaseCovArgs {
                coupling_ratio: r,
                ohmicity: s,
                alpha,
                beta,
                t_max: tmax,
                steps: steps as usize,
            };
            phase_cov(&args, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let _ = writeln!(std::io::stdout(), "{}", text.trim_end());
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
