//! Thin command-line front end over the experiment runners and the
//! property suite.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qpredict::experiments::{ExperimentCommand, RunConfig};
use qpredict::io::write_circuit_text;
use qpredict::{
    build_nrvnm_circuit_1q, build_nrvnm_circuit_nq, run_fig4_sweep, run_random_trios,
    run_property_suite, write_records_csv, ComplexMatrix, NoiseModel, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "qpredict",
    about = "Predictability, coherence, and purity as quantum resources: measures, monotones, and non-revealing measurement circuits",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct NoiseArgs {
    /// Enable the CNOT-depolarizing + readout-flip noise model.
    #[arg(long, overrides_with = "no_noise")]
    noise: bool,
    /// Disable the noise model (default).
    #[arg(long = "no-noise", overrides_with = "noise")]
    no_noise: bool,
    /// Two-qubit depolarizing rate after each CNOT.
    #[arg(long, default_value_t = 1.903e-2)]
    cnot_error: f64,
    /// Independent readout bit-flip rate.
    #[arg(long, default_value_t = 2.14e-2)]
    readout_error: f64,
}

impl NoiseArgs {
    fn build(&self) -> qpredict::Result<NoiseModel> {
        NoiseModel::new(self.cnot_error, self.readout_error, self.noise)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample random (state, X, Y) trios and record analytic vs shot-based
    /// predictability and coherence.
    RandomTrios {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 150)]
        trials: usize,
        #[arg(long, default_value_t = 8192)]
        shots: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Force Y to be the Fourier partner of X (default).
        #[arg(long, overrides_with = "random_y")]
        mu: bool,
        /// Sample Y independently of X.
        #[arg(long = "random-y", overrides_with = "mu")]
        random_y: bool,
        #[command(flatten)]
        noise: NoiseArgs,
        /// Write CSV here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Sweep the two-qubit product state over θ ∈ [0, π] and compare the
    /// computational-basis predictability with the B2-basis coherence.
    Fig4Sweep {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 8192)]
        shots: u64,
        #[arg(long, default_value_t = 13)]
        theta_steps: usize,
        #[command(flatten)]
        noise: NoiseArgs,
        #[arg(long)]
        out: Option<String>,
    },
    /// Run the full property suite and print a residual table.
    Verify {
        #[arg(long, default_value_t = 0x5EED)]
        seed: u64,
        /// Trial count for blocks whose size is not pinned by a contract.
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Print a non-revealing measurement circuit in the text gate format.
    CircuitDump {
        /// Polar angle of the measured qubit observable (1-qubit circuit).
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Azimuthal angle of the measured qubit observable.
        #[arg(long, default_value_t = 0.0)]
        phi: f64,
        /// Dump the n-qubit computational-basis circuit instead (CNOT
        /// fan-out onto n ancillas).
        #[arg(long)]
        qubits: Option<usize>,
        #[arg(long)]
        out: Option<String>,
    },
}

fn emit(path: &Option<String>, content: &str) -> qpredict::Result<()> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(Into::into),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn run() -> qpredict::Result<bool> {
    let cli = Cli::parse();
    match cli.command {
        Command::RandomTrios {
            seed,
            trials,
            shots,
            dim,
            mu: _,
            random_y,
            noise,
            out,
        } => {
            let cfg = RunConfig {
                command: ExperimentCommand::RandomTrios,
                master_seed: seed,
                trials,
                shots,
                dimension: dim,
                noise: noise.build()?,
                output_path: out.clone(),
                mu_partner: !random_y,
                ..RunConfig::default()
            };
            let records = run_random_trios(&cfg)?;
            emit(&out, &write_records_csv(&records))?;
            Ok(true)
        }
        Command::Fig4Sweep {
            seed,
            shots,
            theta_steps,
            noise,
            out,
        } => {
            let cfg = RunConfig {
                command: ExperimentCommand::Fig4Sweep,
                master_seed: seed,
                shots,
                dimension: 4,
                theta_steps,
                noise: noise.build()?,
                output_path: out.clone(),
                ..RunConfig::default()
            };
            let records = run_fig4_sweep(&cfg)?;
            emit(&out, &write_records_csv(&records))?;
            Ok(true)
        }
        Command::Verify { seed, trials } => {
            let report = run_property_suite(&VerifyOptions {
                seed,
                trials,
                tolerance_override: None,
            })?;
            print!("{}", report.render_table());
            Ok(report.all_passed())
        }
        Command::CircuitDump {
            theta,
            phi,
            qubits,
            out,
        } => {
            let circuit = match qubits {
                Some(n) => build_nrvnm_circuit_nq(&ComplexMatrix::identity(1 << n))?,
                None => build_nrvnm_circuit_1q(theta, phi),
            };
            emit(&out, &write_circuit_text(&circuit)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
