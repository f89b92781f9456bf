//! Experiment harness: random predictability/coherence trios, the two-qubit
//! θ sweep, and deterministic CSV records.

use std::f64::consts::PI;


use crate::channels::dephasing_channel;
use crate::circuits::{
    build_nrvnm_circuit_nq, estimate_measures_from_counts, sample_measurement, CountHistogram,
    NoiseModel,
};
use crate::error::{Error, Result};
use crate::io::format_sig;
use crate::linalg::{Complex64, ComplexMatrix};
use crate::measures::{coherence_re, predictability_vn};
use crate::states::{
    b2_basis, fourier_mub_partner, haar_random_state_vector, pure_state, random_basis, seeded_rng,
    sub_seed, DensityOperator, ObservableBasis,
};

/// CLI command selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExperimentCommand {
    RandomTrios,
    Fig4Sweep,
    Verify,
    CircuitDump,
}

/// Configuration shared by the experiment runners.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: ExperimentCommand,
    pub master_seed: u64,
    pub trials: usize,
    pub shots: u64,
    pub dimension: usize,
    pub theta_steps: usize,
    pub noise: NoiseModel,
    pub output_path: Option<String>,
    /// Random-trio runs: force Y to be the Fourier partner of X (true) or
    /// sample it independently (false).
    pub mu_partner: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            command: ExperimentCommand::RandomTrios,
            master_seed: 1,
            trials: 150,
            shots: 8192,
            dimension: 2,
            theta_steps: 13,
            noise: NoiseModel::disabled(),
            output_path: None,
            mu_partner: true,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::ConfigError("trials must be at least 1".into()));
        }
        if self.theta_steps < 2 {
            return Err(Error::ConfigError("theta-steps must be at least 2".into()));
        }
        if self.shots < 1 {
            return Err(Error::ConfigError("shots must be at least 1".into()));
        }
        Ok(())
    }
}

/// One trial row: analytic and shot-estimated measure values.
#[derive(Debug, Clone)]
pub struct ExperimentRecord {
    pub trial_id: usize,
    pub seed: u64,
    /// Sweep angle; absent for non-sweep commands.
    pub theta: Option<f64>,
    pub p_theory: f64,
    pub c_theory: f64,
    pub p_sim: f64,
    pub c_sim: f64,
    pub shots: u64,
    pub noise_enabled: bool,
}

impl ExperimentRecord {
    fn validated(self, dim: usize) -> Result<Self> {
        let max = (dim as f64).log2() + 1e-9;
        for (name, v) in [("p_theory", self.p_theory), ("c_theory", self.c_theory)] {
            if !(-1e-9..=max).contains(&v) {
                return Err(Error::ConfigError(format!(
                    "{name} = {v} outside [0, log2 {dim}]"
                )));
            }
        }
        if !self.p_sim.is_finite() || !self.c_sim.is_finite() {
            return Err(Error::ConfigError("non-finite shot estimate".into()));
        }
        Ok(self)
    }
}

/// CSV header shared by all experiment outputs.
pub const CSV_HEADER: &str = "trial_id,seed,theta,p_theory,c_theory,p_sim,c_sim,shots,noise";

/// Render records as CSV. Floats carry 10 significant digits; the theta
/// column stays empty for non-sweep commands.
pub fn write_records_csv(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let theta = r.theta.map(|t| format_sig(t, 10)).unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            r.trial_id,
            r.seed,
            theta,
            format_sig(r.p_theory, 10),
            format_sig(r.c_theory, 10),
            format_sig(r.p_sim, 10),
            format_sig(r.c_sim, 10),
            r.shots,
            r.noise_enabled
        ));
    }
    out
}

/// Multinomial counts drawn directly from a probability vector.
fn sample_counts(probs: &[f64], shots: u64, seed: u64) -> CountHistogram {
    let mut rng = seeded_rng(seed);
    crate::circuits::multinomial_sample(probs, shots, &mut rng)
}

/// Shot-based (P, C) estimate for one sampled trio.
fn simulate_trio(
    psi: &[Complex64],
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
    cfg: &RunConfig,
    seed: u64,
) -> Result<(f64, f64)> {
    let d = rho.dim();
    let seed_x = sub_seed(seed, 40);
    let seed_y = sub_seed(seed, 41);

    if d.is_power_of_two() {
        // Run the dilation circuit, then read the dephased state in the X
        // and Y bases.
        let circuit = build_nrvnm_circuit_nq(&x.unitary())?;
        let anc_dim = 1usize << circuit.num_ancilla_qubits();
        let mut input = vec![Complex64::new(0.0, 0.0); d * anc_dim];
        input[..d].copy_from_slice(psi);
        let bc_x = x.unitary().dagger();
        let bc_y = y.unitary().dagger();
        let counts_x =
            sample_measurement(&circuit, &input, Some(&bc_x), cfg.shots, &cfg.noise, seed_x)?;
        let counts_y =
            sample_measurement(&circuit, &input, Some(&bc_y), cfg.shots, &cfg.noise, seed_y)?;
        estimate_measures_from_counts(&counts_x, &counts_y, d)
    } else {
        // No qubit register realizes this dimension; sample the analytic
        // outcome distributions directly.
        if cfg.noise.enabled {
            return Err(Error::ConfigError(format!(
                "the CNOT/readout noise model needs a power-of-two dimension, got {d}"
            )));
        }
        let dephased = dephasing_channel(x).apply(rho)?;
        let probs_x = dephased.diagonal_in_basis(x)?;
        let probs_y = dephased.diagonal_in_basis(y)?;
        let counts_x = sample_counts(&probs_x, cfg.shots, seed_x);
        let counts_y = sample_counts(&probs_y, cfg.shots, seed_y);
        estimate_measures_from_counts(&counts_x, &counts_y, d)
    }
}

/// Sample `trials` random trios (ρ pure, X, Y), recording the analytic
/// P^X(ρ) and C^Y(Φ_X ρ) next to their shot-based estimates.
pub fn run_random_trios(cfg: &RunConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    let d = cfg.dimension;
    if !(2..=4).contains(&d) {
        return Err(Error::ConfigError(format!(
            "random-trios supports dimensions 2, 3, 4; got {d}"
        )));
    }

    let mut records = Vec::with_capacity(cfg.trials);
    for trial_id in 0..cfg.trials {
        let seed = cfg.master_seed.wrapping_add(trial_id as u64);
        let psi = haar_random_state_vector(d, sub_seed(seed, 1))?;
        let rho = pure_state(&psi)?;
        let x = random_basis(d, sub_seed(seed, 2))?;
        let y = if cfg.mu_partner {
            fourier_mub_partner(&x)
        } else {
            random_basis(d, sub_seed(seed, 3))?
        };

        let p_theory = predictability_vn(&rho, &x)?;
        let dephased = dephasing_channel(&x).apply(&rho)?;
        let c_theory = coherence_re(&dephased, &y)?;

        let (p_sim, c_sim) = simulate_trio(&psi, &rho, &x, &y, cfg, seed)?;

        records.push(
            ExperimentRecord {
                trial_id,
                seed,
                theta: None,
                p_theory,
                c_theory,
                p_sim,
                c_sim,
                shots: cfg.shots,
                noise_enabled: cfg.noise.enabled,
            }
            .validated(d)?,
        );
    }
    Ok(records)
}

/// The two-qubit sweep state cos²(θ/2)|00⟩ + sin²(θ/2)|11⟩ +
/// sin(θ/2)cos(θ/2)(|01⟩ + |10⟩).
pub fn sweep_state_vector(theta: f64) -> Vec<Complex64> {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    vec![
        Complex64::new(c * c, 0.0),
        Complex64::new(s * c, 0.0),
        Complex64::new(s * c, 0.0),
        Complex64::new(s * s, 0.0),
    ]
}

/// Sweep θ over [0, π]: predictability with reference to the computational
/// two-qubit basis and coherence of the dephased state with reference to
/// the mutually unbiased B2 basis, analytic and shot-simulated through the
/// CNOT fan-out circuit.
pub fn run_fig4_sweep(cfg: &RunConfig) -> Result<Vec<ExperimentRecord>> {
    cfg.validate()?;
    if cfg.dimension != 4 {
        return Err(Error::ConfigError(format!(
            "the sweep is a two-qubit experiment (dimension 4), got {}",
            cfg.dimension
        )));
    }
    let kappa = ObservableBasis::computational(4);
    let b2 = b2_basis();
    let circuit = build_nrvnm_circuit_nq(&ComplexMatrix::identity(4))?;
    let bc_y = b2.unitary().dagger();

    let mut records = Vec::with_capacity(cfg.theta_steps);
    for i in 0..cfg.theta_steps {
        let theta = PI * i as f64 / (cfg.theta_steps - 1) as f64;
        let seed = cfg.master_seed.wrapping_add(i as u64);

        let psi = sweep_state_vector(theta);
        let rho = pure_state(&psi)?;
        let p_theory = predictability_vn(&rho, &kappa)?;
        let dephased = dephasing_channel(&kappa).apply(&rho)?;
        let c_theory = coherence_re(&dephased, &b2)?;

        let mut input = vec![Complex64::new(0.0, 0.0); 16];
        input[..4].copy_from_slice(&psi);
        let counts_x = sample_measurement(
            &circuit,
            &input,
            None,
            cfg.shots,
            &cfg.noise,
            sub_seed(seed, 40),
        )?;
        let counts_y = sample_measurement(
            &circuit,
            &input,
            Some(&bc_y),
            cfg.shots,
            &cfg.noise,
            sub_seed(seed, 41),
        )?;
        let (p_sim, c_sim) = estimate_measures_from_counts(&counts_x, &counts_y, 4)?;

        records.push(
            ExperimentRecord {
                trial_id: i,
                seed,
                theta: Some(theta),
                p_theory,
                c_theory,
                p_sim,
                c_sim,
                shots: cfg.shots,
                noise_enabled: cfg.noise.enabled,
            }
            .validated(4)?,
        );
    }
    Ok(records)
}

/// Closed-form sweep predictability: 2 − H({cos⁴, sin⁴, s², s²}) with
/// s² = sin²(θ/2)cos²(θ/2). Used as an independent cross-check of the
/// measure pipeline.
pub fn sweep_predictability_closed_form(theta: f64) -> f64 {
    let (c2, s2) = ((theta / 2.0).cos().powi(2), (theta / 2.0).sin().powi(2));
    let probs = [c2 * c2, s2 * c2, s2 * c2, s2 * s2];
    let h: f64 = probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.log2())
        .sum();
    2.0 - h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trios_mu_rows_satisfy_equality() {
        let cfg = RunConfig {
            trials: 25,
            shots: 256,
            ..RunConfig::default()
        };
        let records = run_random_trios(&cfg).unwrap();
        assert_eq!(records.len(), 25);
        for r in &records {
            assert!((r.p_theory - r.c_theory).abs() < 1e-10);
        }
    }

    #[test]
    fn trios_random_y_rows_satisfy_inequality() {
        let cfg = RunConfig {
            trials: 25,
            shots: 256,
            mu_partner: false,
            ..RunConfig::default()
        };
        for d in [2usize, 3, 4] {
            let cfg = RunConfig {
                dimension: d,
                noise: NoiseModel::disabled(),
                ..cfg.clone()
            };
            let records = run_random_trios(&cfg).unwrap();
            for r in &records {
                assert!(r.c_theory <= r.p_theory + 1e-10);
            }
        }
    }

    #[test]
    fn trios_csv_is_deterministic() {
        let cfg = RunConfig {
            trials: 1,
            shots: 64,
            ..RunConfig::default()
        };
        let a = write_records_csv(&run_random_trios(&cfg).unwrap());
        let b = write_records_csv(&run_random_trios(&cfg).unwrap());
        assert_eq!(a, b);
        assert!(a.starts_with(CSV_HEADER));
    }

    #[test]
    fn trios_reject_bad_config() {
        let cfg = RunConfig {
            trials: 0,
            ..RunConfig::default()
        };
        assert!(matches!(run_random_trios(&cfg), Err(Error::ConfigError(_))));

        let cfg = RunConfig {
            dimension: 3,
            noise: NoiseModel::default(),
            trials: 1,
            ..RunConfig::default()
        };
        assert!(matches!(run_random_trios(&cfg), Err(Error::ConfigError(_))));
    }

    #[test]
    fn sweep_endpoints() {
        let cfg = RunConfig {
            command: ExperimentCommand::Fig4Sweep,
            dimension: 4,
            trials: 1,
            theta_steps: 13,
            shots: 512,
            ..RunConfig::default()
        };
        let records = run_fig4_sweep(&cfg).unwrap();
        assert_eq!(records.len(), 13);

        // θ = 0 → P = C = 2; θ = π/2 → 0; θ = π → 2.
        assert!((records[0].p_theory - 2.0).abs() < 1e-10);
        assert!((records[0].c_theory - 2.0).abs() < 1e-10);
        assert!(records[6].p_theory.abs() < 1e-10);
        assert!(records[6].c_theory.abs() < 1e-10);
        assert!((records[12].p_theory - 2.0).abs() < 1e-10);
        assert!((records[12].c_theory - 2.0).abs() < 1e-10);

        // MU equality at every grid point; closed form matches the measure
        // pipeline.
        for r in &records {
            assert!((r.p_theory - r.c_theory).abs() < 1e-10);
            let theta = r.theta.unwrap();
            assert!((r.p_theory - sweep_predictability_closed_form(theta)).abs() < 1e-10);
        }
    }

    #[test]
    fn analytic_columns_ignore_shots_and_noise() {
        let base = RunConfig {
            trials: 5,
            shots: 128,
            ..RunConfig::default()
        };
        let more_shots = RunConfig {
            shots: 1024,
            ..base.clone()
        };
        let noisy = RunConfig {
            noise: NoiseModel::default(),
            ..base.clone()
        };
        let a = run_random_trios(&base).unwrap();
        let b = run_random_trios(&more_shots).unwrap();
        let c = run_random_trios(&noisy).unwrap();
        for ((x, y), z) in a.iter().zip(&b).zip(&c) {
            assert_eq!(x.p_theory, y.p_theory);
            assert_eq!(x.c_theory, y.c_theory);
            assert_eq!(x.p_theory, z.p_theory);
            assert_eq!(x.c_theory, z.c_theory);
        }
    }
}
