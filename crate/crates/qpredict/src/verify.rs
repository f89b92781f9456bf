//! Property suite: every module's invariant block as a named check with a
//! measured residual, runnable from the CLI (`verify`) and from the
//! acceptance tests.

use std::f64::consts::PI;

use crate::channels::{
    check_commuting_condition, dephasing_channel, diagonal_unitary_channel, double_dephasing,
    is_cptp, monitoring_lambda, monitoring_theta,
};
use crate::circuits::{
    bootstrap_sigma, build_nrvnm_circuit_1q, build_nrvnm_circuit_nq, estimate_measures_from_counts,
    sample_measurement, NoiseModel,
};
use crate::composite::{
    check_joint_decomposition, conditional_predictability, joint_predictability,
    maximally_entangled, BipartiteState,
};
use crate::error::{Error, Result};
use crate::experiments::{
    run_fig4_sweep, run_random_trios, sweep_predictability_closed_form, write_records_csv,
    ExperimentCommand, RunConfig,
};
use crate::gellmann::{gell_mann_basis, gell_mann_decompose, gell_mann_reconstruct};
use crate::linalg::{
    kron, linear_relative_entropy, relative_entropy, trace_distance, von_neumann_entropy,
    Complex64,
};
use crate::measures::{
    check_basis_sum_invariance, check_pc_equality, check_pc_inequality, coherence_re,
    predictability_linear, predictability_vn, witness_operator,
};
use crate::states::{
    fourier_mub_partner, free_state, haar_random_pure, haar_random_state_vector,
    haar_random_unitary, is_free_state, random_basis, random_density, sub_seed, DensityOperator,
    ObservableBasis,
};

/// One verified property with its measured worst-case residual.
#[derive(Debug, Clone)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub details: String,
}

impl PropertyCheck {
    fn evaluate(name: &'static str, max_residual: f64, tolerance: f64, details: String) -> Self {
        Self {
            name,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            details,
        }
    }
}

/// Options for the property suite.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Trial count for blocks whose size is not pinned by a contract.
    pub trials: usize,
    /// Replace every check's tolerance (failure-path testing).
    pub tolerance_override: Option<f64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0x5EED,
            trials: 100,
            tolerance_override: None,
        }
    }
}

/// Outcome of the whole suite.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub checks: Vec<PropertyCheck>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Human-readable residual table.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<42} {:>13} {:>10}  result\n",
            "property", "max residual", "tolerance"
        ));
        for c in &self.checks {
            out.push_str(&format!(
                "{:<42} {:>13.3e} {:>10.1e}  {}\n",
                c.name,
                c.max_residual,
                c.tolerance,
                if c.passed { "pass" } else { "FAIL" }
            ));
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!(
            "{} checks, {} failed\n",
            self.checks.len(),
            failed
        ));
        out
    }
}

fn tol(opts: &VerifyOptions, default: f64) -> f64 {
    opts.tolerance_override.unwrap_or(default)
}

// ---------------------------------------------------------------------------
// linalg block
// ---------------------------------------------------------------------------

/// 0 ≤ S_vn(ρ) ≤ log2 d on random pure and mixed states.
pub fn check_entropy_bounds(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..opts.trials {
            let seed = sub_seed(opts.seed, (d * 1000 + i) as u64);
            let rho = if i % 2 == 0 {
                haar_random_pure(d, seed)?
            } else {
                random_density(d, seed)?
            };
            let s = von_neumann_entropy(&rho)?;
            worst = worst.max(-s).max(s - (d as f64).log2());
        }
    }
    Ok(PropertyCheck::evaluate(
        "entropy bounds 0 <= S <= log2 d",
        worst,
        tol(opts, 1e-9),
        format!("{} states per dimension 2..4", opts.trials),
    ))
}

/// Klein inequality S(ρ‖σ) ≥ 0, with equality only at ρ = σ.
pub fn check_klein_inequality(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..opts.trials {
            let rho = random_density(d, sub_seed(opts.seed, (d * 2000 + i) as u64))?;
            let sigma = random_density(d, sub_seed(opts.seed, (d * 3000 + i) as u64))?;
            let rel = relative_entropy(&rho, &sigma)?;
            worst = worst.max(-rel);
            // Identical arguments give zero.
            worst = worst.max(relative_entropy(&rho, &rho)?.abs());
        }
    }
    Ok(PropertyCheck::evaluate(
        "Klein inequality S(rho||sigma) >= 0",
        worst,
        tol(opts, 1e-10),
        format!("{} random pairs per dimension 2..4", opts.trials),
    ))
}

/// Trace distance contracts under every constructed channel applied to both
/// arguments.
pub fn check_trace_distance_contractive(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let x = ObservableBasis::computational(d);
        let y = fourier_mub_partner(&x);
        let channels = vec![
            dephasing_channel(&x),
            double_dephasing(&x, &y)?,
            monitoring_lambda(&x, &y, 0.35)?,
            monitoring_theta(&x, 0.6)?,
            diagonal_unitary_channel(&x, &(0..d).map(|j| 0.4 * j as f64).collect::<Vec<_>>())?,
        ];
        for i in 0..opts.trials {
            let rho = random_density(d, sub_seed(opts.seed, (d * 4000 + i) as u64))?;
            let sigma = random_density(d, sub_seed(opts.seed, (d * 5000 + i) as u64))?;
            let before = trace_distance(&rho, &sigma)?;
            let ch = &channels[i % channels.len()];
            let after = trace_distance(&ch.apply(&rho)?, &ch.apply(&sigma)?)?;
            worst = worst.max(after - before);
        }
    }
    Ok(PropertyCheck::evaluate(
        "trace distance contractive under channels",
        worst,
        tol(opts, 1e-9),
        format!("{} random pairs per dimension 2..4", opts.trials),
    ))
}

/// partial_trace(kron(a, b), keep A) = a for density operators.
pub fn check_partial_trace_kron(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for i in 0..opts.trials {
        let (da, db) = ([2, 3][i % 2], [2, 3][(i / 2) % 2]);
        let a = random_density(da, sub_seed(opts.seed, (6000 + i) as u64))?;
        let b = random_density(db, sub_seed(opts.seed, (7000 + i) as u64))?;
        let ab = DensityOperator::new(kron(a.matrix(), b.matrix()))?;
        let reduced = crate::linalg::partial_trace(&ab, &[da, db], &[0])?;
        worst = worst.max(reduced.matrix().frobenius_distance(a.matrix()));
    }
    Ok(PropertyCheck::evaluate(
        "partial_trace inverts kron",
        worst,
        tol(opts, 1e-12),
        format!("{} random product states", opts.trials),
    ))
}

/// S_l(ρ_diag ‖ I/d) = Σ ρ_jj² − 1/d on random diagonals.
pub fn check_linear_entropy_identity(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let x = ObservableBasis::computational(d);
        for i in 0..opts.trials {
            let rho = random_density(d, sub_seed(opts.seed, (d * 8000 + i) as u64))?;
            let diag = dephasing_channel(&x).apply(&rho)?;
            let lhs = linear_relative_entropy(&diag, &DensityOperator::maximally_mixed(d))?;
            let probs = diag.diagonal_in_basis(&x)?;
            let rhs = probs.iter().map(|p| p * p).sum::<f64>() - 1.0 / d as f64;
            worst = worst.max((lhs - rhs).abs());
        }
    }
    Ok(PropertyCheck::evaluate(
        "linear relative entropy diagonal identity",
        worst,
        tol(opts, 1e-12),
        format!("{} random diagonals per dimension", opts.trials),
    ))
}

// ---------------------------------------------------------------------------
// states block
// ---------------------------------------------------------------------------

/// Fourier partner overlaps are 1/d for all j, k, d ≤ 6.
pub fn check_fourier_mub_overlaps(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=6 {
        for i in 0..opts.trials.min(20) {
            let basis = random_basis(d, sub_seed(opts.seed, (d * 9000 + i) as u64))?;
            let partner = fourier_mub_partner(&basis);
            worst = worst.max(basis.mutual_unbiasedness_deviation(&partner)?);
        }
    }
    Ok(PropertyCheck::evaluate(
        "fourier partner mutually unbiased, d <= 6",
        worst,
        tol(opts, 1e-12),
        "random source bases per dimension 2..6".into(),
    ))
}

/// free_state output passes is_free_state on a (p, phases) grid.
pub fn check_free_state_membership(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let basis = random_basis(d, sub_seed(opts.seed, d as u64))?;
        for (i, p) in [0.0, 0.25, 0.5, 0.75, 1.0].iter().enumerate() {
            for k in 0..8 {
                let phases: Vec<f64> = (0..d)
                    .map(|j| 2.0 * PI * ((j + k + i) as f64) / 7.3)
                    .collect();
                let v = free_state(d, *p, &phases, &basis)?;
                let probs = v.diagonal_in_basis(&basis)?;
                let target = 1.0 / d as f64;
                for q in probs {
                    worst = worst.max((q - target).abs());
                }
                debug_assert!(is_free_state(&v, &basis, 1e-10)?);
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "free states have uniform diagonals",
        worst,
        tol(opts, 1e-10),
        "grid over p and phases, d in 2..4".into(),
    ))
}

/// Gell-Mann decompose/reconstruct round trip.
pub fn check_gellmann_roundtrip(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let g = gell_mann_basis(&ObservableBasis::computational(d))?;
        for i in 0..opts.trials {
            let rho = random_density(d, sub_seed(opts.seed, (d * 10_000 + i) as u64))?;
            let coeffs = gell_mann_decompose(&rho, &g)?;
            let back = gell_mann_reconstruct(&coeffs, &g);
            worst = worst.max(back.frobenius_distance(rho.matrix()));
        }
    }
    Ok(PropertyCheck::evaluate(
        "Gell-Mann decompose/reconstruct identity",
        worst,
        tol(opts, 1e-10),
        format!("{} random states per dimension", opts.trials),
    ))
}

/// Diagonal Gell-Mann coefficients of free states vanish.
pub fn check_free_state_gellmann(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let basis = ObservableBasis::computational(d);
        let g = gell_mann_basis(&basis)?;
        for i in 0..opts.trials.min(40) {
            let p = (i % 5) as f64 / 4.0;
            let phases: Vec<f64> = (0..d).map(|j| 1.3 * (j + i) as f64).collect();
            let v = free_state(d, p, &phases, &basis)?;
            let coeffs = gell_mann_decompose(&v, &g)?;
            for c in &coeffs.diagonal {
                worst = worst.max(c.abs());
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "free states have no diagonal GMM component",
        worst,
        tol(opts, 1e-10),
        "generator family over p grid".into(),
    ))
}

/// Distinct Haar seeds give distinct states (collision smoke test).
pub fn check_haar_collisions(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let states: Vec<DensityOperator> = (0..100)
        .map(|i| haar_random_pure(2, sub_seed(opts.seed, 11_000 + i)))
        .collect::<Result<_>>()?;
    let mut max_fidelity: f64 = 0.0;
    for i in 0..states.len() {
        for j in (i + 1)..states.len() {
            let fid = states[i].matrix().matmul(states[j].matrix()).trace().re;
            max_fidelity = max_fidelity.max(fid);
        }
    }
    Ok(PropertyCheck::evaluate(
        "haar sampling collision smoke test",
        max_fidelity,
        tol(opts, 1.0 - 1e-6),
        "100 seeds, pairwise fidelity".into(),
    ))
}

// ---------------------------------------------------------------------------
// channels block
// ---------------------------------------------------------------------------

/// Every constructed channel satisfies Kraus completeness.
pub fn check_channels_cptp(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..opts.trials.min(25) {
            let x = random_basis(d, sub_seed(opts.seed, (d * 12_000 + i) as u64))?;
            let y = fourier_mub_partner(&x);
            let eps = (i % 5) as f64 / 4.0;
            let phases: Vec<f64> = (0..d).map(|j| 0.9 * (j + i) as f64).collect();
            for ch in [
                dephasing_channel(&x),
                double_dephasing(&x, &y)?,
                monitoring_lambda(&x, &y, eps)?,
                monitoring_theta(&x, eps)?,
                diagonal_unitary_channel(&x, &phases)?,
            ] {
                worst = worst.max(ch.completeness_deviation());
                debug_assert!(is_cptp(&ch, 1e-10));
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "constructed channels are CPTP",
        worst,
        tol(opts, 1e-10),
        "all channel families, random bases".into(),
    ))
}

/// Dephasing twice equals dephasing once.
pub fn check_dephasing_idempotent(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let trials = opts.trials.max(100);
        for i in 0..trials {
            let x = random_basis(d, sub_seed(opts.seed, (d * 13_000 + i) as u64))?;
            let ch = dephasing_channel(&x);
            let rho = random_density(d, sub_seed(opts.seed, (d * 14_000 + i) as u64))?;
            let once = ch.apply(&rho)?;
            let twice = ch.apply(&once)?;
            worst = worst.max(twice.matrix().frobenius_distance(once.matrix()));
        }
    }
    Ok(PropertyCheck::evaluate(
        "dephasing idempotent",
        worst,
        tol(opts, 1e-12),
        "100+ random states per dimension 2..4".into(),
    ))
}

/// Double dephasing with MU bases is input independent.
pub fn check_double_dephasing_erases(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let x = random_basis(d, sub_seed(opts.seed, 15_000 + d as u64))?;
        let y = fourier_mub_partner(&x);
        let ch = double_dephasing(&x, &y)?;
        let outputs: Vec<DensityOperator> = (0..50)
            .map(|i| {
                let rho = random_density(d, sub_seed(opts.seed, (d * 16_000 + i) as u64))?;
                ch.apply(&rho)
            })
            .collect::<Result<_>>()?;
        for i in 0..outputs.len() {
            for j in (i + 1)..outputs.len() {
                worst = worst.max(
                    outputs[i]
                        .matrix()
                        .frobenius_distance(outputs[j].matrix()),
                );
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "MU double dephasing input independent",
        worst,
        tol(opts, 1e-10),
        "50 random inputs per dimension".into(),
    ))
}

/// Θ_ε never moves the dephased state, for ε on the grid.
pub fn check_theta_preserves_dephased(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let x = random_basis(d, sub_seed(opts.seed, 17_000 + d as u64))?;
        let dephase = dephasing_channel(&x);
        for i in 0..opts.trials.min(40) {
            let rho = random_density(d, sub_seed(opts.seed, (d * 18_000 + i) as u64))?;
            let reference = dephase.apply(&rho)?;
            for eps in [0.0, 0.25, 0.5, 0.75, 1.0] {
                let theta = monitoring_theta(&x, eps)?;
                let after = dephase.apply(&theta.apply(&rho)?)?;
                worst = worst.max(after.matrix().frobenius_distance(reference.matrix()));
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "theta map preserves the dephased state",
        worst,
        tol(opts, 1e-12),
        "eps grid {0, .25, .5, .75, 1}".into(),
    ))
}

/// Diagonal unitaries never change reference-basis diagonals.
pub fn check_diagonal_unitary_fixes_diagonal(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let x = random_basis(d, sub_seed(opts.seed, 19_000 + d as u64))?;
        for i in 0..opts.trials.min(40) {
            let phases: Vec<f64> = (0..d).map(|j| 2.1 * (j * i + 1) as f64).collect();
            let ch = diagonal_unitary_channel(&x, &phases)?;
            let rho = random_density(d, sub_seed(opts.seed, (d * 20_000 + i) as u64))?;
            let before = rho.diagonal_in_basis(&x)?;
            let after = ch.apply(&rho)?.diagonal_in_basis(&x)?;
            for (b, a) in before.iter().zip(&after) {
                worst = worst.max((b - a).abs());
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "diagonal unitaries fix basis diagonals",
        worst,
        tol(opts, 1e-12),
        "random phases and states".into(),
    ))
}

/// Commuting condition Λ_ε∘Φ_XY = Φ_XY∘Λ_ε, plus the fixed-point and
/// free-part consequences.
pub fn check_commuting_condition_suite(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=3 {
        let x = random_basis(d, sub_seed(opts.seed, 21_000 + d as u64))?;
        let y = fourier_mub_partner(&x);
        for eps in [0.0, 0.3, 0.7, 1.0] {
            worst = worst.max(check_commuting_condition(
                &x,
                &y,
                eps,
                opts.trials.min(50),
                sub_seed(opts.seed, 22_000),
            )?);

            // Consequence: Φ_XY ∘ Λ_ε = Φ_XY ∘ Λ_ε ∘ Φ_XY (the map cannot
            // move resources into the free part).
            let lambda = monitoring_lambda(&x, &y, eps)?;
            let destroy = double_dephasing(&x, &y)?;
            for i in 0..10 {
                let rho = random_density(d, sub_seed(opts.seed, (d * 23_000 + i) as u64))?;
                let left = destroy.apply(&lambda.apply(&rho)?)?;
                let right = destroy.apply(&lambda.apply(&destroy.apply(&rho)?)?)?;
                worst = worst.max(left.matrix().frobenius_distance(right.matrix()));
            }
        }
        // Unital fixed point.
        let lambda = monitoring_lambda(&x, &y, 0.5)?;
        let mixed = DensityOperator::maximally_mixed(d);
        worst = worst.max(
            lambda
                .apply(&mixed)?
                .matrix()
                .frobenius_distance(mixed.matrix()),
        );
    }
    Ok(PropertyCheck::evaluate(
        "commuting condition and consequences",
        worst,
        tol(opts, 1e-10),
        "eps grid, random states, d in 2..3".into(),
    ))
}

// ---------------------------------------------------------------------------
// measures block
// ---------------------------------------------------------------------------

/// Equality P^X(ρ) = C^Y(Φ_X ρ) for MU pairs over random trios.
pub fn check_pc_equality_suite(trials_per_dim: usize, seed: u64, tolerance: f64) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..trials_per_dim {
            let rho = haar_random_pure(d, sub_seed(seed, (d * 30_000 + i) as u64))?;
            let x = random_basis(d, sub_seed(seed, (d * 31_000 + i) as u64))?;
            let y = fourier_mub_partner(&x);
            worst = worst.max(check_pc_equality(&rho, &x, &y)?);
        }
    }
    Ok(PropertyCheck::evaluate(
        "P^X(rho) = C^Y(dephased) for MU pairs",
        worst,
        tolerance,
        format!("{trials_per_dim} Haar trios per dimension 2..4"),
    ))
}

/// Non-MU decomposition: coherence ≤ predictability, exact split.
pub fn check_pc_inequality_suite(trials_per_dim: usize, seed: u64, tolerance: f64) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..trials_per_dim {
            let rho = haar_random_pure(d, sub_seed(seed, (d * 32_000 + i) as u64))?;
            let x = random_basis(d, sub_seed(seed, (d * 33_000 + i) as u64))?;
            let y = random_basis(d, sub_seed(seed, (d * 34_000 + i) as u64))?;
            let dec = check_pc_inequality(&rho, &x, &y)?;
            worst = worst.max(dec.coherence - dec.predictability);
            worst = worst.max((dec.coherence + dec.gap - dec.predictability).abs());
        }
    }
    Ok(PropertyCheck::evaluate(
        "C <= P with exact decomposition, random Y",
        worst,
        tolerance,
        format!("{trials_per_dim} random trios per dimension 2..4"),
    ))
}

/// Basis-sum invariance and the information-measure identity.
pub fn check_basis_sum_suite(trials_per_dim: usize, seed: u64, tolerance: f64) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..trials_per_dim {
            let rho = random_density(d, sub_seed(seed, (d * 35_000 + i) as u64))?;
            let x = random_basis(d, sub_seed(seed, (d * 36_000 + i) as u64))?;
            let y = random_basis(d, sub_seed(seed, (d * 37_000 + i) as u64))?;
            worst = worst.max(check_basis_sum_invariance(&rho, &x, &y)?);

            let info = crate::measures::information_measure(&rho);
            let sum = coherence_re(&rho, &x)? + predictability_vn(&rho, &x)?;
            worst = worst.max((sum - info).abs());
        }
    }
    Ok(PropertyCheck::evaluate(
        "C + P basis invariant and equals I(rho)",
        worst,
        tolerance,
        format!("{trials_per_dim} mixed states per dimension 2..4"),
    ))
}

/// C + P ≤ log2 d, saturated exactly by pure states.
pub fn check_cr1_saturation(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let log_d = (d as f64).log2();
        for i in 0..opts.trials {
            let x = random_basis(d, sub_seed(opts.seed, (d * 38_000 + i) as u64))?;

            let pure = haar_random_pure(d, sub_seed(opts.seed, (d * 39_000 + i) as u64))?;
            let sum = coherence_re(&pure, &x)? + predictability_vn(&pure, &x)?;
            worst = worst.max(sum - log_d - 1e-9).max((sum - log_d).abs());

            let mixed = random_density(d, sub_seed(opts.seed, (d * 40_000 + i) as u64))?;
            if mixed.purity() < 1.0 - 1e-6 {
                let sum = coherence_re(&mixed, &x)? + predictability_vn(&mixed, &x)?;
                // Must stay strictly below saturation.
                if log_d - sum <= 1e-9 {
                    worst = worst.max(1.0);
                }
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "C + P <= log2 d, saturated iff pure",
        worst,
        tol(opts, 1e-9),
        "pure saturate, mixed stay below".into(),
    ))
}

/// Λ_ε strictly decreases the predictability of non-free states.
pub fn check_strict_decrease(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=3 {
        let x = random_basis(d, sub_seed(opts.seed, 41_000 + d as u64))?;
        let y = fourier_mub_partner(&x);
        for i in 0..opts.trials.min(60) {
            let rho = haar_random_pure(d, sub_seed(opts.seed, (d * 42_000 + i) as u64))?;
            let p0 = predictability_vn(&rho, &x)?;
            if p0 <= 1e-6 {
                continue;
            }
            for eps in [0.25, 0.5, 0.75, 1.0] {
                let lambda = monitoring_lambda(&x, &y, eps)?;
                let p = predictability_vn(&lambda.apply(&rho)?, &x)?;
                // Require p < p0 − 1e-12.
                worst = worst.max(p - (p0 - 1e-12));
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "strict predictability decrease under lambda",
        worst,
        tol(opts, 0.0),
        "eps > 0 on non-free states".into(),
    ))
}

/// Linear predictability evaluated by three independent routes.
pub fn check_linear_predictability_routes(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=5 {
        let x = ObservableBasis::computational(d);
        let g = gell_mann_basis(&x)?;
        for i in 0..opts.trials.min(60) {
            let rho = random_density(d, sub_seed(opts.seed, (d * 43_000 + i) as u64))?;
            let direct = predictability_linear(&rho, &x)?;

            let probs = rho.diagonal_in_basis(&x)?;
            let mut pair_sum = 0.0;
            for j in 0..d {
                for k in (j + 1)..d {
                    pair_sum += (probs[j] - probs[k]).powi(2);
                }
            }
            let via_pairs = pair_sum / d as f64;

            let coeffs = gell_mann_decompose(&rho, &g)?;
            let via_gmm: f64 = coeffs.diagonal.iter().map(|c| c * c).sum::<f64>() / 2.0;

            worst = worst.max((direct - via_pairs).abs());
            worst = worst.max((direct - via_gmm).abs());
        }
    }
    Ok(PropertyCheck::evaluate(
        "linear predictability route consistency",
        worst,
        tol(opts, 1e-12),
        "diagonal, pair-difference, and GMM forms, d in 2..5".into(),
    ))
}

/// Witness contract: Tr(Wρ) = −P(ρ), Tr(Wυ) ≥ 0 against free states, and
/// the witness of a free state vanishes.
pub fn check_witness_contract(trials: usize, seed: u64, tolerance: f64) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=3 {
        let x = ObservableBasis::computational(d);
        for i in 0..trials {
            let rho = random_density(d, sub_seed(seed, (d * 44_000 + i) as u64))?;
            let w = witness_operator(&rho, &x)?;
            let tr_rho = w.matmul(rho.matrix()).trace().re;
            worst = worst.max((tr_rho + predictability_vn(&rho, &x)?).abs());

            for k in 0..10 {
                let phases: Vec<f64> = (0..d).map(|j| 0.77 * (j + k + i) as f64).collect();
                let p = (k % 5) as f64 / 5.0;
                let upsilon = free_state(d, p, &phases, &x)?;

                // Fixed witness against free states: nonnegative.
                let tr_upsilon = w.matmul(upsilon.matrix()).trace().re;
                worst = worst.max(-tr_upsilon);

                // The free state's own witness is the zero operator.
                let w_free = witness_operator(&upsilon, &x)?;
                worst = worst.max(w_free.matmul(upsilon.matrix()).trace().re.abs());
                worst = worst.max(w_free.matmul(rho.matrix()).trace().re.abs());
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "witness sign contract",
        worst,
        tolerance,
        format!("{trials} full-rank states, 10 free probes each"),
    ))
}

// ---------------------------------------------------------------------------
// composite block
// ---------------------------------------------------------------------------

/// Joint decomposition P_AB = P_A + P_B + I_{A:B} over random bipartite
/// states.
pub fn check_joint_decomposition_suite(
    trials_per_pair: usize,
    seed: u64,
    tolerance: f64,
) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for (da, db) in [(2, 2), (2, 3), (3, 3)] {
        let x = ObservableBasis::computational(da);
        let y = ObservableBasis::computational(db);
        for i in 0..trials_per_pair {
            let rho = random_density(da * db, sub_seed(seed, (da * 45_000 + db * 460 + i) as u64))?;
            let s = BipartiteState::new(rho, da, db)?;
            worst = worst.max(check_joint_decomposition(&s, &x, &y)?);
        }
    }
    Ok(PropertyCheck::evaluate(
        "joint predictability decomposition",
        worst,
        tolerance,
        format!("{trials_per_pair} states per pair (2x2, 2x3, 3x3)"),
    ))
}

/// Maximally entangled states: zero marginals, log2 d joint.
pub fn check_max_entangled_values(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        let s = maximally_entangled(d)?;
        let x = ObservableBasis::computational(d);
        worst = worst.max(predictability_vn(&s.reduce_a()?, &x)?.abs());
        worst = worst.max(predictability_vn(&s.reduce_b()?, &x)?.abs());
        worst = worst.max((joint_predictability(&s, &x, &x)? - (d as f64).log2()).abs());
    }
    Ok(PropertyCheck::evaluate(
        "maximally entangled predictability values",
        worst,
        tol(opts, 1e-10),
        "d in 2..4".into(),
    ))
}

/// Conditional predictability dominates the marginal.
pub fn check_conditional_dominates(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for i in 0..opts.trials {
        let (da, db) = ([2, 3][i % 2], 2);
        let rho = random_density(da * db, sub_seed(opts.seed, (47_000 + i) as u64))?;
        let s = BipartiteState::new(rho, da, db)?;
        let x = ObservableBasis::computational(da);
        let y = ObservableBasis::computational(db);
        let cond = conditional_predictability(&s, &x, &y)?;
        let marginal = predictability_vn(&s.reduce_a()?, &x)?;
        worst = worst.max(marginal - cond);
    }
    Ok(PropertyCheck::evaluate(
        "conditional predictability >= marginal",
        worst,
        tol(opts, 1e-10),
        format!("{} random bipartite states", opts.trials),
    ))
}

/// Joint predictability of product states is the sum of the marginals.
pub fn check_product_additivity(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for i in 0..opts.trials {
        let (da, db) = ([2, 3][i % 2], [3, 2][i % 2]);
        let a = random_density(da, sub_seed(opts.seed, (48_000 + i) as u64))?;
        let b = random_density(db, sub_seed(opts.seed, (49_000 + i) as u64))?;
        let s = BipartiteState::new(DensityOperator::new(kron(a.matrix(), b.matrix()))?, da, db)?;
        let x = ObservableBasis::computational(da);
        let y = ObservableBasis::computational(db);
        let joint = joint_predictability(&s, &x, &y)?;
        let sum = predictability_vn(&a, &x)? + predictability_vn(&b, &y)?;
        worst = worst.max((joint - sum).abs());
    }
    Ok(PropertyCheck::evaluate(
        "product states add marginal predictabilities",
        worst,
        tol(opts, 1e-10),
        format!("{} random product states", opts.trials),
    ))
}

// ---------------------------------------------------------------------------
// circuits block
// ---------------------------------------------------------------------------

/// End-to-end unitarity of built circuits.
pub fn check_circuit_unitarity(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for i in 0..opts.trials.min(25) {
        let mut rng = crate::states::seeded_rng(sub_seed(opts.seed, (50_000 + i) as u64));
        use rand::Rng;
        let (theta, phi) = (rng.gen::<f64>() * PI, rng.gen::<f64>() * 2.0 * PI);
        worst = worst.max(build_nrvnm_circuit_1q(theta, phi).unitary().unitarity_deviation());
    }
    for i in 0..opts.trials.min(10) {
        let v = haar_random_unitary(4, sub_seed(opts.seed, (51_000 + i) as u64))?;
        worst = worst.max(build_nrvnm_circuit_nq(&v)?.unitary().unitarity_deviation());
    }
    Ok(PropertyCheck::evaluate(
        "built circuits are unitary end to end",
        worst,
        tol(opts, 1e-10),
        "random 1q parameters and 2q unitaries".into(),
    ))
}

/// Ancilla-traced circuits equal their dephasing channels.
pub fn check_circuit_channel_equivalence(
    one_qubit_settings: usize,
    two_qubit_settings: usize,
    inputs_each: usize,
    seed: u64,
    tolerance: f64,
) -> Result<PropertyCheck> {
    let mut worst: f64 = 0.0;
    for i in 0..one_qubit_settings {
        let mut rng = crate::states::seeded_rng(sub_seed(seed, (52_000 + i) as u64));
        use rand::Rng;
        let (theta, phi) = (rng.gen::<f64>() * PI, rng.gen::<f64>() * 2.0 * PI);
        let circuit = build_nrvnm_circuit_1q(theta, phi);
        let eq = crate::circuits::circuit_as_channel(&circuit, inputs_each, sub_seed(seed, (53_000 + i) as u64))?;
        worst = worst.max(eq.max_deviation);
    }
    for i in 0..two_qubit_settings {
        let v = haar_random_unitary(4, sub_seed(seed, (54_000 + i) as u64))?;
        let circuit = build_nrvnm_circuit_nq(&v)?;
        let eq = crate::circuits::circuit_as_channel(&circuit, inputs_each, sub_seed(seed, (55_000 + i) as u64))?;
        worst = worst.max(eq.max_deviation);
    }
    Ok(PropertyCheck::evaluate(
        "circuit equals dephasing channel",
        worst,
        tolerance,
        format!("{one_qubit_settings} 1q settings, {two_qubit_settings} 2q settings, {inputs_each} inputs each"),
    ))
}

/// Zero-rate noise reproduces noiseless histograms seed for seed.
pub fn check_noise_zero_identity(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut mismatches = 0usize;
    let zero_noise = NoiseModel::new(0.0, 0.0, true)?;
    for i in 0..opts.trials.min(20) {
        let mut rng = crate::states::seeded_rng(sub_seed(opts.seed, (56_000 + i) as u64));
        use rand::Rng;
        let circuit = build_nrvnm_circuit_1q(rng.gen::<f64>() * PI, rng.gen::<f64>() * 2.0 * PI);
        let psi = haar_random_state_vector(2, sub_seed(opts.seed, (57_000 + i) as u64))?;
        let mut input = vec![Complex64::new(0.0, 0.0); 4];
        input[..2].copy_from_slice(&psi);
        let seed = sub_seed(opts.seed, (58_000 + i) as u64);
        let a = sample_measurement(&circuit, &input, None, 2048, &NoiseModel::disabled(), seed)?;
        let b = sample_measurement(&circuit, &input, None, 2048, &zero_noise, seed)?;
        if a != b {
            mismatches += 1;
        }
    }
    Ok(PropertyCheck::evaluate(
        "zero-rate noise reproduces noiseless shots",
        mismatches as f64,
        tol(opts, 0.0),
        "seed-for-seed histogram comparison".into(),
    ))
}

/// Shot estimates converge: |P_est − P| < 3σ_boot for escalating shot
/// counts in at least 99% of seeded trials. The trial count is pinned: a
/// 1% failure budget needs several hundred instances before the observed
/// fraction says anything.
pub fn check_shot_convergence(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let mut instances = 0usize;
    let mut failures = 0usize;
    let trials = 300;
    for i in 0..trials {
        let mut rng = crate::states::seeded_rng(sub_seed(opts.seed, (59_000 + i) as u64));
        use rand::Rng;
        let (theta, phi) = (rng.gen::<f64>() * PI, rng.gen::<f64>() * 2.0 * PI);
        let circuit = build_nrvnm_circuit_1q(theta, phi);
        let psi = haar_random_state_vector(2, sub_seed(opts.seed, (60_000 + i) as u64))?;
        let mut input = vec![Complex64::new(0.0, 0.0); 4];
        input[..2].copy_from_slice(&psi);

        let rho = crate::states::pure_state(&psi)?;
        let basis = ObservableBasis::from_unitary(
            &crate::circuits::u_gate_matrix(theta, phi, 0.0),
            "V",
        )?;
        let p_analytic = predictability_vn(&rho, &basis)?;
        let bc = basis.unitary().dagger();

        for (k, shots) in [1u64 << 10, 1 << 13, 1 << 16].iter().enumerate() {
            let counts = sample_measurement(
                &circuit,
                &input,
                Some(&bc),
                *shots,
                &NoiseModel::disabled(),
                sub_seed(opts.seed, (61_000 + 10 * i + k) as u64),
            )?;
            let (p_est, _) = estimate_measures_from_counts(&counts, &counts, 2)?;
            let sigma = bootstrap_sigma(
                &counts,
                100,
                sub_seed(opts.seed, (62_000 + 10 * i + k) as u64),
                |resampled| {
                    estimate_measures_from_counts(resampled, resampled, 2)
                        .map(|x| x.0)
                        .unwrap_or(f64::NAN)
                },
            );
            instances += 1;
            if (p_est - p_analytic).abs() >= 3.0 * sigma {
                failures += 1;
            }
        }
    }
    Ok(PropertyCheck::evaluate(
        "shot estimates within 3 sigma bootstrap",
        failures as f64 / instances as f64,
        tol(opts, 0.01),
        format!("{instances} (trial, shots) instances"),
    ))
}

// ---------------------------------------------------------------------------
// experiments block
// ---------------------------------------------------------------------------

/// CSV output is byte-identical across repeated runs.
pub fn check_csv_determinism(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let cfg = RunConfig {
        command: ExperimentCommand::RandomTrios,
        master_seed: opts.seed,
        trials: 10,
        shots: 128,
        ..RunConfig::default()
    };
    let a = write_records_csv(&run_random_trios(&cfg)?);
    let b = write_records_csv(&run_random_trios(&cfg)?);
    let sweep_cfg = RunConfig {
        command: ExperimentCommand::Fig4Sweep,
        dimension: 4,
        theta_steps: 5,
        shots: 128,
        master_seed: opts.seed,
        ..RunConfig::default()
    };
    let c = write_records_csv(&run_fig4_sweep(&sweep_cfg)?);
    let d = write_records_csv(&run_fig4_sweep(&sweep_cfg)?);
    let mismatches = usize::from(a != b) + usize::from(c != d);
    Ok(PropertyCheck::evaluate(
        "CSV output deterministic per seed",
        mismatches as f64,
        tol(opts, 0.0),
        "random-trios and sweep, two runs each".into(),
    ))
}

/// Analytic columns never depend on shots or noise settings.
pub fn check_analytic_columns_immune(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let base = RunConfig {
        master_seed: opts.seed,
        trials: 8,
        shots: 64,
        ..RunConfig::default()
    };
    let alt = RunConfig {
        shots: 2048,
        noise: NoiseModel::default(),
        ..base.clone()
    };
    let a = run_random_trios(&base)?;
    let b = run_random_trios(&alt)?;
    let mut worst: f64 = 0.0;
    for (x, y) in a.iter().zip(&b) {
        worst = worst.max((x.p_theory - y.p_theory).abs());
        worst = worst.max((x.c_theory - y.c_theory).abs());
    }
    Ok(PropertyCheck::evaluate(
        "analytic columns immune to shots/noise",
        worst,
        tol(opts, 0.0),
        "same seeds, different shots and noise".into(),
    ))
}

/// Sweep predictability matches the closed form at every grid point.
pub fn check_sweep_closed_form(opts: &VerifyOptions) -> Result<PropertyCheck> {
    let cfg = RunConfig {
        command: ExperimentCommand::Fig4Sweep,
        dimension: 4,
        theta_steps: 13,
        shots: 64,
        master_seed: opts.seed,
        ..RunConfig::default()
    };
    let records = run_fig4_sweep(&cfg)?;
    let mut worst: f64 = 0.0;
    for r in &records {
        let closed = sweep_predictability_closed_form(r.theta.expect("sweep rows carry theta"));
        worst = worst.max((r.p_theory - closed).abs());
        worst = worst.max((r.p_theory - r.c_theory).abs());
    }
    Ok(PropertyCheck::evaluate(
        "sweep matches closed-form predictability",
        worst,
        tol(opts, 1e-10),
        "13 grid points".into(),
    ))
}

/// Run every property check.
pub fn run_property_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    if opts.trials == 0 {
        return Err(Error::ConfigError("trials must be at least 1".into()));
    }
    let t = opts;
    let pinned = |d: f64| t.tolerance_override.unwrap_or(d);
    let checks = vec![
        check_entropy_bounds(t)?,
        check_klein_inequality(t)?,
        check_trace_distance_contractive(t)?,
        check_partial_trace_kron(t)?,
        check_linear_entropy_identity(t)?,
        check_fourier_mub_overlaps(t)?,
        check_free_state_membership(t)?,
        check_gellmann_roundtrip(t)?,
        check_free_state_gellmann(t)?,
        check_haar_collisions(t)?,
        check_channels_cptp(t)?,
        check_dephasing_idempotent(t)?,
        check_double_dephasing_erases(t)?,
        check_theta_preserves_dephased(t)?,
        check_diagonal_unitary_fixes_diagonal(t)?,
        check_commuting_condition_suite(t)?,
        check_pc_equality_suite(t.trials.max(334), t.seed, pinned(1e-10))?,
        check_pc_inequality_suite(t.trials.max(334), t.seed, pinned(1e-10))?,
        check_basis_sum_suite(t.trials.max(100), t.seed, pinned(1e-10))?,
        check_cr1_saturation(t)?,
        check_strict_decrease(t)?,
        check_linear_predictability_routes(t)?,
        check_witness_contract(t.trials.min(100), t.seed, pinned(1e-10))?,
        check_joint_decomposition_suite(t.trials.min(200), t.seed, pinned(1e-10))?,
        check_max_entangled_values(t)?,
        check_conditional_dominates(t)?,
        check_product_additivity(t)?,
        check_circuit_unitarity(t)?,
        check_circuit_channel_equivalence(20, 10, 10, t.seed, pinned(1e-10))?,
        check_noise_zero_identity(t)?,
        check_shot_convergence(t)?,
        check_csv_determinism(t)?,
        check_analytic_columns_immune(t)?,
        check_sweep_closed_form(t)?,
    ];
    Ok(VerifyReport { checks })
}
