//! Scalar resource measures and the predictability–coherence
//! (in)equalities: predictability, relative entropy of coherence, purity
//! and information, incompatibility, witness operators, contractive-distance
//! monotones, and the free-state minimization characterization.

use std::f64::consts::PI;

use crate::channels::{dephasing_channel, monitoring_lambda, monitoring_theta};
use crate::error::{Error, Result};
use crate::linalg::{
    relative_entropy, shannon_entropy_bits, trace_distance, von_neumann_entropy, Complex64,
    ComplexMatrix,
};
use crate::states::{free_state, DensityOperator, ObservableBasis};

const MU_TOL: f64 = 1e-10;

fn check_dims(rho: &DensityOperator, basis: &ObservableBasis) -> Result<()> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: rho.dim(),
        });
    }
    Ok(())
}

fn require_mu(x: &ObservableBasis, y: &ObservableBasis) -> Result<()> {
    let dev = x.mutual_unbiasedness_deviation(y)?;
    if dev > MU_TOL {
        return Err(Error::NotMutuallyUnbiased { max_dev: dev });
    }
    Ok(())
}

/// A named scalar measure evaluation, as logged by the CLI.
#[derive(Debug, Clone)]
pub struct MeasureReport {
    pub name: String,
    /// Bits unless the measure is dimensionless.
    pub value: f64,
    pub basis_labels: Vec<String>,
    pub tolerance_used: f64,
}

/// Predictability P_vn = log2 d − S_vn(ρ_diag) = S_vn(ρ_diag ‖ I/d), in
/// bits: the distinguishability of the dephased state from the uniform
/// distribution.
pub fn predictability_vn(rho: &DensityOperator, x: &ObservableBasis) -> Result<f64> {
    check_dims(rho, x)?;
    let probs = rho.diagonal_in_basis(x)?;
    Ok((rho.dim() as f64).log2() - shannon_entropy_bits(&probs)?)
}

/// Relative entropy of coherence C_re = S_vn(ρ_diag) − S_vn(ρ), in bits.
pub fn coherence_re(rho: &DensityOperator, x: &ObservableBasis) -> Result<f64> {
    check_dims(rho, x)?;
    let probs = rho.diagonal_in_basis(x)?;
    Ok(shannon_entropy_bits(&probs)? - von_neumann_entropy(rho)?)
}

/// Linear predictability P_l = S_l(ρ_diag ‖ I/d) = Σ_j ρ_jj² − 1/d.
pub fn predictability_linear(rho: &DensityOperator, x: &ObservableBasis) -> Result<f64> {
    check_dims(rho, x)?;
    let probs = rho.diagonal_in_basis(x)?;
    let sum_sq: f64 = probs.iter().map(|p| p * p).sum();
    Ok(sum_sq - 1.0 / rho.dim() as f64)
}

/// Qubit predictability |ρ_11 − ρ_22| = |Tr(ρσ_z)| in the given basis.
pub fn predictability_yasin(rho: &DensityOperator, x: &ObservableBasis) -> Result<f64> {
    if rho.dim() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: rho.dim(),
        });
    }
    check_dims(rho, x)?;
    let probs = rho.diagonal_in_basis(x)?;
    Ok((probs[0] - probs[1]).abs())
}

/// Information (purity) measure I(ρ) = log2 d − S_vn(ρ), in bits.
pub fn information_measure(rho: &DensityOperator) -> f64 {
    let s = von_neumann_entropy(rho).expect("validated density operator has a spectrum");
    (rho.dim() as f64).log2() - s
}

/// Residual |P_vn^X(ρ) − C_re^Y(Φ_X(ρ))| for mutually unbiased X, Y. The
/// two sides agree identically, so the residual is floating-point noise.
pub fn check_pc_equality(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    require_mu(x, y)?;
    let p = predictability_vn(rho, x)?;
    let dephased = dephasing_channel(x).apply(rho)?;
    let c = coherence_re(&dephased, y)?;
    Ok((p - c).abs())
}

/// The three terms of the general decomposition
/// C_re^Y(Φ_X ρ) + P_vn^Y(Φ_X ρ) = P_vn^X(ρ) for arbitrary Y.
#[derive(Debug, Clone, Copy)]
pub struct PcDecomposition {
    /// C_re^Y(Φ_X ρ).
    pub coherence: f64,
    /// P_vn^Y(Φ_X ρ): the amount by which the coherence falls short.
    pub gap: f64,
    /// P_vn^X(ρ).
    pub predictability: f64,
}

/// Evaluate the decomposition for observables that need not be mutually
/// unbiased: coherence + gap = predictability, and coherence ≤
/// predictability.
pub fn check_pc_inequality(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<PcDecomposition> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let predictability = predictability_vn(rho, x)?;
    let dephased = dephasing_channel(x).apply(rho)?;
    Ok(PcDecomposition {
        coherence: coherence_re(&dephased, y)?,
        gap: predictability_vn(&dephased, y)?,
        predictability,
    })
}

/// Residual |(C^Y + P^Y) − (C^X + P^X)| on ρ; both sums equal the
/// information measure, so the sum is invariant under a change of basis.
pub fn check_basis_sum_invariance(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let sum_x = coherence_re(rho, x)? + predictability_vn(rho, x)?;
    let sum_y = coherence_re(rho, y)? + predictability_vn(rho, y)?;
    Ok((sum_y - sum_x).abs())
}

/// Complete complementarity residual
/// |C(ρ_A) + P(ρ_A) + S(ρ_A) − log2 d_A| for the reduction of a bipartite
/// pure state, with X an observable on subsystem A.
pub fn check_ccr(
    psi_ab: &DensityOperator,
    dims: (usize, usize),
    x: &ObservableBasis,
) -> Result<f64> {
    let purity = psi_ab.purity();
    if (purity - 1.0).abs() > 1e-10 {
        return Err(Error::NotPure { purity });
    }
    let (d_a, d_b) = dims;
    if d_a * d_b != psi_ab.dim() {
        return Err(Error::DimensionMismatch {
            expected: psi_ab.dim(),
            found: d_a * d_b,
        });
    }
    let rho_a = crate::linalg::partial_trace(psi_ab, &[d_a, d_b], &[0])?;
    let c = coherence_re(&rho_a, x)?;
    let p = predictability_vn(&rho_a, x)?;
    let s = von_neumann_entropy(&rho_a)?;
    Ok((c + p + s - (d_a as f64).log2()).abs())
}

/// Incompatibility 𝔍_{X,Y}(ρ) = P^X(Φ_X ρ) − P^Y(Φ_X ρ): the predictability
/// gap between the two observables on the dephased state. Zero when the
/// observables share an eigenbasis.
pub fn incompatibility(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let dephased = dephasing_channel(x).apply(rho)?;
    Ok(predictability_vn(&dephased, x)? - predictability_vn(&dephased, y)?)
}

/// Entropic complementarity: returns (P^X + P^Y, 2 log2 d + log2 c) where
/// c is the largest squared overlap between the two bases. The left side
/// never exceeds the bound; for mutually unbiased bases the bound is
/// log2 d.
pub fn check_entropic_cr(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<(f64, f64)> {
    let lhs = predictability_vn(rho, x)? + predictability_vn(rho, y)?;
    let c = crate::states::overlap_coefficient(x, y)?;
    let d = rho.dim() as f64;
    Ok((lhs, 2.0 * d.log2() + c.log2()))
}

/// Witness W = log2(I/d) − log2(ρ_diag), diagonal in the reference basis.
///
/// Tr(Wρ) = −P_vn(ρ), and Tr(Wυ) ≥ 0 for every maximally unpredictable υ
/// (zero exactly when ρ itself is unpredictable, in which case W vanishes).
/// Only defined for states whose diagonal is strictly positive.
pub fn witness_operator(rho: &DensityOperator, x: &ObservableBasis) -> Result<ComplexMatrix> {
    check_dims(rho, x)?;
    let probs = rho.diagonal_in_basis(x)?;
    let d = rho.dim();
    let log_unif = (1.0 / d as f64).log2();
    let mut w = ComplexMatrix::zeros(d, d);
    for (j, &p) in probs.iter().enumerate() {
        if p <= 1e-12 {
            return Err(Error::RankDeficient { index: j, value: p });
        }
        w = w.add(&x.projector(j).scale(Complex64::new(log_unif - p.log2(), 0.0)));
    }
    Ok(w)
}

/// Contractive distance used to instantiate an optimization-free
/// predictability monotone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistanceKind {
    RelativeEntropy,
    TraceDistance,
}

/// Monotone 𝒟(ρ) = D(Φ_X(ρ), Φ_XY(ρ)) = D(ρ_diag, I/d) built from a
/// contractive distance; the relative-entropy instance reproduces P_vn.
pub fn monotone_from_distance(
    d_fn: DistanceKind,
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    require_mu(x, y)?;
    check_dims(rho, x)?;
    let dephased = dephasing_channel(x).apply(rho)?;
    let uniform = DensityOperator::maximally_mixed(rho.dim());
    match d_fn {
        DistanceKind::RelativeEntropy => relative_entropy(&dephased, &uniform),
        DistanceKind::TraceDistance => trace_distance(&dephased, &uniform),
    }
}

/// Search grid for the free-state minimization.
#[derive(Debug, Clone, Copy)]
pub struct FreeStateGrid {
    /// Number of mixing weights p: p = i / p_steps for i = 0, …, p_steps − 1
    /// (so the grid covers [0, 1) and always contains p = 0, i.e. I/d).
    pub p_steps: usize,
    /// Number of phase samples per free phase: φ = 2π k / phase_steps.
    pub phase_steps: usize,
}

impl Default for FreeStateGrid {
    fn default() -> Self {
        // p ∈ {0, 0.05, …, 0.95}, φ in steps of π/16.
        Self {
            p_steps: 20,
            phase_steps: 32,
        }
    }
}

/// Result of the grid minimization of S(ρ_diag ‖ υ) over the maximally
/// coherent mixed family.
#[derive(Debug, Clone)]
pub struct MinimizationResult {
    pub min_value: f64,
    pub argmin_p: f64,
    pub argmin_phases: Vec<f64>,
}

/// Numerically minimize S_vn(ρ_diag^X ‖ υ) over the generator family
/// υ = (1−p) I/d + p |ψ_d⟩⟨ψ_d| on a (p, phases) grid. The minimum is
/// attained at p = 0 (υ = I/d) and equals P_vn(ρ, X). Supported at desk
/// scale for d ∈ {2, 3}; divergent grid points count as +∞.
pub fn minimize_over_free_states(
    rho: &DensityOperator,
    x: &ObservableBasis,
    grid: FreeStateGrid,
) -> Result<MinimizationResult> {
    let d = rho.dim();
    if d != 2 && d != 3 {
        return Err(Error::BadDimension(d));
    }
    check_dims(rho, x)?;
    if grid.p_steps == 0 || grid.phase_steps == 0 {
        return Err(Error::BadParameter("grid must have at least one point".into()));
    }

    let dephased = dephasing_channel(x).apply(rho)?;

    let mut best = MinimizationResult {
        min_value: f64::INFINITY,
        argmin_p: f64::NAN,
        argmin_phases: vec![],
    };

    // The global phase of |ψ_d⟩ is irrelevant: fix the first phase to zero
    // and sweep the remaining d−1.
    let mut phase_indices = vec![0usize; d - 1];
    for i in 0..grid.p_steps {
        let p = i as f64 / grid.p_steps as f64;
        loop {
            let mut phases = vec![0.0; d];
            for (slot, &idx) in phase_indices.iter().enumerate() {
                phases[slot + 1] = 2.0 * PI * idx as f64 / grid.phase_steps as f64;
            }
            let candidate = free_state(d, p, &phases, x)?;
            let value = match relative_entropy(&dephased, &candidate) {
                Ok(v) => v,
                Err(Error::SupportViolation) => f64::INFINITY,
                Err(e) => return Err(e),
            };
            if value < best.min_value {
                best = MinimizationResult {
                    min_value: value,
                    argmin_p: p,
                    argmin_phases: phases,
                };
            }

            // Odometer over the phase indices.
            let mut carry = 0;
            loop {
                if carry == phase_indices.len() {
                    break;
                }
                phase_indices[carry] += 1;
                if phase_indices[carry] < grid.phase_steps {
                    break;
                }
                phase_indices[carry] = 0;
                carry += 1;
            }
            if phase_indices.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(best)
}

/// Monotonicity bundle for the monitoring maps on an ε grid: P never grows
/// under Λ_ε, is exactly preserved by Θ_ε, and vanishes on free states.
pub fn check_monotonicity(
    rho: &DensityOperator,
    x: &ObservableBasis,
    y: &ObservableBasis,
    eps_grid: &[f64],
) -> Result<bool> {
    require_mu(x, y)?;
    check_dims(rho, x)?;
    let d = rho.dim();
    let p0 = predictability_vn(rho, x)?;

    // Deterministic free probes: I/d plus two members of the generator
    // family.
    let mut phases = vec![0.0; d];
    for (j, phi) in phases.iter_mut().enumerate() {
        *phi = 0.7 * j as f64;
    }
    let free_probes = [
        DensityOperator::maximally_mixed(d),
        free_state(d, 0.5, &vec![0.0; d], x)?,
        free_state(d, 1.0, &phases, x)?,
    ];

    for &eps in eps_grid {
        let lambda = monitoring_lambda(x, y, eps)?;
        let theta = monitoring_theta(x, eps)?;

        let p_lambda = predictability_vn(&lambda.apply(rho)?, x)?;
        if p_lambda > p0 + 1e-10 {
            return Ok(false);
        }
        let p_theta = predictability_vn(&theta.apply(rho)?, x)?;
        if (p_theta - p0).abs() > 1e-10 {
            return Ok(false);
        }
        for probe in &free_probes {
            if predictability_vn(&lambda.apply(probe)?, x)? >= 1e-10 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
