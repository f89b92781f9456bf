//! Gate-level non-revealing von Neumann measurement circuits: statevector
//! and density-matrix simulation, shot sampling, and a CNOT-depolarizing +
//! readout-flip noise model.
//!
//! Qubit 0 is the least significant bit of the basis-state index. System
//! qubits occupy the low bits, ancilla qubits the high bits, so the
//! system-register amplitudes of a fixed ancilla configuration are
//! contiguous.

use rand::Rng;

use crate::channels::dephasing_channel;
use crate::error::{Error, Result};
use crate::linalg::{partial_trace, shannon_entropy_bits, Complex64, ComplexMatrix};
use crate::states::{seeded_rng, ObservableBasis};

/// Largest supported system-register size for the dilation builder.
pub const MAX_SYSTEM_QUBITS: usize = 5;

/// One circuit element.
#[derive(Debug, Clone)]
pub enum Gate {
    /// Parametrized single-qubit unitary U(θ, φ, λ).
    U {
        target: usize,
        theta: f64,
        phi: f64,
        lambda: f64,
    },
    /// Controlled-NOT.
    Cnot { control: usize, target: usize },
    /// Opaque unitary applied to the whole system register by direct matrix
    /// action.
    SystemUnitary { matrix: ComplexMatrix },
}

/// Ordered gate list on a system register plus an ancilla register.
#[derive(Debug, Clone)]
pub struct Circuit {
    num_system_qubits: usize,
    num_ancilla_qubits: usize,
    gates: Vec<Gate>,
}

impl Circuit {
    pub fn new(num_system_qubits: usize, num_ancilla_qubits: usize, gates: Vec<Gate>) -> Result<Self> {
        let total = num_system_qubits + num_ancilla_qubits;
        for gate in &gates {
            match gate {
                Gate::U { target, .. } => {
                    if *target >= total {
                        return Err(Error::BadIndex {
                            index: *target,
                            count: total,
                        });
                    }
                }
                Gate::Cnot { control, target } => {
                    if *control >= total || *target >= total {
                        return Err(Error::BadIndex {
                            index: (*control).max(*target),
                            count: total,
                        });
                    }
                    if control == target {
                        return Err(Error::BadParameter(
                            "CNOT control and target must differ".into(),
                        ));
                    }
                }
                Gate::SystemUnitary { matrix } => {
                    let dim = 1usize << num_system_qubits;
                    if matrix.rows() != dim || matrix.cols() != dim {
                        return Err(Error::DimensionMismatch {
                            expected: dim,
                            found: matrix.rows(),
                        });
                    }
                    let dev = matrix.unitarity_deviation();
                    if dev > 1e-10 {
                        return Err(Error::NotUnitary { deviation: dev });
                    }
                }
            }
        }
        Ok(Self {
            num_system_qubits,
            num_ancilla_qubits,
            gates,
        })
    }

    pub fn num_system_qubits(&self) -> usize {
        self.num_system_qubits
    }

    pub fn num_ancilla_qubits(&self) -> usize {
        self.num_ancilla_qubits
    }

    pub fn total_qubits(&self) -> usize {
        self.num_system_qubits + self.num_ancilla_qubits
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Full 2^n × 2^n unitary of the circuit, built by evolving basis
    /// vectors.
    pub fn unitary(&self) -> ComplexMatrix {
        let dim = 1usize << self.total_qubits();
        let mut m = ComplexMatrix::zeros(dim, dim);
        for col in 0..dim {
            let mut v = vec![Complex64::new(0.0, 0.0); dim];
            v[col] = Complex64::new(1.0, 0.0);
            for gate in &self.gates {
                apply_gate_vec(gate, &mut v, self.num_system_qubits);
            }
            for row in 0..dim {
                m[(row, col)] = v[row];
            }
        }
        m
    }
}

/// The parametrized single-qubit gate
/// U(θ, φ, λ) = [[cos(θ/2), −e^{iλ} sin(θ/2)],
///               [e^{iφ} sin(θ/2), e^{i(φ+λ)} cos(θ/2)]].
pub fn u_gate_matrix(theta: f64, phi: f64, lambda: f64) -> ComplexMatrix {
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    ComplexMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::new(c, 0.0),
            -Complex64::from_polar(s, lambda),
            Complex64::from_polar(s, phi),
            Complex64::from_polar(c, phi + lambda),
        ],
    )
}

/// Parameters (θ′, φ′, λ′) with U(θ′, φ′, λ′) = U†(θ, φ, λ), namely
/// (θ, π − λ, −π − φ). The identity is exact; it is still verified
/// numerically and an [`Error::IdentityViolation`] is returned if the
/// product with the original ever fails to be a global phase.
pub fn u_dagger_params(theta: f64, phi: f64, lambda: f64) -> Result<(f64, f64, f64)> {
    let params = (theta, std::f64::consts::PI - lambda, -std::f64::consts::PI - phi);
    let product = u_gate_matrix(params.0, params.1, params.2).matmul(&u_gate_matrix(theta, phi, lambda));
    let phase = product[(0, 0)];
    let deviation = product
        .sub(&ComplexMatrix::identity(2).scale(phase))
        .frobenius_norm()
        + (phase.norm() - 1.0).abs();
    if deviation > 1e-10 {
        return Err(Error::IdentityViolation { deviation });
    }
    Ok(params)
}

/// One-qubit non-revealing von Neumann measurement of the observable with
/// eigenbasis {V|0⟩, V|1⟩}, V = U(θ, φ, 0): the dilation
/// [V† on q0; CNOT q0→ancilla; V on q0].
pub fn build_nrvnm_circuit_1q(theta: f64, phi: f64) -> Circuit {
    let lambda = 0.0;
    let gates = match u_dagger_params(theta, phi, lambda) {
        Ok((td, pd, ld)) => vec![
            Gate::U {
                target: 0,
                theta: td,
                phi: pd,
                lambda: ld,
            },
            Gate::Cnot {
                control: 0,
                target: 1,
            },
            Gate::U {
                target: 0,
                theta,
                phi,
                lambda,
            },
        ],
        // Unreachable for this gate convention; kept as the documented
        // fallback: insert the conjugate transpose directly.
        Err(_) => vec![
            Gate::SystemUnitary {
                matrix: u_gate_matrix(theta, phi, lambda).dagger(),
            },
            Gate::Cnot {
                control: 0,
                target: 1,
            },
            Gate::U {
                target: 0,
                theta,
                phi,
                lambda,
            },
        ],
    };
    Circuit::new(1, 1, gates).expect("fixed two-qubit layout")
}

/// n-qubit non-revealing von Neumann measurement in the basis {V|j⟩}:
/// [V† on the system; CNOT q_i→ancilla_i for each i; V on the system].
/// V is applied by direct matrix action; when V is the identity the
/// conjugation is omitted and only the CNOT fan-out remains.
pub fn build_nrvnm_circuit_nq(v: &ComplexMatrix) -> Result<Circuit> {
    let dim = v.rows();
    if !v.is_square() || dim == 0 || !dim.is_power_of_two() {
        return Err(Error::BadDimension(dim));
    }
    let n = dim.trailing_zeros() as usize;
    if n > MAX_SYSTEM_QUBITS {
        return Err(Error::TooLarge(format!(
            "{n} system qubits exceed the supported {MAX_SYSTEM_QUBITS}"
        )));
    }
    let dev = v.unitarity_deviation();
    if dev > 1e-10 {
        return Err(Error::NotUnitary { deviation: dev });
    }

    let mut gates = Vec::new();
    let is_identity = v.frobenius_distance(&ComplexMatrix::identity(dim)) < 1e-14;
    if !is_identity {
        gates.push(Gate::SystemUnitary { matrix: v.dagger() });
    }
    for i in 0..n {
        gates.push(Gate::Cnot {
            control: i,
            target: n + i,
        });
    }
    if !is_identity {
        gates.push(Gate::SystemUnitary { matrix: v.clone() });
    }
    Circuit::new(n, n, gates)
}

/// In-place action of one gate on a full-register state vector.
fn apply_gate_vec(gate: &Gate, v: &mut [Complex64], num_system_qubits: usize) {
    match gate {
        Gate::U {
            target,
            theta,
            phi,
            lambda,
        } => {
            let u = u_gate_matrix(*theta, *phi, *lambda);
            let mask = 1usize << target;
            for i in 0..v.len() {
                if i & mask == 0 {
                    let j = i | mask;
                    let (a, b) = (v[i], v[j]);
                    v[i] = u[(0, 0)] * a + u[(0, 1)] * b;
                    v[j] = u[(1, 0)] * a + u[(1, 1)] * b;
                }
            }
        }
        Gate::Cnot { control, target } => {
            let cmask = 1usize << control;
            let tmask = 1usize << target;
            for i in 0..v.len() {
                if i & cmask != 0 && i & tmask == 0 {
                    v.swap(i, i | tmask);
                }
            }
        }
        Gate::SystemUnitary { matrix } => {
            let block = 1usize << num_system_qubits;
            let mut scratch = vec![Complex64::new(0.0, 0.0); block];
            for start in (0..v.len()).step_by(block) {
                let chunk = &mut v[start..start + block];
                for (r, s) in scratch.iter_mut().enumerate() {
                    *s = (0..block).map(|c| matrix[(r, c)] * chunk[c]).sum();
                }
                chunk.copy_from_slice(&scratch);
            }
        }
    }
}

/// Exact gate-by-gate statevector evolution.
pub fn simulate_statevector(c: &Circuit, input: &[Complex64]) -> Result<Vec<Complex64>> {
    let dim = 1usize << c.total_qubits();
    if input.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: input.len(),
        });
    }
    let norm: f64 = input.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm });
    }
    let mut v = input.to_vec();
    for gate in c.gates() {
        apply_gate_vec(gate, &mut v, c.num_system_qubits());
    }
    Ok(v)
}

/// ρ ↦ G ρ G† for one gate, via the vector action on columns and rows.
fn apply_gate_density(gate: &Gate, rho: &ComplexMatrix, num_system_qubits: usize) -> ComplexMatrix {
    let dim = rho.rows();
    let mut cols = rho.clone();
    // G ρ: act on each column.
    let mut buf = vec![Complex64::new(0.0, 0.0); dim];
    for c in 0..dim {
        for r in 0..dim {
            buf[r] = cols[(r, c)];
        }
        apply_gate_vec(gate, &mut buf, num_system_qubits);
        for r in 0..dim {
            cols[(r, c)] = buf[r];
        }
    }
    // (G ρ) G†: act on each row through conjugation.
    let mut out = cols;
    for r in 0..dim {
        for c in 0..dim {
            buf[c] = out[(r, c)].conj();
        }
        apply_gate_vec(gate, &mut buf, num_system_qubits);
        for c in 0..dim {
            out[(r, c)] = buf[c].conj();
        }
    }
    out
}

/// Two-qubit depolarizing on qubits (a, b):
/// ρ ↦ (1−p) ρ + (p/4) I_{ab} ⊗ Tr_{ab}(ρ).
fn depolarize_pair(rho: &ComplexMatrix, qubit_a: usize, qubit_b: usize, p: f64) -> ComplexMatrix {
    let dim = rho.rows();
    let mask_a = 1usize << qubit_a;
    let mask_b = 1usize << qubit_b;
    let pair_mask = mask_a | mask_b;

    let embed = |rest: usize, x: usize| {
        let mut idx = rest;
        if x & 1 != 0 {
            idx |= mask_a;
        }
        if x & 2 != 0 {
            idx |= mask_b;
        }
        idx
    };

    let mut out = rho.scale(Complex64::new(1.0 - p, 0.0));
    let quarter = Complex64::new(p / 4.0, 0.0);
    for row in 0..dim {
        if row & pair_mask != 0 {
            continue;
        }
        for col in 0..dim {
            if col & pair_mask != 0 {
                continue;
            }
            // Tr_{ab} entry for the (row, col) block of the rest register.
            let mut traced = Complex64::new(0.0, 0.0);
            for x in 0..4 {
                traced += rho[(embed(row, x), embed(col, x))];
            }
            let weighted = quarter * traced;
            for x in 0..4 {
                out[(embed(row, x), embed(col, x))] += weighted;
            }
        }
    }
    out
}

/// Calibration-style noise model: two-qubit depolarizing after every CNOT
/// plus independent readout bit flips.
#[derive(Debug, Clone, Copy)]
pub struct NoiseModel {
    pub cnot_depolarizing_rate: f64,
    pub readout_flip_rate: f64,
    pub enabled: bool,
}

impl NoiseModel {
    /// Rates must lie in [0, 0.5].
    pub fn new(cnot_depolarizing_rate: f64, readout_flip_rate: f64, enabled: bool) -> Result<Self> {
        for (name, rate) in [
            ("cnot_depolarizing_rate", cnot_depolarizing_rate),
            ("readout_flip_rate", readout_flip_rate),
        ] {
            if !(0.0..=0.5).contains(&rate) {
                return Err(Error::BadParameter(format!("{name} = {rate} outside [0, 0.5]")));
            }
        }
        Ok(Self {
            cnot_depolarizing_rate,
            readout_flip_rate,
            enabled,
        })
    }

    /// Noise disabled entirely.
    pub fn disabled() -> Self {
        Self {
            cnot_depolarizing_rate: 0.0,
            readout_flip_rate: 0.0,
            enabled: false,
        }
    }
}

impl Default for NoiseModel {
    /// Default rates from an `ibmq_belem` calibration snapshot:
    /// CNOT error 1.903e-2, readout error 2.14e-2.
    fn default() -> Self {
        Self {
            cnot_depolarizing_rate: 1.903e-2,
            readout_flip_rate: 2.14e-2,
            enabled: true,
        }
    }
}

/// Outcome counts over the system register, indexed by basis state.
pub type CountHistogram = Vec<u64>;

/// Outcome probabilities of the system register after running the circuit
/// (ancillas start in |0…0⟩ implicitly through `input`), with optional
/// basis-change unitary applied to the system before readout and optional
/// gate/readout noise folded in exactly.
fn output_probabilities(
    c: &Circuit,
    input: &[Complex64],
    basis_change: Option<&ComplexMatrix>,
    noise: &NoiseModel,
) -> Result<Vec<f64>> {
    let dim = 1usize << c.total_qubits();
    if input.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: input.len(),
        });
    }
    let norm: f64 = input.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized { norm });
    }

    let mut rho = ComplexMatrix::outer(input, input);
    for gate in c.gates() {
        rho = apply_gate_density(gate, &rho, c.num_system_qubits());
        if noise.enabled && noise.cnot_depolarizing_rate > 0.0 {
            if let Gate::Cnot { control, target } = gate {
                rho = depolarize_pair(&rho, *control, *target, noise.cnot_depolarizing_rate);
            }
        }
    }
    if let Some(u) = basis_change {
        let sys_dim = 1usize << c.num_system_qubits();
        if u.rows() != sys_dim || u.cols() != sys_dim {
            return Err(Error::DimensionMismatch {
                expected: sys_dim,
                found: u.rows(),
            });
        }
        let dev = u.unitarity_deviation();
        if dev > 1e-10 {
            return Err(Error::NotUnitary { deviation: dev });
        }
        let gate = Gate::SystemUnitary { matrix: u.clone() };
        rho = apply_gate_density(&gate, &rho, c.num_system_qubits());
    }

    let sys_dim = 1usize << c.num_system_qubits();
    let mut probs = vec![0.0f64; sys_dim];
    for anc in 0..(dim / sys_dim) {
        let base = anc * sys_dim;
        for m in 0..sys_dim {
            probs[m] += rho[(base + m, base + m)].re;
        }
    }

    if noise.enabled && noise.readout_flip_rate > 0.0 {
        let r = noise.readout_flip_rate;
        for bit in 0..c.num_system_qubits() {
            let mask = 1usize << bit;
            for i in 0..sys_dim {
                if i & mask == 0 {
                    let j = i | mask;
                    let (pi, pj) = (probs[i], probs[j]);
                    probs[i] = (1.0 - r) * pi + r * pj;
                    probs[j] = r * pi + (1.0 - r) * pj;
                }
            }
        }
    }

    // Strip rounding noise and renormalize.
    let mut total = 0.0;
    for p in &mut probs {
        if *p < 0.0 {
            debug_assert!(*p > -1e-12, "probability {p} too negative");
            *p = 0.0;
        }
        total += *p;
    }
    for p in &mut probs {
        *p /= total;
    }
    Ok(probs)
}

/// Multinomial shot sampling of the system-register outcome distribution,
/// deterministic per seed.
pub fn sample_measurement(
    c: &Circuit,
    input: &[Complex64],
    basis_change: Option<&ComplexMatrix>,
    shots: u64,
    noise: &NoiseModel,
    seed: u64,
) -> Result<CountHistogram> {
    if shots == 0 {
        return Err(Error::BadParameter("shots must be at least 1".into()));
    }
    let probs = output_probabilities(c, input, basis_change, noise)?;
    let mut rng = seeded_rng(seed);
    Ok(multinomial_sample(&probs, shots, &mut rng))
}

/// Result of checking a circuit against its induced dephasing channel.
#[derive(Debug, Clone)]
pub struct ChannelEquivalence {
    /// Largest Frobenius deviation between the ancilla-traced circuit
    /// output and the dephasing-channel output over the sampled inputs.
    pub max_deviation: f64,
    pub samples: usize,
    /// Label of the reference basis extracted from the circuit.
    pub reference: String,
}

/// Extract the measurement basis realized by an NRvNM-structured circuit
/// (the final V gate, or the computational basis for a bare CNOT fan-out).
fn extract_circuit_basis(c: &Circuit) -> Result<ObservableBasis> {
    let sys_dim = 1usize << c.num_system_qubits();
    match c.gates().last() {
        Some(Gate::U {
            theta, phi, lambda, ..
        }) => ObservableBasis::from_unitary(&u_gate_matrix(*theta, *phi, *lambda), "circuit-V"),
        Some(Gate::SystemUnitary { matrix }) => ObservableBasis::from_unitary(matrix, "circuit-V"),
        Some(Gate::Cnot { .. }) | None => Ok(ObservableBasis::computational(sys_dim)),
    }
}

/// Verify that tracing out the ancillas of the circuit reproduces the
/// dephasing channel in the circuit's measurement basis, over a batch of
/// Haar-random system inputs.
pub fn circuit_as_channel(c: &Circuit, samples: usize, seed: u64) -> Result<ChannelEquivalence> {
    let basis = extract_circuit_basis(c)?;
    let reference = dephasing_channel(&basis);
    let sys_dim = 1usize << c.num_system_qubits();
    let anc_dim = 1usize << c.num_ancilla_qubits();

    let mut max_deviation: f64 = 0.0;
    for k in 0..samples {
        let psi = crate::states::haar_random_state_vector(sys_dim, crate::states::sub_seed(seed, k as u64))?;
        // Ancillas in |0…0⟩ occupy the high bits: the system block sits at
        // the front of the full vector.
        let mut full = vec![Complex64::new(0.0, 0.0); sys_dim * anc_dim];
        full[..sys_dim].copy_from_slice(&psi);
        let out = simulate_statevector(c, &full)?;
        let full_rho = crate::states::pure_state(&out)?;
        let reduced = partial_trace(&full_rho, &[anc_dim, sys_dim], &[1])?;
        let expected = reference.apply(&crate::states::pure_state(&psi)?)?;
        max_deviation =
            max_deviation.max(reduced.matrix().frobenius_distance(expected.matrix()));
    }
    Ok(ChannelEquivalence {
        max_deviation,
        samples,
        reference: basis.label().to_string(),
    })
}

/// Estimate (P, C) from measurement records: P = log2 d − H(freq_x) and
/// C = H(freq_y) − H(freq_x), where counts_x reads the dephased state in
/// its own basis and counts_y reads it in the second basis.
pub fn estimate_measures_from_counts(
    counts_x: &[u64],
    counts_y: &[u64],
    d: usize,
) -> Result<(f64, f64)> {
    if counts_x.len() != d || counts_y.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: counts_x.len().max(counts_y.len()),
        });
    }
    let freq = |counts: &[u64]| -> Result<Vec<f64>> {
        let total: u64 = counts.iter().sum();
        if total == 0 {
            return Err(Error::EmptyHistogram);
        }
        Ok(counts.iter().map(|&c| c as f64 / total as f64).collect())
    };
    let hx = shannon_entropy_bits(&freq(counts_x)?)?;
    let hy = shannon_entropy_bits(&freq(counts_y)?)?;
    Ok(((d as f64).log2() - hx, hy - hx))
}

/// Bootstrap standard deviation of an estimator over multinomial resamples
/// of a histogram.
pub fn bootstrap_sigma(
    counts: &[u64],
    resamples: usize,
    seed: u64,
    estimator: impl Fn(&[u64]) -> f64,
) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 || resamples < 2 {
        return 0.0;
    }
    let freqs: Vec<f64> = counts.iter().map(|&c| c as f64 / total as f64).collect();
    let mut rng = seeded_rng(seed);
    let mut values = Vec::with_capacity(resamples);
    for _ in 0..resamples {
        values.push(estimator(&multinomial_sample(&freqs, total, &mut rng)));
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (values.len() - 1) as f64;
    var.sqrt()
}

/// Draw one multinomial sample by sequential binomials, O(d) per draw.
pub(crate) fn multinomial_sample(
    probs: &[f64],
    total: u64,
    rng: &mut rand_chacha::ChaCha12Rng,
) -> Vec<u64> {
    let mut remaining_n = total;
    let mut remaining_p = 1.0;
    let mut counts = vec![0u64; probs.len()];
    for (i, &p) in probs.iter().enumerate() {
        if remaining_n == 0 {
            break;
        }
        if i == probs.len() - 1 || remaining_p <= 0.0 {
            counts[i] = remaining_n;
            remaining_n = 0;
            break;
        }
        let q = (p / remaining_p).clamp(0.0, 1.0);
        let draw = rand_distr::Binomial::new(remaining_n, q)
            .map(|b| rng.sample(b))
            .unwrap_or(0);
        counts[i] = draw;
        remaining_n -= draw;
        remaining_p -= p;
    }
    if remaining_n > 0 {
        *counts.last_mut().expect("non-empty histogram") += remaining_n;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::haar_random_state_vector;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn u_gate_special_values() {
        assert!(u_gate_matrix(0.0, 0.0, 0.0).frobenius_distance(&ComplexMatrix::identity(2)) < 1e-15);

        let x = ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        assert!(u_gate_matrix(PI, 0.0, PI).frobenius_distance(&x) < 1e-15);

        for seed in 0..10u64 {
            let mut rng = crate::states::seeded_rng(seed);
            let (t, p, l): (f64, f64, f64) = (rng.gen::<f64>() * PI, rng.gen::<f64>() * 7.0, rng.gen::<f64>() * 7.0);
            assert!(u_gate_matrix(t, p, l).unitarity_deviation() < 1e-12);
        }
    }

    #[test]
    fn u_dagger_params_identity() {
        let (t, p, l) = u_dagger_params(0.0, 0.0, 0.0).unwrap();
        assert!(u_gate_matrix(t, p, l).frobenius_distance(&ComplexMatrix::identity(2)) < 1e-12);

        // Oracle: entrywise conjugate transpose for (π/2, 0, 0).
        let (t, p, l) = u_dagger_params(PI / 2.0, 0.0, 0.0).unwrap();
        let direct = u_gate_matrix(PI / 2.0, 0.0, 0.0).dagger();
        assert!(u_gate_matrix(t, p, l).frobenius_distance(&direct) < 1e-12);

        // Product with the original is a unit-modulus global phase.
        for seed in 0..20u64 {
            let mut rng = crate::states::seeded_rng(seed);
            let (t, p, l): (f64, f64, f64) = (rng.gen::<f64>() * PI, rng.gen::<f64>() * 7.0, rng.gen::<f64>() * 7.0);
            let (td, pd, ld) = u_dagger_params(t, p, l).unwrap();
            let product = u_gate_matrix(td, pd, ld).matmul(&u_gate_matrix(t, p, l));
            let phase = product[(0, 0)];
            assert!((phase.norm() - 1.0).abs() < 1e-10);
            assert!(product
                .sub(&ComplexMatrix::identity(2).scale(phase))
                .frobenius_norm()
                < 1e-10);
        }
    }

    #[test]
    fn fig1_circuit_computational_case() {
        // θ = φ = 0 reduces to the plain CNOT dilation: |ψ⟩|0⟩ ↦ Σ ψ_j |j⟩|j⟩.
        let circuit = build_nrvnm_circuit_1q(0.0, 0.0);
        let psi = haar_random_state_vector(2, 3).unwrap();
        let mut full = vec![c(0.0, 0.0); 4];
        full[..2].copy_from_slice(&psi);
        let out = simulate_statevector(&circuit, &full).unwrap();
        // Expected: ψ_0 |00⟩ + ψ_1 |11⟩ (qubit 0 = system = low bit).
        assert!((out[0] - psi[0]).norm() < 1e-12);
        assert!((out[3] - psi[1]).norm() < 1e-12);
        assert!(out[1].norm() < 1e-12);
        assert!(out[2].norm() < 1e-12);
    }

    #[test]
    fn fig1_circuit_matches_dephasing_channel() {
        for (theta, phi) in [(PI / 2.0, 0.0), (PI / 2.0, PI / 2.0), (0.7, 2.1)] {
            let circuit = build_nrvnm_circuit_1q(theta, phi);
            let eq = circuit_as_channel(&circuit, 20, 11).unwrap();
            assert!(eq.max_deviation < 1e-10, "θ={theta}, φ={phi}: {}", eq.max_deviation);
        }
    }

    #[test]
    fn fig1_x_basis_erases_a_basis_state() {
        // Dephasing |0⟩⟨0| in the x basis leaves I/2 on the system.
        let circuit = build_nrvnm_circuit_1q(PI / 2.0, 0.0);
        let input = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let out = simulate_statevector(&circuit, &input).unwrap();
        let rho = crate::states::pure_state(&out).unwrap();
        let reduced = partial_trace(&rho, &[2, 2], &[1]).unwrap();
        assert!(
            reduced
                .matrix()
                .frobenius_distance(&ComplexMatrix::identity(2).scale(c(0.5, 0.0)))
                < 1e-12
        );
    }

    #[test]
    fn fig3_circuit_identity_v() {
        let circuit = build_nrvnm_circuit_nq(&ComplexMatrix::identity(4)).unwrap();
        assert_eq!(circuit.num_system_qubits(), 2);
        assert_eq!(circuit.num_ancilla_qubits(), 2);
        let eq = circuit_as_channel(&circuit, 20, 13).unwrap();
        assert!(eq.max_deviation < 1e-10);
    }

    #[test]
    fn fig3_circuit_random_v() {
        let v = crate::states::haar_random_unitary(4, 21).unwrap();
        let circuit = build_nrvnm_circuit_nq(&v).unwrap();
        let eq = circuit_as_channel(&circuit, 10, 17).unwrap();
        assert!(eq.max_deviation < 1e-10, "{}", eq.max_deviation);
    }

    #[test]
    fn nq_builder_matches_1q_builder() {
        let theta = PI / 2.0;
        let v = u_gate_matrix(theta, 0.0, 0.0);
        let from_nq = build_nrvnm_circuit_nq(&v).unwrap();
        let from_1q = build_nrvnm_circuit_1q(theta, 0.0);
        let psi = haar_random_state_vector(2, 5).unwrap();
        let mut full = vec![c(0.0, 0.0); 4];
        full[..2].copy_from_slice(&psi);
        let rho_nq = crate::states::pure_state(&simulate_statevector(&from_nq, &full).unwrap()).unwrap();
        let rho_1q = crate::states::pure_state(&simulate_statevector(&from_1q, &full).unwrap()).unwrap();
        let red_nq = partial_trace(&rho_nq, &[2, 2], &[1]).unwrap();
        let red_1q = partial_trace(&rho_1q, &[2, 2], &[1]).unwrap();
        assert!(red_nq.matrix().frobenius_distance(red_1q.matrix()) < 1e-10);
    }

    #[test]
    fn nq_builder_rejects_bad_input() {
        let not_unitary = ComplexMatrix::identity(4).scale(c(0.5, 0.0));
        assert!(matches!(
            build_nrvnm_circuit_nq(&not_unitary),
            Err(Error::NotUnitary { .. })
        ));
        assert!(matches!(
            build_nrvnm_circuit_nq(&ComplexMatrix::identity(64)),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn statevector_simulation_basics() {
        let empty = Circuit::new(1, 1, vec![]).unwrap();
        let input = [c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0), c(0.0, 0.0)];
        let out = simulate_statevector(&empty, &input).unwrap();
        assert_eq!(out, input.to_vec());

        // CNOT on |+0⟩ gives a Bell vector.
        let cnot = Circuit::new(1, 1, vec![Gate::Cnot { control: 0, target: 1 }]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let plus_zero = [c(s, 0.0), c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let out = simulate_statevector(&cnot, &plus_zero).unwrap();
        assert!((out[0] - c(s, 0.0)).norm() < 1e-15);
        assert!((out[3] - c(s, 0.0)).norm() < 1e-15);

        let norm: f64 = out.iter().map(|x| x.norm_sqr()).sum();
        assert!((norm - 1.0).abs() < 1e-12);

        assert!(matches!(
            simulate_statevector(&cnot, &[c(1.0, 0.0), c(0.0, 0.0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn circuit_unitary_is_unitary() {
        let circuit = build_nrvnm_circuit_1q(1.1, 0.4);
        assert!(circuit.unitary().unitarity_deviation() < 1e-10);
        let v = crate::states::haar_random_unitary(4, 31).unwrap();
        let circuit = build_nrvnm_circuit_nq(&v).unwrap();
        assert!(circuit.unitary().unitarity_deviation() < 1e-10);
    }

    #[test]
    fn sampling_deterministic_outcome() {
        let circuit = build_nrvnm_circuit_1q(0.0, 0.0);
        let input = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let counts =
            sample_measurement(&circuit, &input, None, 8192, &NoiseModel::disabled(), 7).unwrap();
        assert_eq!(counts, vec![8192, 0]);
    }

    #[test]
    fn sampling_binomial_statistics() {
        // |+⟩ input, computational readout: frequencies within 5σ of 1/2.
        let circuit = build_nrvnm_circuit_1q(0.0, 0.0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let input = [c(s, 0.0), c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let shots = 8192u64;
        let counts =
            sample_measurement(&circuit, &input, None, shots, &NoiseModel::disabled(), 11).unwrap();
        let sigma = (0.25 / shots as f64).sqrt();
        let freq0 = counts[0] as f64 / shots as f64;
        assert!((freq0 - 0.5).abs() < 5.0 * sigma, "freq {freq0}");
    }

    #[test]
    fn sampling_readout_noise_statistics() {
        let circuit = build_nrvnm_circuit_1q(0.0, 0.0);
        let input = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let shots = 8192u64;

        // Readout flips alone: count(1)/shots concentrates on the flip rate.
        let readout_only = NoiseModel::new(0.0, 2.14e-2, true).unwrap();
        let counts = sample_measurement(&circuit, &input, None, shots, &readout_only, 13).unwrap();
        let r = readout_only.readout_flip_rate;
        let sigma = (r * (1.0 - r) / shots as f64).sqrt();
        let freq1 = counts[1] as f64 / shots as f64;
        assert!((freq1 - r).abs() < 5.0 * sigma, "flip frequency {freq1} vs rate {r}");

        // Full default model: forward calculation. The CNOT depolarizing
        // leaves the system in (1−p)|0⟩⟨0| + p·I/2, so
        // q = (1−r)·p/2 + r·(1 − p/2).
        let noise = NoiseModel::default();
        let p = noise.cnot_depolarizing_rate;
        let q = (1.0 - r) * p / 2.0 + r * (1.0 - p / 2.0);
        let counts = sample_measurement(&circuit, &input, None, shots, &noise, 13).unwrap();
        let sigma = (q * (1.0 - q) / shots as f64).sqrt();
        let freq1 = counts[1] as f64 / shots as f64;
        assert!((freq1 - q).abs() < 5.0 * sigma, "flip frequency {freq1} vs forward value {q}");
    }

    #[test]
    fn zero_rate_noise_matches_noiseless_exactly() {
        let circuit = build_nrvnm_circuit_1q(0.9, 0.3);
        let psi = haar_random_state_vector(2, 17).unwrap();
        let mut input = vec![c(0.0, 0.0); 4];
        input[..2].copy_from_slice(&psi);
        let zero_noise = NoiseModel::new(0.0, 0.0, true).unwrap();
        for seed in 0..5 {
            let a = sample_measurement(&circuit, &input, None, 4096, &NoiseModel::disabled(), seed).unwrap();
            let b = sample_measurement(&circuit, &input, None, 4096, &zero_noise, seed).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn basis_change_reads_second_basis() {
        // Fig. 1 at θ = π/2 (x-basis NRvNM) on |0⟩: computational readout is
        // uniform, x-basis readout is deterministic up to the dephasing.
        let circuit = build_nrvnm_circuit_1q(PI / 2.0, 0.0);
        let input = [c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let v = u_gate_matrix(PI / 2.0, 0.0, 0.0);
        let counts_x = sample_measurement(
            &circuit,
            &input,
            Some(&v.dagger()),
            8192,
            &NoiseModel::disabled(),
            3,
        )
        .unwrap();
        // Φ_X(|0⟩⟨0|) has x-basis diagonal (1/2, 1/2).
        let freq0 = counts_x[0] as f64 / 8192.0;
        assert!((freq0 - 0.5).abs() < 5.0 * (0.25f64 / 8192.0).sqrt());
    }

    #[test]
    fn estimate_from_counts_cases() {
        let (p, c_est) = estimate_measures_from_counts(&[8192, 0], &[4096, 4096], 2).unwrap();
        assert!((p - 1.0).abs() < 1e-12);
        assert!((c_est - 1.0).abs() < 1e-12);

        let (p, c_est) = estimate_measures_from_counts(&[4096, 4096], &[4096, 4096], 2).unwrap();
        assert!(p.abs() < 1e-12);
        assert!(c_est.abs() < 1e-12);

        assert!(matches!(
            estimate_measures_from_counts(&[0, 0], &[1, 1], 2),
            Err(Error::EmptyHistogram)
        ));
    }

    #[test]
    fn depolarizing_preserves_trace_and_mixes() {
        let psi = haar_random_state_vector(4, 23).unwrap();
        let rho = ComplexMatrix::outer(&psi, &psi);
        let out = depolarize_pair(&rho, 0, 1, 0.3);
        assert!((out.trace().re - 1.0).abs() < 1e-12);
        assert!(out.hermiticity_deviation() < 1e-12);
        // Full depolarizing of the whole register yields I/4.
        let out = depolarize_pair(&rho, 0, 1, 1.0);
        assert!(out.frobenius_distance(&ComplexMatrix::identity(4).scale(c(0.25, 0.0))) < 1e-12);
    }

    #[test]
    fn bootstrap_sigma_scales_with_shots() {
        let estimator = |counts: &[u64]| {
            estimate_measures_from_counts(counts, &[1, 1], 2).map(|x| x.0).unwrap_or(0.0)
        };
        let sig_small = bootstrap_sigma(&[700, 324], 100, 5, estimator);
        let sig_large = bootstrap_sigma(&[70000, 32400], 100, 5, estimator);
        assert!(sig_small > sig_large);
        assert!(sig_large > 0.0);
    }
}
