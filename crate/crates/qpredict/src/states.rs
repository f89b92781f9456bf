//! Density operators, observable eigenbases, mutually unbiased partners,
//! random sampling, and maximally unpredictable (free) states.

use std::f64::consts::PI;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecompose, Complex64, ComplexMatrix};

/// Hermiticity / trace / positivity tolerance for density operators.
pub const STATE_TOL: f64 = 1e-10;

/// Orthonormality tolerance for observable bases.
pub const BASIS_TOL: f64 = 1e-10;

/// Trace-one positive-semidefinite Hermitian matrix: the universal state
/// carrier.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    matrix: ComplexMatrix,
    dim: usize,
}

impl DensityOperator {
    /// Validate and wrap a matrix: Hermitian within 1e-10, unit trace within
    /// 1e-10, minimum eigenvalue ≥ −1e-10.
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidState(format!(
                "matrix is {}x{}, not square",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let herm_dev = matrix.hermiticity_deviation();
        if herm_dev > STATE_TOL {
            return Err(Error::InvalidState(format!(
                "not Hermitian (deviation {herm_dev:.3e})"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > STATE_TOL || tr.im.abs() > STATE_TOL {
            return Err(Error::InvalidState(format!("trace is {tr}, expected 1")));
        }
        let spec = hermitian_eigendecompose(&matrix, STATE_TOL)?;
        let min = spec.eigenvalues.last().copied().unwrap_or(0.0);
        if min < -STATE_TOL {
            return Err(Error::InvalidState(format!(
                "minimum eigenvalue {min:.3e} is negative"
            )));
        }
        let dim = matrix.rows();
        Ok(Self { matrix, dim })
    }

    /// Maximally mixed state I/d.
    pub fn maximally_mixed(dim: usize) -> Self {
        let m = ComplexMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0));
        Self { matrix: m, dim }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Tr ρ².
    pub fn purity(&self) -> f64 {
        self.matrix.matmul(&self.matrix).trace().re
    }

    /// Outcome probabilities ⟨x_j|ρ|x_j⟩ in the given basis.
    pub fn diagonal_in_basis(&self, basis: &ObservableBasis) -> Result<Vec<f64>> {
        if basis.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: basis.dim(),
            });
        }
        Ok(basis
            .vectors()
            .iter()
            .map(|v| {
                let rv = self.matrix.matvec(v);
                v.iter().zip(&rv).map(|(a, b)| (a.conj() * b).re).sum()
            })
            .collect())
    }
}

/// Rank-one projector |ψ⟩⟨ψ| from a normalized amplitude vector.
pub fn pure_state(amplitudes: &[Complex64]) -> Result<DensityOperator> {
    let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > STATE_TOL {
        return Err(Error::NotNormalized { norm });
    }
    DensityOperator::new(ComplexMatrix::outer(amplitudes, amplitudes))
}

/// An ordered orthonormal eigenbasis standing in for a discrete observable.
#[derive(Debug, Clone)]
pub struct ObservableBasis {
    vectors: Vec<Vec<Complex64>>,
    label: String,
}

impl ObservableBasis {
    /// Validate orthonormality (Gram matrix = identity within 1e-10).
    pub fn new(vectors: Vec<Vec<Complex64>>, label: impl Into<String>) -> Result<Self> {
        let d = vectors.len();
        if d == 0 {
            return Err(Error::BadDimension(0));
        }
        for v in &vectors {
            if v.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.len(),
                });
            }
        }
        let mut dev_sq = 0.0;
        for i in 0..d {
            for j in 0..d {
                let dot: Complex64 = vectors[i]
                    .iter()
                    .zip(&vectors[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                dev_sq += (dot - Complex64::new(expect, 0.0)).norm_sqr();
            }
        }
        let deviation = dev_sq.sqrt();
        if deviation > BASIS_TOL {
            return Err(Error::NotOrthonormal { deviation });
        }
        Ok(Self {
            vectors,
            label: label.into(),
        })
    }

    /// Computational basis {|0⟩, …, |d−1⟩}.
    pub fn computational(dim: usize) -> Self {
        let vectors = (0..dim)
            .map(|j| {
                let mut v = vec![Complex64::new(0.0, 0.0); dim];
                v[j] = Complex64::new(1.0, 0.0);
                v
            })
            .collect();
        Self {
            vectors,
            label: "computational".into(),
        }
    }

    /// Basis formed by the columns of a unitary matrix.
    pub fn from_unitary(u: &ComplexMatrix, label: impl Into<String>) -> Result<Self> {
        let dev = u.unitarity_deviation();
        if dev > BASIS_TOL {
            return Err(Error::NotUnitary { deviation: dev });
        }
        let d = u.rows();
        let vectors = (0..d)
            .map(|k| (0..d).map(|i| u[(i, k)]).collect())
            .collect();
        Self::new(vectors, label)
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vectors(&self) -> &[Vec<Complex64>] {
        &self.vectors
    }

    pub fn vector(&self, j: usize) -> &[Complex64] {
        &self.vectors[j]
    }

    /// Projector |x_j⟩⟨x_j|.
    pub fn projector(&self, j: usize) -> ComplexMatrix {
        ComplexMatrix::outer(&self.vectors[j], &self.vectors[j])
    }

    /// Unitary whose k-th column is |x_k⟩.
    pub fn unitary(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |r, c| self.vectors[c][r])
    }

    /// Largest deviation of any squared overlap |⟨x_j|y_k⟩|² from 1/d.
    pub fn mutual_unbiasedness_deviation(&self, other: &ObservableBasis) -> Result<f64> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let target = 1.0 / self.dim() as f64;
        let mut max_dev: f64 = 0.0;
        for x in &self.vectors {
            for y in &other.vectors {
                let dot: Complex64 = x.iter().zip(y).map(|(a, b)| a.conj() * b).sum();
                max_dev = max_dev.max((dot.norm_sqr() - target).abs());
            }
        }
        Ok(max_dev)
    }
}

/// Deterministic RNG for a 64-bit seed.
pub(crate) fn seeded_rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Derive an independent stream seed from a master seed. splitmix64 step.
pub fn sub_seed(master: u64, stream: u64) -> u64 {
    let mut z = master
        .wrapping_add(stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn complex_gaussian(rng: &mut ChaCha12Rng) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im)
}

/// Haar-random pure state vector (normalized complex Gaussian).
pub fn haar_random_state_vector(dim: usize, seed: u64) -> Result<Vec<Complex64>> {
    if dim < 2 {
        return Err(Error::BadDimension(dim));
    }
    let mut rng = seeded_rng(seed);
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| complex_gaussian(&mut rng)).collect();
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return Ok(v.into_iter().map(|x| x / norm).collect());
        }
    }
}

/// Haar-random pure state |ψ⟩⟨ψ|, deterministic per seed.
pub fn haar_random_pure(dim: usize, seed: u64) -> Result<DensityOperator> {
    pure_state(&haar_random_state_vector(dim, seed)?)
}

/// Haar-random unitary: QR of a complex Ginibre matrix by modified
/// Gram-Schmidt (the R diagonal comes out real positive, which makes the Q
/// factor Haar-distributed).
pub fn haar_random_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix> {
    if dim < 2 {
        return Err(Error::BadDimension(dim));
    }
    let mut rng = seeded_rng(seed);
    let mut cols: Vec<Vec<Complex64>> = (0..dim)
        .map(|_| (0..dim).map(|_| complex_gaussian(&mut rng)).collect())
        .collect();
    for k in 0..dim {
        for prev in 0..k {
            let proj: Complex64 = cols[prev]
                .iter()
                .zip(&cols[k])
                .map(|(a, b)| a.conj() * b)
                .sum();
            for i in 0..dim {
                let correction = proj * cols[prev][i];
                cols[k][i] -= correction;
            }
        }
        let norm: f64 = cols[k].iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in &mut cols[k] {
            *x /= norm;
        }
    }
    Ok(ComplexMatrix::from_fn(dim, dim, |r, c| cols[c][r]))
}

/// Random observable basis: the columns of a Haar-random unitary.
pub fn random_basis(dim: usize, seed: u64) -> Result<ObservableBasis> {
    let u = haar_random_unitary(dim, seed)?;
    ObservableBasis::from_unitary(&u, format!("haar[{seed}]"))
}

/// Hilbert-Schmidt random mixed state: ρ = GG†/Tr(GG†) with G Ginibre.
/// Full rank with probability one.
pub fn random_density(dim: usize, seed: u64) -> Result<DensityOperator> {
    if dim < 2 {
        return Err(Error::BadDimension(dim));
    }
    let mut rng = seeded_rng(seed);
    let g = ComplexMatrix::from_fn(dim, dim, |_, _| complex_gaussian(&mut rng));
    let gg = g.matmul(&g.dagger());
    let tr = gg.trace().re;
    DensityOperator::new(gg.scale(Complex64::new(1.0 / tr, 0.0)).hermitize())
}

/// Discrete-Fourier partner basis |y_k⟩ = (1/√d) Σ_j e^{2πi jk/d} |x_j⟩,
/// mutually unbiased to its source in every dimension.
pub fn fourier_mub_partner(basis: &ObservableBasis) -> ObservableBasis {
    let d = basis.dim();
    let scale = 1.0 / (d as f64).sqrt();
    let vectors = (0..d)
        .map(|k| {
            let mut v = vec![Complex64::new(0.0, 0.0); d];
            for (j, x) in basis.vectors().iter().enumerate() {
                let angle = 2.0 * PI * (j as f64) * (k as f64) / d as f64;
                let w = Complex64::from_polar(scale, angle);
                for (vi, xi) in v.iter_mut().zip(x) {
                    *vi += w * xi;
                }
            }
            v
        })
        .collect();
    ObservableBasis::new(vectors, format!("fourier({})", basis.label()))
        .expect("fourier transform of an orthonormal basis is orthonormal")
}

/// The four two-qubit basis vectors
/// (|0₁0₀⟩ ± i|1₁1₀⟩)/√2, (|1₁0₀⟩ ± i|0₁1₀⟩)/√2,
/// built from σ_x eigenstates |0₀⟩, |1₀⟩ on the right qubit and σ_y
/// eigenstates |0₁⟩, |1₁⟩ on the left qubit. Mutually unbiased to the
/// two-qubit computational basis.
pub fn b2_basis() -> ObservableBasis {
    let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);

    // σ_x eigenstates.
    let x0 = [re(inv_sqrt2), re(inv_sqrt2)];
    let x1 = [re(inv_sqrt2), re(-inv_sqrt2)];
    // σ_y eigenstates.
    let y0 = [re(inv_sqrt2), im(inv_sqrt2)];
    let y1 = [re(inv_sqrt2), im(-inv_sqrt2)];

    let tensor = |a: &[Complex64; 2], b: &[Complex64; 2]| -> Vec<Complex64> {
        crate::linalg::kron_vec(a, b)
    };

    let combine = |p: Vec<Complex64>, q: Vec<Complex64>, sign: f64| -> Vec<Complex64> {
        p.iter()
            .zip(&q)
            .map(|(a, b)| (a + im(sign) * b) * re(inv_sqrt2))
            .collect()
    };

    let v00 = tensor(&y0, &x0); // |0₁0₀⟩
    let v11 = tensor(&y1, &x1); // |1₁1₀⟩
    let v10 = tensor(&y1, &x0); // |1₁0₀⟩
    let v01 = tensor(&y0, &x1); // |0₁1₀⟩

    let vectors = vec![
        combine(v00.clone(), v11.clone(), 1.0),
        combine(v00, v11, -1.0),
        combine(v10.clone(), v01.clone(), 1.0),
        combine(v10, v01, -1.0),
    ];
    ObservableBasis::new(vectors, "B2").expect("fixed orthonormal construction")
}

/// Largest squared overlap c = max_{j,k} |⟨x_j|y_k⟩|² ∈ [1/d, 1].
pub fn overlap_coefficient(x: &ObservableBasis, y: &ObservableBasis) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let mut c: f64 = 0.0;
    for xv in x.vectors() {
        for yv in y.vectors() {
            let dot: Complex64 = xv.iter().zip(yv).map(|(a, b)| a.conj() * b).sum();
            c = c.max(dot.norm_sqr());
        }
    }
    Ok(c)
}

/// Maximally coherent mixed state (1−p)·I/d + p·|ψ_d⟩⟨ψ_d| with
/// |ψ_d⟩ = (1/√d) Σ_j e^{iφ_j} |x_j⟩. Its diagonal in the given basis is
/// uniform for every p and phase choice.
pub fn free_state(
    dim: usize,
    p: f64,
    phases: &[f64],
    basis: &ObservableBasis,
) -> Result<DensityOperator> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParameter(format!("p = {p} outside [0, 1]")));
    }
    if phases.len() != dim {
        return Err(Error::BadParameter(format!(
            "expected {dim} phases, got {}",
            phases.len()
        )));
    }
    if basis.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: basis.dim(),
        });
    }
    let scale = 1.0 / (dim as f64).sqrt();
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    for (phi, x) in phases.iter().zip(basis.vectors()) {
        let w = Complex64::from_polar(scale, *phi);
        for (pi, xi) in psi.iter_mut().zip(x) {
            *pi += w * xi;
        }
    }
    let projector = ComplexMatrix::outer(&psi, &psi);
    let mixed = ComplexMatrix::identity(dim).scale(Complex64::new((1.0 - p) / dim as f64, 0.0));
    DensityOperator::new(mixed.add(&projector.scale(Complex64::new(p, 0.0))).hermitize())
}

/// Membership test for the maximally unpredictable set: every diagonal
/// element in the given basis within `tol` of 1/d.
pub fn is_free_state(rho: &DensityOperator, basis: &ObservableBasis, tol: f64) -> Result<bool> {
    let probs = rho.diagonal_in_basis(basis)?;
    let target = 1.0 / rho.dim() as f64;
    Ok(probs.iter().all(|p| (p - target).abs() <= tol))
}
