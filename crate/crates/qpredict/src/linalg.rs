//! Dense complex linear algebra: matrices, Hermitian eigendecomposition,
//! entropies, distances, Kronecker products, and partial traces.
//!
//! Everything operates on small dense matrices (dimensions up to a few
//! dozen); all functions are pure and thread-safe.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::states::DensityOperator;

/// Complex scalar used throughout the crate.
pub type Complex64 = Complex<f64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    /// Identity matrix of dimension `dim`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Build from a row-major entry vector. Panics if the length does not
    /// match the shape.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must match shape");
        Self { rows, cols, data }
    }

    /// Build entrywise from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Square diagonal matrix with the given real diagonal.
    pub fn diagonal(diag: &[f64]) -> Self {
        let d = diag.len();
        let mut m = Self::zeros(d, d);
        for (i, &x) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(x, 0.0);
        }
        m
    }

    /// Rank-one outer product |a⟩⟨b|.
    pub fn outer(a: &[Complex64], b: &[Complex64]) -> Self {
        Self::from_fn(a.len(), b.len(), |r, c| a[r] * b[c].conj())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Raw row-major entries.
    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == ZERO {
                    continue;
                }
                for c in 0..other.cols {
                    out[(r, c)] += a * other[(k, c)];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self[(r, c)] * v[c]).sum())
            .collect()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = self.clone();
        for x in &mut out.data {
            *x *= s;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius distance ‖self − other‖_F.
    pub fn frobenius_distance(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| (x - y).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Deviation from Hermiticity, ‖m − m†‖_F.
    pub fn hermiticity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut sum = 0.0;
        for r in 0..self.rows {
            for c in 0..self.cols {
                sum += (self[(r, c)] - self[(c, r)].conj()).norm_sqr();
            }
        }
        sum.sqrt()
    }

    /// Deviation from unitarity, ‖m†m − I‖_F.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        self.dagger()
            .matmul(self)
            .frobenius_distance(&Self::identity(self.rows))
    }

    /// Replace the matrix by its Hermitian part (m + m†)/2. Used to strip
    /// rounding noise from quantities that are Hermitian by construction.
    pub fn hermitize(&self) -> Self {
        assert!(self.is_square());
        Self::from_fn(self.rows, self.cols, |r, c| {
            (self[(r, c)] + self[(c, r)].conj()) * 0.5
        })
    }
}

impl std::ops::Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

impl std::fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self[(r, c)];
                write!(f, "{:+.4}{:+.4}i ", x.re, x.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Eigenvalues are sorted in descending order; exact ties are broken by
/// lexicographic order of the phase-fixed eigenvector entries so that the
/// result is deterministic. Each eigenvector's first nonzero entry is made
/// real and positive.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Orthonormal eigenvectors, `eigenvectors[k]` pairs with `eigenvalues[k]`.
    pub eigenvectors: Vec<Vec<Complex64>>,
}

impl Spectrum {
    /// Rebuild Σ λ_k |v_k⟩⟨v_k|.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let d = self.eigenvalues.len();
        let mut m = ComplexMatrix::zeros(d, d);
        for (lam, v) in self.eigenvalues.iter().zip(&self.eigenvectors) {
            for r in 0..d {
                for c in 0..d {
                    m[(r, c)] += Complex64::new(*lam, 0.0) * v[r] * v[c].conj();
                }
            }
        }
        m
    }
}

const JACOBI_MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// `tol` bounds the accepted deviation ‖m − m†‖_F; the decomposition itself
/// iterates down to machine precision.
pub fn hermitian_eigendecompose(m: &ComplexMatrix, tol: f64) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let dev = m.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NonHermitian {
            deviation: dev,
            tol,
        });
    }

    let d = m.rows();
    let mut a = m.hermitize();
    let mut v = ComplexMatrix::identity(d);

    let scale = a.frobenius_norm().max(1.0);
    let stop = 1e-14 * scale;

    let off_norm = |a: &ComplexMatrix| -> f64 {
        let mut s = 0.0;
        for p in 0..d {
            for q in 0..d {
                if p != q {
                    s += a[(p, q)].norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_norm(&a) > stop {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::ConvergenceFailure {
                sweeps,
                off_norm: off_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..d {
            for q in (p + 1)..d {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= stop / (d as f64) {
                    continue;
                }
                // Zero the (p,q) entry: phase rotation to make it real,
                // then a real Givens rotation.
                let phase = apq / r;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let (c, s) = if (app - aqq).abs() < f64::MIN_POSITIVE * r {
                    (std::f64::consts::FRAC_1_SQRT_2, std::f64::consts::FRAC_1_SQRT_2)
                } else {
                    let theta = (app - aqq) / (2.0 * r);
                    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                    let c = 1.0 / (t * t + 1.0).sqrt();
                    (c, t * c)
                };
                // Unitary J acting on coordinates (p,q):
                //   J = [[c, -s·phase], [s·conj(phase), c]]
                let jpq = -Complex64::new(s, 0.0) * phase;
                let jqp = Complex64::new(s, 0.0) * phase.conj();
                let cc = Complex64::new(c, 0.0);

                // A <- J† A J, columns first then rows.
                for i in 0..d {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * cc + aiq * jqp;
                    a[(i, q)] = aip * jpq + aiq * cc;
                }
                for i in 0..d {
                    let api = a[(p, i)];
                    let aqi = a[(q, i)];
                    a[(p, i)] = cc.conj() * api + jqp.conj() * aqi;
                    a[(q, i)] = jpq.conj() * api + cc.conj() * aqi;
                }
                a[(p, q)] = ZERO;
                a[(q, p)] = ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

                // Accumulate eigenvectors: V <- V J.
                for i in 0..d {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * cc + viq * jqp;
                    v[(i, q)] = vip * jpq + viq * cc;
                }
            }
        }
    }

    let mut pairs: Vec<(f64, Vec<Complex64>)> = (0..d)
        .map(|k| {
            let col: Vec<Complex64> = (0..d).map(|i| v[(i, k)]).collect();
            (a[(k, k)].re, fix_phase(col))
        })
        .collect();
    pairs.sort_by(|x, y| compare_eigenpairs(x, y));

    Ok(Spectrum {
        eigenvalues: pairs.iter().map(|(l, _)| *l).collect(),
        eigenvectors: pairs.into_iter().map(|(_, v)| v).collect(),
    })
}

/// Multiply by a global phase so the first entry with modulus above 1e-12
/// becomes real and positive.
fn fix_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    if let Some(lead) = v.iter().find(|x| x.norm() > 1e-12) {
        let phase = lead.conj() / lead.norm();
        for x in &mut v {
            *x *= phase;
        }
    }
    v
}

/// Descending by eigenvalue; ties (within 1e-12) by lexicographic order of
/// the phase-fixed eigenvector entries, comparing (re, im) pairs.
fn compare_eigenpairs(x: &(f64, Vec<Complex64>), y: &(f64, Vec<Complex64>)) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    if (x.0 - y.0).abs() > 1e-12 {
        return y.0.partial_cmp(&x.0).unwrap_or(Ordering::Equal);
    }
    for (a, b) in x.1.iter().zip(&y.1) {
        match a.re.partial_cmp(&b.re) {
            Some(Ordering::Equal) | None => {}
            Some(ord) => return ord,
        }
        match a.im.partial_cmp(&b.im) {
            Some(Ordering::Equal) | None => {}
            Some(ord) => return ord,
        }
    }
    Ordering::Equal
}

/// Tolerance accepted on eigenvalues of validated density operators before
/// an entropy evaluation refuses the input. Wider than the 1e-12 clipping
/// window so states that pass the DensityOperator invariants (min eigenvalue
/// ≥ −1e-10) never spuriously error.
const EIGENVALUE_SLACK: f64 = 1e-9;

fn clip_probability(lam: f64) -> Result<f64> {
    if lam < -EIGENVALUE_SLACK || lam > 1.0 + EIGENVALUE_SLACK {
        return Err(Error::InvalidState(format!(
            "eigenvalue {lam} outside [0, 1]"
        )));
    }
    Ok(lam.clamp(0.0, 1.0))
}

/// Shannon entropy −Σ p log2 p in bits, with the 0·log 0 := 0 convention.
/// Entries may carry rounding noise up to 1e-9 outside [0, 1].
pub fn shannon_entropy_bits(probs: &[f64]) -> Result<f64> {
    let mut h = 0.0;
    for &p in probs {
        let p = clip_probability(p)?;
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    Ok(h)
}

/// Von Neumann entropy S(ρ) = −Tr ρ log2 ρ in bits.
pub fn von_neumann_entropy(rho: &DensityOperator) -> Result<f64> {
    let spec = hermitian_eigendecompose(rho.matrix(), 1e-9)?;
    shannon_entropy_bits(&spec.eigenvalues)
}

/// Eigenvalues of σ below this threshold are treated as exact zeros when
/// checking the support condition of the relative entropy.
const SUPPORT_EPS: f64 = 1e-12;

/// How much weight ρ may carry on the kernel of σ before the relative
/// entropy is declared divergent.
const SUPPORT_LEAK_TOL: f64 = 1e-10;

/// Relative entropy S(ρ‖σ) = Tr ρ(log2 ρ − log2 σ) in bits.
///
/// Returns [`Error::SupportViolation`] when ρ has weight on the kernel of σ,
/// i.e. when the quantity diverges.
pub fn relative_entropy(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let rho_spec = hermitian_eigendecompose(rho.matrix(), 1e-9)?;
    let sigma_spec = hermitian_eigendecompose(sigma.matrix(), 1e-9)?;

    let mut tr_rho_log_rho = 0.0;
    for &p in &rho_spec.eigenvalues {
        let p = clip_probability(p)?;
        if p > 0.0 {
            tr_rho_log_rho += p * p.log2();
        }
    }

    let mut tr_rho_log_sigma = 0.0;
    for (q, v) in sigma_spec
        .eigenvalues
        .iter()
        .zip(&sigma_spec.eigenvectors)
    {
        // ⟨v|ρ|v⟩
        let rv = rho.matrix().matvec(v);
        let weight: f64 = v
            .iter()
            .zip(&rv)
            .map(|(vi, ri)| (vi.conj() * ri).re)
            .sum();
        let q = clip_probability(*q)?;
        if q <= SUPPORT_EPS {
            if weight > SUPPORT_LEAK_TOL {
                return Err(Error::SupportViolation);
            }
            continue;
        }
        tr_rho_log_sigma += weight * q.log2();
    }

    Ok(tr_rho_log_rho - tr_rho_log_sigma)
}

/// Relative linear entropy S_l(ρ‖σ) = Tr ρ(ρ − σ) = Tr ρ² − Tr ρσ.
pub fn linear_relative_entropy(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let prod_self = rho.matrix().matmul(rho.matrix());
    let prod_cross = rho.matrix().matmul(sigma.matrix());
    Ok((prod_self.trace() - prod_cross.trace()).re)
}

/// Trace distance (1/2)‖ρ − σ‖_1 = (1/2) Σ |λ_k(ρ − σ)|.
pub fn trace_distance(rho: &DensityOperator, sigma: &DensityOperator) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: sigma.dim(),
        });
    }
    let diff = rho.matrix().sub(sigma.matrix());
    let spec = hermitian_eigendecompose(&diff, 1e-9)?;
    Ok(0.5 * spec.eigenvalues.iter().map(|l| l.abs()).sum::<f64>())
}

/// Kronecker product a ⊗ b, with `a` the left (most significant) factor.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ar, ac) = (a.rows(), a.cols());
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(ar * br, ac * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

/// Kronecker product of vectors, left factor most significant.
pub fn kron_vec(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Partial trace over the subsystems *not* listed in `keep`.
///
/// `dims` lists the subsystem dimensions with subsystem 0 the leftmost
/// (most significant) tensor factor; `keep` lists the subsystem indices to
/// retain, in ascending order. The kept subsystems preserve their relative
/// order in the output.
pub fn partial_trace(
    rho: &DensityOperator,
    dims: &[usize],
    keep: &[usize],
) -> Result<DensityOperator> {
    let total: usize = dims.iter().product();
    if total != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: total,
        });
    }
    let n = dims.len();
    for &k in keep {
        if k >= n {
            return Err(Error::BadIndex { index: k, count: n });
        }
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != keep.len() || sorted != keep {
        return Err(Error::BadParameter(
            "keep indices must be strictly ascending and unique".into(),
        ));
    }

    // Strides for decomposing a flat index into subsystem digits.
    let mut strides = vec![1usize; n];
    for i in (0..n.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let digit = |index: usize, sub: usize| (index / strides[sub]) % dims[sub];

    let kept_dim: usize = keep.iter().map(|&k| dims[k]).product();
    let mut out = ComplexMatrix::zeros(kept_dim, kept_dim);

    let flatten_kept = |index: usize| {
        let mut flat = 0usize;
        for &k in keep {
            flat = flat * dims[k] + digit(index, k);
        }
        flat
    };

    for row in 0..total {
        'cols: for col in 0..total {
            for sub in 0..n {
                if !keep.contains(&sub) && digit(row, sub) != digit(col, sub) {
                    continue 'cols;
                }
            }
            let (r, c) = (flatten_kept(row), flatten_kept(col));
            let x = rho.matrix()[(row, col)];
            out[(r, c)] += x;
        }
    }

    DensityOperator::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::pure_state;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn diag_state(probs: &[f64]) -> DensityOperator {
        DensityOperator::new(ComplexMatrix::diagonal(probs)).unwrap()
    }

    #[test]
    fn eigendecompose_identity() {
        let spec = hermitian_eigendecompose(&ComplexMatrix::identity(2), 1e-10).unwrap();
        assert_eq!(spec.eigenvalues, vec![1.0, 1.0]);
    }

    #[test]
    fn eigendecompose_diagonal() {
        let m = ComplexMatrix::diagonal(&[0.75, 0.25]);
        let spec = hermitian_eigendecompose(&m, 1e-10).unwrap();
        assert!((spec.eigenvalues[0] - 0.75).abs() < 1e-14);
        assert!((spec.eigenvalues[1] - 0.25).abs() < 1e-14);
    }

    #[test]
    fn eigendecompose_pauli_x() {
        let m = ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]);
        let spec = hermitian_eigendecompose(&m, 1e-10).unwrap();
        assert!((spec.eigenvalues[0] - 1.0).abs() < 1e-12);
        assert!((spec.eigenvalues[1] + 1.0).abs() < 1e-12);
        // Oracle: direct multiplication m v = λ v.
        for (lam, v) in spec.eigenvalues.iter().zip(&spec.eigenvectors) {
            let mv = m.matvec(v);
            for (x, y) in mv.iter().zip(v) {
                assert!((x - y * c(*lam, 0.0)).norm() < 1e-12);
            }
        }
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        assert!((spec.eigenvectors[0][0] - c(inv_sqrt2, 0.0)).norm() < 1e-12);
        assert!((spec.eigenvectors[0][1] - c(inv_sqrt2, 0.0)).norm() < 1e-12);
        assert!((spec.eigenvectors[1][0] - c(inv_sqrt2, 0.0)).norm() < 1e-12);
        assert!((spec.eigenvectors[1][1] - c(-inv_sqrt2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn eigendecompose_rejects_non_hermitian() {
        let m = ComplexMatrix::from_vec(2, 2, vec![c(0.0, 0.0), c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.0)]);
        assert!(matches!(
            hermitian_eigendecompose(&m, 1e-10),
            Err(Error::NonHermitian { .. })
        ));
    }

    #[test]
    fn spectrum_reconstructs_input() {
        // Fixed non-trivial Hermitian matrix.
        let m = ComplexMatrix::from_vec(
            3,
            3,
            vec![
                c(0.5, 0.0), c(0.1, 0.2), c(0.0, -0.3),
                c(0.1, -0.2), c(0.3, 0.0), c(0.05, 0.0),
                c(0.0, 0.3), c(0.05, 0.0), c(0.2, 0.0),
            ],
        );
        let spec = hermitian_eigendecompose(&m, 1e-10).unwrap();
        assert!(spec.reconstruct().frobenius_distance(&m) < 1e-10);
        // Orthonormality of eigenvectors.
        for i in 0..3 {
            for j in 0..3 {
                let dot: Complex64 = spec.eigenvectors[i]
                    .iter()
                    .zip(&spec.eigenvectors[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((dot - c(expect, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn entropy_maximally_mixed_qubit() {
        let rho = diag_state(&[0.5, 0.5]);
        assert!((von_neumann_entropy(&rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_pure_state() {
        let rho = pure_state(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!(von_neumann_entropy(&rho).unwrap().abs() < 1e-12);
    }

    #[test]
    fn entropy_three_quarters() {
        // Oracle: −(3/4)log2(3/4) − (1/4)log2(1/4) = 0.8112781244591328.
        let rho = diag_state(&[0.75, 0.25]);
        assert!((von_neumann_entropy(&rho).unwrap() - 0.811_278_124_459_132_8).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_identical_is_zero() {
        let rho = diag_state(&[0.6, 0.4]);
        assert!(relative_entropy(&rho, &rho).unwrap().abs() < 1e-10);
    }

    #[test]
    fn relative_entropy_pure_vs_mixed() {
        let rho = diag_state(&[1.0, 0.0]);
        let sigma = diag_state(&[0.5, 0.5]);
        assert!((relative_entropy(&rho, &sigma).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_vs_entropy_oracle() {
        // S(diag(3/4,1/4) ‖ I/2) = 1 − S_vn(diag(3/4,1/4)).
        let rho = diag_state(&[0.75, 0.25]);
        let sigma = diag_state(&[0.5, 0.5]);
        let expect = 1.0 - 0.811_278_124_459_132_8;
        assert!((relative_entropy(&rho, &sigma).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn relative_entropy_support_violation() {
        let rho = diag_state(&[0.5, 0.5]);
        let sigma = diag_state(&[1.0, 0.0]);
        assert!(matches!(
            relative_entropy(&rho, &sigma),
            Err(Error::SupportViolation)
        ));
    }

    #[test]
    fn linear_relative_entropy_cases() {
        let mixed = diag_state(&[0.5, 0.5]);
        assert!(linear_relative_entropy(&mixed, &mixed).unwrap().abs() < 1e-15);
        let zero = pure_state(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert!((linear_relative_entropy(&zero, &mixed).unwrap() - 0.5).abs() < 1e-15);
        let skew = diag_state(&[0.75, 0.25]);
        assert!((linear_relative_entropy(&skew, &mixed).unwrap() - 0.125).abs() < 1e-15);
    }

    #[test]
    fn trace_distance_cases() {
        let rho = diag_state(&[0.75, 0.25]);
        assert!(trace_distance(&rho, &rho).unwrap().abs() < 1e-12);
        let zero = pure_state(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let one = pure_state(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-12);
        let mixed = diag_state(&[0.5, 0.5]);
        assert!((trace_distance(&rho, &mixed).unwrap() - 0.25).abs() < 1e-12);
    }

    #[test]
    fn kron_cases() {
        let id2 = ComplexMatrix::identity(2);
        assert!(kron(&id2, &id2).frobenius_distance(&ComplexMatrix::identity(4)) < 1e-15);

        let p0 = ComplexMatrix::diagonal(&[1.0, 0.0]);
        let p1 = ComplexMatrix::diagonal(&[0.0, 1.0]);
        let expect = ComplexMatrix::diagonal(&[0.0, 1.0, 0.0, 0.0]);
        assert!(kron(&p0, &p1).frobenius_distance(&expect) < 1e-15);

        let sz = ComplexMatrix::diagonal(&[1.0, -1.0]);
        let expect = ComplexMatrix::diagonal(&[1.0, -1.0, -1.0, 1.0]);
        assert!(kron(&sz, &sz).frobenius_distance(&expect) < 1e-15);
    }

    #[test]
    fn partial_trace_product_state() {
        let a = diag_state(&[0.7, 0.3]);
        let b = diag_state(&[0.2, 0.8]);
        let ab = DensityOperator::new(kron(a.matrix(), b.matrix())).unwrap();
        let reduced = partial_trace(&ab, &[2, 2], &[0]).unwrap();
        assert!(reduced.matrix().frobenius_distance(a.matrix()) < 1e-12);
    }

    #[test]
    fn partial_trace_bell_state() {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let bell = pure_state(&[c(inv_sqrt2, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(inv_sqrt2, 0.0)])
            .unwrap();
        let reduced = partial_trace(&bell, &[2, 2], &[0]).unwrap();
        let half = ComplexMatrix::diagonal(&[0.5, 0.5]);
        assert!(reduced.matrix().frobenius_distance(&half) < 1e-12);
    }

    #[test]
    fn partial_trace_cnot_plus_zero() {
        // Oracle: CNOT(|+⟩⊗|0⟩) = (|00⟩+|11⟩)/√2, expanded by hand; either
        // reduction is I/2.
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let vec = [c(inv_sqrt2, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(inv_sqrt2, 0.0)];
        let rho = pure_state(&vec).unwrap();
        let reduced = partial_trace(&rho, &[2, 2], &[1]).unwrap();
        assert!(reduced.matrix().frobenius_distance(&ComplexMatrix::diagonal(&[0.5, 0.5])) < 1e-12);
    }

    #[test]
    fn partial_trace_rejects_bad_dims() {
        let rho = diag_state(&[0.5, 0.5]);
        assert!(matches!(
            partial_trace(&rho, &[2, 2], &[0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            partial_trace(&rho, &[2], &[3]),
            Err(Error::BadIndex { .. })
        ));
    }
}
