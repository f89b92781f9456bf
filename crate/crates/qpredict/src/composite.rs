//! Bipartite predictability: joint and conditional measures, the
//! mutual-information decomposition, and tensor-power additivity.
//!
//! Subsystem A is always the left (most significant) tensor factor: the
//! product-basis index (j, k) maps to row j·d_B + k.

use crate::error::{Error, Result};
use crate::linalg::{kron, kron_vec, partial_trace, shannon_entropy_bits};
use crate::measures::predictability_vn;
use crate::states::{DensityOperator, ObservableBasis};

/// A state on A⊗B together with the factor dimensions.
#[derive(Debug, Clone)]
pub struct BipartiteState {
    state: DensityOperator,
    d_a: usize,
    d_b: usize,
}

impl BipartiteState {
    pub fn new(state: DensityOperator, d_a: usize, d_b: usize) -> Result<Self> {
        if d_a * d_b != state.dim() {
            return Err(Error::DimensionMismatch {
                expected: state.dim(),
                found: d_a * d_b,
            });
        }
        Ok(Self { state, d_a, d_b })
    }

    pub fn state(&self) -> &DensityOperator {
        &self.state
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d_a, self.d_b)
    }

    pub fn reduce_a(&self) -> Result<DensityOperator> {
        partial_trace(&self.state, &[self.d_a, self.d_b], &[0])
    }

    pub fn reduce_b(&self) -> Result<DensityOperator> {
        partial_trace(&self.state, &[self.d_a, self.d_b], &[1])
    }
}

/// Product basis x ⊗ y on A⊗B, ordered with A most significant.
pub fn product_basis(x: &ObservableBasis, y: &ObservableBasis) -> ObservableBasis {
    let mut vectors = Vec::with_capacity(x.dim() * y.dim());
    for xv in x.vectors() {
        for yv in y.vectors() {
            vectors.push(kron_vec(xv, yv));
        }
    }
    ObservableBasis::new(vectors, format!("{}⊗{}", x.label(), y.label()))
        .expect("tensor product of orthonormal bases is orthonormal")
}

fn check_basis_dims(s: &BipartiteState, x: &ObservableBasis, y: &ObservableBasis) -> Result<()> {
    if x.dim() != s.d_a {
        return Err(Error::DimensionMismatch {
            expected: s.d_a,
            found: x.dim(),
        });
    }
    if y.dim() != s.d_b {
        return Err(Error::DimensionMismatch {
            expected: s.d_b,
            found: y.dim(),
        });
    }
    Ok(())
}

/// Joint outcome probabilities q_{jk} = ⟨x_j ⊗ y_k|ρ_AB|x_j ⊗ y_k⟩, flat
/// index j·d_B + k.
fn joint_probabilities(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<Vec<f64>> {
    check_basis_dims(s, x, y)?;
    s.state.diagonal_in_basis(&product_basis(x, y))
}

/// Joint predictability P(ρ_AB) = log2(d_A d_B) − S(ρ_ABdiag), the diagonal
/// taken in the product basis x ⊗ y.
pub fn joint_predictability(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let q = joint_probabilities(s, x, y)?;
    Ok(((s.d_a * s.d_b) as f64).log2() - shannon_entropy_bits(&q)?)
}

/// Mutual information of the doubly dephased state Φ_X⊗Φ_Y(ρ_AB): the
/// classical correlation between the two measurement records.
pub fn mutual_information_diag(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let q = joint_probabilities(s, x, y)?;
    let (a, b) = marginals(&q, s.d_a, s.d_b);
    Ok(shannon_entropy_bits(&a)? + shannon_entropy_bits(&b)? - shannon_entropy_bits(&q)?)
}

fn marginals(q: &[f64], d_a: usize, d_b: usize) -> (Vec<f64>, Vec<f64>) {
    let mut a = vec![0.0; d_a];
    let mut b = vec![0.0; d_b];
    for j in 0..d_a {
        for k in 0..d_b {
            a[j] += q[j * d_b + k];
            b[k] += q[j * d_b + k];
        }
    }
    (a, b)
}

/// Residual of the joint decomposition
/// P(ρ_AB) = P(ρ_A) + P(ρ_B) + I_{A:B}(Φ_XY(ρ_AB)).
pub fn check_joint_decomposition(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let joint = joint_predictability(s, x, y)?;
    let p_a = predictability_vn(&s.reduce_a()?, x)?;
    let p_b = predictability_vn(&s.reduce_b()?, y)?;
    let mi = mutual_information_diag(s, x, y)?;
    Ok((joint - p_a - p_b - mi).abs())
}

/// Conditional predictability P(ρ_{A|B}) = P(ρ_AB) − P(ρ_B): what is known
/// about A's outcome on top of the classical correlation with B.
pub fn conditional_predictability(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let joint = joint_predictability(s, x, y)?;
    let p_b = predictability_vn(&s.reduce_b()?, y)?;
    Ok(joint - p_b)
}

/// Conditional entropy S_{A|B} of the doubly dephased state, a classical
/// (hence nonnegative) quantity: H(q) − H(marginal on B).
pub fn conditional_entropy_diag(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let q = joint_probabilities(s, x, y)?;
    let (_, b) = marginals(&q, s.d_a, s.d_b);
    Ok(shannon_entropy_bits(&q)? - shannon_entropy_bits(&b)?)
}

/// Residual of the conditional complementarity relation
/// P(ρ_{A|B}) + S_{A|B}(Φ_XY(ρ_AB)) = log2 d_A.
pub fn check_conditional_cr(
    s: &BipartiteState,
    x: &ObservableBasis,
    y: &ObservableBasis,
) -> Result<f64> {
    let p_cond = conditional_predictability(s, x, y)?;
    let s_cond = conditional_entropy_diag(s, x, y)?;
    Ok((p_cond + s_cond - (s.d_a as f64).log2()).abs())
}

/// Residual of the additivity P(ρ^⊗n) = n · P(ρ) with respect to the
/// tensor-power basis x^⊗n. Limited to d^n ≤ 64.
pub fn check_additivity(rho: &DensityOperator, x: &ObservableBasis, n: usize) -> Result<f64> {
    if n == 0 || n > 3 {
        return Err(Error::BadParameter(format!("n = {n} outside 1..=3")));
    }
    let d = rho.dim();
    if d.pow(n as u32) > 64 {
        return Err(Error::TooLarge(format!("d^n = {} exceeds 64", d.pow(n as u32))));
    }
    let single = predictability_vn(rho, x)?;

    let mut big = rho.matrix().clone();
    let mut basis = x.clone();
    for _ in 1..n {
        big = kron(&big, rho.matrix());
        basis = product_basis(&basis, x);
    }
    let power = DensityOperator::new(big)?;
    let joint = predictability_vn(&power, &basis)?;
    Ok((joint - n as f64 * single).abs())
}

/// Maximally entangled two-qudit state (1/√d) Σ_j |jj⟩.
pub fn maximally_entangled(d: usize) -> Result<BipartiteState> {
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    let scale = num_complex::Complex::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut v = vec![num_complex::Complex::new(0.0, 0.0); d * d];
    for j in 0..d {
        v[j * d + j] = scale;
    }
    BipartiteState::new(crate::states::pure_state(&v)?, d, d)
}
