//! Generalized Gell-Mann matrices built on an observable eigenbasis, and
//! the Bloch-style decomposition of density operators.

use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix};
use crate::states::{DensityOperator, ObservableBasis};

/// Generalized Gell-Mann generator set for dimension d, expressed in a
/// reference eigenbasis {|x_j⟩}:
///
/// * d−1 diagonal generators Γ_m = √(2/(m(m+1))) (Σ_{l≤m} |x_l⟩⟨x_l| − m|x_{m+1}⟩⟨x_{m+1}|),
/// * symmetric generators Γ_{j,k}^s = |x_j⟩⟨x_k| + |x_k⟩⟨x_j|,
/// * antisymmetric generators Γ_{j,k}^a = −i(|x_j⟩⟨x_k| − |x_k⟩⟨x_j|),
///
/// for 1 ≤ j < k ≤ d, plus the identity Γ_0. For d = 2 these are the Pauli
/// matrices σ_z, σ_x, σ_y.
#[derive(Debug, Clone)]
pub struct GellMannBasis {
    dim: usize,
    diagonal: Vec<ComplexMatrix>,
    symmetric: Vec<ComplexMatrix>,
    antisymmetric: Vec<ComplexMatrix>,
    identity: ComplexMatrix,
    /// (j, k) index pairs, 0-based, pairing with the symmetric and
    /// antisymmetric generator lists.
    pairs: Vec<(usize, usize)>,
}

impl GellMannBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn diagonal_generators(&self) -> &[ComplexMatrix] {
        &self.diagonal
    }

    pub fn symmetric_generators(&self) -> &[ComplexMatrix] {
        &self.symmetric
    }

    pub fn antisymmetric_generators(&self) -> &[ComplexMatrix] {
        &self.antisymmetric
    }

    pub fn identity_element(&self) -> &ComplexMatrix {
        &self.identity
    }

    pub fn index_pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    fn all_generators(&self) -> impl Iterator<Item = &ComplexMatrix> {
        self.diagonal
            .iter()
            .chain(&self.symmetric)
            .chain(&self.antisymmetric)
    }
}

/// Build the generalized Gell-Mann generators on the given eigenbasis.
pub fn gell_mann_basis(basis: &ObservableBasis) -> Result<GellMannBasis> {
    let d = basis.dim();
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    let proj = |j: usize| basis.projector(j);
    let ketbra = |j: usize, k: usize| ComplexMatrix::outer(basis.vector(j), basis.vector(k));

    let mut diagonal = Vec::with_capacity(d - 1);
    for m in 1..d {
        let scale = (2.0 / (m as f64 * (m as f64 + 1.0))).sqrt();
        let mut g = ComplexMatrix::zeros(d, d);
        for l in 0..m {
            g = g.add(&proj(l));
        }
        g = g.sub(&proj(m).scale(Complex64::new(m as f64, 0.0)));
        diagonal.push(g.scale(Complex64::new(scale, 0.0)));
    }

    let mut symmetric = Vec::new();
    let mut antisymmetric = Vec::new();
    let mut pairs = Vec::new();
    for j in 0..d {
        for k in (j + 1)..d {
            pairs.push((j, k));
            symmetric.push(ketbra(j, k).add(&ketbra(k, j)));
            antisymmetric.push(
                ketbra(j, k)
                    .sub(&ketbra(k, j))
                    .scale(Complex64::new(0.0, -1.0)),
            );
        }
    }

    Ok(GellMannBasis {
        dim: d,
        diagonal,
        symmetric,
        antisymmetric,
        identity: ComplexMatrix::identity(d),
        pairs,
    })
}

/// Hilbert-Schmidt coefficients ⟨Γ|ρ⟩ = Tr(Γ†ρ) of a state in a Gell-Mann
/// generator set. All coefficients are real for Hermitian inputs.
#[derive(Debug, Clone)]
pub struct GellMannCoefficients {
    pub diagonal: Vec<f64>,
    pub symmetric: Vec<f64>,
    pub antisymmetric: Vec<f64>,
}

/// Decompose ρ = (1/d)Γ_0 + (1/2) Σ ⟨Γ⟩ Γ.
pub fn gell_mann_decompose(
    rho: &DensityOperator,
    g: &GellMannBasis,
) -> Result<GellMannCoefficients> {
    if rho.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: rho.dim(),
        });
    }
    let coeff = |gamma: &ComplexMatrix| gamma.dagger().matmul(rho.matrix()).trace().re;
    Ok(GellMannCoefficients {
        diagonal: g.diagonal.iter().map(coeff).collect(),
        symmetric: g.symmetric.iter().map(coeff).collect(),
        antisymmetric: g.antisymmetric.iter().map(coeff).collect(),
    })
}

/// Rebuild the matrix (1/d)Γ_0 + (1/2) Σ ⟨Γ⟩ Γ from decomposition
/// coefficients.
pub fn gell_mann_reconstruct(coeffs: &GellMannCoefficients, g: &GellMannBasis) -> ComplexMatrix {
    let d = g.dim();
    let mut m = g.identity.scale(Complex64::new(1.0 / d as f64, 0.0));
    let half = |x: f64| Complex64::new(0.5 * x, 0.0);
    for (c, gamma) in coeffs.diagonal.iter().zip(&g.diagonal) {
        m = m.add(&gamma.scale(half(*c)));
    }
    for (c, gamma) in coeffs.symmetric.iter().zip(&g.symmetric) {
        m = m.add(&gamma.scale(half(*c)));
    }
    for (c, gamma) in coeffs.antisymmetric.iter().zip(&g.antisymmetric) {
        m = m.add(&gamma.scale(half(*c)));
    }
    m
}

/// Hilbert-Schmidt orthogonality deviation: the largest departure of
/// Tr(Γ†Γ′) from its expected value (0 for distinct generators, 2 for each
/// non-identity generator, d for the identity).
pub fn orthogonality_deviation(g: &GellMannBasis) -> f64 {
    let mut all: Vec<&ComplexMatrix> = g.all_generators().collect();
    all.push(&g.identity);
    let n = all.len();
    let mut max_dev: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let ip = all[i].dagger().matmul(all[j]).trace();
            let expect = if i != j {
                0.0
            } else if i == n - 1 {
                g.dim() as f64
            } else {
                2.0
            };
            max_dev = max_dev.max((ip.re - expect).abs().max(ip.im.abs()));
        }
    }
    max_dev
}
