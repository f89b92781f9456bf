//! CPTP maps as Kraus-operator lists: non-revealing measurements, their
//! compositions, monitoring maps, and diagonal free unitaries.

use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix};
use crate::states::{haar_random_pure, sub_seed, DensityOperator, ObservableBasis};

/// Completeness tolerance for Kraus lists.
pub const CPTP_TOL: f64 = 1e-10;

/// Maximal allowed deviation of |⟨x_j|y_k⟩|² from 1/d when a map requires
/// mutually unbiased bases.
pub const MU_TOL: f64 = 1e-10;

/// A completely positive trace-preserving map given by a finite list of
/// Kraus operators.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    kraus: Vec<ComplexMatrix>,
    label: String,
}

impl KrausChannel {
    /// Validate completeness Σ K†K = I within 1e-10 and wrap.
    pub fn new(kraus: Vec<ComplexMatrix>, label: impl Into<String>) -> Result<Self> {
        let ch = Self::from_raw(kraus, label);
        let dev = ch.completeness_deviation();
        if dev > CPTP_TOL {
            return Err(Error::BadParameter(format!(
                "Kraus list is not trace preserving (deviation {dev:.3e})"
            )));
        }
        Ok(ch)
    }

    /// Wrap a Kraus list without validating completeness. Intended for
    /// feeding arbitrary lists to [`is_cptp`].
    pub fn from_raw(kraus: Vec<ComplexMatrix>, label: impl Into<String>) -> Self {
        Self {
            kraus,
            label: label.into(),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kraus_operators(&self) -> &[ComplexMatrix] {
        &self.kraus
    }

    /// Input dimension of the map.
    pub fn dim(&self) -> usize {
        self.kraus.first().map_or(0, |k| k.cols())
    }

    /// ‖Σ K†K − I‖_F.
    pub fn completeness_deviation(&self) -> f64 {
        let d = self.dim();
        if d == 0 {
            return f64::INFINITY;
        }
        let mut sum = ComplexMatrix::zeros(d, d);
        for k in &self.kraus {
            sum = sum.add(&k.dagger().matmul(k));
        }
        sum.frobenius_distance(&ComplexMatrix::identity(d))
    }

    /// Apply the map: ρ ↦ Σ K ρ K†.
    pub fn apply(&self, rho: &DensityOperator) -> Result<DensityOperator> {
        if rho.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rho.dim(),
            });
        }
        let d = rho.dim();
        let mut out = ComplexMatrix::zeros(d, d);
        for k in &self.kraus {
            out = out.add(&k.matmul(rho.matrix()).matmul(&k.dagger()));
        }
        DensityOperator::new(out.hermitize())
    }
}

/// Non-revealing von Neumann measurement of the observable with the given
/// eigenbasis: Kraus list {|x_j⟩⟨x_j|}. The output is diagonal in that
/// basis.
pub fn dephasing_channel(basis: &ObservableBasis) -> KrausChannel {
    let kraus = (0..basis.dim()).map(|j| basis.projector(j)).collect();
    KrausChannel::new(kraus, format!("dephase({})", basis.label()))
        .expect("projector list of an orthonormal basis is complete")
}

/// Composition Φ_Y ∘ Φ_X as a single Kraus list {Y_k X_j}. When the bases
/// are mutually unbiased every input is mapped to I/d.
pub fn double_dephasing(x: &ObservableBasis, y: &ObservableBasis) -> Result<KrausChannel> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    let d = x.dim();
    let mut kraus = Vec::with_capacity(d * d);
    for k in 0..d {
        let yk = y.projector(k);
        for j in 0..d {
            kraus.push(yk.matmul(&x.projector(j)));
        }
    }
    KrausChannel::new(kraus, format!("dephase({})∘dephase({})", y.label(), x.label()))
}

fn require_mutually_unbiased(x: &ObservableBasis, y: &ObservableBasis) -> Result<()> {
    let dev = x.mutual_unbiasedness_deviation(y)?;
    if dev > MU_TOL {
        return Err(Error::NotMutuallyUnbiased { max_dev: dev });
    }
    Ok(())
}

/// Monitoring map Λ_ε(ρ) = (1−ε)ρ + ε Φ_XY(ρ), with Y mutually unbiased to
/// X so that Φ_XY is the maximally resource-destroying map. Stored as a
/// Kraus list {√(1−ε)·I} ∪ {√ε · Y_k X_j}.
pub fn monitoring_lambda(
    x: &ObservableBasis,
    y: &ObservableBasis,
    eps: f64,
) -> Result<KrausChannel> {
    require_mutually_unbiased(x, y)?;
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::BadParameter(format!("eps = {eps} outside [0, 1]")));
    }
    let d = x.dim();
    let mut kraus = Vec::with_capacity(d * d + 1);
    kraus.push(ComplexMatrix::identity(d).scale(Complex64::new((1.0 - eps).sqrt(), 0.0)));
    let scale = Complex64::new(eps.sqrt(), 0.0);
    for k in 0..d {
        let yk = y.projector(k);
        for j in 0..d {
            kraus.push(yk.matmul(&x.projector(j)).scale(scale));
        }
    }
    KrausChannel::new(kraus, format!("lambda[eps={eps}]"))
}

/// Predictability-preserving monitoring map Θ_ε(ρ) = (1−ε)ρ + ε Φ_X(ρ),
/// stored as a Kraus list {√(1−ε)·I} ∪ {√ε · X_j}.
pub fn monitoring_theta(x: &ObservableBasis, eps: f64) -> Result<KrausChannel> {
    if !(0.0..=1.0).contains(&eps) {
        return Err(Error::BadParameter(format!("eps = {eps} outside [0, 1]")));
    }
    let d = x.dim();
    let mut kraus = Vec::with_capacity(d + 1);
    kraus.push(ComplexMatrix::identity(d).scale(Complex64::new((1.0 - eps).sqrt(), 0.0)));
    let scale = Complex64::new(eps.sqrt(), 0.0);
    for j in 0..d {
        kraus.push(x.projector(j).scale(scale));
    }
    KrausChannel::new(kraus, format!("theta[eps={eps}]"))
}

/// Free unitary diagonal in the reference basis: U = Σ_j e^{iφ_j}|x_j⟩⟨x_j|.
/// Commutes with the dephasing channel of the same basis.
pub fn diagonal_unitary_channel(x: &ObservableBasis, phases: &[f64]) -> Result<KrausChannel> {
    let d = x.dim();
    if phases.len() != d {
        return Err(Error::BadParameter(format!(
            "expected {d} phases, got {}",
            phases.len()
        )));
    }
    let mut u = ComplexMatrix::zeros(d, d);
    for (j, phi) in phases.iter().enumerate() {
        u = u.add(&x.projector(j).scale(Complex64::from_polar(1.0, *phi)));
    }
    KrausChannel::new(vec![u], format!("diag-unitary({})", x.label()))
}

/// Kraus completeness check at an explicit tolerance.
pub fn is_cptp(ch: &KrausChannel, tol: f64) -> bool {
    ch.completeness_deviation() <= tol
}

/// Max deviation over sampled random states of
/// ‖Λ_ε(Φ_XY(ρ)) − Φ_XY(Λ_ε(ρ))‖_F — the commuting condition that makes
/// optimization-free monotones possible.
pub fn check_commuting_condition(
    x: &ObservableBasis,
    y: &ObservableBasis,
    eps: f64,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let lambda = monitoring_lambda(x, y, eps)?;
    let destroy = double_dephasing(x, y)?;
    let mut max_dev: f64 = 0.0;
    for i in 0..samples {
        let rho = haar_random_pure(x.dim(), sub_seed(seed, i as u64))?;
        let left = lambda.apply(&destroy.apply(&rho)?)?;
        let right = destroy.apply(&lambda.apply(&rho)?)?;
        max_dev = max_dev.max(left.matrix().frobenius_distance(right.matrix()));
    }
    Ok(max_dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{fourier_mub_partner, pure_state, random_basis, random_density};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn plus() -> DensityOperator {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        pure_state(&[c(s, 0.0), c(s, 0.0)]).unwrap()
    }

    fn zero() -> DensityOperator {
        pure_state(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap()
    }

    #[test]
    fn dephasing_kills_coherence() {
        let kappa = ObservableBasis::computational(2);
        let out = dephasing_channel(&kappa).apply(&plus()).unwrap();
        assert!(out
            .matrix()
            .frobenius_distance(DensityOperator::maximally_mixed(2).matrix())
            < 1e-12);
    }

    #[test]
    fn dephasing_fixes_diagonal_states() {
        let kappa = ObservableBasis::computational(2);
        let rho = DensityOperator::new(ComplexMatrix::diagonal(&[0.75, 0.25])).unwrap();
        let out = dephasing_channel(&kappa).apply(&rho).unwrap();
        assert!(out.matrix().frobenius_distance(rho.matrix()) < 1e-13);
    }

    #[test]
    fn x_basis_dephasing_of_zero() {
        // Oracle: project |0⟩⟨0| onto |±⟩ and resum → I/2.
        let f = fourier_mub_partner(&ObservableBasis::computational(2));
        let out = dephasing_channel(&f).apply(&zero()).unwrap();
        assert!(out
            .matrix()
            .frobenius_distance(DensityOperator::maximally_mixed(2).matrix())
            < 1e-12);
    }

    #[test]
    fn apply_preserves_trace_and_is_idempotent_for_dephasing() {
        let kappa = ObservableBasis::computational(3);
        let ch = dephasing_channel(&kappa);
        let rho = random_density(3, 3).unwrap();
        let once = ch.apply(&rho).unwrap();
        assert!((once.matrix().trace().re - 1.0).abs() < 1e-12);
        let twice = ch.apply(&once).unwrap();
        assert!(twice.matrix().frobenius_distance(once.matrix()) < 1e-12);
    }

    #[test]
    fn identity_channel_is_identity() {
        let ch = KrausChannel::new(vec![ComplexMatrix::identity(2)], "id").unwrap();
        let rho = random_density(2, 9).unwrap();
        let out = ch.apply(&rho).unwrap();
        assert!(out.matrix().frobenius_distance(rho.matrix()) < 1e-14);
    }

    #[test]
    fn double_dephasing_mu_erases_everything() {
        let kappa = ObservableBasis::computational(3);
        let f = fourier_mub_partner(&kappa);
        let ch = double_dephasing(&kappa, &f).unwrap();
        for seed in 0..5 {
            let rho = random_density(3, seed).unwrap();
            let out = ch.apply(&rho).unwrap();
            assert!(out
                .matrix()
                .frobenius_distance(DensityOperator::maximally_mixed(3).matrix())
                < 1e-10);
        }
    }

    #[test]
    fn double_dephasing_same_basis_collapses() {
        let kappa = ObservableBasis::computational(2);
        let ch = double_dephasing(&kappa, &kappa).unwrap();
        let single = dephasing_channel(&kappa);
        let rho = random_density(2, 1).unwrap();
        assert!(ch
            .apply(&rho)
            .unwrap()
            .matrix()
            .frobenius_distance(single.apply(&rho).unwrap().matrix())
            < 1e-12);
    }

    #[test]
    fn double_dephasing_rotated_basis_two_step_oracle() {
        // Sequential projection oracle for (κ, π/6-rotated) on |0⟩⟨0|.
        let theta: f64 = std::f64::consts::PI / 6.0;
        let kappa = ObservableBasis::computational(2);
        let rot = ObservableBasis::new(
            vec![
                vec![c((theta / 2.0).cos(), 0.0), c((theta / 2.0).sin(), 0.0)],
                vec![c(-(theta / 2.0).sin(), 0.0), c((theta / 2.0).cos(), 0.0)],
            ],
            "rotated",
        )
        .unwrap();
        let out = double_dephasing(&kappa, &rot)
            .unwrap()
            .apply(&zero())
            .unwrap();

        // Step oracle: Φ_κ(|0⟩⟨0|) = |0⟩⟨0|; then project onto the rotated
        // vectors with weights |⟨r_k|0⟩|².
        let mut expect = ComplexMatrix::zeros(2, 2);
        for k in 0..2 {
            let w = rot.vector(k)[0].norm_sqr();
            expect = expect.add(&rot.projector(k).scale(c(w, 0.0)));
        }
        assert!(out.matrix().frobenius_distance(&expect) < 1e-13);
    }

    #[test]
    fn monitoring_lambda_limits() {
        let kappa = ObservableBasis::computational(2);
        let f = fourier_mub_partner(&kappa);
        let rho = random_density(2, 17).unwrap();

        let id = monitoring_lambda(&kappa, &f, 0.0).unwrap();
        assert!(id.apply(&rho).unwrap().matrix().frobenius_distance(rho.matrix()) < 1e-12);

        let full = monitoring_lambda(&kappa, &f, 1.0).unwrap();
        assert!(full
            .apply(&rho)
            .unwrap()
            .matrix()
            .frobenius_distance(DensityOperator::maximally_mixed(2).matrix())
            < 1e-12);

        // Oracle: ε = 1/2 on |0⟩⟨0| is the convex combination diag(3/4, 1/4).
        let half = monitoring_lambda(&kappa, &f, 0.5).unwrap();
        let out = half.apply(&zero()).unwrap();
        assert!(out
            .matrix()
            .frobenius_distance(&ComplexMatrix::diagonal(&[0.75, 0.25]))
            < 1e-12);
    }

    #[test]
    fn monitoring_lambda_rejects_non_mu() {
        let kappa = ObservableBasis::computational(2);
        assert!(matches!(
            monitoring_lambda(&kappa, &kappa, 0.5),
            Err(Error::NotMutuallyUnbiased { .. })
        ));
        let f = fourier_mub_partner(&kappa);
        assert!(matches!(
            monitoring_lambda(&kappa, &f, 1.5),
            Err(Error::BadParameter(_))
        ));
    }

    #[test]
    fn monitoring_theta_cases() {
        let kappa = ObservableBasis::computational(2);
        let rho = plus();

        let id = monitoring_theta(&kappa, 0.0).unwrap();
        assert!(id.apply(&rho).unwrap().matrix().frobenius_distance(rho.matrix()) < 1e-12);

        let full = monitoring_theta(&kappa, 1.0).unwrap();
        let dephased = dephasing_channel(&kappa).apply(&rho).unwrap();
        assert!(full
            .apply(&rho)
            .unwrap()
            .matrix()
            .frobenius_distance(dephased.matrix())
            < 1e-12);

        // Oracle: ε = 1/2 halves the off-diagonals of |+⟩⟨+|.
        let half = monitoring_theta(&kappa, 0.5).unwrap().apply(&rho).unwrap();
        assert!((half.matrix()[(0, 1)] - c(0.25, 0.0)).norm() < 1e-12);
        assert!((half.matrix()[(0, 0)] - c(0.5, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn diagonal_unitary_cases() {
        let kappa = ObservableBasis::computational(2);
        let id = diagonal_unitary_channel(&kappa, &[0.0, 0.0]).unwrap();
        let rho = random_density(2, 23).unwrap();
        assert!(id.apply(&rho).unwrap().matrix().frobenius_distance(rho.matrix()) < 1e-13);

        // Diagonal entries in the reference basis never move.
        let ch = diagonal_unitary_channel(&kappa, &[0.3, 1.9]).unwrap();
        let out = ch.apply(&rho).unwrap();
        for j in 0..2 {
            assert!((out.matrix()[(j, j)] - rho.matrix()[(j, j)]).norm() < 1e-13);
        }

        // Oracle: phases (0, π) conjugate |+⟩⟨+| into |−⟩⟨−|.
        let flip = diagonal_unitary_channel(&kappa, &[0.0, std::f64::consts::PI]).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let minus = pure_state(&[c(s, 0.0), c(-s, 0.0)]).unwrap();
        assert!(flip
            .apply(&plus())
            .unwrap()
            .matrix()
            .frobenius_distance(minus.matrix())
            < 1e-12);
    }

    #[test]
    fn is_cptp_cases() {
        let kappa = ObservableBasis::computational(2);
        assert!(is_cptp(&dephasing_channel(&kappa), 1e-10));

        let scaled = KrausChannel::from_raw(
            vec![ComplexMatrix::identity(2).scale(c(0.9, 0.0))],
            "leaky",
        );
        assert!(!is_cptp(&scaled, 1e-10));

        let f = fourier_mub_partner(&kappa);
        let lam = monitoring_lambda(&kappa, &f, 0.3).unwrap();
        assert!(is_cptp(&lam, 1e-10));
    }

    #[test]
    fn commuting_condition_holds() {
        let kappa = ObservableBasis::computational(2);
        let f = fourier_mub_partner(&kappa);
        let dev = check_commuting_condition(&kappa, &f, 0.7, 50, 99).unwrap();
        assert!(dev < 1e-10, "deviation {dev}");

        let dev0 = check_commuting_condition(&kappa, &f, 0.0, 20, 99).unwrap();
        assert!(dev0 < 1e-14);

        // Fixed point: Λ_ε(I/d) = I/d.
        let lam = monitoring_lambda(&kappa, &f, 0.4).unwrap();
        let mixed = DensityOperator::maximally_mixed(2);
        assert!(lam
            .apply(&mixed)
            .unwrap()
            .matrix()
            .frobenius_distance(mixed.matrix())
            < 1e-12);
    }

    #[test]
    fn commuting_condition_requires_mu() {
        let kappa = ObservableBasis::computational(2);
        let other = random_basis(2, 5).unwrap();
        assert!(matches!(
            check_commuting_condition(&kappa, &other, 0.5, 10, 1),
            Err(Error::NotMutuallyUnbiased { .. })
        ));
    }
}
