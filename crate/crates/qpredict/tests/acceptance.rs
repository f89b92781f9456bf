//! Acceptance suite: each test pins one contract of the library at its
//! stated tolerance and prints a pass line (visible with `--nocapture`).

use std::f64::consts::PI;

use qpredict::experiments::{ExperimentCommand, RunConfig};
use qpredict::verify::{
    check_circuit_channel_equivalence, check_joint_decomposition_suite, check_pc_equality_suite,
    check_pc_inequality_suite, check_witness_contract,
};
use qpredict::*;

const SEED: u64 = 424_242;

fn kappa(d: usize) -> ObservableBasis {
    ObservableBasis::computational(d)
}

#[test]
fn criterion_01_pc_equality_mu() {
    // P^X(ρ) = C^Y(Φ_X ρ) for Fourier partners, 1000 Haar states per
    // dimension 2..4.
    let check = check_pc_equality_suite(1000, SEED, 1e-10).unwrap();
    assert!(
        check.passed,
        "max residual {:.3e} exceeds 1e-10",
        check.max_residual
    );
    println!(
        "[criterion 01] PASS - MU equality, max residual {:.3e}",
        check.max_residual
    );
}

#[test]
fn criterion_02_pc_inequality_random_y() {
    // C^Y(Φ_X ρ) ≤ P^X(ρ) with the exact three-term decomposition, 1000
    // random trios per dimension 2..4.
    let check = check_pc_inequality_suite(1000, SEED, 1e-10).unwrap();
    assert!(
        check.passed,
        "max residual {:.3e} exceeds 1e-10",
        check.max_residual
    );
    println!(
        "[criterion 02] PASS - inequality and decomposition, max residual {:.3e}",
        check.max_residual
    );
}

#[test]
fn criterion_03_basis_sum_invariance() {
    // (C + P) is basis independent and equals the information measure, 500
    // random mixed states per dimension 2..4.
    let mut worst: f64 = 0.0;
    for d in 2..=4 {
        for i in 0..500u64 {
            let rho = random_density(d, sub_seed(SEED, d as u64 * 70_000 + i)).unwrap();
            let x = random_basis(d, sub_seed(SEED, d as u64 * 71_000 + i)).unwrap();
            let y = random_basis(d, sub_seed(SEED, d as u64 * 72_000 + i)).unwrap();
            worst = worst.max(check_basis_sum_invariance(&rho, &x, &y).unwrap());
            let sum = coherence_re(&rho, &x).unwrap() + predictability_vn(&rho, &x).unwrap();
            worst = worst.max((sum - information_measure(&rho)).abs());
        }
    }
    assert!(worst < 1e-10, "max residual {worst:.3e} exceeds 1e-10");
    println!("[criterion 03] PASS - basis-sum invariance, max residual {worst:.3e}");
}

#[test]
fn criterion_04_complete_complementarity() {
    // C(ρ_A) + P(ρ_A) + S(ρ_A) = log2 d_A for 500 random bipartite pure
    // states with factor dimensions up to 4.
    let pairs = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3), (4, 4)];
    let mut worst: f64 = 0.0;
    for i in 0..500usize {
        let (d_a, d_b) = pairs[i % pairs.len()];
        let psi = haar_random_pure(d_a * d_b, sub_seed(SEED, 73_000 + i as u64)).unwrap();
        let x = random_basis(d_a, sub_seed(SEED, 74_000 + i as u64)).unwrap();
        worst = worst.max(check_ccr(&psi, (d_a, d_b), &x).unwrap());
    }
    assert!(worst < 1e-10, "max residual {worst:.3e} exceeds 1e-10");
    println!("[criterion 04] PASS - complete complementarity, max residual {worst:.3e}");
}

#[test]
fn criterion_05_entropic_complementarity() {
    // P^X + P^Y ≤ 2 log2 d + log2 c on 1000 random trios; the MU bound is
    // log2 d; the (|0⟩⟨0|, κ, Fourier) qubit case saturates at 1 bit.
    let mut worst_violation: f64 = f64::NEG_INFINITY;
    for d in 2..=4 {
        for i in 0..1000u64 {
            let rho = haar_random_pure(d, sub_seed(SEED, d as u64 * 75_000 + i)).unwrap();
            let x = random_basis(d, sub_seed(SEED, d as u64 * 76_000 + i)).unwrap();
            let y = random_basis(d, sub_seed(SEED, d as u64 * 77_000 + i)).unwrap();
            let (lhs, bound) = check_entropic_cr(&rho, &x, &y).unwrap();
            worst_violation = worst_violation.max(lhs - bound);

            // MU partner: the bound reduces to log2 d.
            let f = fourier_mub_partner(&x);
            let (lhs, bound) = check_entropic_cr(&rho, &x, &f).unwrap();
            assert!((bound - (d as f64).log2()).abs() < 1e-9);
            worst_violation = worst_violation.max(lhs - bound);
        }
    }
    assert!(
        worst_violation < 1e-9,
        "bound violated by {worst_violation:.3e}"
    );

    let zero = pure_state(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
    let f = fourier_mub_partner(&kappa(2));
    let (lhs, bound) = check_entropic_cr(&zero, &kappa(2), &f).unwrap();
    assert!((lhs - 1.0).abs() < 1e-10, "saturation lhs {lhs}");
    assert!((bound - 1.0).abs() < 1e-10, "saturation bound {bound}");
    println!(
        "[criterion 05] PASS - entropic complementarity, worst violation {worst_violation:.3e}, qubit saturation at 1 bit"
    );
}

#[test]
fn criterion_06_circuit_equals_channel() {
    // One-qubit dilations over 50 random settings and two-qubit dilations
    // over 20 random unitaries, 20 random inputs each.
    let check = check_circuit_channel_equivalence(50, 20, 20, SEED, 1e-10).unwrap();
    assert!(
        check.passed,
        "max deviation {:.3e} exceeds 1e-10",
        check.max_residual
    );
    println!(
        "[criterion 06] PASS - circuit/channel equivalence, max deviation {:.3e}",
        check.max_residual
    );
}

#[test]
fn criterion_07_shot_statistics_sweep() {
    // Noiseless 8192-shot estimates of (P, C) across the sweep grid stay
    // within 5σ bootstrap bands of the analytic values, four repetitions.
    let shots = 8192u64;
    let kappa4 = kappa(4);
    let b2 = b2_basis();
    let circuit = build_nrvnm_circuit_nq(&ComplexMatrix::identity(4)).unwrap();
    let bc_y = b2.unitary().dagger();
    let noise = NoiseModel::disabled();

    let p_estimator = |counts: &[u64]| {
        estimate_measures_from_counts(counts, counts, 4)
            .map(|x| x.0)
            .unwrap_or(f64::NAN)
    };

    let mut worst_pulls: f64 = 0.0;
    for rep in 0..4u64 {
        for i in 0..13usize {
            let theta = PI * i as f64 / 12.0;
            let psi = qpredict::experiments::sweep_state_vector(theta);
            let rho = pure_state(&psi).unwrap();
            let p_theory = predictability_vn(&rho, &kappa4).unwrap();
            let dephased = dephasing_channel(&kappa4).apply(&rho).unwrap();
            let c_theory = coherence_re(&dephased, &b2).unwrap();

            let mut input = vec![Complex64::new(0.0, 0.0); 16];
            input[..4].copy_from_slice(&psi);
            let sx = sub_seed(SEED, 80_000 + 100 * rep + i as u64);
            let sy = sub_seed(SEED, 81_000 + 100 * rep + i as u64);
            let counts_x = sample_measurement(&circuit, &input, None, shots, &noise, sx).unwrap();
            let counts_y =
                sample_measurement(&circuit, &input, Some(&bc_y), shots, &noise, sy).unwrap();
            let (p_est, c_est) = estimate_measures_from_counts(&counts_x, &counts_y, 4).unwrap();

            let sigma_px = qpredict::circuits::bootstrap_sigma(
                &counts_x,
                100,
                sub_seed(SEED, 82_000 + 100 * rep + i as u64),
                p_estimator,
            );
            let sigma_py = qpredict::circuits::bootstrap_sigma(
                &counts_y,
                100,
                sub_seed(SEED, 83_000 + 100 * rep + i as u64),
                p_estimator,
            );
            let sigma_c = (sigma_px * sigma_px + sigma_py * sigma_py).sqrt();

            let p_band = 5.0 * sigma_px + 1e-12;
            let c_band = 5.0 * sigma_c + 1e-12;
            assert!(
                (p_est - p_theory).abs() <= p_band,
                "rep {rep}, θ = {theta:.3}: |ΔP| = {:.3e} > {p_band:.3e}",
                (p_est - p_theory).abs()
            );
            assert!(
                (c_est - c_theory).abs() <= c_band,
                "rep {rep}, θ = {theta:.3}: |ΔC| = {:.3e} > {c_band:.3e}",
                (c_est - c_theory).abs()
            );
            if sigma_px > 0.0 {
                worst_pulls = worst_pulls.max((p_est - p_theory).abs() / (5.0 * sigma_px));
            }
            if sigma_c > 0.0 {
                worst_pulls = worst_pulls.max((c_est - c_theory).abs() / (5.0 * sigma_c));
            }
        }
    }
    println!(
        "[criterion 07] PASS - shot statistics within 5 sigma bands, worst band fraction {worst_pulls:.2}"
    );
}

#[test]
fn criterion_08_sweep_endpoints() {
    // Analytic sweep endpoints: (θ=0) → 2 bits, (θ=π/2) → 0, (θ=π) → 2.
    let cfg = RunConfig {
        command: ExperimentCommand::Fig4Sweep,
        master_seed: SEED,
        dimension: 4,
        theta_steps: 13,
        shots: 64,
        ..RunConfig::default()
    };
    let records = run_fig4_sweep(&cfg).unwrap();
    for (idx, expect) in [(0usize, 2.0f64), (6, 0.0), (12, 2.0)] {
        let r = &records[idx];
        assert!(
            (r.p_theory - expect).abs() < 1e-10,
            "P(θ={:?}) = {}",
            r.theta,
            r.p_theory
        );
        assert!(
            (r.c_theory - expect).abs() < 1e-10,
            "C(θ={:?}) = {}",
            r.theta,
            r.c_theory
        );
        assert!((r.p_theory - r.c_theory).abs() < 1e-10);
    }
    println!("[criterion 08] PASS - sweep endpoints (2, 0, 2) bits exact");
}

#[test]
fn criterion_09_resource_theory_suite() {
    // Monotonicity of Λ_ε with strict decrease on non-free states, exact
    // Θ_ε invariance, the commuting condition, and the witness contract.
    let eps_grid = [0.0, 0.25, 0.5, 0.75, 1.0];
    let mut worst_theta: f64 = 0.0;
    let mut worst_monotone: f64 = 0.0;
    for d in 2..=3 {
        let x = random_basis(d, sub_seed(SEED, 84_000 + d as u64)).unwrap();
        let y = fourier_mub_partner(&x);
        for i in 0..200u64 {
            let rho = random_density(d, sub_seed(SEED, d as u64 * 85_000 + i)).unwrap();
            let p0 = predictability_vn(&rho, &x).unwrap();
            for eps in eps_grid {
                let lambda = monitoring_lambda(&x, &y, eps).unwrap();
                let p_after = predictability_vn(&lambda.apply(&rho).unwrap(), &x).unwrap();
                worst_monotone = worst_monotone.max(p_after - p0);
                if eps > 0.0 && p0 > 1e-6 {
                    assert!(
                        p_after < p0 - 1e-12,
                        "no strict decrease: d={d}, eps={eps}, P {p0} -> {p_after}"
                    );
                }
                let theta = monitoring_theta(&x, eps).unwrap();
                let p_theta = predictability_vn(&theta.apply(&rho).unwrap(), &x).unwrap();
                worst_theta = worst_theta.max((p_theta - p0).abs());
            }
        }
        for eps in eps_grid {
            let dev = check_commuting_condition(&x, &y, eps, 50, sub_seed(SEED, 86_000)).unwrap();
            assert!(dev < 1e-10, "commuting condition deviation {dev:.3e}");
        }
    }
    assert!(worst_monotone < 1e-10, "monotonicity violated by {worst_monotone:.3e}");
    assert!(worst_theta < 1e-10, "theta invariance violated by {worst_theta:.3e}");

    let witness = check_witness_contract(200, SEED, 1e-10).unwrap();
    assert!(
        witness.passed,
        "witness contract residual {:.3e}",
        witness.max_residual
    );
    println!(
        "[criterion 09] PASS - resource theory suite, monotone slack {worst_monotone:.3e}, theta drift {worst_theta:.3e}, witness residual {:.3e}",
        witness.max_residual
    );
}

#[test]
fn criterion_10_minimization_characterization() {
    // Grid minimization of S(ρ_diag ‖ υ) over the maximally coherent mixed
    // family recovers P_vn with the minimizer at υ = I/d, 50 states per
    // dimension 2..3.
    let grid = FreeStateGrid::default();
    let mut worst: f64 = 0.0;
    for d in 2..=3 {
        let x = kappa(d);
        for i in 0..50u64 {
            let rho = random_density(d, sub_seed(SEED, d as u64 * 87_000 + i)).unwrap();
            let result = minimize_over_free_states(&rho, &x, grid).unwrap();
            let p = predictability_vn(&rho, &x).unwrap();
            assert_eq!(result.argmin_p, 0.0, "argmin p = {} for d={d}", result.argmin_p);
            worst = worst.max((result.min_value - p).abs());
        }
    }
    assert!(worst < 1e-4, "max |min − P| = {worst:.3e} exceeds 1e-4");
    println!("[criterion 10] PASS - free-state minimization, max |min - P| = {worst:.3e}");
}

#[test]
fn criterion_11_gell_mann_consistency() {
    // Linear predictability through GMM coefficients equals both diagonal
    // forms for d ∈ 2..5; the d = 2 generators are the Pauli matrices.
    let mut worst: f64 = 0.0;
    for d in 2..=5 {
        let x = kappa(d);
        let g = gell_mann_basis(&x).unwrap();
        for i in 0..100u64 {
            let rho = random_density(d, sub_seed(SEED, d as u64 * 88_000 + i)).unwrap();
            let coeffs = gell_mann_decompose(&rho, &g).unwrap();
            let via_gmm: f64 = coeffs.diagonal.iter().map(|c| c * c).sum::<f64>() / 2.0;

            let probs = rho.diagonal_in_basis(&x).unwrap();
            let via_sum: f64 = probs.iter().map(|p| p * p).sum::<f64>() - 1.0 / d as f64;
            let mut pair: f64 = 0.0;
            for j in 0..d {
                for k in (j + 1)..d {
                    pair += (probs[j] - probs[k]).powi(2);
                }
            }
            pair /= d as f64;

            let direct = predictability_linear(&rho, &x).unwrap();
            worst = worst
                .max((via_gmm - via_sum).abs())
                .max((via_gmm - pair).abs())
                .max((direct - via_sum).abs());
        }
    }
    assert!(worst < 1e-12, "max residual {worst:.3e} exceeds 1e-12");

    let g = gell_mann_basis(&kappa(2)).unwrap();
    let sz = ComplexMatrix::diagonal(&[1.0, -1.0]);
    let sx = ComplexMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ],
    );
    let sy = ComplexMatrix::from_vec(
        2,
        2,
        vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    );
    assert_eq!(g.diagonal_generators()[0], sz);
    assert_eq!(g.symmetric_generators()[0], sx);
    assert_eq!(g.antisymmetric_generators()[0], sy);
    println!("[criterion 11] PASS - Gell-Mann consistency, max residual {worst:.3e}");
}

#[test]
fn criterion_12_composite_identities() {
    // Joint decomposition, conditional identities, conditional CR, and
    // tensor-power additivity on 200 random states per dimension pair;
    // Bell-state values exact.
    let joint = check_joint_decomposition_suite(200, SEED, 1e-10).unwrap();
    assert!(joint.passed, "joint decomposition residual {:.3e}", joint.max_residual);

    let mut worst: f64 = 0.0;
    for (d_a, d_b) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let x = kappa(d_a);
        let y = kappa(d_b);
        for i in 0..200u64 {
            let rho = random_density(
                d_a * d_b,
                sub_seed(SEED, (d_a * 10 + d_b) as u64 * 89_000 + i),
            )
            .unwrap();
            let s = BipartiteState::new(rho, d_a, d_b).unwrap();

            // Conditional predictability equals its entropy form.
            let cond = conditional_predictability(&s, &x, &y).unwrap();
            let via_entropy = (d_a as f64).log2()
                - qpredict::composite::conditional_entropy_diag(&s, &x, &y).unwrap();
            worst = worst.max((cond - via_entropy).abs());
            worst = worst.max(check_conditional_cr(&s, &x, &y).unwrap());

            // Conditional predictability equals marginal plus correlation.
            let decomposed = predictability_vn(&s.reduce_a().unwrap(), &x).unwrap()
                + mutual_information_diag(&s, &x, &y).unwrap();
            worst = worst.max((cond - decomposed).abs());
        }
    }

    // Tensor-power additivity on random qubit/qutrit states.
    for d in 2..=3 {
        let x = kappa(d);
        for i in 0..200u64 {
            let rho = random_density(d, sub_seed(SEED, d as u64 * 90_000 + i)).unwrap();
            worst = worst.max(check_additivity(&rho, &x, 2).unwrap());
        }
    }

    // Bell state: P_A = P_B = 0 and P_AB = 1 bit.
    let bell = maximally_entangled(2).unwrap();
    let x = kappa(2);
    assert!(predictability_vn(&bell.reduce_a().unwrap(), &x).unwrap().abs() < 1e-10);
    assert!(predictability_vn(&bell.reduce_b().unwrap(), &x).unwrap().abs() < 1e-10);
    assert!((joint_predictability(&bell, &x, &x).unwrap() - 1.0).abs() < 1e-10);

    assert!(worst < 1e-10, "max residual {worst:.3e} exceeds 1e-10");
    println!(
        "[criterion 12] PASS - composite identities, joint residual {:.3e}, other residuals {worst:.3e}",
        joint.max_residual
    );
}
