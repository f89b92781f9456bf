//! The resource theory in action: monitoring maps shrink predictability,
//! dephasing-only monitoring preserves it, witnesses separate resource
//! states from the free set, and contractive distances give monotones
//! without optimization.
//!
//! Run with: cargo run --example resource_monotones

use qpredict::*;

fn main() -> Result<()> {
    let d = 2;
    let x = ObservableBasis::computational(d);
    let y = fourier_mub_partner(&x);
    let rho = haar_random_pure(d, 12)?;
    let p0 = predictability_vn(&rho, &x)?;

    println!("monotonicity under the monitoring maps (P0 = {p0:.8})\n");
    println!("{:>6} {:>14} {:>14}", "eps", "P(lambda_eps)", "P(theta_eps)");
    for eps in [0.0, 0.25, 0.5, 0.75, 1.0] {
        let lam = monitoring_lambda(&x, &y, eps)?.apply(&rho)?;
        let theta = monitoring_theta(&x, eps)?.apply(&rho)?;
        println!(
            "{eps:>6.2} {:>14.8} {:>14.8}",
            predictability_vn(&lam, &x)?,
            predictability_vn(&theta, &x)?
        );
    }

    println!(
        "\ncommuting condition residual (eps = 0.5, 50 states): {:.2e}",
        check_commuting_condition(&x, &y, 0.5, 50, 3)?
    );
    println!(
        "monotonicity bundle holds: {}",
        check_monotonicity(&rho, &x, &y, &[0.0, 0.25, 0.5, 0.75, 1.0])?
    );

    // Witness: negative expectation flags the resource state, nonnegative
    // on the whole free set.
    let skewed = DensityOperator::new(ComplexMatrix::diagonal(&[0.75, 0.25]))?;
    let w = witness_operator(&skewed, &x)?;
    println!("\nwitness built from diag(3/4, 1/4):");
    println!("  Tr(W rho) = {:.8} (equals -P)", w.matmul(skewed.matrix()).trace().re);
    for (i, p) in [0.0, 0.5, 1.0].iter().enumerate() {
        let upsilon = free_state(d, *p, &[0.0, 1.0 + i as f64], &x)?;
        println!(
            "  Tr(W upsilon_{i}) = {:+.8} (free states stay nonnegative)",
            w.matmul(upsilon.matrix()).trace().re
        );
    }

    println!("\noptimization-free monotones from contractive distances:");
    println!(
        "  relative entropy instance = {:.8} (this is P_vn)",
        monotone_from_distance(DistanceKind::RelativeEntropy, &skewed, &x, &y)?
    );
    println!(
        "  trace distance instance   = {:.8}",
        monotone_from_distance(DistanceKind::TraceDistance, &skewed, &x, &y)?
    );
    Ok(())
}
