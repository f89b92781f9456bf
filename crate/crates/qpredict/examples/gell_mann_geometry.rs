//! Bloch-style geometry: generalized Gell-Mann decompositions, the
//! diagonal components as the predictability directions, and the linear
//! predictability computed three equivalent ways.
//!
//! Run with: cargo run --example gell_mann_geometry

use qpredict::*;

fn main() -> Result<()> {
    // Qubit: the generators are the Pauli matrices and the coefficients
    // form the Bloch vector.
    let kappa2 = ObservableBasis::computational(2);
    let g2 = gell_mann_basis(&kappa2)?;
    let rho = haar_random_pure(2, 3)?;
    let coeffs = gell_mann_decompose(&rho, &g2)?;
    println!("qubit Bloch vector (r_z, r_x, r_y):");
    println!(
        "  ({:+.6}, {:+.6}, {:+.6}), norm {:.6}",
        coeffs.diagonal[0],
        coeffs.symmetric[0],
        coeffs.antisymmetric[0],
        (coeffs.diagonal[0].powi(2) + coeffs.symmetric[0].powi(2) + coeffs.antisymmetric[0].powi(2))
            .sqrt()
    );
    println!(
        "  P_yasin = |r_z| = {:.6}, P_l = r_z^2/2 = {:.6}\n",
        predictability_yasin(&rho, &kappa2)?,
        predictability_linear(&rho, &kappa2)?
    );

    // Qutrit: reconstruction and the three routes to the linear
    // predictability.
    let kappa3 = ObservableBasis::computational(3);
    let g3 = gell_mann_basis(&kappa3)?;
    let rho = random_density(3, 21)?;
    let coeffs = gell_mann_decompose(&rho, &g3)?;
    let back = gell_mann_reconstruct(&coeffs, &g3);
    println!("qutrit decomposition:");
    println!("  diagonal coefficients: {:?}", coeffs.diagonal);
    println!(
        "  reconstruction error: {:.2e}",
        back.frobenius_distance(rho.matrix())
    );

    let probs = rho.diagonal_in_basis(&kappa3)?;
    let direct = predictability_linear(&rho, &kappa3)?;
    let via_gmm: f64 = coeffs.diagonal.iter().map(|c| c * c).sum::<f64>() / 2.0;
    let mut via_pairs = 0.0;
    for j in 0..3 {
        for k in (j + 1)..3 {
            via_pairs += (probs[j] - probs[k]).powi(2);
        }
    }
    via_pairs /= 3.0;
    println!("\nlinear predictability three ways:");
    println!("  sum p_j^2 - 1/d          = {direct:.10}");
    println!("  (1/2) sum <Gamma_m>^2    = {via_gmm:.10}");
    println!("  (1/d) sum (p_j - p_k)^2  = {via_pairs:.10}");

    // Free states have no diagonal component at all.
    let upsilon = free_state(3, 0.8, &[0.0, 1.1, 2.2], &kappa3)?;
    let free_coeffs = gell_mann_decompose(&upsilon, &g3)?;
    println!(
        "\nfree state diagonal coefficients: {:?} (all zero)",
        free_coeffs
            .diagonal
            .iter()
            .map(|c| format!("{c:.1e}"))
            .collect::<Vec<_>>()
    );
    Ok(())
}
