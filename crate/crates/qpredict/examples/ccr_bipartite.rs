//! Complete complementarity for reductions of bipartite pure states, and
//! the joint/conditional predictability identities.
//!
//! Run with: cargo run --example ccr_bipartite

use qpredict::experiments::sweep_state_vector;
use qpredict::*;

fn main() -> Result<()> {
    let kappa = ObservableBasis::computational(2);

    println!("C + P + S = log2 d_A across the two-qubit sweep family\n");
    println!("{:>8} {:>10} {:>10} {:>10} {:>10}", "theta", "C", "P", "S", "sum");
    for k in 0..7 {
        let theta = std::f64::consts::PI * k as f64 / 6.0;
        let psi = pure_state(&sweep_state_vector(theta))?;
        let rho_a = partial_trace(&psi, &[2, 2], &[0])?;
        let c = coherence_re(&rho_a, &kappa)?;
        let p = predictability_vn(&rho_a, &kappa)?;
        let s = von_neumann_entropy(&rho_a)?;
        println!("{theta:>8.4} {c:>10.6} {p:>10.6} {s:>10.6} {:>10.6}", c + p + s);
    }

    println!("\njoint decomposition P_AB = P_A + P_B + I_AB on a random 2x3 state");
    let rho = random_density(6, 31)?;
    let s = BipartiteState::new(rho, 2, 3)?;
    let x = ObservableBasis::computational(2);
    let y = ObservableBasis::computational(3);
    let p_ab = joint_predictability(&s, &x, &y)?;
    let p_a = predictability_vn(&s.reduce_a()?, &x)?;
    let p_b = predictability_vn(&s.reduce_b()?, &y)?;
    let mi = mutual_information_diag(&s, &x, &y)?;
    println!("  P_AB = {p_ab:.8}");
    println!("  P_A + P_B + I_AB = {:.8}", p_a + p_b + mi);
    println!("  conditional P(A|B) = {:.8}", conditional_predictability(&s, &x, &y)?);
    println!("  conditional CR residual = {:.2e}", check_conditional_cr(&s, &x, &y)?);

    println!("\nBell state: everything sits in the correlations");
    let bell = maximally_entangled(2)?;
    println!(
        "  P_A = {:.2e}, P_AB = {:.6} bit",
        predictability_vn(&bell.reduce_a()?, &kappa)?,
        joint_predictability(&bell, &kappa, &kappa)?
    );

    println!("\ntensor-power additivity: |P(rho^x2) - 2 P(rho)| on random qubits");
    for i in 0..3u64 {
        let rho = random_density(2, 400 + i)?;
        println!("  seed {}: residual {:.2e}", 400 + i, check_additivity(&rho, &kappa, 2)?);
    }
    Ok(())
}
