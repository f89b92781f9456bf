//! Grid search over the maximally coherent mixed family confirms that the
//! relative entropy from the dephased state is minimized by the maximally
//! mixed state, recovering the predictability.
//!
//! Run with: cargo run --release --example free_state_minimization

use qpredict::*;

fn main() -> Result<()> {
    let grid = FreeStateGrid::default();
    println!(
        "minimizing S(rho_diag || upsilon) over p in {{0, 0.05, ..}} x {} phase steps\n",
        grid.phase_steps
    );
    println!(
        "{:>3} {:>6} {:>12} {:>12} {:>9} {:>8}",
        "d", "seed", "P_vn", "grid min", "residual", "argmin p"
    );
    for d in [2usize, 3] {
        let x = ObservableBasis::computational(d);
        for seed in 0..4u64 {
            let rho = random_density(d, sub_seed(17, d as u64 * 10 + seed))?;
            let p = predictability_vn(&rho, &x)?;
            let result = minimize_over_free_states(&rho, &x, grid)?;
            println!(
                "{d:>3} {seed:>6} {p:>12.8} {:>12.8} {:>9.2e} {:>8.2}",
                result.min_value,
                (result.min_value - p).abs(),
                result.argmin_p
            );
        }
    }
    println!("\nthe minimizer is always p = 0, i.e. upsilon = I/d.");
    Ok(())
}
