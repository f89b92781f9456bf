//! Predictability equals coherence after a non-revealing measurement, when
//! the second observable is mutually unbiased to the first.
//!
//! Run with: cargo run --example pc_equality

use qpredict::*;

fn main() -> Result<()> {
    println!("P^X(rho) vs C^Y(dephased rho) for Fourier-partner Y\n");
    println!("{:>3} {:>3} {:>12} {:>12} {:>10}", "d", "i", "P (bits)", "C (bits)", "residual");
    for d in [2usize, 3, 4] {
        for i in 0..4u64 {
            let rho = haar_random_pure(d, sub_seed(7, d as u64 * 10 + i))?;
            let x = random_basis(d, sub_seed(8, d as u64 * 10 + i))?;
            let y = fourier_mub_partner(&x);

            let p = predictability_vn(&rho, &x)?;
            let dephased = dephasing_channel(&x).apply(&rho)?;
            let c = coherence_re(&dephased, &y)?;
            println!("{d:>3} {i:>3} {p:>12.8} {c:>12.8} {:>10.2e}", (p - c).abs());
        }
    }

    // The same number three ways: entropy difference, relative entropy to
    // the uniform state, and the dephased-state coherence.
    let rho = haar_random_pure(3, 99)?;
    let x = random_basis(3, 100)?;
    let y = fourier_mub_partner(&x);
    let dephased = dephasing_channel(&x).apply(&rho)?;
    let double = double_dephasing(&x, &y)?.apply(&rho)?;

    println!("\none qutrit state, three routes to P^X:");
    println!("  log2 d - S(dephased)     = {:.10}", predictability_vn(&rho, &x)?);
    println!(
        "  S(double) - S(dephased)  = {:.10}",
        von_neumann_entropy(&double)? - von_neumann_entropy(&dephased)?
    );
    println!(
        "  S(dephased || I/d)       = {:.10}",
        relative_entropy(&dephased, &DensityOperator::maximally_mixed(3))?
    );
    Ok(())
}
