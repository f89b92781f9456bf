//! When the second observable is not mutually unbiased to the first, the
//! coherence of the dephased state falls short of the predictability by
//! exactly the dephased state's predictability in the second basis.
//!
//! Run with: cargo run --example pc_inequality

use qpredict::*;

fn main() -> Result<()> {
    let d = 3;
    let rho = haar_random_pure(d, 5)?;
    let x = random_basis(d, 6)?;

    println!("C^Y + P^Y(dephased) = P^X for random Y (qutrit)\n");
    println!(
        "{:>3} {:>12} {:>12} {:>12} {:>10}",
        "i", "C^Y", "gap P^Y", "P^X", "residual"
    );
    for i in 0..6u64 {
        let y = random_basis(d, sub_seed(40, i))?;
        let dec = check_pc_inequality(&rho, &x, &y)?;
        let residual = (dec.coherence + dec.gap - dec.predictability).abs();
        println!(
            "{i:>3} {:>12.8} {:>12.8} {:>12.8} {residual:>10.2e}",
            dec.coherence, dec.gap, dec.predictability
        );
    }

    // Incompatibility is the same gap read as a difference of
    // predictabilities; it vanishes for commuting observables.
    let y = random_basis(d, 77)?;
    println!("\nincompatibility J(X, Y)      = {:.8}", incompatibility(&rho, &x, &y)?);
    println!("incompatibility J(X, X)      = {:.8}", incompatibility(&rho, &x, &x)?);

    // Entropic complementarity for the same pair.
    let (lhs, bound) = check_entropic_cr(&rho, &x, &y)?;
    println!("\nP^X + P^Y                    = {lhs:.8}");
    println!("2 log2 d + log2 c            = {bound:.8}");
    let f = fourier_mub_partner(&x);
    let (lhs_mu, bound_mu) = check_entropic_cr(&rho, &x, &f)?;
    println!("MU pair: lhs {lhs_mu:.8} <= bound {bound_mu:.8} (= log2 d)");
    Ok(())
}
