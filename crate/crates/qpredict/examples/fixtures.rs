//! The plain-text fixture format for states and bases: row-major "re,im"
//! pairs under a dim header. Values round-trip exactly.
//!
//! Run with: cargo run --example fixtures

use qpredict::io::{parse_matrix_text, write_matrix_text};
use qpredict::*;

fn main() -> Result<()> {
    let rho = random_density(2, 8)?;
    let text = write_matrix_text(rho.matrix());
    println!("a random qubit state:\n{text}");

    let back = parse_matrix_text(&text)?;
    println!(
        "round-trip distance: {:.1e}",
        back.frobenius_distance(rho.matrix())
    );

    // Bases serialize through their unitaries.
    let basis = fourier_mub_partner(&ObservableBasis::computational(2));
    let text = write_matrix_text(&basis.unitary());
    println!("\nfourier partner of the computational qubit basis:\n{text}");

    let restored = ObservableBasis::from_unitary(&parse_matrix_text(&text)?, "restored")?;
    println!(
        "restored basis is mutually unbiased to computational: {}",
        ObservableBasis::computational(2)
            .mutual_unbiasedness_deviation(&restored)?
            < 1e-12
    );
    Ok(())
}
