//! Non-revealing von Neumann measurements as CNOT dilation circuits: the
//! ancilla-traced circuit reproduces the dephasing channel exactly.
//!
//! Run with: cargo run --example nrvnm_circuit

use qpredict::io::write_circuit_text;
use qpredict::*;

fn main() -> Result<()> {
    // One qubit, measuring the observable with eigenbasis U(θ, φ, 0)|j⟩.
    let (theta, phi) = (std::f64::consts::PI / 3.0, 0.7);
    let circuit = build_nrvnm_circuit_1q(theta, phi);
    println!("one-qubit circuit (theta = {theta:.4}, phi = {phi:.4}):");
    print!("{}", write_circuit_text(&circuit)?);

    let eq = circuit_as_channel(&circuit, 20, 9)?;
    println!(
        "\nmax deviation from the dephasing channel over {} random inputs: {:.2e}",
        eq.samples, eq.max_deviation
    );

    // The dagger parameters compose to the identity up to a global phase.
    let (td, pd, ld) = u_dagger_params(theta, phi, 0.0)?;
    let product = u_gate_matrix(td, pd, ld).matmul(&u_gate_matrix(theta, phi, 0.0));
    println!(
        "dagger-parameter check: |product[0][0]| = {:.12}, off-diagonal {:.2e}",
        product[(0, 0)].norm(),
        product[(0, 1)].norm() + product[(1, 0)].norm()
    );

    // Two qubits with a random measurement basis.
    let v = haar_random_unitary(4, 33)?;
    let circuit2 = build_nrvnm_circuit_nq(&v)?;
    let eq2 = circuit_as_channel(&circuit2, 20, 10)?;
    println!(
        "\ntwo-qubit circuit with a Haar-random V: max deviation {:.2e}",
        eq2.max_deviation
    );

    // Statevector view of the computational-basis dilation: the ancilla
    // copies the basis index.
    let cnot_only = build_nrvnm_circuit_nq(&ComplexMatrix::identity(2))?;
    println!("\ncomputational-basis dilation (bare CNOT):");
    print!("{}", write_circuit_text(&cnot_only)?);
    let psi = haar_random_state_vector(2, 44)?;
    let mut input = vec![Complex64::new(0.0, 0.0); 4];
    input[..2].copy_from_slice(&psi);
    let out = simulate_statevector(&cnot_only, &input)?;
    println!("|psi>|0> evolves to sum_j psi_j |j>|j>:");
    for (idx, amp) in out.iter().enumerate() {
        if amp.norm() > 1e-12 {
            println!("  |{:02b}> amplitude {:+.6}{:+.6}i", idx, amp.re, amp.im);
        }
    }
    Ok(())
}
