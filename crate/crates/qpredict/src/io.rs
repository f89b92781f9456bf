//! Plain-text serialization: the square-matrix fixture format, the circuit
//! dump format, and significant-digit float formatting.

use crate::circuits::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::linalg::{Complex64, ComplexMatrix};

/// Render a float with the given number of significant digits, trimming
/// trailing zeros in fixed notation.
pub fn format_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if exp < -4 || exp >= sig as i32 {
        format!("{:.*e}", sig.saturating_sub(1), x)
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    }
}

/// Serialize a square matrix: header line `dim=<d>`, then d rows of d
/// whitespace-separated `re,im` pairs. Values round-trip exactly.
pub fn write_matrix_text(m: &ComplexMatrix) -> String {
    assert!(m.is_square(), "fixture format carries square matrices");
    let d = m.rows();
    let mut out = format!("dim={d}\n");
    for r in 0..d {
        let row: Vec<String> = (0..d)
            .map(|c| {
                let x = m[(r, c)];
                format!("{},{}", x.re, x.im)
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse the square-matrix fixture format.
pub fn parse_matrix_text(text: &str) -> Result<ComplexMatrix> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let d: usize = header
        .trim()
        .strip_prefix("dim=")
        .ok_or_else(|| Error::Parse(format!("expected 'dim=<d>' header, got '{header}'")))?
        .parse()
        .map_err(|e| Error::Parse(format!("bad dimension: {e}")))?;

    let mut m = ComplexMatrix::zeros(d, d);
    for r in 0..d {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
        let pairs: Vec<&str> = line.split_whitespace().collect();
        if pairs.len() != d {
            return Err(Error::Parse(format!(
                "row {r} has {} entries, expected {d}",
                pairs.len()
            )));
        }
        for (c, pair) in pairs.iter().enumerate() {
            let (re, im) = pair
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("entry '{pair}' is not 're,im'")))?;
            let re: f64 = re.parse().map_err(|e| Error::Parse(format!("{e}")))?;
            let im: f64 = im.parse().map_err(|e| Error::Parse(format!("{e}")))?;
            m[(r, c)] = Complex64::new(re, im);
        }
    }
    Ok(m)
}

/// Serialize a circuit, one gate per line: `u <target> <theta> <phi>
/// <lambda>` or `cx <control> <target>`, angles at 12 significant digits.
/// Opaque system unitaries have no text form.
pub fn write_circuit_text(c: &Circuit) -> Result<String> {
    let mut out = String::new();
    for gate in c.gates() {
        match gate {
            Gate::U {
                target,
                theta,
                phi,
                lambda,
            } => {
                out.push_str(&format!(
                    "u {target} {} {} {}\n",
                    format_sig(*theta, 12),
                    format_sig(*phi, 12),
                    format_sig(*lambda, 12)
                ));
            }
            Gate::Cnot { control, target } => {
                out.push_str(&format!("cx {control} {target}\n"));
            }
            Gate::SystemUnitary { .. } => {
                return Err(Error::BadParameter(
                    "opaque system unitary has no circuit text form".into(),
                ));
            }
        }
    }
    Ok(out)
}

/// Parse the circuit dump format back into a gate list.
pub fn parse_circuit_text(
    text: &str,
    num_system_qubits: usize,
    num_ancilla_qubits: usize,
) -> Result<Circuit> {
    let mut gates = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_f = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
        };
        let parse_u = |s: &str| -> Result<usize> {
            s.parse()
                .map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1)))
        };
        match fields.as_slice() {
            ["u", target, theta, phi, lambda] => gates.push(Gate::U {
                target: parse_u(target)?,
                theta: parse_f(theta)?,
                phi: parse_f(phi)?,
                lambda: parse_f(lambda)?,
            }),
            ["cx", control, target] => gates.push(Gate::Cnot {
                control: parse_u(control)?,
                target: parse_u(target)?,
            }),
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: unrecognized gate '{line}'",
                    lineno + 1
                )))
            }
        }
    }
    Circuit::new(num_system_qubits, num_ancilla_qubits, gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::build_nrvnm_circuit_1q;
    use crate::states::random_density;

    #[test]
    fn format_sig_cases() {
        assert_eq!(format_sig(0.0, 10), "0");
        assert_eq!(format_sig(1.0, 10), "1");
        assert_eq!(format_sig(0.5, 10), "0.5");
        assert_eq!(format_sig(1.0 / 3.0, 10), "0.3333333333");
        assert_eq!(format_sig(12345.678901234, 10), "12345.6789");
        assert_eq!(format_sig(1.23e-7, 10), "1.230000000e-7");
        assert_eq!(format_sig(-2.0, 10), "-2");
    }

    #[test]
    fn matrix_text_round_trip() {
        let rho = random_density(3, 77).unwrap();
        let text = write_matrix_text(rho.matrix());
        assert!(text.starts_with("dim=3\n"));
        let back = parse_matrix_text(&text).unwrap();
        assert_eq!(back, *rho.matrix());
    }

    #[test]
    fn matrix_text_rejects_garbage() {
        assert!(parse_matrix_text("").is_err());
        assert!(parse_matrix_text("dim=2\n1,0 0,0\n").is_err());
        assert!(parse_matrix_text("d=2\n").is_err());
    }

    #[test]
    fn circuit_text_round_trip() {
        let circuit = build_nrvnm_circuit_1q(std::f64::consts::PI / 3.0, 0.25);
        let text = write_circuit_text(&circuit).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("u 0 "));
        assert_eq!(lines[1], "cx 0 1");

        let parsed = parse_circuit_text(&text, 1, 1).unwrap();
        // Angles survive at 12 significant digits.
        let orig = circuit.unitary();
        let back = parsed.unitary();
        assert!(orig.frobenius_distance(&back) < 1e-9);
    }
}
