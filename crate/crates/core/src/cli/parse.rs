use std::f64::consts::PI;

use num_complex::Complex64;

/// Parses `a+bi`, `a-bi`, `bi`, `a`, `i`, or polar `r@theta` (radians).
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex number".into());
    }
    if let Some((r, theta)) = t.split_once('@') {
        let r: f64 = r.parse().map_err(|_| format!("bad modulus in {s:?}"))?;
        let theta: f64 = theta.parse().map_err(|_| format!("bad angle in {s:?}"))?;
        if !(r >= 0.0) || !r.is_finite() || !theta.is_finite() {
            return Err(format!("polar form {s:?} needs finite r ≥ 0 and finite theta"));
        }
        // exact on the axes so that 1@0 and 2@3.14159.. stay clean
        let theta = theta.rem_euclid(2.0 * PI);
        return Ok(if theta == 0.0 {
            Complex64::new(r, 0.0)
        } else {
            Complex64::from_polar(r, theta)
        });
    }
    let z = match t.strip_suffix('i') {
        None => Complex64::new(parse_real(&t, s)?, 0.0),
        Some(body) => {
            // split at the last sign that is not a leading sign or an exponent sign
            let bytes = body.as_bytes();
            let split = (1..bytes.len())
                .rev()
                .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
            match split {
                Some(k) => Complex64::new(parse_real(&body[..k], s)?, parse_imag(&body[k..], s)?),
                None => Complex64::new(0.0, parse_imag(body, s)?),
            }
        }
    };
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(format!("non-finite complex number {s:?}"));
    }
    Ok(z)
}

fn parse_real(part: &str, whole: &str) -> Result<f64, String> {
    part.parse()
        .map_err(|_| format!("cannot parse {whole:?} as a+bi or r@theta"))
}

fn parse_imag(part: &str, whole: &str) -> Result<f64, String> {
    match part {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        p => parse_real(p, whole),
    }
}
