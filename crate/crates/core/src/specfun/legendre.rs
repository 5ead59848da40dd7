use std::f64::consts::LN_2;

use crate::error::{Error, Result};

use super::{gamma::ln_gamma, gegenbauer::gegenbauer_eval};

/// Phase attached to `P_ν^L`: `(−1)^⌊L⌋`.
///
/// Reduces to the Condon–Shortley `(−1)^L` for integer order and stays real
/// for fractional order.
pub fn legendre_phase(l: f64) -> f64 {
    if (l.floor() as i64) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `P_{n+L}^L(y)` for real order `L ≥ 0` and integer `n ≥ 0`.
///
/// With `ℓ = L`, `k = n + L` the hypergeometric representation
///
/// ```text
/// P_k^ℓ(y) = (−1)^ℓ Γ(ℓ+k+1) / (2^ℓ Γ(k−ℓ+1) Γ(ℓ+1)) (1−y²)^{ℓ/2}
///            ₂F₁(−n, n+2ℓ+1; ℓ+1; (1−y)/2)
/// ```
///
/// terminates, and equals `κ (1−y²)^{L/2} C_n^{L+1/2}(y)` with the
/// n-independent constant `κ = (−1)^⌊L⌋ Γ(2L+1) / (2^L Γ(L+1))`. The
/// Gegenbauer form is what gets evaluated.
///
/// For fractional `L` this is a continuation of the integer-order formula, not
/// the Ferrers function `P_ν^μ`; at `L = 1/2` it coincides with
/// `sqrt(2/(π sinθ)) sin((ν+1/2)θ)`, `y = cos θ`.
pub fn assoc_legendre_half_shift(n: usize, l: f64, y: f64) -> Result<f64> {
    if !y.is_finite() || y.abs() > 1.0 {
        return Err(Error::domain(
            "assoc_legendre_half_shift",
            format!("|y| = {} exceeds 1", y.abs()),
        ));
    }
    if !(l >= 0.0) || !l.is_finite() {
        return Err(Error::domain(
            "assoc_legendre_half_shift",
            format!("order L = {l} must be ≥ 0"),
        ));
    }
    let ln_kappa = ln_gamma(2.0 * l + 1.0)? - l * LN_2 - ln_gamma(l + 1.0)?;
    let envelope = if l == 0.0 { 1.0 } else { (1.0 - y * y).powf(0.5 * l) };
    Ok(legendre_phase(l) * ln_kappa.exp() * envelope * gegenbauer_eval(n, l + 0.5, y))
}
