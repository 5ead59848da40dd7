use crate::error::{Error, Result};

/// ₂F₁(−n, b; c; x) as the finite sum over k = 0..=n.
///
/// Terms are generated by the ratio
/// `t_{k+1} / t_k = (k − n)(b + k) x / ((c + k)(k + 1))`.
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, x: f64) -> Result<f64> {
    if let Some(k) = (0..n).find(|&k| c + k as f64 == 0.0) {
        return Err(Error::domain(
            "hyp2f1_terminating",
            format!("c = {c} makes (c)_{} vanish for n = {n}", k + 1),
        ));
    }
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..n {
        let kf = k as f64;
        term *= (kf - n as f64) * (b + kf) * x / ((c + kf) * (kf + 1.0));
        sum += term;
    }
    Ok(sum)
}
