//! Gauss–Legendre integration on finite intervals, and a panelled rule for
//! half-line integrals against `K_ν(2r)`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::specfun::bessel_k;

/// Default order for every verification integral.
pub const DEFAULT_ORDER: usize = 200;
pub const MAX_ORDER: usize = 4096;

/// Start of the geometric panel grid for half-line integrals.
pub const SEMI_INFINITE_R_MIN: f64 = 1e-6;
pub const SEMI_INFINITE_PANELS: usize = 32;

/// Gauss–Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Nodes, strictly increasing.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `(node, weight)` pairs mapped onto `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

/// Legendre `P_m(x)` and `P_m'(x)` by the three-term recurrence.
fn legendre_with_derivative(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let mf = m as f64;
    let dp = mf * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Gauss–Legendre rule of the given order, `1 ≤ order ≤ 4096`.
///
/// Roots of `P_m` by Newton iteration from the Tricomi-type initial guess;
/// only the non-negative half is computed and mirrored, so the rule is
/// exactly symmetric.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule> {
    if order == 0 || order > MAX_ORDER {
        return Err(Error::domain(
            "gauss_legendre",
            format!("order {order} outside 1..={MAX_ORDER}"),
        ));
    }
    let m = order;
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    let mf = m as f64;
    for i in 0..m.div_ceil(2) {
        // i-th largest root
        let mut x = (PI * (i as f64 + 0.75) / (mf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(m, x);
        if d.is_finite() {
            dp = d;
        }
        if m % 2 == 1 && i == m / 2 {
            x = 0.0;
            // P_m'(0) for odd m through the recurrence
            dp = legendre_with_derivative(m, 0.0).1;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[m - 1 - i] = x;
        nodes[i] = -x;
        weights[m - 1 - i] = w;
        weights[i] = w;
    }
    Ok(QuadratureRule { nodes, weights })
}

/// `∫_a^b f` with the rule mapped affinely onto `[a, b]`.
///
/// A non-finite sample aborts with the offending node.
pub fn integrate_finite(f: impl Fn(f64) -> f64, a: f64, b: f64, rule: &QuadratureRule) -> Result<f64> {
    if !(a < b) {
        return Err(Error::domain("integrate_finite", format!("empty interval [{a}, {b}]")));
    }
    let mut sum = 0.0;
    for (x, w) in rule.mapped(a, b) {
        let v = f(x);
        if !v.is_finite() {
            return Err(Error::NonFinite { node: x, value: v });
        }
        sum += w * v;
    }
    Ok(sum)
}

/// Outcome of a half-line integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiInfiniteIntegral {
    pub value: f64,
    /// Estimated size of what the panel sum does not capture: the tail past
    /// `r_max` plus the uncertainty of the power-law correction below the
    /// first panel.
    pub tail_estimate: f64,
    /// Set when `tail_estimate > 1e-12 · |value|`.
    pub warning: bool,
}

/// `r_max` default: `max(30, 5 + 10·degree)` for an integrand `r^degree K_ν(2r)`.
pub fn default_r_max(degree: f64) -> f64 {
    (5.0 + 10.0 * degree).max(30.0)
}

/// `∫_0^∞ g(r) K_ν(2r) dr`.
///
/// Gauss–Legendre on 32 geometric panels spanning `[1e-6, r_max]`. Below
/// `1e-6` the integrand is treated as the power law `C r^p` fitted from its
/// values at `1e-6` and `1e-7`, which is exact to leading order for the
/// `r^μ K_ν(2r)` family (integrable when `μ − ν > −1`). Above `r_max` the
/// tail is estimated from the local exponential decay rate.
pub fn integrate_semi_infinite_k_weight(
    g: impl Fn(f64) -> f64,
    nu: f64,
    r_max: f64,
    rule: &QuadratureRule,
) -> Result<SemiInfiniteIntegral> {
    if !(r_max > SEMI_INFINITE_R_MIN) || !r_max.is_finite() {
        return Err(Error::domain(
            "integrate_semi_infinite_k_weight",
            format!("r_max = {r_max} must exceed {SEMI_INFINITE_R_MIN}"),
        ));
    }
    let f = |r: f64| -> Result<f64> {
        let v = g(r) * bessel_k(nu, 2.0 * r)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { node: r, value: v });
        }
        Ok(v)
    };

    let ratio = (r_max / SEMI_INFINITE_R_MIN).powf(1.0 / SEMI_INFINITE_PANELS as f64);
    let mut value = 0.0;
    let mut lo = SEMI_INFINITE_R_MIN;
    for p in 0..SEMI_INFINITE_PANELS {
        let hi = if p + 1 == SEMI_INFINITE_PANELS {
            r_max
        } else {
            lo * ratio
        };
        for (x, w) in rule.mapped(lo, hi) {
            value += w * f(x)?;
        }
        lo = hi;
    }

    let (lower, lower_uncertainty) = power_law_head(&f, SEMI_INFINITE_R_MIN)?;
    value += lower;

    let upper = exponential_tail(&f, r_max)?;
    let tail_estimate = upper + lower_uncertainty;
    Ok(SemiInfiniteIntegral {
        value,
        tail_estimate,
        warning: tail_estimate > 1e-12 * value.abs(),
    })
}

/// `∫_0^{r0} f` assuming `f ≈ C r^p` there; returns the estimate and the
/// spread between two exponent fits taken one decade apart.
fn power_law_head(f: &impl Fn(f64) -> Result<f64>, r0: f64) -> Result<(f64, f64)> {
    let f0 = f(r0)?;
    if f0 == 0.0 {
        return Ok((0.0, 0.0));
    }
    let f1 = f(0.1 * r0)?;
    let f2 = f(0.01 * r0)?;
    let exponent = |fa: f64, fb: f64| -> Option<f64> {
        if fb == 0.0 || fa.signum() != fb.signum() {
            return None;
        }
        Some((fa / fb).ln() / 10f64.ln()).filter(|&p| p > -1.0)
    };
    if let (Some(p0), Some(p1)) = (exponent(f0, f1), exponent(f1, f2)) {
        let head = f0 * r0 / (p0 + 1.0);
        let alt = f0 * r0 / (p1 + 1.0);
        return Ok((head, (head - alt).abs()));
    }
    // not a clean power law: plain Gauss–Legendre on the first panel
    let rule = gauss_legendre(64)?;
    let mut s = 0.0;
    for (x, w) in rule.mapped(0.0, r0) {
        s += w * f(x)?;
    }
    Ok((s, s.abs()))
}

fn exponential_tail(f: &impl Fn(f64) -> Result<f64>, r_max: f64) -> Result<f64> {
    let h = 1e-3 * r_max;
    let fa = f(r_max)?;
    let fb = f(r_max - h)?;
    if fa == 0.0 {
        return Ok(0.0);
    }
    let rate = (fb.abs() / fa.abs()).ln() / h;
    Ok(if rate > 0.0 { fa.abs() / rate } else { f64::INFINITY })
}
