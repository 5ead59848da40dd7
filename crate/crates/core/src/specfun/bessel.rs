//! Modified Bessel functions of real order.
//!
//! `I_ν` comes from its power series, which has only positive terms and so
//! stays accurate over the whole range used here; the sum is rescaled on the
//! fly so that `ln I_ν` is available far past the overflow point of `I_ν`.
//!
//! `K_ν` uses Temme's method: split `ν = N + μ` with `|μ| ≤ 1/2`, get
//! `K_μ, K_{μ+1}` from Temme's series (`x < 2`) or Steed's continued fraction
//! (`x ≥ 2`), then recur upward in order, which is stable for `K`.

use std::f64::consts::{LN_10, PI};

use crate::error::{Error, Result};

use super::gamma::{gamma_fn, ln_gamma, recip_gamma_1p, temme_gammas};

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;
const RESCALE: f64 = 1e250;
const LN_RESCALE: f64 = 250.0 * LN_10;

/// Result of summing a series term-by-term with a geometric tail bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub sum: f64,
    /// Number of terms added.
    pub terms: usize,
    /// Bound on the absolute value of everything left out.
    pub tail_bound: f64,
}

/// Sums `t_0 + t_1 + …` where `t_{k+1} = t_k · ratio(k)`.
///
/// Stops once `ratio(k) < 1/2` and the geometric bound
/// `|t_k| ρ / (1 − ρ)` on the remaining tail drops below `tol`. The bound is
/// rigorous when the ratios are non-increasing from that point on.
pub fn sum_ratio_series(first: f64, ratio: impl Fn(usize) -> f64, tol: f64) -> SeriesSum {
    let mut term = first;
    let mut sum = first;
    let mut k = 0;
    loop {
        let rho = ratio(k);
        if rho.abs() < 0.5 {
            let tail = (term * rho).abs() / (1.0 - rho.abs());
            if tail < tol || term == 0.0 {
                return SeriesSum {
                    sum,
                    terms: k + 1,
                    tail_bound: tail,
                };
            }
        }
        term *= rho;
        sum += term;
        k += 1;
        if k >= MAX_ITER {
            return SeriesSum {
                sum,
                terms: k,
                tail_bound: f64::INFINITY,
            };
        }
    }
}

fn check_order(func: &'static str, nu: f64) -> Result<()> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain(func, format!("order ν = {nu} must be a finite real ≥ 0")));
    }
    Ok(())
}

/// `(ln prefactor, rescale count, scaled sum)` with
/// `I_ν(x) = exp(prefactor) · 1e250^count · sum`.
fn i_series(nu: f64, x: f64) -> Result<(f64, i32, f64)> {
    let q = 0.25 * x * x;
    let ln_pref = nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)?;
    let mut rescales = 0;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut k = 0usize;
    loop {
        let kf = k as f64;
        let rho = q / ((kf + 1.0) * (kf + 1.0 + nu));
        if rho < 0.5 && term * rho / (1.0 - rho) < EPS * sum {
            break;
        }
        term *= rho;
        sum += term;
        if sum > RESCALE {
            sum /= RESCALE;
            term /= RESCALE;
            rescales += 1;
        }
        k += 1;
        if k > MAX_ITER {
            return Err(Error::domain("bessel_i", format!("series did not converge at x = {x}")));
        }
    }
    Ok((ln_pref, rescales, sum))
}

/// Modified Bessel function of the first kind, `I_ν(x)`, for `ν ≥ 0`, `x ≥ 0`.
pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    check_order("bessel_i", nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "bessel_i",
            format!("argument x = {x} must be finite and ≥ 0"),
        ));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let (ln_pref, rescales, sum) = i_series(nu, x)?;
    if rescales > 0 {
        return Err(Error::overflow(
            "bessel_i",
            format!("I_{nu}({x}) exceeds f64 range; use ln_bessel_i"),
        ));
    }
    // direct prefactor when representable; one rounding instead of exp(log)
    let pref = if nu <= 170.0 && ln_pref.abs() < 600.0 {
        let direct = (0.5 * x).powf(nu) / gamma_fn(nu + 1.0)?;
        if direct.is_normal() {
            direct
        } else {
            ln_pref.exp()
        }
    } else {
        ln_pref.exp()
    };
    let v = pref * sum;
    if !v.is_finite() {
        return Err(Error::overflow(
            "bessel_i",
            format!("I_{nu}({x}) exceeds f64 range; use ln_bessel_i"),
        ));
    }
    Ok(v)
}

/// `ln I_ν(x)`; `−∞` at `x = 0` for `ν > 0`.
pub fn ln_bessel_i(nu: f64, x: f64) -> Result<f64> {
    check_order("ln_bessel_i", nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(
            "ln_bessel_i",
            format!("argument x = {x} must be finite and ≥ 0"),
        ));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 0.0 } else { f64::NEG_INFINITY });
    }
    let (ln_pref, rescales, sum) = i_series(nu, x)?;
    Ok(ln_pref + rescales as f64 * LN_RESCALE + sum.ln())
}

/// Modified Bessel function of the second kind, `K_ν(x)`, `ν ≥ 0`, `x > 0`.
pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    bessel_k_pair(nu, x).map(|(k, _)| k)
}

/// `(K_ν(x), K_{ν+1}(x))`.
pub fn bessel_k_pair(nu: f64, x: f64) -> Result<(f64, f64)> {
    let (k, k1, shift) = k_pair_scaled("bessel_k", nu, x)?;
    let damp = (-shift).exp();
    let (k, k1) = (k * damp, k1 * damp);
    if !k.is_finite() || !k1.is_finite() {
        return Err(Error::overflow("bessel_k", format!("K_{nu}({x}) exceeds f64 range")));
    }
    Ok((k, k1))
}

/// `ln K_ν(x)`; stays finite where `K_ν(x)` underflows.
pub fn ln_bessel_k(nu: f64, x: f64) -> Result<f64> {
    let (k, _, shift) = k_pair_scaled("ln_bessel_k", nu, x)?;
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::overflow("ln_bessel_k", format!("K_{nu}({x}) exceeds f64 range")));
    }
    Ok(k.ln() - shift)
}

/// `K_ν, K_{ν+1}` times `e^shift`.
fn k_pair_scaled(func: &'static str, nu: f64, x: f64) -> Result<(f64, f64, f64)> {
    check_order(func, nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(func, format!("argument x = {x} must be finite and > 0")));
    }
    let shifts = (nu + 0.5).floor();
    let mu = nu - shifts;
    let (mut k_mu, mut k_mu1, shift) = if x < 2.0 {
        let (a, b) = temme_series(mu, x);
        (a, b, 0.0)
    } else {
        let (a, b) = steed_cf2_scaled(mu, x);
        (a, b, x)
    };
    let two_over_x = 2.0 / x;
    for i in 1..=(shifts as usize) {
        let next = (mu + i as f64) * two_over_x * k_mu1 + k_mu;
        k_mu = k_mu1;
        k_mu1 = next;
    }
    Ok((k_mu, k_mu1, shift))
}

/// Temme's series for `K_μ(x)`, `K_{μ+1}(x)` with `|μ| ≤ 1/2`, `x < 2`.
fn temme_series(mu: f64, x: f64) -> (f64, f64) {
    let x2 = 0.5 * x;
    let pimu = PI * mu;
    let fact = if pimu.abs() < EPS { 1.0 } else { pimu / pimu.sin() };
    let d = -x2.ln();
    let e = mu * d;
    let fact2 = if e.abs() < EPS { 1.0 } else { e.sinh() / e };
    let (gam1, gam2) = temme_gammas(mu);
    let gampl = recip_gamma_1p(mu);
    let gammi = recip_gamma_1p(-mu);

    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut c = 1.0;
    let dd = x2 * x2;
    let mut sum1 = p;
    let mu2 = mu * mu;
    for i in 1..MAX_ITER {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        c *= dd / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = c * ff;
        sum += del;
        sum1 += c * (p - fi * ff);
        if del.abs() < sum.abs() * EPS {
            break;
        }
    }
    (sum, sum1 * 2.0 / x)
}

/// Steed's continued fraction for `e^x K_μ(x)`, `e^x K_{μ+1}(x)`, `x ≥ 2`.
fn steed_cf2_scaled(mu: f64, x: f64) -> (f64, f64) {
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    for i in 2..MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * (fi - 1.0);
        c = -a * c / fi;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh *= b * d - 1.0;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            break;
        }
    }
    let h = a1 * h;
    let k_mu = (PI / (2.0 * x)).sqrt() / s;
    let k_mu1 = k_mu * (mu + x + 0.5 - h) / x;
    (k_mu, k_mu1)
}
