//! Barut–Girardello coherent states `|z, L⟩`, eigenstates of `Γ⁻`.
//!
//! In the number basis
//!
//! ```text
//! c_n = sqrt(|z|^{2L} / I_{2L}(2|z|)) · zⁿ / sqrt(n! Γ(n+2L+1))
//! ```
//!
//! built from `c_n = c_{n−1} · z / sqrt(n(n+2L))` in log-magnitude and phase.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::PotentialParams;
use crate::quadrature::{default_r_max, integrate_semi_infinite_k_weight, QuadratureRule};
use crate::specfun::{ln_bessel_i, ln_bessel_k, ln_gamma};
use crate::su11::LadderCoefficients;

/// Default tail tolerance for [`build_coherent_state`].
///
/// The tail bound is on `Σ_{n>N} |c_n|²`. The truncation residual of the
/// eigenvalue equation scales like its square root times `N`, so the tail
/// has to sit far below the `1e-10` residual target.
pub const DEFAULT_TAIL_TOL: f64 = 1e-30;

/// `|z|` must stay below this.
pub const MAX_ABS_Z: f64 = 1e3;

const MAX_TERMS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CoherentState {
    z: Complex64,
    l: f64,
    coeffs: Vec<Complex64>,
    tail_bound: f64,
}

impl CoherentState {
    pub fn z(&self) -> Complex64 {
        self.z
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    /// Truncation order `N`; coefficients run over `0..=N`.
    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Upper bound on the discarded weight `Σ_{n>N} |c_n|²`.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// `|c_n|²`.
    pub fn weights(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Running sums of `|c_n|²`.
    pub fn partial_sums(&self) -> Vec<f64> {
        self.weights()
            .iter()
            .scan(0.0, |acc, w| {
                *acc += w;
                Some(*acc)
            })
            .collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.weights().iter().sum()
    }
}

/// Builds `|z, L⟩` with `L` taken from `params`.
///
/// `N` is the smallest order whose next ratio `|z|/sqrt((N+1)(N+1+2L))` is
/// below `1/2` and whose geometric tail bound is below `tol`.
pub fn build_coherent_state(z: Complex64, params: &PotentialParams, tol: f64) -> Result<CoherentState> {
    build_coherent_state_l(z, params.l_index(), tol)
}

/// [`build_coherent_state`] with the representation index given directly.
pub fn build_coherent_state_l(z: Complex64, l: f64, tol: f64) -> Result<CoherentState> {
    let r = z.norm();
    if !r.is_finite() || r >= MAX_ABS_Z {
        return Err(Error::InvalidParams(format!(
            "|z| = {r} must be finite and below {MAX_ABS_Z}"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParams(format!("tol = {tol} must be > 0")));
    }
    if !(l >= 0.0) || !l.is_finite() {
        return Err(Error::InvalidParams(format!("L = {l} must be finite and ≥ 0")));
    }
    if r == 0.0 {
        return Ok(CoherentState {
            z,
            l,
            coeffs: vec![Complex64::new(1.0, 0.0)],
            tail_bound: 0.0,
        });
    }

    let ratio = |n: usize| {
        let nf = n as f64;
        r / (nf * (nf + 2.0 * l)).sqrt()
    };
    let ln_r = r.ln();
    let theta = z.arg();
    let mut ln_mag = l * ln_r - 0.5 * ln_bessel_i(2.0 * l, 2.0 * r)? - 0.5 * ln_gamma(2.0 * l + 1.0)?;
    let mut coeffs = vec![Complex64::new(ln_mag.exp(), 0.0)];
    loop {
        let n = coeffs.len();
        // ln|c_n| for the first discarded term
        let ln_next = ln_mag + ln_r - 0.5 * ((n as f64) * (n as f64 + 2.0 * l)).ln();
        let rho = ratio(n + 1);
        if ratio(n) < 0.5 {
            let bound = (2.0 * ln_next).exp() / (1.0 - rho * rho);
            if bound < tol {
                return Ok(CoherentState {
                    z,
                    l,
                    coeffs,
                    tail_bound: bound,
                });
            }
        }
        if n >= MAX_TERMS {
            return Err(Error::overflow(
                "build_coherent_state",
                format!("no truncation below tol = {tol} within {MAX_TERMS} terms"),
            ));
        }
        ln_mag = ln_next;
        coeffs.push(Complex64::from_polar(ln_mag.exp(), n as f64 * theta));
    }
}

/// `‖Γ⁻|z⟩ − z|z⟩‖` in coefficient space over `n = 0..=N`, with `c_{N+1} = 0`.
///
/// The `n = N` component is the truncation error `z·c_N`; it is bounded by
/// `sqrt(tail_bound · (N+1)(N+1+2L))`.
pub fn lowering_eigenstate_residual(cs: &CoherentState) -> f64 {
    let n_max = cs.truncation();
    let mut sum = 0.0;
    for n in 0..=n_max {
        let next = if n < n_max {
            cs.coeffs[n + 1] * LadderCoefficients::new(n + 1, cs.l).lower_eig
        } else {
            Complex64::new(0.0, 0.0)
        };
        sum += (next - cs.z * cs.coeffs[n]).norm_sqr();
    }
    sum.sqrt()
}

/// `Σ_n |c_n|² f(n)` for an observable diagonal in the number basis.
pub fn expectation_diagonal(cs: &CoherentState, f: impl Fn(usize) -> f64) -> f64 {
    cs.coeffs.iter().enumerate().map(|(n, c)| c.norm_sqr() * f(n)).sum()
}

/// `Σ_{n,n′} conj(c_{n′}) c_n ⟨n′|O|n⟩`; `elem(n′, n)` supplies the matrix element.
pub fn general_expectation(cs: &CoherentState, elem: impl Fn(usize, usize) -> Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (np, cp) in cs.coeffs.iter().enumerate() {
        for (n, c) in cs.coeffs.iter().enumerate() {
            let o = elem(np, n);
            if o != Complex64::new(0.0, 0.0) {
                acc += cp.conj() * c * o;
            }
        }
    }
    acc
}

/// One point of the measure `dσ(z, L)` with `z = r e^{iθ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasureSample {
    pub r: f64,
    pub theta: f64,
    /// `(2/π) I_{2L}(2r) K_{2L}(2r) r`
    pub density: f64,
}

/// Evaluates the measure density; the product `I·K` is formed in logs.
pub fn measure_sample(r: f64, theta: f64, l: f64) -> Result<MeasureSample> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(
            "measure_sample",
            format!("r = {r} must be finite and > 0"),
        ));
    }
    let theta = theta.rem_euclid(2.0 * PI);
    let ln_ik = ln_bessel_i(2.0 * l, 2.0 * r)? + ln_bessel_k(2.0 * l, 2.0 * r)?;
    Ok(MeasureSample {
        r,
        theta,
        density: 2.0 / PI * ln_ik.exp() * r,
    })
}

/// `⟨n| (∫ dσ |z⟩⟨z|) |n′⟩` and the pieces it was assembled from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResolutionElement {
    pub n: usize,
    pub n_prime: usize,
    pub value: f64,
    /// `∫_0^∞ r^{2n+2L+1} K_{2L}(2r) dr`; absent off the diagonal.
    pub radial: Option<f64>,
    /// `n! Γ(n+2L+1) / 4`; absent off the diagonal.
    pub closed_form: Option<f64>,
    /// Quadrature tail estimate above `1e-12` relative.
    pub warning: bool,
}

/// Identity-resolution matrix element for `n, n′ ≤ 20`.
///
/// The angular integral is `2π δ_{nn′}`, taken exactly. On the diagonal the
/// Bessel `I` factors cancel and what remains is
/// `4/(n! Γ(n+2L+1)) · ∫ r^{2n+2L+1} K_{2L}(2r) dr`.
pub fn resolution_of_identity_check(
    n: usize,
    n_prime: usize,
    params: &PotentialParams,
    rule: &QuadratureRule,
) -> Result<ResolutionElement> {
    if n > 20 || n_prime > 20 {
        return Err(Error::InvalidParams(format!(
            "n = {n}, n′ = {n_prime} must both be ≤ 20"
        )));
    }
    if n != n_prime {
        return Ok(ResolutionElement {
            n,
            n_prime,
            value: 0.0,
            radial: None,
            closed_form: None,
            warning: false,
        });
    }
    let l = params.l_index();
    let degree = 2.0 * n as f64 + 2.0 * l + 1.0;
    let integral = integrate_semi_infinite_k_weight(|r| r.powf(degree), 2.0 * l, default_r_max(degree), rule)?;
    let ln_norm = ln_gamma(n as f64 + 1.0)? + ln_gamma(n as f64 + 2.0 * l + 1.0)?;
    Ok(ResolutionElement {
        n,
        n_prime,
        value: 4.0 * integral.value * (-ln_norm).exp(),
        radial: Some(integral.value),
        closed_form: Some(0.25 * ln_norm.exp()),
        warning: integral.warning,
    })
}
