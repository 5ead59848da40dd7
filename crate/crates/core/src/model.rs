//! The trigonometric Pöschl–Teller model in the space-like setting.
//!
//! The reduced equation in `τ = c1·t` reads
//!
//! ```text
//! c1² ψ'' + (c/M) P ψ − (1/M) A(A−1)/cos²τ ψ = 0,     M = ħ²/(2 m0 c²)
//! ```
//!
//! on `τ ∈ (−π/2, π/2)`. Its regular solutions are
//! `ψ_n(τ) ∝ cos^λ τ · C_n^λ(sin τ)` with `λ = A′/2 = L + 1/2`, at the
//! quantized momenta `P_n = (c1² M / c)(n + A′/2)²`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{integrate_finite, QuadratureRule};
use crate::specfun::{gegenbauer, gegenbauer_eval, hyp2f1_terminating, legendre_phase, ln_gamma, GegenbauerPoly};

/// How `A′` is obtained from the coupling `A(A−1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum APrimeRule {
    /// `A′ = 1 + sqrt(1 + 4A(A−1)/(c1²M))`; the indicial exponent of the
    /// reduced equation, so `ψ_n` solve it exactly.
    #[default]
    OdeConsistent,
    /// `A′ = 1 + sqrt(1 + 16A(A−1)/(c1²M))`. Kept for comparison with values
    /// quoted in that convention; the resulting states do not solve the
    /// reduced equation unless `A(A−1) = 0`.
    Factor16,
}

impl APrimeRule {
    fn factor(self) -> f64 {
        match self {
            APrimeRule::OdeConsistent => 4.0,
            APrimeRule::Factor16 => 16.0,
        }
    }
}

/// Inner-product convention for the states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntervalMode {
    /// `τ ∈ (−π/2, π/2)`; the states are orthonormal.
    #[default]
    Full,
    /// `τ ∈ (0, π/2)` with the Legendre-form constant
    /// `N_n^L = sqrt((2n+2L+1) Γ(n+1) / Γ(n+2L+1))`. Each state has unit norm
    /// there; opposite-parity pairs are not orthogonal.
    #[serde(rename = "paper")]
    Half,
}

impl IntervalMode {
    pub fn bounds(self) -> (f64, f64) {
        match self {
            IntervalMode::Full => (-FRAC_PI_2, FRAC_PI_2),
            IntervalMode::Half => (0.0, FRAC_PI_2),
        }
    }
}

/// Physical inputs and the constants derived from them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    a: f64,
    c1: f64,
    m0: f64,
    c: f64,
    hbar: f64,
    mass_scale: f64,
    rule: APrimeRule,
    a_prime: f64,
}

impl PotentialParams {
    /// Validates and derives `M = ħ²/(2 m0 c²)` and `A′`.
    pub fn new(a: f64, c1: f64, m0: f64, c: f64, hbar: f64) -> Result<Self> {
        Self::with_rule(a, c1, m0, c, hbar, APrimeRule::default())
    }

    pub fn with_rule(a: f64, c1: f64, m0: f64, c: f64, hbar: f64, rule: APrimeRule) -> Result<Self> {
        if !a.is_finite() {
            return Err(Error::InvalidParams(format!("A = {a} is not finite")));
        }
        for (name, v) in [("c1", c1), ("m0", m0), ("c", c), ("hbar", hbar)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParams(format!(
                    "{name} = {v} must be positive and finite"
                )));
            }
        }
        let mass_scale = hbar * hbar / (2.0 * m0 * c * c);
        let mut p = PotentialParams {
            a,
            c1,
            m0,
            c,
            hbar,
            mass_scale,
            rule,
            a_prime: f64::NAN,
        };
        p.a_prime = derive_a_prime(&p)?;
        Ok(p)
    }

    /// Natural units with `c1²M/c = 1`: `ħ = c = c1 = 1`, `m0 = 1/2`.
    pub fn natural(a: f64) -> Result<Self> {
        Self::new(a, 1.0, 0.5, 1.0, 1.0)
    }

    pub fn natural_with_rule(a: f64, rule: APrimeRule) -> Result<Self> {
        Self::with_rule(a, 1.0, 0.5, 1.0, 1.0, rule)
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn c1(&self) -> f64 {
        self.c1
    }
    pub fn m0(&self) -> f64 {
        self.m0
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn rule(&self) -> APrimeRule {
        self.rule
    }

    /// `M(c) = ħ²/(2 m0 c²)`.
    pub fn mass_scale(&self) -> f64 {
        self.mass_scale
    }

    /// `A(A−1)`.
    pub fn coupling(&self) -> f64 {
        self.a * (self.a - 1.0)
    }

    pub fn a_prime(&self) -> f64 {
        self.a_prime
    }

    /// Representation index `L = (A′ − 1)/2 ≥ 0`.
    pub fn l_index(&self) -> f64 {
        0.5 * (self.a_prime - 1.0)
    }

    /// Gegenbauer index and envelope exponent, `A′/2`.
    pub fn lambda(&self) -> f64 {
        0.5 * self.a_prime
    }

    /// `c1² M / c`, the unit of the momentum spectrum.
    pub fn momentum_unit(&self) -> f64 {
        self.c1 * self.c1 * self.mass_scale / self.c
    }
}

/// `A′ = 1 + sqrt(1 + k·A(A−1)/(c1²M))` with `k` set by the rule.
pub fn derive_a_prime(params: &PotentialParams) -> Result<f64> {
    let scale = params.c1 * params.c1 * params.mass_scale;
    let k = params.rule.factor();
    let radicand = 1.0 + k * params.coupling() / scale;
    if radicand < 0.0 {
        return Err(Error::InvalidParams(format!(
            "A = {} gives 1 + {k}·A(A−1)/(c1²M) = {radicand} < 0; need A(A−1) ≥ {}",
            params.a,
            -scale / k
        )));
    }
    Ok(1.0 + radicand.sqrt())
}

/// `P_n = (c1² M / c)(n + A′/2)²`.
pub fn momentum_level(n: usize, params: &PotentialParams) -> f64 {
    let s = n as f64 + params.lambda();
    params.momentum_unit() * s * s
}

/// `V(t) = A(A−1)/cos²(c1 t)`.
pub fn potential_value(t: f64, params: &PotentialParams) -> Result<f64> {
    let cos = (params.c1 * t).cos();
    // cos(π/2) in f64 is ~6e-17, not 0
    if cos.abs() < 1e-15 {
        return Err(Error::Singular {
            func: "potential_value",
            at: t,
        });
    }
    Ok(params.coupling() / (cos * cos))
}

/// One normalized eigenfunction `ψ_n^L`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisState {
    n: usize,
    l: f64,
    poly: GegenbauerPoly,
    norm: f64,
    scale: f64,
    c1: f64,
    mode: IntervalMode,
}

impl BasisState {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Representation index `L`.
    pub fn l(&self) -> f64 {
        self.l
    }

    /// `C_n^{L+1/2}` in the monomial basis.
    pub fn poly(&self) -> &GegenbauerPoly {
        &self.poly
    }

    /// `N_n^L` of the Legendre form `ψ = N (1−y²)^{1/4} P_{n+L}^L(y)`.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// Signed multiplier of `cos^λ τ · C_n^λ(sin τ)`.
    pub fn gegenbauer_scale(&self) -> f64 {
        self.scale
    }

    /// Power of `cos τ`, `A′/2`.
    pub fn envelope_exponent(&self) -> f64 {
        self.l + 0.5
    }

    pub fn mode(&self) -> IntervalMode {
        self.mode
    }

    /// `ψ(τ)`; `τ` must lie in the open interval `(−π/2, π/2)`.
    pub fn eval(&self, tau: f64) -> Result<f64> {
        if !(tau.abs() < FRAC_PI_2) {
            return Err(Error::domain("eval_state", format!("τ = {tau} outside (−π/2, π/2)")));
        }
        Ok(self.eval_unchecked(tau))
    }

    pub(crate) fn eval_unchecked(&self, tau: f64) -> f64 {
        let lam = self.envelope_exponent();
        self.scale * tau.cos().powf(lam) * gegenbauer_eval(self.n, lam, tau.sin())
    }

    /// `(ψ, ψ', ψ'')` in `τ`, exact from the polynomial data.
    pub fn eval_with_derivatives(&self, tau: f64) -> Result<(f64, f64, f64)> {
        if !(tau.abs() < FRAC_PI_2) {
            return Err(Error::domain("eval_state", format!("τ = {tau} outside (−π/2, π/2)")));
        }
        let lam = self.envelope_exponent();
        let n = self.n;
        let (s, c) = tau.sin_cos();
        let w = gegenbauer_eval(n, lam, s);
        // dC_n^λ/dy = 2λ C_{n−1}^{λ+1}
        let dw_dy = if n >= 1 {
            2.0 * lam * gegenbauer_eval(n - 1, lam + 1.0, s)
        } else {
            0.0
        };
        let d2w_dy2 = if n >= 2 {
            4.0 * lam * (lam + 1.0) * gegenbauer_eval(n - 2, lam + 2.0, s)
        } else {
            0.0
        };
        let u = c.powf(lam);
        let u1 = -lam * c.powf(lam - 1.0) * s;
        let u2 = lam * (lam - 1.0) * c.powf(lam - 2.0) * s * s - lam * u;
        let w1 = dw_dy * c;
        let w2 = d2w_dy2 * c * c - dw_dy * s;
        let k = self.scale;
        Ok((k * u * w, k * (u1 * w + u * w1), k * (u2 * w + 2.0 * u1 * w1 + u * w2)))
    }

    /// The state as a function of physical time, `sqrt(c1)·ψ(c1 t)`, so that
    /// `∫|ψ(t)|² dt` carries the same normalization as the `τ` integral.
    pub fn eval_time(&self, t: f64) -> Result<f64> {
        Ok(self.c1.sqrt() * self.eval(self.c1 * t)?)
    }

    /// Sign changes of `ψ` on a uniform open grid of `points` samples.
    pub fn sign_changes(&self, points: usize) -> usize {
        let h = PI / (points as f64 + 1.0);
        let vals: Vec<f64> = (1..=points)
            .map(|i| self.eval_unchecked(-FRAC_PI_2 + h * i as f64))
            .collect();
        vals.windows(2).filter(|w| w[0] * w[1] < 0.0).count()
    }
}

/// `ψ_n^L` normalized on the full interval.
pub fn build_basis_state(n: usize, params: &PotentialParams) -> Result<BasisState> {
    build_basis_state_in(n, params, IntervalMode::Full)
}

/// `ψ_n^L` under the given inner-product convention.
pub fn build_basis_state_in(n: usize, params: &PotentialParams, mode: IntervalMode) -> Result<BasisState> {
    let l = params.l_index();
    let lam = params.lambda();
    let poly = gegenbauer(n, lam)?;
    let nf = n as f64;
    // N_n^L, then P_{n+L}^L = κ (1−y²)^{L/2} C_n^λ with
    // κ = (−1)^⌊L⌋ Γ(2L+1) / (2^L Γ(L+1))
    let ln_norm_half = 0.5 * ((2.0 * nf + 2.0 * l + 1.0).ln() + ln_gamma(nf + 1.0)? - ln_gamma(nf + 2.0 * l + 1.0)?);
    let ln_kappa = ln_gamma(2.0 * l + 1.0)? - l * std::f64::consts::LN_2 - ln_gamma(l + 1.0)?;
    let (norm, scale) = match mode {
        IntervalMode::Half => {
            let norm = ln_norm_half.exp();
            (norm, legendre_phase(l) * (ln_norm_half + ln_kappa).exp())
        }
        IntervalMode::Full => {
            let ln_norm = ln_norm_half - 0.5 * std::f64::consts::LN_2;
            (ln_norm.exp(), (ln_norm + ln_kappa).exp())
        }
    };
    Ok(BasisState {
        n,
        l,
        poly,
        norm,
        scale,
        c1: params.c1,
        mode,
    })
}

/// `ψ(τ)` with a domain check.
pub fn eval_state(state: &BasisState, tau: f64) -> Result<f64> {
    state.eval(tau)
}

/// Unnormalized hypergeometric form
/// `2^{−A′/2} cos^{A′/2}τ · ₂F₁(−n, n+A′; 1/2+A′/2; (1−sin τ)/2)`.
pub fn hypergeometric_form(n: usize, params: &PotentialParams, tau: f64) -> Result<f64> {
    if !(tau.abs() < FRAC_PI_2) {
        return Err(Error::domain(
            "hypergeometric_form",
            format!("τ = {tau} outside (−π/2, π/2)"),
        ));
    }
    let ap = params.a_prime();
    let x = 0.5 * (1.0 - tau.sin());
    // c = (a+b+1)/2, so F(x) = (−1)ⁿ F(1−x); the sum alternates less for x ≤ 1/2
    let f = if x <= 0.5 {
        hyp2f1_terminating(n, n as f64 + ap, 0.5 + 0.5 * ap, x)?
    } else {
        let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
        sign * hyp2f1_terminating(n, n as f64 + ap, 0.5 + 0.5 * ap, 0.5 * (1.0 + tau.sin()))?
    };
    Ok(2f64.powf(-0.5 * ap) * tau.cos().powf(0.5 * ap) * f)
}

/// `⟨ψ_m|ψ_n⟩` over the interval of `mode`, integrated in `τ`.
pub fn overlap(m: usize, n: usize, params: &PotentialParams, rule: &QuadratureRule, mode: IntervalMode) -> Result<f64> {
    let a = build_basis_state_in(m, params, mode)?;
    let b = build_basis_state_in(n, params, mode)?;
    overlap_states(&a, &b, rule)
}

pub(crate) fn overlap_states(a: &BasisState, b: &BasisState, rule: &QuadratureRule) -> Result<f64> {
    let (lo, hi) = a.mode().bounds();
    integrate_finite(|t| a.eval_unchecked(t) * b.eval_unchecked(t), lo, hi, rule)
}

/// Gram matrix `⟨ψ_i|ψ_j⟩`, `0 ≤ i, j ≤ nmax`.
#[allow(clippy::needless_range_loop)]
pub fn gram_matrix(
    nmax: usize,
    params: &PotentialParams,
    rule: &QuadratureRule,
    mode: IntervalMode,
) -> Result<Vec<Vec<f64>>> {
    let states: Vec<BasisState> = (0..=nmax)
        .map(|n| build_basis_state_in(n, params, mode))
        .collect::<Result<_>>()?;
    let (lo, hi) = mode.bounds();
    // sample every state once per node
    let samples: Vec<(f64, Vec<f64>)> = rule
        .mapped(lo, hi)
        .map(|(t, w)| (w, states.iter().map(|s| s.eval_unchecked(t)).collect()))
        .collect();
    let mut g = vec![vec![0.0; nmax + 1]; nmax + 1];
    for (w, v) in &samples {
        for i in 0..=nmax {
            for j in i..=nmax {
                g[i][j] += w * v[i] * v[j];
            }
        }
    }
    for i in 0..=nmax {
        for j in 0..i {
            g[i][j] = g[j][i];
        }
    }
    Ok(g)
}

/// `max_τ |c1²ψ'' + (c/M)Pψ − (1/M)A(A−1)ψ/cos²τ| / max_τ |ψ|` over `grid`.
pub fn residual_ode(state: &BasisState, momentum: f64, params: &PotentialParams, grid: &[f64]) -> Result<f64> {
    let m = params.mass_scale();
    let mut worst: f64 = 0.0;
    let mut peak: f64 = 0.0;
    for &tau in grid {
        let (psi, _, d2) = state.eval_with_derivatives(tau)?;
        let cos = tau.cos();
        let r = params.c1() * params.c1() * d2 + params.c() / m * momentum * psi
            - params.coupling() / m * psi / (cos * cos);
        worst = worst.max(r.abs());
        peak = peak.max(psi.abs());
    }
    Ok(worst / peak)
}

/// 401 uniform points on `[−π/2 + 0.01, π/2 − 0.01]`.
pub fn default_ode_grid() -> Vec<f64> {
    let edge = FRAC_PI_2 - 0.01;
    (0..=400).map(|i| -edge + 2.0 * edge * i as f64 / 400.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{gauss_legendre, DEFAULT_ORDER};
    use approx::assert_relative_eq;

    #[test]
    fn a_prime_examples() {
        // A = 0 or 1: radicand 1
        for a in [0.0, 1.0] {
            assert_eq!(PotentialParams::natural(a).unwrap().a_prime(), 2.0);
            assert_eq!(
                PotentialParams::natural_with_rule(a, APrimeRule::Factor16)
                    .unwrap()
                    .a_prime(),
                2.0
            );
        }
        let p = PotentialParams::natural_with_rule(2.0, APrimeRule::Factor16).unwrap();
        assert_relative_eq!(p.a_prime(), 1.0 + 33f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(p.a_prime(), 6.744_562_646_5, max_relative = 1e-10);
        // consistent rule: 1 + |2A − 1| at c1²M = 1
        assert_eq!(PotentialParams::natural(2.0).unwrap().a_prime(), 4.0);
    }

    #[test]
    fn a_prime_boundary_and_error() {
        // radicand exactly zero: A(A−1) = −c1²M/16 with A = 1/2, M = 4 (m0 = 1/8)
        let p = PotentialParams::with_rule(0.5, 1.0, 0.125, 1.0, 1.0, APrimeRule::Factor16).unwrap();
        assert_eq!(p.mass_scale(), 4.0);
        assert_eq!(p.a_prime(), 1.0);
        assert_eq!(p.l_index(), 0.0);
        let err = PotentialParams::natural_with_rule(0.5, APrimeRule::Factor16).unwrap_err();
        assert!(matches!(err, Error::InvalidParams(ref s) if s.contains("A(A−1) ≥")));
        // consistent rule at M = 1/2: 1 + 8A(A−1) < 0 at A = 1/2
        assert!(PotentialParams::new(0.5, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn mass_scale_is_exact() {
        let p = PotentialParams::new(1.5, 2.0, 3.0, 5.0, 7.0).unwrap();
        assert_eq!(p.mass_scale(), 49.0 / (2.0 * 3.0 * 25.0));
        assert_eq!(PotentialParams::natural(1.0).unwrap().mass_scale(), 1.0);
    }

    #[test]
    fn bad_params() {
        assert!(PotentialParams::new(f64::NAN, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(1.0, 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, -1.0, 1.0, 1.0).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn spectrum_examples() {
        let p = PotentialParams::natural(1.0).unwrap();
        assert_eq!(momentum_level(0, &p), 1.0);
        assert_eq!(momentum_level(3, &p), 16.0);
        let q = PotentialParams::natural_with_rule(2.0, APrimeRule::Factor16).unwrap();
        let half = 0.5 * (1.0 + 33f64.sqrt());
        assert_relative_eq!(momentum_level(0, &q), half * half, max_relative = 1e-15);
        assert_relative_eq!(momentum_level(1, &q), 19.116_843_969_807_043, max_relative = 1e-14);
    }

    #[test]
    fn potential_examples() {
        let p2 = PotentialParams::natural(2.0).unwrap();
        assert_eq!(potential_value(0.0, &p2).unwrap(), 2.0);
        assert_eq!(
            potential_value(0.0, &PotentialParams::natural(1.0).unwrap()).unwrap(),
            0.0
        );
        assert_relative_eq!(potential_value(PI / 3.0, &p2).unwrap(), 8.0, max_relative = 1e-14);
        assert!(matches!(potential_value(FRAC_PI_2, &p2), Err(Error::Singular { .. })));
    }

    #[test]
    fn ground_state_and_odd_state() {
        let p = PotentialParams::natural(2.0).unwrap();
        let s0 = build_basis_state(0, &p).unwrap();
        assert_eq!(s0.sign_changes(2000), 0);
        let s1 = build_basis_state(1, &p).unwrap();
        assert_eq!(s1.eval(0.0).unwrap(), 0.0);
        assert!(s0.eval(FRAC_PI_2 - 1e-9).unwrap().abs() < 1e-16);
        assert!(s0.eval(FRAC_PI_2).is_err());
        assert!(eval_state(&s0, -2.0).is_err());
    }

    #[test]
    fn full_norm_matches_gegenbauer_closed_form() {
        // ∫ cos^{2λ} [C_n^λ(sin τ)]² dτ = π 2^{1−2λ} Γ(n+2λ) / (n! (n+λ) Γ(λ)²)
        for a in [1.0, 1.5, 2.0, 3.7] {
            let p = PotentialParams::natural(a).unwrap();
            let lam = p.lambda();
            for n in [0usize, 1, 5, 12] {
                let nf = n as f64;
                let ln_h = PI.ln() + (1.0 - 2.0 * lam) * std::f64::consts::LN_2 + ln_gamma(nf + 2.0 * lam).unwrap()
                    - ln_gamma(nf + 1.0).unwrap()
                    - (nf + lam).ln()
                    - 2.0 * ln_gamma(lam).unwrap();
                let s = build_basis_state(n, &p).unwrap();
                assert_relative_eq!(s.gegenbauer_scale().powi(2) * ln_h.exp(), 1.0, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn half_interval_constant() {
        let p = PotentialParams::natural(2.0).unwrap();
        let l = p.l_index();
        for n in 0..6usize {
            let s = build_basis_state_in(n, &p, IntervalMode::Half).unwrap();
            let nf = n as f64;
            let expected = ((2.0 * nf + 2.0 * l + 1.0) * crate::specfun::gamma_fn(nf + 1.0).unwrap()
                / crate::specfun::gamma_fn(nf + 2.0 * l + 1.0).unwrap())
            .sqrt();
            assert_relative_eq!(s.norm(), expected, max_relative = 1e-13);
            let full = build_basis_state(n, &p).unwrap();
            assert_relative_eq!(
                s.gegenbauer_scale().abs(),
                full.gegenbauer_scale() * 2f64.sqrt(),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn overlap_examples() {
        let rule = gauss_legendre(DEFAULT_ORDER).unwrap();
        let p = PotentialParams::natural(2.0).unwrap();
        for n in [0, 3, 7] {
            assert!((overlap(n, n, &p, &rule, IntervalMode::Full).unwrap() - 1.0).abs() < 1e-10);
            assert!((overlap(n, n, &p, &rule, IntervalMode::Half).unwrap() - 1.0).abs() < 1e-10);
        }
        assert!(overlap(0, 2, &p, &rule, IntervalMode::Full).unwrap().abs() < 1e-10);
        assert!(overlap(0, 1, &p, &rule, IntervalMode::Full).unwrap().abs() < 1e-10);
        // same parity stays orthogonal on the half interval, opposite parity does not
        assert!(overlap(0, 2, &p, &rule, IntervalMode::Half).unwrap().abs() < 1e-10);
        assert!(overlap(0, 1, &p, &rule, IntervalMode::Half).unwrap().abs() > 1e-2);
    }

    #[test]
    fn ode_examples() {
        let grid = default_ode_grid();
        let p1 = PotentialParams::natural(1.0).unwrap();
        let s = build_basis_state(0, &p1).unwrap();
        assert!(residual_ode(&s, momentum_level(0, &p1), &p1, &grid).unwrap() < 1e-10);
        let p2 = PotentialParams::natural(2.0).unwrap();
        let s = build_basis_state(3, &p2).unwrap();
        let pn = momentum_level(3, &p2);
        assert!(residual_ode(&s, pn, &p2, &grid).unwrap() < 1e-9);
        assert!(residual_ode(&s, pn + 1.0, &p2, &grid).unwrap() > 0.1);
    }

    #[test]
    fn factor16_states_miss_the_equation() {
        let grid = default_ode_grid();
        let p = PotentialParams::natural_with_rule(2.0, APrimeRule::Factor16).unwrap();
        let s = build_basis_state(2, &p).unwrap();
        assert!(residual_ode(&s, momentum_level(2, &p), &p, &grid).unwrap() > 1e-2);
    }

    #[test]
    fn dimensionful_parameters() {
        // the equation scales consistently with c1 ≠ 1 and M ≠ 1
        let p = PotentialParams::new(2.3, 1.7, 0.3, 2.0, 1.1).unwrap();
        let grid = default_ode_grid();
        for n in [0, 4] {
            let s = build_basis_state(n, &p).unwrap();
            let r = residual_ode(&s, momentum_level(n, &p), &p, &grid).unwrap();
            assert!(r < 1e-9 * p.c1() * p.c1(), "n={n}: {r}");
        }
        // time normalization picks up sqrt(c1)
        let s = build_basis_state(2, &p).unwrap();
        let rule = gauss_legendre(DEFAULT_ORDER).unwrap();
        let t_max = FRAC_PI_2 / p.c1();
        let norm_t = integrate_finite(|t| s.eval_time(t).unwrap().powi(2), -t_max, t_max, &rule).unwrap();
        assert_relative_eq!(norm_t, 1.0, max_relative = 1e-10);
    }
}
