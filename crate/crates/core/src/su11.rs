//! Raising and lowering operators and their su(1,1) bookkeeping.
//!
//! With `y = sin τ` the operators read
//!
//! ```text
//! Γ⁺_n = [−(1−y²) d/dy + y(n+L+1/2)] · sqrt((2n+2L+3)/(2n+2L+1))
//! Γ⁻_n = [ (1−y²) d/dy + y(n+L+1/2)] · sqrt((2n+2L−1)/(2n+2L+1))
//! ```
//!
//! and carry the level `n` they act on explicitly. Since `(1−y²) d/dy` is
//! `cos τ · d/dτ`, both map `cos^λ τ · p(sin τ)` to `cos^λ τ · q(sin τ)` with
//! `q` polynomial, so they act exactly on [`StateFunction`] coefficients.

use std::f64::consts::FRAC_PI_2;

use crate::error::Result;
use crate::model::{build_basis_state, BasisState, PotentialParams};
use crate::quadrature::{integrate_finite, QuadratureRule};
use crate::specfun::gegenbauer_eval_all;

/// Eigenvalue factors at level `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LadderCoefficients {
    pub n: usize,
    pub l: f64,
    /// `sqrt((n+1)(n+2L+1))`
    pub raise_eig: f64,
    /// `sqrt(n(n+2L))`
    pub lower_eig: f64,
    /// `n + L + 1/2`
    pub gamma0: f64,
}

impl LadderCoefficients {
    pub fn new(n: usize, l: f64) -> Self {
        let nf = n as f64;
        LadderCoefficients {
            n,
            l,
            raise_eig: ((nf + 1.0) * (nf + 2.0 * l + 1.0)).sqrt(),
            lower_eig: (nf * (nf + 2.0 * l)).sqrt(),
            gamma0: nf + l + 0.5,
        }
    }
}

/// `f(τ) = cos^λ τ · Σ_k b_k C_k^λ(sin τ)`, with `b` in the Gegenbauer basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateFunction {
    lambda: f64,
    coeffs: Vec<f64>,
}

impl StateFunction {
    pub fn zero(lambda: f64) -> Self {
        StateFunction {
            lambda,
            coeffs: Vec::new(),
        }
    }

    pub fn from_state(state: &BasisState) -> Self {
        let mut coeffs = vec![0.0; state.n() + 1];
        coeffs[state.n()] = state.gegenbauer_scale();
        StateFunction {
            lambda: state.envelope_exponent(),
            coeffs,
        }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, tau: f64) -> f64 {
        if self.coeffs.is_empty() {
            return 0.0;
        }
        let c = gegenbauer_eval_all(self.coeffs.len() - 1, self.lambda, tau.sin());
        let poly: f64 = self.coeffs.iter().zip(&c).map(|(b, v)| b * v).sum();
        tau.cos().powf(self.lambda) * poly
    }

    pub fn scaled(&self, factor: f64) -> Self {
        StateFunction {
            lambda: self.lambda,
            coeffs: self.coeffs.iter().map(|b| b * factor).collect(),
        }
    }

    /// `self + factor·other`.
    pub fn add_scaled(&self, other: &StateFunction, factor: f64) -> Self {
        debug_assert_eq!(self.lambda, other.lambda);
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| self.coeffs.get(k).copied().unwrap_or(0.0) + factor * other.coeffs.get(k).copied().unwrap_or(0.0))
            .collect();
        StateFunction {
            lambda: self.lambda,
            coeffs,
        }
    }

    /// Pointwise `max |self − other|` over `grid`.
    pub fn max_abs_diff(&self, other: &StateFunction, grid: &[f64]) -> f64 {
        grid.iter()
            .map(|&t| (self.eval(t) - other.eval(t)).abs())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self, grid: &[f64]) -> f64 {
        grid.iter().map(|&t| self.eval(t).abs()).fold(0.0, f64::max)
    }

    /// Adds `weight · y·C_k` expanded as
    /// `[(k+1) C_{k+1} + (k+2λ−1) C_{k−1}] / (2(k+λ))`.
    fn add_y_times_basis(out: &mut [f64], k: usize, lambda: f64, weight: f64) {
        let kf = k as f64;
        let d = 2.0 * (kf + lambda);
        out[k + 1] += weight * (kf + 1.0) / d;
        if k >= 1 {
            out[k - 1] += weight * (kf + 2.0 * lambda - 1.0) / d;
        }
    }

    /// `[−(1−y²) d/dy + κ y]` on the polynomial factor, `κ` constant.
    ///
    /// Per basis element, with `(1−y²) C_k' = (k+2λ) y C_k − (k+1) C_{k+1}`:
    /// `cos^λ C_k ↦ cos^λ [(κ − λ − k) y C_k + (k+1) C_{k+1}]`.
    fn raising_core(&self, kappa: f64) -> Self {
        let lam = self.lambda;
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &b) in self.coeffs.iter().enumerate() {
            if b == 0.0 {
                continue;
            }
            let kf = k as f64;
            Self::add_y_times_basis(&mut out, k, lam, b * (kappa - lam - kf));
            out[k + 1] += b * (kf + 1.0);
        }
        StateFunction {
            lambda: lam,
            coeffs: out,
        }
    }

    /// `[(1−y²) d/dy + κ y]`:
    /// `cos^λ C_k ↦ cos^λ [(κ + λ + k) y C_k − (k+1) C_{k+1}]`.
    fn lowering_core(&self, kappa: f64) -> Self {
        let lam = self.lambda;
        let mut out = vec![0.0; self.coeffs.len() + 1];
        for (k, &b) in self.coeffs.iter().enumerate() {
            if b == 0.0 {
                continue;
            }
            let kf = k as f64;
            Self::add_y_times_basis(&mut out, k, lam, b * (kappa + lam + kf));
            out[k + 1] -= b * (kf + 1.0);
        }
        StateFunction {
            lambda: lam,
            coeffs: out,
        }
    }
}

/// `Γ⁺` with the level index `n`.
pub fn raise(f: &StateFunction, n: usize, l: f64) -> StateFunction {
    let nf = n as f64;
    let factor = ((2.0 * nf + 2.0 * l + 3.0) / (2.0 * nf + 2.0 * l + 1.0)).sqrt();
    f.raising_core(nf + l + 0.5).scaled(factor)
}

/// `Γ⁻` with the level index `n`.
///
/// At `n = 0` with `L < 1/2` the normalization factor is not real; the
/// unnormalized operator already annihilates `ψ_0`, so it is applied without
/// the factor there.
pub fn lower(f: &StateFunction, n: usize, l: f64) -> StateFunction {
    let nf = n as f64;
    let ratio = (2.0 * nf + 2.0 * l - 1.0) / (2.0 * nf + 2.0 * l + 1.0);
    let factor = if ratio > 0.0 { ratio.sqrt() } else { 1.0 };
    f.lowering_core(nf + l + 0.5).scaled(factor)
}

/// `Γ = n̂ + L + 1/2`, diagonal in the basis.
pub fn number_shifted(f: &StateFunction, l: f64) -> StateFunction {
    StateFunction {
        lambda: f.lambda,
        coeffs: f
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &b)| b * (k as f64 + l + 0.5))
            .collect(),
    }
}

/// `Γ⁺ ψ_n`, exact; equals `raise_eig · ψ_{n+1}`.
pub fn apply_raising(state: &BasisState) -> StateFunction {
    raise(&StateFunction::from_state(state), state.n(), state.l())
}

/// `Γ⁻ ψ_n`, exact; equals `lower_eig · ψ_{n−1}` and vanishes at `n = 0`.
pub fn apply_lowering(state: &BasisState) -> StateFunction {
    lower(&StateFunction::from_state(state), state.n(), state.l())
}

/// `points` uniformly spaced interior samples of `(−π/2, π/2)`.
pub fn interior_grid(points: usize) -> Vec<f64> {
    let h = std::f64::consts::PI / (points as f64 + 1.0);
    (1..=points).map(|i| -FRAC_PI_2 + h * i as f64).collect()
}

/// `max |Γ⁺ψ_n − raise_eig ψ_{n+1}|` and the same for `Γ⁻`, relative to
/// `max |ψ_n|` on `grid`.
pub fn ladder_residuals(n: usize, params: &PotentialParams, grid: &[f64]) -> Result<(f64, f64)> {
    let l = params.l_index();
    let psi = build_basis_state(n, params)?;
    let scale = StateFunction::from_state(&psi).max_abs(grid);
    let coeffs = LadderCoefficients::new(n, l);
    let up = StateFunction::from_state(&build_basis_state(n + 1, params)?).scaled(coeffs.raise_eig);
    let r_up = apply_raising(&psi).max_abs_diff(&up, grid) / scale;
    let down = if n == 0 {
        StateFunction::zero(psi.envelope_exponent())
    } else {
        StateFunction::from_state(&build_basis_state(n - 1, params)?).scaled(coeffs.lower_eig)
    };
    let r_down = apply_lowering(&psi).max_abs_diff(&down, grid) / scale;
    Ok((r_up, r_down))
}

/// `max |(Γ⁻Γ⁺ − Γ⁺Γ⁻)ψ_n − 2(n+L+1/2)ψ_n| / max |ψ_n|` on 100 interior
/// points, chaining each operator with the level of the state it acts on.
pub fn commutator_check(n: usize, params: &PotentialParams) -> Result<f64> {
    let l = params.l_index();
    let psi = StateFunction::from_state(&build_basis_state(n, params)?);
    let lower_raise = lower(&raise(&psi, n, l), n + 1, l);
    let raise_lower = if n == 0 {
        StateFunction::zero(psi.lambda())
    } else {
        raise(&lower(&psi, n, l), n - 1, l)
    };
    let gamma0 = LadderCoefficients::new(n, l).gamma0;
    let residual = lower_raise
        .add_scaled(&raise_lower, -1.0)
        .add_scaled(&psi, -2.0 * gamma0);
    let grid = interior_grid(100);
    Ok(residual.max_abs(&grid) / psi.max_abs(&grid))
}

/// `Γ₀² − ½(lower_eig(n+1)² + lower_eig(n)²)`, which works out to `L² − 1/4`.
pub fn casimir_eigenvalue(n: usize, params: &PotentialParams) -> f64 {
    let l = params.l_index();
    let here = LadderCoefficients::new(n, l);
    let next = LadderCoefficients::new(n + 1, l);
    here.gamma0 * here.gamma0 - 0.5 * (next.lower_eig * next.lower_eig + here.lower_eig * here.lower_eig)
}

/// `max |[Γ² − ½(Γ⁺Γ⁻ + Γ⁻Γ⁺)]ψ_n − C ψ_n| / max |ψ_n|` with the operators
/// applied to the function, `C` from [`casimir_eigenvalue`].
pub fn casimir_operator_residual(n: usize, params: &PotentialParams) -> Result<f64> {
    let l = params.l_index();
    let psi = StateFunction::from_state(&build_basis_state(n, params)?);
    let gg = number_shifted(&number_shifted(&psi, l), l);
    let lower_raise = lower(&raise(&psi, n, l), n + 1, l);
    let raise_lower = if n == 0 {
        StateFunction::zero(psi.lambda())
    } else {
        raise(&lower(&psi, n, l), n - 1, l)
    };
    let c = casimir_eigenvalue(n, params);
    let residual = gg
        .add_scaled(&lower_raise, -0.5)
        .add_scaled(&raise_lower, -0.5)
        .add_scaled(&psi, -c);
    let grid = interior_grid(100);
    Ok(residual.max_abs(&grid) / psi.max_abs(&grid))
}

/// `|⟨ψ_{n+1}|Γ⁺ψ_n⟩ − ⟨Γ⁻ψ_{n+1}|ψ_n⟩|` on the full interval.
pub fn adjointness_gap(n: usize, params: &PotentialParams, rule: &QuadratureRule) -> Result<f64> {
    let psi_n = build_basis_state(n, params)?;
    let psi_n1 = build_basis_state(n + 1, params)?;
    let up = apply_raising(&psi_n);
    let down = apply_lowering(&psi_n1);
    let lhs = integrate_finite(
        |t| psi_n1.eval(t).unwrap_or(0.0) * up.eval(t),
        -FRAC_PI_2,
        FRAC_PI_2,
        rule,
    )?;
    let rhs = integrate_finite(
        |t| down.eval(t) * psi_n.eval(t).unwrap_or(0.0),
        -FRAC_PI_2,
        FRAC_PI_2,
        rule,
    )?;
    Ok((lhs - rhs).abs())
}

/// `⟨ψ_{n+1}|Γ⁺ψ_n⟩`, which should equal `raise_eig(n)`.
pub fn raising_matrix_element(n: usize, params: &PotentialParams, rule: &QuadratureRule) -> Result<f64> {
    let target = build_basis_state(n + 1, params)?;
    let up = apply_raising(&build_basis_state(n, params)?);
    integrate_finite(
        |t| target.eval(t).unwrap_or(0.0) * up.eval(t),
        -FRAC_PI_2,
        FRAC_PI_2,
        rule,
    )
}
