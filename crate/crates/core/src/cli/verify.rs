use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coherent::{
    build_coherent_state, lowering_eigenstate_residual, resolution_of_identity_check, DEFAULT_TAIL_TOL,
};
use crate::error::Result;
use crate::model::{
    build_basis_state, default_ode_grid, gram_matrix, momentum_level, residual_ode, IntervalMode, PotentialParams,
};
use crate::quadrature::QuadratureRule;
use crate::specfun::{ln_bessel_i, ln_gamma};
use crate::su11::{casimir_eigenvalue, casimir_operator_residual, commutator_check, interior_grid, ladder_residuals};

use super::RunConfig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity being checked, written out.
    pub paper_eq: String,
    /// `null` in JSON when the residual is not finite.
    pub residual: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub config: RunConfig,
    pub checks: Vec<Check>,
    pub pass: bool,
}

struct Suite {
    override_tol: Option<f64>,
    checks: Vec<Check>,
}

impl Suite {
    fn add(&mut self, name: &str, identity: &str, residual: f64, default_tol: f64) {
        let tol = self.override_tol.unwrap_or(default_tol);
        self.checks.push(Check {
            name: name.into(),
            paper_eq: identity.into(),
            residual,
            tol,
            pass: residual <= tol,
        });
    }
}

/// Radii used for the coherent-state checks besides the configured `z`.
const COHERENT_RADII: [f64; 4] = [0.1, 1.0, 2.5, 5.0];

/// Runs the full invariant suite.
pub fn run_checks(
    cfg: &RunConfig,
    params: &PotentialParams,
    rule: &QuadratureRule,
    z: Complex64,
) -> Result<Vec<Check>> {
    let mut s = Suite {
        override_tol: cfg.tol,
        checks: Vec::new(),
    };
    let nmax = cfg.nmax;
    let l = params.l_index();

    let grid = default_ode_grid();
    let mut ode: f64 = 0.0;
    for n in 0..=nmax {
        ode = ode.max(residual_ode(
            &build_basis_state(n, params)?,
            momentum_level(n, params),
            params,
            &grid,
        )?);
    }
    s.add("ode_residual", "c1²ψ'' + (c/M)Pψ − (1/M)A(A−1)ψ/cos²τ = 0", ode, 1e-9);

    let gram = gram_matrix(nmax, params, rule, cfg.interval)?;
    let mut same: f64 = 0.0;
    let mut opposite: f64 = 0.0;
    for (i, row) in gram.iter().enumerate() {
        for (j, g) in row.iter().enumerate() {
            let dev = (g - if i == j { 1.0 } else { 0.0 }).abs();
            if (i + j) % 2 == 0 {
                same = same.max(dev);
            } else {
                opposite = opposite.max(dev);
            }
        }
    }
    match cfg.interval {
        IntervalMode::Full => s.add("orthonormality", "⟨ψ_m|ψ_n⟩ = δ_mn", same.max(opposite), 1e-10),
        IntervalMode::Half => {
            eprintln!("note: half-interval Gram matrix, opposite-parity pairs not checked (max |G_mn| = {opposite:e})");
            s.add("orthonormality", "⟨ψ_m|ψ_n⟩ = δ_mn, m ≡ n mod 2", same, 1e-10);
        }
    }

    let ladder_grid = interior_grid(100);
    let (mut up, mut down, mut ground) = (0.0f64, 0.0f64, 0.0f64);
    for n in 0..=nmax {
        let (u, d) = ladder_residuals(n, params, &ladder_grid)?;
        up = up.max(u);
        if n == 0 {
            ground = d;
        } else {
            down = down.max(d);
        }
    }
    s.add("raising", "Γ⁺ψ_n = sqrt((n+1)(n+2L+1)) ψ_{n+1}", up, 1e-9);
    if nmax > 0 {
        s.add("lowering", "Γ⁻ψ_n = sqrt(n(n+2L)) ψ_{n−1}", down, 1e-9);
    }
    s.add("lowering_ground", "Γ⁻ψ_0 = 0", ground, 1e-10);

    let mut comm: f64 = 0.0;
    let mut cas_op: f64 = 0.0;
    let c0 = casimir_eigenvalue(0, params);
    let mut spread: f64 = 0.0;
    for n in 0..=nmax {
        comm = comm.max(commutator_check(n, params)?);
        cas_op = cas_op.max(casimir_operator_residual(n, params)?);
        spread = spread.max((casimir_eigenvalue(n, params) - c0).abs());
    }
    s.add("commutator", "[Γ⁻, Γ⁺]ψ_n = 2Γ₀ψ_n", comm, 1e-9);
    s.add(
        "casimir_constant",
        "Γ₀² − ½(Γ⁺Γ⁻ + Γ⁻Γ⁺) independent of n",
        spread,
        1e-12,
    );
    s.add(
        "casimir_value",
        "Γ₀² − ½(Γ⁺Γ⁻ + Γ⁻Γ⁺) = L² − 1/4",
        (c0 - (l * l - 0.25)).abs(),
        1e-12,
    );
    s.add(
        "casimir_operator",
        "[Γ² − ½(Γ⁺Γ⁻ + Γ⁻Γ⁺)]ψ_n = (L² − 1/4)ψ_n",
        cas_op,
        1e-9,
    );

    let direction = if z.norm() > 0.0 {
        z / z.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let mut zs = vec![z];
    zs.extend(COHERENT_RADII.iter().map(|&r| direction * r));
    let (mut norm_dev, mut eig) = (0.0f64, 0.0f64);
    for zz in &zs {
        let cs = build_coherent_state(*zz, params, DEFAULT_TAIL_TOL)?;
        norm_dev = norm_dev.max((cs.norm_sqr() - 1.0).abs());
        eig = eig.max(lowering_eigenstate_residual(&cs));
    }
    s.add("coherent_normalization", "Σ_n |c_n|² = 1", norm_dev, 1e-12);
    s.add("coherent_eigenstate", "Γ⁻|z, L⟩ = z|z, L⟩", eig, 1e-10);

    let x = if z.norm() > 0.0 { z.norm() } else { 1.0 };
    s.add(
        "bessel_identity",
        "Σ_n x^{2n}/(n! Γ(n+m+1)) = x^{−m} I_m(2x)",
        bessel_identity_residual(x, 2.0 * l)?,
        1e-12,
    );

    let (mut diag, mut radial) = (0.0f64, 0.0f64);
    for n in 0..=nmax.min(20) {
        let e = resolution_of_identity_check(n, n, params, rule)?;
        if e.warning {
            eprintln!("warning: radial integral for n = {n} has a tail estimate above 1e-12 relative");
        }
        diag = diag.max((e.value - 1.0).abs());
        if let (Some(r), Some(c)) = (e.radial, e.closed_form) {
            radial = radial.max((r - c).abs() / c);
        }
    }
    s.add("resolution_diagonal", "∫dσ(z, L) |⟨n|z, L⟩|² = 1", diag, 1e-7);
    s.add(
        "resolution_radial",
        "∫_0^∞ r^{2n+2L+1} K_{2L}(2r) dr = n! Γ(n+2L+1)/4",
        radial,
        1e-9,
    );

    Ok(s.checks)
}

/// `|Σ_n x^{2n}/(n! Γ(n+m+1)) / (x^{−m} I_m(2x)) − 1|`, summed term by term in logs.
pub fn bessel_identity_residual(x: f64, m: f64) -> Result<f64> {
    let ln_rhs = -m * x.ln() + ln_bessel_i(m, 2.0 * x)?;
    let mut sum = 0.0;
    let mut n = 0usize;
    loop {
        let nf = n as f64;
        let t = (2.0 * nf * x.ln() - ln_gamma(nf + 1.0)? - ln_gamma(nf + m + 1.0)? - ln_rhs).exp();
        sum += t;
        // past the peak, terms shrink at least geometrically
        if nf > x && t < 1e-18 * sum {
            break;
        }
        n += 1;
    }
    Ok((sum - 1.0).abs())
}
