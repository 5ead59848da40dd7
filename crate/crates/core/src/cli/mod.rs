//! Command-line front end.
//!
//! Data goes to stdout (or `--out`), diagnostics to stderr. Exit codes: 0 on
//! success, 1 when `verify` finds a failing check, 2 on usage or parameter
//! errors.

mod output;
mod parse;
mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coherent::{
    build_coherent_state, expectation_diagonal, general_expectation, lowering_eigenstate_residual,
    resolution_of_identity_check, DEFAULT_TAIL_TOL,
};
use crate::error::{Error, Result};
use crate::model::{build_basis_state_in, momentum_level, APrimeRule, IntervalMode, PotentialParams};
use crate::quadrature::{gauss_legendre, DEFAULT_ORDER};
use crate::specfun::ln_bessel_i;
use crate::su11::LadderCoefficients;

pub use output::{fmt_f64, Cell, Table, SCHEMA_VERSION};
pub use parse::parse_complex;
pub use verify::{bessel_identity_residual, run_checks, Check, VerificationReport};

/// Largest state index accepted by `wavefunction` and `--nmax`.
pub const MAX_LEVEL: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "fhpt",
    version,
    about = "Quantized-momentum states of a trigonometric Pöschl–Teller well, su(1,1) ladders and coherent states"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Momentum levels P_n for n = 0..nmax
    Spectrum,
    /// Samples of ψ_n on a uniform grid
    Wavefunction,
    /// Run every identity check and emit a report
    Verify,
    /// Coherent-state coefficients for --z
    Coherent,
    /// Identity-resolution diagonal elements for n = 0..min(nmax, 20)
    Resolution,
    /// Expectation values in the coherent state --z
    Expect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntervalArg {
    Full,
    /// Half interval `(0, π/2)` with the Legendre-form constant
    #[value(name = "paper")]
    Half,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum APrimeArg {
    Ode,
    Factor16,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Potential strength A
    #[arg(long = "A", global = true, default_value_t = 2.0, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub c1: f64,
    /// Rest mass; 0.5 makes ħ²/(2 m0 c²) = 1
    #[arg(long, global = true, default_value_t = 0.5, allow_negative_numbers = true)]
    pub m0: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, global = true, default_value_t = 1.0, allow_negative_numbers = true)]
    pub hbar: f64,
    #[arg(long, global = true, default_value_t = 10)]
    pub nmax: usize,
    /// State index for `wavefunction`
    #[arg(long, global = true, default_value_t = 0)]
    pub n: usize,
    /// Complex label, "a+bi" or "r@theta"
    #[arg(long, global = true, default_value = "1", allow_hyphen_values = true, value_parser = parse_complex)]
    pub z: Complex64,
    #[arg(long, global = true, value_enum, default_value_t = IntervalArg::Full)]
    pub interval: IntervalArg,
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub quad_order: usize,
    /// Replaces every check tolerance; must lie in (0, 1e-3]
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Defaults to json for `verify`, csv otherwise
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = APrimeArg::Ode)]
    pub a_prime: APrimeArg,
    /// Grid size for `wavefunction`
    #[arg(long, global = true, default_value_t = 201)]
    pub points: usize,
}

/// Echo of the resolved configuration, embedded in JSON output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub subcommand: Command,
    #[serde(rename = "A")]
    pub a: f64,
    pub c1: f64,
    pub m0: f64,
    pub c: f64,
    pub hbar: f64,
    pub nmax: usize,
    pub n: usize,
    /// `[re, im]`
    pub z: [f64; 2],
    pub interval: IntervalMode,
    pub quad_order: usize,
    pub tol: Option<f64>,
    pub format: Format,
    pub out: Option<String>,
    pub a_prime: APrimeRule,
    pub points: usize,
    pub tool_version: String,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let a = &cli.common;
        let default_format = if cli.command == Command::Verify {
            Format::Json
        } else {
            Format::Csv
        };
        RunConfig {
            subcommand: cli.command,
            a: a.a,
            c1: a.c1,
            m0: a.m0,
            c: a.c,
            hbar: a.hbar,
            nmax: a.nmax,
            n: a.n,
            z: [a.z.re, a.z.im],
            interval: match a.interval {
                IntervalArg::Full => IntervalMode::Full,
                IntervalArg::Half => IntervalMode::Half,
            },
            quad_order: a.quad_order,
            tol: a.tol,
            format: a.format.unwrap_or(default_format),
            out: a.out.as_ref().map(|p| p.display().to_string()),
            a_prime: match a.a_prime {
                APrimeArg::Ode => APrimeRule::OdeConsistent,
                APrimeArg::Factor16 => APrimeRule::Factor16,
            },
            points: a.points,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn z(&self) -> Complex64 {
        Complex64::new(self.z[0], self.z[1])
    }

    pub fn params(&self) -> Result<PotentialParams> {
        PotentialParams::with_rule(self.a, self.c1, self.m0, self.c, self.hbar, self.a_prime)
    }

    fn validate(&self) -> Result<()> {
        if let Some(t) = self.tol {
            if !(t > 0.0 && t <= 1e-3) {
                return Err(Error::InvalidParams(format!("--tol {t} must lie in (0, 1e-3]")));
            }
        }
        if self.nmax > MAX_LEVEL {
            return Err(Error::InvalidParams(format!(
                "--nmax {} exceeds {MAX_LEVEL}",
                self.nmax
            )));
        }
        if self.n > MAX_LEVEL {
            return Err(Error::InvalidParams(format!("--n {} exceeds {MAX_LEVEL}", self.n)));
        }
        if self.points < 2 {
            return Err(Error::InvalidParams(format!(
                "--points {} must be at least 2",
                self.points
            )));
        }
        Ok(())
    }
}

/// What a subcommand produced.
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

/// Parses `args` (program name first), runs, writes output, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let cfg = RunConfig::from_cli(&cli);
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", outcome.text),
    }
    outcome.exit_code
}

/// Runs the configured subcommand.
pub fn execute(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let params = cfg.params()?;
    if cfg.subcommand == Command::Verify {
        return cmd_verify(cfg, &params);
    }
    let table = match cfg.subcommand {
        Command::Spectrum => cmd_spectrum(cfg, &params),
        Command::Wavefunction => cmd_wavefunction(cfg, &params)?,
        Command::Coherent => cmd_coherent(cfg, &params)?,
        Command::Resolution => cmd_resolution(cfg, &params)?,
        Command::Expect => cmd_expect(cfg, &params)?,
        Command::Verify => unreachable!(),
    };
    Ok(Outcome {
        text: render(&table, cfg),
        exit_code: 0,
    })
}

fn render(table: &Table, cfg: &RunConfig) -> String {
    match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(cfg),
    }
}

pub fn cmd_spectrum(cfg: &RunConfig, params: &PotentialParams) -> Table {
    let mut t = Table::new("spectrum", vec!["n", "P_n", "A_prime", "L"]);
    for n in 0..=cfg.nmax {
        t.push(vec![
            n.into(),
            momentum_level(n, params).into(),
            params.a_prime().into(),
            params.l_index().into(),
        ]);
    }
    t
}

pub fn cmd_wavefunction(cfg: &RunConfig, params: &PotentialParams) -> Result<Table> {
    let state = build_basis_state_in(cfg.n, params, cfg.interval)?;
    let (lo, hi) = cfg.interval.bounds();
    let last = (cfg.points - 1) as f64;
    let mut t = Table::new("wavefunction", vec!["tau", "psi"]);
    let mut samples = Vec::with_capacity(cfg.points);
    for i in 0..cfg.points {
        let tau = lo + (hi - lo) * (i as f64 / last);
        // ψ vanishes at ±π/2
        let psi = if tau.abs() >= std::f64::consts::FRAC_PI_2 {
            0.0
        } else {
            state.eval(tau)?
        };
        samples.push(psi);
        t.push(vec![tau.into(), psi.into()]);
    }
    let h = (hi - lo) / last;
    let sq: Vec<f64> = samples.iter().map(|p| p * p).collect();
    let trapezoid = h * (sq.iter().sum::<f64>() - 0.5 * (sq[0] + sq[sq.len() - 1]));
    t.summary.push(("n", cfg.n.into()));
    t.summary.push(("L", params.l_index().into()));
    t.summary.push(("P_n", momentum_level(cfg.n, params).into()));
    t.summary.push(("norm_trapezoid", trapezoid.into()));
    Ok(t)
}

pub fn cmd_coherent(cfg: &RunConfig, params: &PotentialParams) -> Result<Table> {
    let cs = build_coherent_state(cfg.z(), params, DEFAULT_TAIL_TOL)?;
    let l = cs.l();
    let mut t = Table::new("coherent", vec!["n", "weight", "phase"]);
    for (n, c) in cs.coeffs().iter().enumerate() {
        t.push(vec![n.into(), c.norm_sqr().into(), c.arg().into()]);
    }
    t.summary.push(("N", cs.truncation().into()));
    t.summary.push(("tail_bound", cs.tail_bound().into()));
    t.summary.push(("norm", cs.norm_sqr().into()));
    t.summary
        .push(("mean_n", expectation_diagonal(&cs, |n| n as f64).into()));
    t.summary
        .push(("mean_gamma0", expectation_diagonal(&cs, |n| n as f64 + l + 0.5).into()));
    t.summary
        .push(("eigen_residual", lowering_eigenstate_residual(&cs).into()));
    Ok(t)
}

pub fn cmd_resolution(cfg: &RunConfig, params: &PotentialParams) -> Result<Table> {
    let rule = gauss_legendre(cfg.quad_order)?;
    let top = cfg.nmax.min(20);
    if cfg.nmax > top {
        eprintln!("note: resolution rows stop at n = 20");
    }
    let mut t = Table::new(
        "resolution",
        vec!["n", "value", "radial", "closed_form", "rel_err", "warning"],
    );
    for n in 0..=top {
        let e = resolution_of_identity_check(n, n, params, &rule)?;
        let radial = e.radial.unwrap_or(f64::NAN);
        let closed = e.closed_form.unwrap_or(f64::NAN);
        t.push(vec![
            n.into(),
            e.value.into(),
            radial.into(),
            closed.into(),
            ((radial - closed) / closed).abs().into(),
            e.warning.into(),
        ]);
    }
    Ok(t)
}

/// `(⟨n⟩, ⟨n²⟩)` from Bessel ratios: `⟨n⟩ = x I_{m+1}/I_m`,
/// `⟨n²⟩ = ⟨n⟩ + x² I_{m+2}/I_m`, `x = |z|`, `m = 2L`.
pub fn number_moments(x: f64, l: f64) -> Result<(f64, f64)> {
    if x == 0.0 {
        return Ok((0.0, 0.0));
    }
    let m = 2.0 * l;
    let i0 = ln_bessel_i(m, 2.0 * x)?;
    let mean = x * (ln_bessel_i(m + 1.0, 2.0 * x)? - i0).exp();
    let second = mean + x * x * (ln_bessel_i(m + 2.0, 2.0 * x)? - i0).exp();
    Ok((mean, second))
}

pub fn cmd_expect(cfg: &RunConfig, params: &PotentialParams) -> Result<Table> {
    let z = cfg.z();
    let cs = build_coherent_state(z, params, DEFAULT_TAIL_TOL)?;
    let l = cs.l();
    let lam = params.lambda();
    let (mean, second) = number_moments(z.norm(), l)?;
    let raising = general_expectation(&cs, |np, n| {
        if np == n + 1 {
            Complex64::new(LadderCoefficients::new(n, l).raise_eig, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let lowering = general_expectation(&cs, |np, n| {
        if n == np + 1 {
            Complex64::new(LadderCoefficients::new(n, l).lower_eig, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    let mut t = Table::new("expect", vec!["observable", "value", "reference"]);
    let mut row = |name: &str, v: f64, r: f64| t.push(vec![name.into(), v.into(), r.into()]);
    row("identity", cs.norm_sqr(), 1.0);
    row("number", expectation_diagonal(&cs, |n| n as f64), mean);
    row(
        "gamma0",
        expectation_diagonal(&cs, |n| n as f64 + l + 0.5),
        mean + l + 0.5,
    );
    row(
        "momentum",
        expectation_diagonal(&cs, |n| momentum_level(n, params)),
        params.momentum_unit() * (second + 2.0 * lam * mean + lam * lam),
    );
    row("raising_re", raising.re, z.re);
    row("raising_im", raising.im, -z.im);
    row("lowering_re", lowering.re, z.re);
    row("lowering_im", lowering.im, z.im);
    t.summary.push(("N", cs.truncation().into()));
    t.summary.push(("tail_bound", cs.tail_bound().into()));
    Ok(t)
}

pub fn cmd_verify(cfg: &RunConfig, params: &PotentialParams) -> Result<Outcome> {
    let rule = gauss_legendre(cfg.quad_order)?;
    let checks = run_checks(cfg, params, &rule, cfg.z())?;
    let pass = checks.iter().all(|c| c.pass);
    for c in checks.iter().filter(|c| !c.pass) {
        eprintln!(
            "FAIL {}: residual {} > tol {}",
            c.name,
            fmt_f64(c.residual),
            fmt_f64(c.tol)
        );
    }
    let text = match cfg.format {
        Format::Json => {
            let report = VerificationReport {
                version: SCHEMA_VERSION.into(),
                config: cfg.clone(),
                checks,
                pass,
            };
            let mut s = serde_json::to_string_pretty(&report).map_err(|e| Error::InvalidParams(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut t = Table::new("verify", vec!["name", "paper_eq", "residual", "tol", "pass"]);
            for c in checks {
                t.push(vec![
                    c.name.as_str().into(),
                    c.paper_eq.as_str().into(),
                    c.residual.into(),
                    c.tol.into(),
                    c.pass.into(),
                ]);
            }
            t.summary.push(("pass", pass.into()));
            t.to_csv()
        }
    };
    Ok(Outcome {
        text,
        exit_code: if pass { 0 } else { 1 },
    })
}
