//! Special-function kernel.
//!
//! Everything here works on real arguments only. Gamma and log-Gamma for
//! positive arguments, the terminating Gauss hypergeometric series,
//! Gegenbauer polynomials, the associated Legendre function `P_{n+L}^L`
//! through its Gegenbauer form, and the modified Bessel functions `I_ν`,
//! `K_ν` of real order `ν ≥ 0`.

mod bessel;
mod gamma;
mod gegenbauer;
mod hypergeometric;
mod legendre;

pub use bessel::{bessel_i, bessel_k, bessel_k_pair, ln_bessel_i, ln_bessel_k, sum_ratio_series, SeriesSum};
pub use gamma::{gamma_fn, ln_gamma, recip_gamma_1p};
pub use gegenbauer::{gegenbauer, gegenbauer_eval, gegenbauer_eval_all, GegenbauerPoly};
pub use hypergeometric::hyp2f1_terminating;
pub use legendre::{assoc_legendre_half_shift, legendre_phase};

/// Default absolute tail tolerance for infinite series.
pub const SERIES_TAIL_TOL: f64 = 1e-14;
