//! Quantized-momentum states of the time-dependent trigonometric
//! Pöschl–Teller potential in the space-like (Feinberg–Horodecki) setting,
//! their su(1,1) ladder algebra, and Barut–Girardello coherent states.
//!
//! Modules, bottom-up:
//!
//! * [`specfun`]: Gamma, terminating ₂F₁, Gegenbauer, `P_{n+L}^L`, `I_ν`, `K_ν`.
//! * [`quadrature`]: Gauss–Legendre rules and a `K_ν`-weighted half-line rule.
//! * [`model`]: potential parameters, momentum spectrum, normalized states.
//! * [`su11`]: raising/lowering operators acting exactly on state data.
//! * [`coherent`]: coherent-state coefficients, identity resolution, expectations.
//! * [`cli`]: command-line front end and the verification report.

// NaN-rejecting guards are written as `!(x > 0.0)`
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coherent;
pub mod error;
pub mod model;
pub mod quadrature;
pub mod specfun;
pub mod su11;

pub use error::{Error, Result};
