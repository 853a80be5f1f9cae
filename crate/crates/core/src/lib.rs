//! Generalized Hardy classes of Dirichlet series.
//!
//! A generalized Dirichlet series is `L(s) = Σ aₙ e^(−λₙ s)` with
//! `0 = λ₀ < λ₁ < λ₂ < …`. This crate represents such series, evaluates
//! them with explicit truncation error, computes the explicit constants of
//! the associated mean-value, logarithmic-integral and nonvanishing bounds,
//! and checks every inequality numerically by quadrature.
//!
//! Module map:
//!
//! - [`series`]: exponent sequences, series, norms, shifts, rescaling.
//! - [`special`]: Lambert W, Bernoulli numbers, Riemann/Hurwitz/Lerch zeta, named constants.
//! - [`bounds`]: every explicit bound, returned as a [`bounds::BoundReport`] or a log-space value.
//! - [`quadrature`]: adaptive Simpson integration of `|L|^p`, `log±|L|`, Poisson-weighted integrals, interval suprema.
//! - [`mollifier`]: the compactly supported bump, its Fourier transform and the mollified coefficients.
//! - [`harness`]: seeded verification experiments writing CSV and JSON summaries.
//! - [`par`]: data-parallel map with a sequential fallback.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod error;
pub mod harness;
pub mod mollifier;
pub mod par;
pub mod quadrature;
pub mod series;
pub mod special;

pub use error::{Error, Result};
pub use num_complex::Complex64;
