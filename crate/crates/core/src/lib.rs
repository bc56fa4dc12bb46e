//! Dirichlet L-values at s = 1 for even primitive characters, expressed through
//! L(2, ·), L(3, ·), ζ(3) and a rapidly convergent central-binomial series, and
//! the resulting class number formula for real quadratic fields.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: factorization, multiplicative functions, Kronecker symbol,
//!   fundamental discriminants and units, Bernoulli numbers.
//! * [`characters`]: the group of Dirichlet characters modulo `m`, Gauss and
//!   Ramanujan sums, truncated power sums `B_j`.
//! * [`zeta`]: Hurwitz/Riemann zeta, Dirichlet L-series, periodic zeta function
//!   and the identities linking them.
//! * [`binom_series`]: `s(k, x) = Σ x^{2n} / (C(2n, n) n^k)`.
//! * [`classnum`]: L(1, ψ) by two routes and class numbers.
//! * [`strategy`]: name-keyed registries of interchangeable evaluators and
//!   identity-check suites.

pub mod arith;
pub mod binom_series;
pub mod characters;
pub mod classnum;
pub mod config;
pub mod error;
pub mod strategy;
pub mod zeta;

pub use config::EngineConfig;
pub use error::{Error, Result};

/// Complex value in binary64 pair form.
pub type ComplexScalar = num_complex::Complex64;
