//! Integer and exact-rational primitives.

mod bernoulli;
mod factor;
mod lemma;
mod quadratic;

pub use bernoulli::bernoulli_numbers;
pub use factor::{divisors, euler_phi, factorize, gcd, mobius, Factorization};
pub use lemma::{lemma_lm_check, lemma_lm_check_general, lemma_lm_sides, LemmaSides};
pub use quadratic::{
    fundamental_discriminants, fundamental_unit, fundamental_unit_brute_force,
    is_fundamental_discriminant, kronecker_symbol, FundamentalUnitData,
};

/// Exact rational with arbitrary-precision numerator and denominator, always
/// kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
