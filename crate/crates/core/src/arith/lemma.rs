//! Exact-rational verification of the squarefree divisor-sum identity
//!
//! `Σ_{d | m, k | d} μ²(d) f(d) = F(m) μ²(k) g(k)` with
//! `F(n) = Σ_{d | n} μ²(d) f(d)` and `g(n) = Σ_{d | n} μ(d) / F(d)`,
//! for multiplicative `f`.

use num_traits::Zero;

use super::{factorize, Rational};
use crate::error::{Error, Result};

/// Both sides of the identity, exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl LemmaSides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn check_divides(m: u64, k: u64) -> Result<()> {
    if m == 0 || k == 0 || m % k != 0 {
        return Err(Error::invalid(format!("{k} does not divide {m}")));
    }
    Ok(())
}

fn ratio(n: u64, d: u64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The `f(d) = 1/φ(d)` specialization, where the identity reads
/// `Σ_{d | m, k | d} μ²(d)/φ(d) = (m/φ(m)) · μ²(k)/k`.
pub fn lemma_lm_sides(m: u64, k: u64) -> Result<LemmaSides> {
    check_divides(m, k)?;
    let fm = factorize(m)?;
    let mut lhs = Rational::zero();
    for d in fm.divisors() {
        if d % k != 0 {
            continue;
        }
        let fd = factorize(d)?;
        if fd.is_squarefree() {
            lhs += ratio(1, fd.euler_phi());
        }
    }
    let fk = factorize(k)?;
    let rhs = if fk.is_squarefree() {
        ratio(m, fm.euler_phi()) * ratio(1, k)
    } else {
        Rational::zero()
    };
    Ok(LemmaSides { lhs, rhs })
}

pub fn lemma_lm_check(m: u64, k: u64) -> Result<bool> {
    Ok(lemma_lm_sides(m, k)?.holds())
}

/// General form for an arbitrary multiplicative `f`. Rejects `f` for which
/// some `F(d)`, `d | m`, vanishes, since `g` is then undefined.
pub fn lemma_lm_check_general<F>(m: u64, k: u64, f: F) -> Result<LemmaSides>
where
    F: Fn(u64) -> Rational,
{
    check_divides(m, k)?;
    let squarefree = |n: u64| -> Result<bool> { Ok(factorize(n)?.is_squarefree()) };
    let big_f = |n: u64| -> Result<Rational> {
        let mut acc = Rational::zero();
        for d in factorize(n)?.divisors() {
            if squarefree(d)? {
                acc += f(d);
            }
        }
        Ok(acc)
    };

    let mut lhs = Rational::zero();
    for d in factorize(m)?.divisors() {
        if d % k == 0 && squarefree(d)? {
            lhs += f(d);
        }
    }

    let f_m = big_f(m)?;
    if f_m.is_zero() {
        return Err(Error::invalid(format!("F({m}) vanishes")));
    }
    let rhs = if squarefree(k)? {
        let mut g = Rational::zero();
        for d in factorize(k)?.divisors() {
            let f_d = big_f(d)?;
            if f_d.is_zero() {
                return Err(Error::invalid(format!("F({d}) vanishes")));
            }
            let mu = factorize(d)?.mobius();
            g += Rational::from_integer(mu.into()) / f_d;
        }
        f_m * g
    } else {
        Rational::zero()
    };
    Ok(LemmaSides { lhs, rhs })
}
