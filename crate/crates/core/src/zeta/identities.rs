//! Residuals of the identities tying `L(s, χ)` to `Φ(s, b/m)`.

use super::{l_series_from_table, HurwitzTable, PeriodicZetaTable};
use crate::arith::{divisors, factorize, gcd};
use crate::characters::{build_group, enumerate_characters, gauss_sum, ramanujan_sum, DirichletCharacter};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ComplexScalar;

fn require_coprime(a: u64, m: u64) -> Result<()> {
    if m == 0 || gcd(a, m) != 1 {
        return Err(Error::invalid(format!("a = {a} must be coprime to m = {m}")));
    }
    Ok(())
}

/// `|L(s, χ) − (1/m) Σ_a χ(a) Σ_b ζ_m^{-ab} Φ(s, b/m)|`.
pub fn lemma_l1_residual(s: u32, chi: &DirichletCharacter, cfg: &EngineConfig) -> Result<f64> {
    let m = chi.modulus();
    let l = l_series_from_table(chi, &HurwitzTable::new(s, m, cfg)?)?.value;
    let phi = PeriodicZetaTable::new(s, m, cfg)?;
    let roots = chi.group().additive_roots();
    let mut total = ComplexScalar::new(0.0, 0.0);
    for a in 1..=m {
        let ca = chi.eval(a as i64);
        if ca.norm_sqr() == 0.0 {
            continue;
        }
        let inner: ComplexScalar = (1..=m)
            .map(|b| roots[((m - a * b % m) % m) as usize] * phi.get(b as i64))
            .sum();
        total += ca * inner;
    }
    Ok((l - total / m as f64).norm())
}

/// Right side of the Ramanujan-sum form:
/// `(1/m) Σ_{b mod m} Φ(s, b/m) c_m(a − b)`.
fn ramanujan_side(a: u64, phi: &PeriodicZetaTable) -> Result<ComplexScalar> {
    let m = phi.modulus();
    let mut total = ComplexScalar::new(0.0, 0.0);
    for b in 1..=m {
        let c = ramanujan_sum(m, a as i64 - b as i64)?;
        total += phi.get(b as i64) * c as f64;
    }
    Ok(total / m as f64)
}

/// `|(1/φ(m)) Σ_χ χ(a) τ(χ̄) L(s, χ) − (1/m) Σ_b Φ(s, b/m) c_m(a − b)|`
/// for `gcd(a, m) = 1`.
pub fn lemma_l2_residual(s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<f64> {
    require_coprime(a, m)?;
    let group = build_group(m)?;
    let table = HurwitzTable::new(s, m, cfg)?;
    let mut lhs = ComplexScalar::new(0.0, 0.0);
    for chi in enumerate_characters(&group) {
        let l = l_series_from_table(&chi, &table)?.value;
        lhs += chi.eval(a as i64) * gauss_sum(&chi.conjugate()) * l;
    }
    lhs /= group.order() as f64;
    let rhs = ramanujan_side(a, &PeriodicZetaTable::new(s, m, cfg)?)?;
    Ok((lhs - rhs).norm())
}

/// `|m^{-s} Σ_{d | m} d^s μ(m/d) Φ(s, a/d) − (1/m) Σ_b Φ(s, b/m) c_m(a − b)|`,
/// the Möbius-inverted form of the divisor expansion.
pub fn mobius_inversion_residual(s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<f64> {
    require_coprime(a, m)?;
    let mut lhs = ComplexScalar::new(0.0, 0.0);
    for d in divisors(m)? {
        let mu = factorize(m / d)?.mobius();
        if mu == 0 {
            continue;
        }
        let phi = PeriodicZetaTable::new(s, d, cfg)?;
        lhs += phi.get(a as i64) * (mu as f64 * (d as f64).powi(s as i32));
    }
    lhs *= (m as f64).powi(-(s as i32));
    let rhs = ramanujan_side(a, &PeriodicZetaTable::new(s, m, cfg)?)?;
    Ok((lhs - rhs).norm())
}
