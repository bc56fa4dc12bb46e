use std::f64::consts::TAU;

use num_rational::Ratio;

use super::{check_s, l_series_from_table, riemann_zeta, HurwitzTable};
use crate::arith::{divisors, factorize, gcd};
use crate::characters::{build_group, enumerate_characters, gauss_sum, DirichletCharacter};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// `Φ(s, β)` at a rational `β ∈ (0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiValue {
    pub s: u32,
    pub beta: Ratio<u64>,
    pub value: ComplexScalar,
}

fn unit_root(num: u64, den: u64) -> ComplexScalar {
    ComplexScalar::from_polar(1.0, TAU * (num % den) as f64 / den as f64)
}

fn check_fraction(a: u64, m: u64) -> Result<()> {
    if m == 0 || a == 0 || a > m {
        return Err(Error::invalid(format!("need 1 ≤ a ≤ m, got a = {a}, m = {m}")));
    }
    Ok(())
}

/// `Φ(s, b/m)` for every `b = 1..=m`, from one table of `ζ(s, r/m)`:
/// `Φ(s, b/m) = m^{-s} Σ_{r=1}^{m} e^{2πibr/m} ζ(s, r/m)`.
#[derive(Debug, Clone)]
pub struct PeriodicZetaTable {
    s: u32,
    modulus: u64,
    values: Vec<ComplexScalar>,
}

impl PeriodicZetaTable {
    pub fn new(s: u32, modulus: u64, cfg: &EngineConfig) -> Result<Self> {
        let table = HurwitzTable::new(s, modulus, cfg)?;
        let zeta_s = riemann_zeta(s, cfg)?;
        let scale = (modulus as f64).powi(-(s as i32));
        let values = (1..=modulus)
            .map(|b| {
                if b == modulus {
                    // integral β: the exponential weights all equal one
                    return ComplexScalar::new(zeta_s, 0.0);
                }
                let sum: ComplexScalar = (1..=modulus)
                    .rev()
                    .map(|r| unit_root(b * r, modulus) * table.get(r).value)
                    .sum();
                sum * scale
            })
            .collect();
        Ok(PeriodicZetaTable { s, modulus, values })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `Φ(s, b/m)`; `b` is taken modulo `m`.
    pub fn get(&self, b: i64) -> ComplexScalar {
        let m = self.modulus as i64;
        let r = b.rem_euclid(m);
        let idx = if r == 0 { m - 1 } else { r - 1 };
        self.values[idx as usize]
    }
}

/// Reference evaluator for `Φ(s, a/m)` through Hurwitz zeta values.
pub fn periodic_zeta_hurwitz(s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<PhiValue> {
    check_s(s)?;
    check_fraction(a, m)?;
    let beta = Ratio::new(a, m);
    let (num, den) = (*beta.numer(), *beta.denom());
    let value = if den == 1 {
        ComplexScalar::new(riemann_zeta(s, cfg)?, 0.0)
    } else {
        let table = HurwitzTable::new(s, den, cfg)?;
        let sum: ComplexScalar =
            (1..=den).rev().map(|r| unit_root(num * r, den) * table.get(r).value).sum();
        sum * (den as f64).powi(-(s as i32))
    };
    Ok(PhiValue { s, beta, value })
}

/// Bound on the tail `Σ_{n > N} n^{-s}` of the defining series.
pub fn direct_tail_bound(s: u32, terms: u64) -> f64 {
    (terms as f64).powi(1 - s as i32) / (s as f64 - 1.0)
}

/// The defining series truncated after `terms` terms. Low precision; its
/// error is at most [`direct_tail_bound`].
pub fn periodic_zeta_direct(s: u32, a: u64, m: u64, terms: u64) -> Result<PhiValue> {
    check_s(s)?;
    check_fraction(a, m)?;
    if terms == 0 {
        return Err(Error::invalid("need at least one term"));
    }
    let beta = Ratio::new(a, m);
    let (num, den) = (*beta.numer(), *beta.denom());
    let value = (1..=terms)
        .rev()
        .map(|n| unit_root((num as u128 * n as u128 % den as u128) as u64, den) * (n as f64).powi(-(s as i32)))
        .sum();
    Ok(PhiValue { s, beta, value })
}

/// Precomputed expansion
/// `m^s Φ(s, a/m) = Σ_{d | m} d^s/φ(d) Σ_{χ mod d} χ(a) τ(χ̄) L(s, χ)`,
/// valid for `a` coprime to `m`.
#[derive(Debug, Clone)]
pub struct PropMpExpansion {
    s: u32,
    modulus: u64,
    /// `(d^s/φ(d), [(χ, τ(χ̄) L(s, χ))])` per divisor
    blocks: Vec<(f64, Vec<(DirichletCharacter, ComplexScalar)>)>,
}

impl PropMpExpansion {
    pub fn new(s: u32, modulus: u64, cfg: &EngineConfig) -> Result<Self> {
        check_s(s)?;
        let mut blocks = Vec::new();
        for d in divisors(modulus)? {
            let group = build_group(d)?;
            let table = HurwitzTable::new(s, d, cfg)?;
            let weight = (d as f64).powi(s as i32) / group.order() as f64;
            let mut terms = Vec::new();
            for chi in enumerate_characters(&group) {
                let coefficient = gauss_sum(&chi.conjugate()) * l_series_from_table(&chi, &table)?.value;
                terms.push((chi, coefficient));
            }
            blocks.push((weight, terms));
        }
        Ok(PropMpExpansion { s, modulus, blocks })
    }

    pub fn eval(&self, a: u64) -> Result<PhiValue> {
        let m = self.modulus;
        if gcd(a, m) != 1 {
            return Err(Error::invalid(format!("a = {a} is not coprime to m = {m}")));
        }
        let a_red = if m == 1 { 1 } else { a % m };
        let total: ComplexScalar = self
            .blocks
            .iter()
            .map(|(w, terms)| {
                let inner: ComplexScalar = terms.iter().map(|(chi, c)| chi.eval(a_red as i64) * c).sum();
                inner * *w
            })
            .sum();
        let value = total * (m as f64).powi(-(self.s as i32));
        Ok(PhiValue { s: self.s, beta: Ratio::new(a_red.max(1), m), value })
    }
}

/// `Φ(s, a/m)` via the divisor/character expansion; requires `gcd(a, m) = 1`.
pub fn periodic_zeta_prop_mp(s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<PhiValue> {
    if m == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    if gcd(a, m) != 1 {
        return Err(Error::invalid(format!("a = {a} is not coprime to m = {m}")));
    }
    PropMpExpansion::new(s, m, cfg)?.eval(a)
}

/// `Σ_{(n, m) = 1} e^{2πiβn} n^{-s}` for `β = a/q`, evaluated as
/// `Σ_{d | m} μ(d) d^{-s} Φ(s, βd)`.
pub fn coprime_periodic_sum(s: u32, a: u64, q: u64, m: u64, cfg: &EngineConfig) -> Result<ComplexScalar> {
    check_s(s)?;
    if q == 0 {
        return Err(Error::invalid("denominator must be positive"));
    }
    let mut total = ComplexScalar::new(0.0, 0.0);
    for d in divisors(m)? {
        let mu = factorize(d)?.mobius();
        if mu == 0 {
            continue;
        }
        let num = (a as u128 * d as u128 % q as u128) as u64;
        let phi = periodic_zeta_hurwitz(s, if num == 0 { q } else { num }, q, cfg)?.value;
        total += phi * (mu as f64 * (d as f64).powi(-(s as i32)));
    }
    Ok(total)
}

/// The gcd-filtered defining series, truncated after `terms` terms.
pub fn coprime_periodic_sum_direct(s: u32, a: u64, q: u64, m: u64, terms: u64) -> Result<ComplexScalar> {
    check_s(s)?;
    if q == 0 || m == 0 {
        return Err(Error::invalid("denominator and modulus must be positive"));
    }
    Ok((1..=terms)
        .rev()
        .filter(|&n| gcd(n, m) == 1)
        .map(|n| unit_root((a as u128 * n as u128 % q as u128) as u64, q) * (n as f64).powi(-(s as i32)))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn hurwitz_route_examples() {
        let z2 = riemann_zeta(2, &cfg()).unwrap();
        let z3 = riemann_zeta(3, &cfg()).unwrap();
        assert_eq!(periodic_zeta_hurwitz(2, 1, 1, &cfg()).unwrap().value, c(z2, 0.0));
        assert_eq!(periodic_zeta_hurwitz(3, 4, 4, &cfg()).unwrap().value, c(z3, 0.0));
        let half2 = periodic_zeta_hurwitz(2, 1, 2, &cfg()).unwrap();
        assert!((half2.value - c(-PI * PI / 12.0, 0.0)).norm() < 1e-14);
        assert_eq!(half2.beta, Ratio::new(1, 2));
        let half3 = periodic_zeta_hurwitz(3, 2, 4, &cfg()).unwrap();
        assert!((half3.value - c(-0.75 * z3, 0.0)).norm() < 1e-14);
        assert!(periodic_zeta_hurwitz(2, 0, 5, &cfg()).is_err());
        assert!(periodic_zeta_hurwitz(2, 6, 5, &cfg()).is_err());
    }

    #[test]
    fn direct_route_examples() {
        let z3 = riemann_zeta(3, &cfg()).unwrap();
        let d = periodic_zeta_direct(3, 1, 1, 10_000).unwrap();
        assert!((d.value.re - z3).abs() < 5e-9);
        assert!((d.value.re - z3).abs() <= direct_tail_bound(3, 10_000));

        let d = periodic_zeta_direct(2, 1, 2, 1_000_000).unwrap();
        assert!((d.value.re + PI * PI / 12.0).abs() < 2e-6);

        let d = periodic_zeta_direct(3, 1, 5, 100_000).unwrap();
        let h = periodic_zeta_hurwitz(3, 1, 5, &cfg()).unwrap();
        assert!((d.value - h.value).norm() < 1e-9);
        assert!(periodic_zeta_direct(3, 1, 5, 0).is_err());
    }

    #[test]
    fn prop_mp_examples() {
        let z2 = riemann_zeta(2, &cfg()).unwrap();
        let v = periodic_zeta_prop_mp(2, 1, 1, &cfg()).unwrap();
        assert!((v.value - c(z2, 0.0)).norm() < 1e-15);
        for (s, a, m) in [(2, 1, 5), (3, 7, 12)] {
            let v = periodic_zeta_prop_mp(s, a, m, &cfg()).unwrap();
            let h = periodic_zeta_hurwitz(s, a, m, &cfg()).unwrap();
            assert!((v.value - h.value).norm() < 1e-9, "s={s} a={a} m={m}");
        }
        assert!(periodic_zeta_prop_mp(2, 2, 4, &cfg()).is_err());
    }

    #[test]
    fn conjugation_symmetry() {
        for s in [2u32, 3] {
            for m in 2..=20u64 {
                let t = PeriodicZetaTable::new(s, m, &cfg()).unwrap();
                for a in 1..m {
                    let lhs = t.get((m - a) as i64);
                    assert!((lhs - t.get(a as i64).conj()).norm() < 1e-11);
                    let single = periodic_zeta_hurwitz(s, a, m, &cfg()).unwrap().value;
                    assert!((single - t.get(a as i64)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn coprime_sum_examples() {
        // m = 1 leaves Φ(s, β) itself
        let phi = periodic_zeta_hurwitz(3, 1, 5, &cfg()).unwrap().value;
        assert!((coprime_periodic_sum(3, 1, 5, 1, &cfg()).unwrap() - phi).norm() < 1e-15);

        let phi2 = periodic_zeta_hurwitz(3, 2, 5, &cfg()).unwrap().value;
        let via_mobius = coprime_periodic_sum(3, 1, 5, 2, &cfg()).unwrap();
        assert!((via_mobius - (phi - phi2 / 8.0)).norm() < 1e-15);
        let direct = coprime_periodic_sum_direct(3, 1, 5, 2, 100_000).unwrap();
        assert!((via_mobius - direct).norm() < 1e-9);

        let z2 = riemann_zeta(2, &cfg()).unwrap();
        let euler = z2 * (1.0 - 0.25) * (1.0 - 1.0 / 9.0);
        let v = coprime_periodic_sum(2, 1, 1, 6, &cfg()).unwrap();
        assert!((v - c(euler, 0.0)).norm() < 1e-14);
    }
}
