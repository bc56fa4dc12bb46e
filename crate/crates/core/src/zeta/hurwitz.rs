use std::sync::OnceLock;

use num_traits::ToPrimitive;

use super::check_s;
use crate::arith::bernoulli_numbers;
use crate::config::EngineConfig;
use crate::error::{Error, Result};

const MAX_BERNOULLI: usize = 40;

/// `B_{2k} / (2k)!` for `k = 0..=MAX_BERNOULLI/2`.
fn scaled_bernoulli() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let b = bernoulli_numbers(MAX_BERNOULLI + 1);
        let mut factorial = 1.0f64;
        let mut out = Vec::with_capacity(MAX_BERNOULLI / 2 + 1);
        for (n, bn) in b.iter().enumerate() {
            if n > 0 {
                factorial *= n as f64;
            }
            if n % 2 == 0 {
                let v = bn.numer().to_f64().unwrap() / bn.denom().to_f64().unwrap();
                out.push(v / factorial);
            }
        }
        out
    })
}

/// A Hurwitz zeta value and a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HurwitzValue {
    pub value: f64,
    pub error_bound: f64,
}

/// Euler–Maclaurin with `N` direct terms:
///
/// `ζ(s, a) = Σ_{n<N} (n+a)^{-s} + x^{1-s}/(s-1) + x^{-s}/2
///           + Σ_{k=1}^{K} B_{2k}/(2k)! · s(s+1)···(s+2k-2) · x^{-s-2k+1}`,
/// `x = N + a`. The first omitted correction bounds the truncation error.
pub(crate) fn euler_maclaurin(s: u32, a: f64, cfg: &EngineConfig) -> HurwitzValue {
    let n_terms = cfg.hurwitz_terms.max(1);
    let corrections = cfg.bernoulli_corrections.clamp(1, MAX_BERNOULLI / 2 - 1);
    let neg_s = -(s as i32);

    let direct: f64 = (0..n_terms).rev().map(|n| (n as f64 + a).powi(neg_s)).sum();

    let x = n_terms as f64 + a;
    let x_s = x.powi(neg_s);
    let inv_x2 = 1.0 / (x * x);
    let bern = scaled_bernoulli();
    let sf = s as f64;

    let mut tail = x_s * x / (sf - 1.0) + 0.5 * x_s;
    // rising factorial s(s+1)...(s+2k-2) times x^{-s-2k+1}
    let mut rising = sf * x_s / x;
    let mut omitted = 0.0;
    for k in 1..=corrections + 1 {
        let term = bern[k] * rising;
        if k <= corrections {
            tail += term;
        } else {
            omitted = term.abs();
        }
        let j = 2 * k as u32;
        rising *= (sf + (j - 1) as f64) * (sf + j as f64) * inv_x2;
    }

    let value = direct + tail;
    HurwitzValue { value, error_bound: omitted + 4.0 * f64::EPSILON * value.abs() }
}

/// `ζ(s, a) = Σ_{n≥0} (n + a)^{-s}` for integer `s ≥ 2` and `0 < a ≤ 1`.
pub fn hurwitz_zeta(s: u32, a: f64, cfg: &EngineConfig) -> Result<HurwitzValue> {
    check_s(s)?;
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::invalid(format!("Hurwitz parameter a = {a} must lie in (0, 1]")));
    }
    Ok(euler_maclaurin(s, a, cfg))
}

pub fn riemann_zeta(s: u32, cfg: &EngineConfig) -> Result<f64> {
    Ok(hurwitz_zeta(s, 1.0, cfg)?.value)
}

/// `ζ(s, r/m)` for `r = 1..=m`.
#[derive(Debug, Clone)]
pub struct HurwitzTable {
    s: u32,
    modulus: u64,
    values: Vec<HurwitzValue>,
}

impl HurwitzTable {
    pub fn new(s: u32, modulus: u64, cfg: &EngineConfig) -> Result<Self> {
        check_s(s)?;
        if modulus == 0 {
            return Err(Error::invalid("modulus must be positive"));
        }
        let m = modulus as f64;
        let values = (1..=modulus).map(|r| euler_maclaurin(s, r as f64 / m, cfg)).collect();
        Ok(HurwitzTable { s, modulus, values })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `ζ(s, r/m)` for `1 ≤ r ≤ m`.
    pub fn get(&self, r: u64) -> HurwitzValue {
        self.values[(r - 1) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    fn zeta(s: u32, a: f64) -> f64 {
        hurwitz_zeta(s, a, &cfg()).unwrap().value
    }

    #[test]
    fn riemann_values() {
        assert!((zeta(2, 1.0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((riemann_zeta(4, &cfg()).unwrap() - PI.powi(4) / 90.0).abs() < 1e-14);
        assert!((riemann_zeta(3, &cfg()).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-14);
        assert!((riemann_zeta(3, &cfg()).unwrap() - 1.20205690).abs() < 5e-9);
    }

    #[test]
    fn table_values_for_fifths() {
        let expected = [
            (2, 1, 26.26737720),
            (2, 2, 7.27535659),
            (2, 3, 3.63620967),
            (2, 4, 2.29947413),
            (3, 1, 125.73901805),
            (3, 2, 16.1195643),
            (3, 3, 4.98141576),
            (3, 4, 2.21505785),
        ];
        for (s, r, v) in expected {
            // printed values are truncated, not rounded
            let got = zeta(s, r as f64 / 5.0);
            assert!((got - v).abs() < 1e-7, "ζ({s}, {r}/5) = {got}");
        }
    }

    #[test]
    fn error_bound_is_small() {
        for &a in &[1e-3, 0.2, 0.5, 1.0] {
            for s in 2..=6 {
                let v = hurwitz_zeta(s, a, &cfg()).unwrap();
                assert!(v.error_bound <= 1e-12 * v.value.max(1.0), "s={s} a={a}");
            }
        }
    }

    #[test]
    fn duplication_relation() {
        // ζ(s, a) + ζ(s, a + 1/2) = 2^s ζ(s, 2a)
        for s in [2u32, 3, 4] {
            for i in 1..=50 {
                let a = i as f64 / 100.0;
                let lhs = zeta(s, a) + zeta(s, a + 0.5);
                let rhs = 2f64.powi(s as i32) * zeta(s, 2.0 * a);
                assert!((lhs - rhs).abs() < 1e-11 * rhs.max(1.0), "s={s} a={a}");
            }
        }
    }

    #[test]
    fn row_sums() {
        for s in [2u32, 3] {
            let z = riemann_zeta(s, &cfg()).unwrap();
            for m in 1..=12u64 {
                let t = HurwitzTable::new(s, m, &cfg()).unwrap();
                let sum: f64 = (1..m).map(|r| t.get(r).value).sum();
                let expected = ((m as f64).powi(s as i32) - 1.0) * z;
                assert!((sum - expected).abs() < 1e-9, "s={s} m={m}");
            }
        }
    }

    #[test]
    fn agrees_with_brute_force_sum() {
        // direct partial sum plus integral tail, independent of Euler–Maclaurin
        for &a in &[0.1, 0.37, 0.9] {
            let n = 200_000;
            let direct: f64 = (0..n).rev().map(|k| (k as f64 + a).powi(-3)).sum();
            let x = n as f64 + a;
            let tail = 0.5 / (x * x) + 0.5 / (x * x * x);
            assert!((zeta(3, a) - (direct + tail)).abs() < 1e-13);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(hurwitz_zeta(1, 0.5, &cfg()).is_err());
        assert!(hurwitz_zeta(2, 0.0, &cfg()).is_err());
        assert!(hurwitz_zeta(2, 1.5, &cfg()).is_err());
        assert!(riemann_zeta(0, &cfg()).is_err());
    }
}
