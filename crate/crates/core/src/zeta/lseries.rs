use super::{check_s, HurwitzTable};
use crate::characters::DirichletCharacter;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// `L(s, χ)` with a bound on its absolute error.
#[derive(Debug, Clone)]
pub struct LValue {
    pub s: u32,
    pub character: DirichletCharacter,
    pub value: ComplexScalar,
    pub abs_error_bound: f64,
}

/// `L(s, χ) = m^{-s} Σ_{r=1}^{m} χ(r) ζ(s, r/m)`.
pub fn l_series(s: u32, chi: &DirichletCharacter, cfg: &EngineConfig) -> Result<LValue> {
    check_s(s)?;
    let table = HurwitzTable::new(s, chi.modulus(), cfg)?;
    l_series_from_table(chi, &table)
}

/// Same as [`l_series`] with a precomputed table of `ζ(s, r/m)`.
pub fn l_series_from_table(chi: &DirichletCharacter, table: &HurwitzTable) -> Result<LValue> {
    let m = chi.modulus();
    if table.modulus() != m {
        return Err(Error::invalid(format!(
            "Hurwitz table for modulus {} used with a character modulo {m}",
            table.modulus()
        )));
    }
    let mut sum = ComplexScalar::new(0.0, 0.0);
    let mut err = 0.0;
    let mut magnitude = 0.0;
    // largest terms last
    for r in (1..=m).rev() {
        let c = chi.eval(r as i64);
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        let h = table.get(r);
        sum += c * h.value;
        err += h.error_bound;
        magnitude += h.value.abs();
    }
    let scale = (m as f64).powi(-(table.s() as i32));
    Ok(LValue {
        s: table.s(),
        character: chi.clone(),
        value: sum * scale,
        abs_error_bound: scale * (err + 4.0 * f64::EPSILON * magnitude),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::factorize;
    use crate::characters::{build_group, enumerate_characters, kronecker_character};
    use crate::zeta::riemann_zeta;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn fixtures_mod_five() {
        let chars = enumerate_characters(&build_group(5).unwrap());
        let l21 = l_series(2, &chars[1], &cfg()).unwrap();
        assert!((l21.value.re - 0.95871612).abs() < 1e-8);
        assert!((l21.value.im - 0.14556587).abs() < 1e-8);
        let l23 = l_series(2, &chars[3], &cfg()).unwrap();
        assert!((l23.value - l21.value.conj()).norm() < 1e-15);

        let l35 = l_series(3, &kronecker_character(5).unwrap(), &cfg()).unwrap();
        assert!((l35.value.re - 0.85482476).abs() < 1e-8);
        assert!(l35.value.im.abs() < 1e-15);

        let l30 = l_series(3, &chars[0], &cfg()).unwrap();
        let z3 = riemann_zeta(3, &cfg()).unwrap();
        assert!((l30.value.re - 124.0 / 125.0 * z3).abs() < 1e-14);
        assert!(l30.abs_error_bound <= 1e-10);
    }

    #[test]
    fn principal_characters_follow_euler_product() {
        for s in [2u32, 3] {
            let z = riemann_zeta(s, &cfg()).unwrap();
            for m in 1..=60u64 {
                let chi = build_group(m).unwrap().principal();
                let l = l_series(s, &chi, &cfg()).unwrap();
                let euler: f64 = factorize(m)
                    .unwrap()
                    .primes()
                    .map(|p| 1.0 - (p as f64).powi(-(s as i32)))
                    .product::<f64>()
                    * z;
                assert!((l.value.re - euler).abs() < 1e-13, "s={s} m={m}");
                assert!(l.abs_error_bound <= 1e-10);
            }
        }
    }

    #[test]
    fn matches_truncated_dirichlet_series() {
        for m in [3u64, 7, 12, 20] {
            for chi in enumerate_characters(&build_group(m).unwrap()) {
                let l = l_series(3, &chi, &cfg()).unwrap();
                let n = 20_000u64;
                let partial: ComplexScalar =
                    (1..=n).rev().map(|k| chi.eval(k as i64) / (k as f64).powi(3)).sum();
                let tail = 0.5 / (n as f64).powi(2);
                assert!((l.value - partial).norm() <= tail + 1e-13);
            }
        }
    }

    #[test]
    fn rejects_mismatched_table() {
        let chi = build_group(5).unwrap().principal();
        let table = HurwitzTable::new(2, 7, &cfg()).unwrap();
        assert!(l_series_from_table(&chi, &table).is_err());
        assert!(l_series(1, &chi, &cfg()).is_err());
    }
}
