use std::f64::consts::PI;

use super::{Registry, Strategy};
use crate::arith::{divisors, gcd, lemma_lm_check};
use crate::binom_series::{s_series, zucker_residual};
use crate::characters::{build_group, enumerate_characters};
use crate::classnum::{l1_direct, l1_via_theorem_with_data, log_sine_via_lseries_with_data, DivisorCharacterData};
use crate::config::EngineConfig;
use crate::error::Result;
use crate::zeta::{
    coprime_periodic_sum, coprime_periodic_sum_direct, direct_tail_bound, lemma_l1_residual, lemma_l2_residual,
    mobius_inversion_residual, PeriodicZetaTable, PropMpExpansion,
};

const LB_TERMS: u64 = 20_000;
const LB_MAX_DENOMINATOR: u64 = 6;

/// Result of running one suite over all moduli up to a bound.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub max_modulus: u64,
    pub cases: usize,
    pub max_residual: f64,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    fn new(suite: &'static str, max_modulus: u64) -> Self {
        SuiteOutcome { suite, max_modulus, cases: 0, max_residual: 0.0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, residual: f64, tol: f64, case: impl FnOnce() -> String) {
        self.cases += 1;
        if residual > self.max_residual || residual.is_nan() {
            self.max_residual = residual;
        }
        if !(residual <= tol) {
            self.failures.push(format!("{}: residual {residual:.3e} > {tol:.3e}", case()));
        }
    }
}

pub trait CheckSuite: Strategy {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome>;
}

fn coprime_residues(m: u64) -> impl Iterator<Item = u64> {
    (1..=m).filter(move |&a| gcd(a, m) == 1)
}

fn half_range(m: u64) -> impl Iterator<Item = u64> {
    (1..).take_while(move |&a| 2 * a < m).filter(move |&a| gcd(a, m) == 1)
}

macro_rules! suite {
    ($ty:ident, $name:literal, $desc:literal) => {
        pub struct $ty;

        impl Strategy for $ty {
            fn name(&self) -> &'static str {
                $name
            }
            fn description(&self) -> &'static str {
                $desc
            }
        }
    };
}

suite!(LemmaL1, "l1", "L(s, chi) against the periodic zeta expansion, s = 2, 3");
suite!(LemmaL2, "l2", "character sum against Ramanujan sums and its Mobius inversion, s = 2, 3");
suite!(PropMpSuite, "mp", "periodic zeta from the divisor expansion against the Hurwitz route, s = 2, 3");
suite!(LemmaLb, "lb", "coprime periodic sums against the gcd-filtered series");
suite!(LemmaLm, "lm", "exact divisor-sum identity over the rationals");
suite!(Zucker, "zucker", "log-sine expansion through periodic zeta values");
suite!(LogSine, "logsine", "log-sine expansion through L(2) and L(3) divisor sums");
suite!(Route, "route", "theorem and log-sine routes to L(1, psi)");
suite!(Arcsine, "arcsine", "2 s(2, 2 sin(theta/2)) = theta^2 for 0 < theta < pi");

impl CheckSuite for LemmaL1 {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 1..=max_modulus {
            for chi in enumerate_characters(&build_group(m)?) {
                for s in [2, 3] {
                    let r = lemma_l1_residual(s, &chi, cfg)?;
                    out.record(r, cfg.identity_tol, || format!("m={m} chi={} s={s}", chi.index()));
                }
            }
        }
        Ok(out)
    }
}

impl CheckSuite for LemmaL2 {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 1..=max_modulus {
            for a in coprime_residues(m) {
                for s in [2, 3] {
                    let r = lemma_l2_residual(s, a, m, cfg)?;
                    out.record(r, cfg.identity_tol, || format!("m={m} a={a} s={s}"));
                    let r = mobius_inversion_residual(s, a, m, cfg)?;
                    out.record(r, cfg.identity_tol, || format!("inversion m={m} a={a} s={s}"));
                }
            }
        }
        Ok(out)
    }
}

impl CheckSuite for PropMpSuite {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 1..=max_modulus {
            for s in [2, 3] {
                let expansion = PropMpExpansion::new(s, m, cfg)?;
                let table = PeriodicZetaTable::new(s, m, cfg)?;
                for a in coprime_residues(m) {
                    let r = (expansion.eval(a)?.value - table.get(a as i64)).norm();
                    out.record(r, cfg.identity_tol, || format!("m={m} a={a} s={s}"));
                }
            }
        }
        Ok(out)
    }
}

impl CheckSuite for LemmaLb {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 1..=max_modulus {
            for q in 1..=LB_MAX_DENOMINATOR {
                for a in 1..=q {
                    for s in [2, 3] {
                        let fast = coprime_periodic_sum(s, a, q, m, cfg)?;
                        let slow = coprime_periodic_sum_direct(s, a, q, m, LB_TERMS)?;
                        let tol = direct_tail_bound(s, LB_TERMS) + cfg.identity_tol;
                        out.record((fast - slow).norm(), tol, || format!("m={m} beta={a}/{q} s={s}"));
                    }
                }
            }
        }
        Ok(out)
    }
}

impl CheckSuite for LemmaLm {
    fn run(&self, max_modulus: u64, _cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 1..=max_modulus {
            for k in divisors(m)? {
                let r = if lemma_lm_check(m, k)? { 0.0 } else { 1.0 };
                out.record(r, 0.0, || format!("m={m} k={k}"));
            }
        }
        Ok(out)
    }
}

impl CheckSuite for Zucker {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 3..=max_modulus {
            for a in half_range(m) {
                let r = zucker_residual(a, m, cfg)?;
                out.record(r, cfg.identity_tol, || format!("m={m} a={a}"));
            }
        }
        Ok(out)
    }
}

impl CheckSuite for LogSine {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 3..=max_modulus {
            let data = DivisorCharacterData::new(m, cfg)?;
            for a in half_range(m) {
                let r = log_sine_via_lseries_with_data(a, &data, cfg)?;
                out.record(r, cfg.logsine_tol, || format!("m={m} a={a}"));
            }
        }
        Ok(out)
    }
}

impl CheckSuite for Route {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        for m in 3..=max_modulus {
            let psis: Vec<_> = enumerate_characters(&build_group(m)?)
                .into_iter()
                .filter(|c| c.is_even() && !c.is_principal() && c.is_primitive())
                .collect();
            if psis.is_empty() {
                continue;
            }
            let data = DivisorCharacterData::new(m, cfg)?;
            for psi in psis {
                let r = (l1_via_theorem_with_data(&psi, &data, cfg)? - l1_direct(&psi)?).norm();
                out.record(r, cfg.route_tol, || format!("m={m} psi={}", psi.index()));
            }
        }
        Ok(out)
    }
}

impl CheckSuite for Arcsine {
    fn run(&self, max_modulus: u64, cfg: &EngineConfig) -> Result<SuiteOutcome> {
        let mut out = SuiteOutcome::new(self.name(), max_modulus);
        let tol = 1e-3 * cfg.identity_tol;
        for m in 3..=max_modulus {
            for a in (1..).take_while(|&a| 2 * a < m) {
                let theta = 2.0 * PI * a as f64 / m as f64;
                let v = s_series(2, 2.0 * (theta / 2.0).sin(), cfg)?.value;
                out.record((2.0 * v - theta * theta).abs(), tol, || format!("m={m} a={a}"));
            }
        }
        Ok(out)
    }
}

pub fn check_suites() -> Registry<dyn CheckSuite> {
    let mut reg: Registry<dyn CheckSuite> = Registry::default();
    reg.register(Box::new(LemmaL1))
        .register(Box::new(LemmaL2))
        .register(Box::new(PropMpSuite))
        .register(Box::new(LemmaLb))
        .register(Box::new(LemmaLm))
        .register(Box::new(Zucker))
        .register(Box::new(LogSine))
        .register(Box::new(Route))
        .register(Box::new(Arcsine));
    reg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_on_small_moduli() {
        let cfg = EngineConfig::default();
        for suite in check_suites().iter() {
            let out = suite.run(8, &cfg).unwrap();
            assert!(out.passed(), "{}: {:?}", suite.name(), out.failures);
            assert!(out.cases > 0, "{}", suite.name());
        }
    }

    #[test]
    fn impossible_tolerance_is_reported() {
        let mut cfg = EngineConfig::default();
        cfg.identity_tol = 0.0;
        let out = check_suites().get("zucker").unwrap().run(6, &cfg).unwrap();
        assert!(!out.passed());
        assert_eq!(out.failures.len(), out.cases);
    }
}
