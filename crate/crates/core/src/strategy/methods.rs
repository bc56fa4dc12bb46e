use super::{Registry, Strategy};
use crate::characters::DirichletCharacter;
use crate::classnum::{l1_direct, l1_via_theorem};
use crate::config::EngineConfig;
use crate::error::Result;
use crate::zeta::{periodic_zeta_direct, periodic_zeta_hurwitz, periodic_zeta_prop_mp};
use crate::ComplexScalar;

pub trait L1Method: Strategy {
    fn evaluate(&self, psi: &DirichletCharacter, cfg: &EngineConfig) -> Result<ComplexScalar>;
}

pub trait PeriodicZetaEvaluator: Strategy {
    /// `Φ(s, a/m)`.
    fn evaluate(&self, s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<ComplexScalar>;
}

pub struct TheoremRoute;

impl Strategy for TheoremRoute {
    fn name(&self) -> &'static str {
        "theorem"
    }
    fn description(&self) -> &'static str {
        "L(2), L(3), zeta(3) and central-binomial series blocks"
    }
}

impl L1Method for TheoremRoute {
    fn evaluate(&self, psi: &DirichletCharacter, cfg: &EngineConfig) -> Result<ComplexScalar> {
        l1_via_theorem(psi, cfg)
    }
}

pub struct DirectLogSine;

impl Strategy for DirectLogSine {
    fn name(&self) -> &'static str {
        "direct"
    }
    fn description(&self) -> &'static str {
        "folded log-sine sum with the Gauss sum"
    }
}

impl L1Method for DirectLogSine {
    fn evaluate(&self, psi: &DirichletCharacter, _cfg: &EngineConfig) -> Result<ComplexScalar> {
        l1_direct(psi)
    }
}

pub struct HurwitzRearrangement;

impl Strategy for HurwitzRearrangement {
    fn name(&self) -> &'static str {
        "hurwitz"
    }
    fn description(&self) -> &'static str {
        "m^-s sum of unit roots times Hurwitz zeta"
    }
}

impl PeriodicZetaEvaluator for HurwitzRearrangement {
    fn evaluate(&self, s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<ComplexScalar> {
        Ok(periodic_zeta_hurwitz(s, a, m, cfg)?.value)
    }
}

pub struct DirectSeries {
    pub terms: u64,
}

impl Default for DirectSeries {
    fn default() -> Self {
        DirectSeries { terms: 100_000 }
    }
}

impl Strategy for DirectSeries {
    fn name(&self) -> &'static str {
        "direct"
    }
    fn description(&self) -> &'static str {
        "truncated defining series"
    }
}

impl PeriodicZetaEvaluator for DirectSeries {
    fn evaluate(&self, s: u32, a: u64, m: u64, _cfg: &EngineConfig) -> Result<ComplexScalar> {
        Ok(periodic_zeta_direct(s, a, m, self.terms)?.value)
    }
}

pub struct PropMp;

impl Strategy for PropMp {
    fn name(&self) -> &'static str {
        "prop-mp"
    }
    fn description(&self) -> &'static str {
        "divisor expansion over characters with Gauss sums and L-values"
    }
}

impl PeriodicZetaEvaluator for PropMp {
    fn evaluate(&self, s: u32, a: u64, m: u64, cfg: &EngineConfig) -> Result<ComplexScalar> {
        Ok(periodic_zeta_prop_mp(s, a, m, cfg)?.value)
    }
}

pub fn l1_methods() -> Registry<dyn L1Method> {
    let mut reg: Registry<dyn L1Method> = Registry::default();
    reg.register(Box::new(TheoremRoute)).register(Box::new(DirectLogSine));
    reg
}

pub fn periodic_zeta_evaluators() -> Registry<dyn PeriodicZetaEvaluator> {
    let mut reg: Registry<dyn PeriodicZetaEvaluator> = Registry::default();
    reg.register(Box::new(HurwitzRearrangement))
        .register(Box::new(DirectSeries::default()))
        .register(Box::new(PropMp));
    reg
}
