use std::f64::consts::PI;

use super::DivisorCharacterData;
use crate::arith::gcd;
use crate::binom_series::{s_series, theorem_s_term};
use crate::characters::{b_sum, gauss_sum, DirichletCharacter, Parity};
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::zeta::riemann_zeta;
use crate::ComplexScalar;

const I: ComplexScalar = ComplexScalar::new(0.0, 1.0);

fn require_even_primitive(psi: &DirichletCharacter) -> Result<()> {
    let m = psi.modulus();
    if m < 3 {
        return Err(Error::UnsupportedCharacter(format!("modulus {m} is below 3")));
    }
    if psi.is_principal() {
        return Err(Error::UnsupportedCharacter("character is principal".into()));
    }
    if !psi.is_even() {
        return Err(Error::UnsupportedCharacter("character is odd".into()));
    }
    if !psi.is_primitive() {
        return Err(Error::UnsupportedCharacter(format!(
            "character mod {m} is imprimitive (conductor {})",
            psi.conductor()
        )));
    }
    Ok(())
}

/// The four character/series blocks of the L(1) formula, before the
/// `τ(ψ)`-dependent constants are applied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremBlocks {
    /// `Σ_{d|m} d²/φ(d) Σ_{χ odd} B_{-1}(χψ̄) τ(χ̄) L(2, χ)`
    pub odd: ComplexScalar,
    /// `Σ_{d|m} d³/φ(d) Σ_{χ even} B_{-2}(χψ̄) τ(χ̄) L(3, χ)`
    pub even: ComplexScalar,
    /// `B_{-2}(ψ̄) ζ(3)`
    pub zeta: ComplexScalar,
    /// `Σ_{0<a<m/2} ψ̄(a) a^{-2} s(3, 2 sin(πa/m))`
    pub series: ComplexScalar,
}

impl TheoremBlocks {
    pub fn new(psi: &DirichletCharacter, data: &DivisorCharacterData, cfg: &EngineConfig) -> Result<Self> {
        if data.modulus() != psi.modulus() {
            return Err(Error::invalid("divisor data built for a different modulus"));
        }
        let psi_bar = psi.conjugate();
        let odd = data.block(Parity::Odd, |chi| b_sum(chi, Some(&psi_bar), -1));
        let even = data.block(Parity::Even, |chi| b_sum(chi, Some(&psi_bar), -2));
        let zeta = b_sum(&psi_bar, None, -2) * riemann_zeta(3, cfg)?;
        let series = theorem_s_term(psi, cfg)?;
        Ok(TheoremBlocks { odd, even, zeta, series })
    }

    /// `2τ/(πim²)·odd + τ/(π²m²)·even − mτ/π²·zeta − mτ/(2π²)·series`.
    pub fn l1(&self, tau: ComplexScalar, m: u64) -> ComplexScalar {
        let mf = m as f64;
        let pi2 = PI * PI;
        tau * (self.odd * 2.0 / (PI * I * mf * mf) + self.even / (pi2 * mf * mf)
            - self.zeta * mf / pi2
            - self.series * mf / (2.0 * pi2))
    }
}

/// L(1, ψ) for an even primitive non-principal ψ from L(2, ·), L(3, ·), ζ(3)
/// and the central-binomial series.
pub fn l1_via_theorem(psi: &DirichletCharacter, cfg: &EngineConfig) -> Result<ComplexScalar> {
    require_even_primitive(psi)?;
    let data = DivisorCharacterData::new(psi.modulus(), cfg)?;
    l1_via_theorem_with_data(psi, &data, cfg)
}

pub fn l1_via_theorem_with_data(
    psi: &DirichletCharacter,
    data: &DivisorCharacterData,
    cfg: &EngineConfig,
) -> Result<ComplexScalar> {
    require_even_primitive(psi)?;
    let blocks = TheoremBlocks::new(psi, data, cfg)?;
    Ok(blocks.l1(gauss_sum(psi), psi.modulus()))
}

/// `L(1, ψ) = −(2τ(ψ)/m) Σ_{0<a<m/2} ψ̄(a) log(2 sin(πa/m))`.
pub fn l1_direct(psi: &DirichletCharacter) -> Result<ComplexScalar> {
    require_even_primitive(psi)?;
    let m = psi.modulus();
    let psi_bar = psi.conjugate();
    let sum: ComplexScalar = (1..)
        .take_while(|&a: &u64| 2 * a < m)
        .map(|a| psi_bar.eval(a as i64) * (2.0 * (PI * a as f64 / m as f64).sin()).ln())
        .sum();
    Ok(-gauss_sum(psi) * sum * (2.0 / m as f64))
}

/// The same sum over the full range `a = 1..m−1`.
pub fn l1_direct_unfolded(psi: &DirichletCharacter) -> Result<ComplexScalar> {
    require_even_primitive(psi)?;
    let m = psi.modulus();
    let psi_bar = psi.conjugate();
    let sum: ComplexScalar = (1..m)
        .map(|a| psi_bar.eval(a as i64) * (2.0 * (PI * a as f64 / m as f64).sin()).ln())
        .sum();
    Ok(-gauss_sum(psi) * sum / m as f64)
}

/// Residual of
///
/// `log(2 sin(πa/m)) = m²ζ(3)/(2π²a²) + m²/(4π²a²) s(3, 2 sin(πa/m))
///    − 1/(πima) Σ_{d|m} d²/φ(d) Σ_{χ odd} χ(a) τ(χ̄) L(2, χ)
///    − 1/(2π²ma²) Σ_{d|m} d³/φ(d) Σ_{χ even} χ(a) τ(χ̄) L(3, χ)`.
pub fn log_sine_via_lseries(a: u64, m: u64, cfg: &EngineConfig) -> Result<f64> {
    check_log_sine_args(a, m)?;
    let data = DivisorCharacterData::new(m, cfg)?;
    log_sine_via_lseries_with_data(a, &data, cfg)
}

fn check_log_sine_args(a: u64, m: u64) -> Result<()> {
    if a == 0 || 2 * a >= m || gcd(a, m) != 1 {
        return Err(Error::invalid(format!("need 0 < a < m/2 with gcd(a, m) = 1, got a = {a}, m = {m}")));
    }
    Ok(())
}

pub fn log_sine_via_lseries_with_data(a: u64, data: &DivisorCharacterData, cfg: &EngineConfig) -> Result<f64> {
    let m = data.modulus();
    check_log_sine_args(a, m)?;
    let (af, mf) = (a as f64, m as f64);
    let x = 2.0 * (PI * af / mf).sin();
    let pi2 = PI * PI;
    let odd = data.block(Parity::Odd, |chi| chi.eval(a as i64));
    let even = data.block(Parity::Even, |chi| chi.eval(a as i64));
    let rhs = ComplexScalar::from(
        mf * mf / (2.0 * pi2 * af * af) * riemann_zeta(3, cfg)?
            + mf * mf / (4.0 * pi2 * af * af) * s_series(3, x, cfg)?.value,
    ) - odd / (PI * I * mf * af)
        - even / (2.0 * pi2 * mf * af * af);
    Ok((ComplexScalar::from(x.ln()) - rhs).norm())
}
