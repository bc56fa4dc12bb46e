use std::f64::consts::PI;

use rayon::prelude::*;

use super::l1::{l1_direct, TheoremBlocks};
use super::DivisorCharacterData;
use crate::arith::{fundamental_discriminants, fundamental_unit, is_fundamental_discriminant};
use crate::characters::kronecker_character;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::ComplexScalar;

const I: ComplexScalar = ComplexScalar::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportStatus {
    Ok,
    Failed,
}

impl ReportStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReportStatus::Ok => "ok",
            ReportStatus::Failed => "failed",
        }
    }
}

/// Class number of `Q(√D)` from the four-term decomposition
/// `h(D) log ε_D = A + B + C + S`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassNumberReport {
    pub disc: i64,
    pub term_a: ComplexScalar,
    pub term_b: ComplexScalar,
    pub term_c: ComplexScalar,
    pub term_s: ComplexScalar,
    pub l1: ComplexScalar,
    pub regulator: f64,
    pub h_real: f64,
    pub h: u64,
    pub residual: f64,
    pub imag_leak: f64,
    /// Class number from the log-sine route, when the cross-check ran.
    pub oracle_h: Option<u64>,
    pub status: ReportStatus,
    pub failure: Option<String>,
}

impl ClassNumberReport {
    pub fn term_sum(&self) -> ComplexScalar {
        self.term_a + self.term_b + self.term_c + self.term_s
    }

    pub fn is_ok(&self) -> bool {
        self.status == ReportStatus::Ok
    }

    fn mark_failed(&mut self, reason: String) {
        self.status = ReportStatus::Failed;
        self.failure = Some(match self.failure.take() {
            Some(prev) => format!("{prev}; {reason}"),
            None => reason,
        });
    }

    fn failed(disc: i64, reason: String) -> Self {
        let zero = ComplexScalar::new(0.0, 0.0);
        ClassNumberReport {
            disc,
            term_a: zero,
            term_b: zero,
            term_c: zero,
            term_s: zero,
            l1: zero,
            regulator: 0.0,
            h_real: 0.0,
            h: 1,
            residual: 0.0,
            imag_leak: 0.0,
            oracle_h: None,
            status: ReportStatus::Failed,
            failure: Some(reason),
        }
    }
}

fn check_disc(disc: i64, cfg: &EngineConfig) -> Result<()> {
    if disc < 5 || !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamentalDiscriminant(disc));
    }
    if disc > cfg.max_discriminant {
        return Err(Error::DiscriminantTooLarge { disc, max: cfg.max_discriminant });
    }
    Ok(())
}

fn round_h(h_real: f64) -> u64 {
    if h_real.is_finite() && h_real >= 0.5 {
        h_real.round() as u64
    } else {
        1
    }
}

pub fn class_number(disc: i64, cfg: &EngineConfig) -> Result<ClassNumberReport> {
    check_disc(disc, cfg)?;
    let chi = kronecker_character(disc)?;
    let data = DivisorCharacterData::new(disc as u64, cfg)?;
    let blocks = TheoremBlocks::new(&chi, &data, cfg)?;
    let unit = fundamental_unit(disc)?;

    let d = disc as f64;
    let pi2 = PI * PI;
    let term_a = blocks.odd / (PI * d * I);
    let term_b = blocks.even / (2.0 * pi2 * d);
    let term_c = -blocks.zeta * (d * d / (2.0 * pi2));
    let term_s = -blocks.series * (d * d / (4.0 * pi2));
    let total = term_a + term_b + term_c + term_s;

    let h_real = total.re / unit.regulator;
    let h = round_h(h_real);
    let mut report = ClassNumberReport {
        disc,
        term_a,
        term_b,
        term_c,
        term_s,
        l1: total * (2.0 / d.sqrt()),
        regulator: unit.regulator,
        h_real,
        h,
        residual: (h_real - h as f64).abs(),
        imag_leak: total.im.abs(),
        oracle_h: None,
        status: ReportStatus::Ok,
        failure: None,
    };
    if !(h_real >= 0.5) {
        report.mark_failed(format!("h_real = {h_real} is not positive"));
    }
    if !(report.residual <= cfg.h_residual_max) {
        report.mark_failed(format!("residual {:.3e} exceeds {:.3e}", report.residual, cfg.h_residual_max));
    }
    if !(report.imag_leak <= cfg.imag_leak_max) {
        report.mark_failed(format!("imaginary leak {:.3e} exceeds {:.3e}", report.imag_leak, cfg.imag_leak_max));
    }
    Ok(report)
}

/// `h = √D L(1, χ_D) / (2 log ε_D)` with `L(1, χ_D)` from the log-sine sum.
pub fn class_number_oracle(disc: i64, cfg: &EngineConfig) -> Result<u64> {
    check_disc(disc, cfg)?;
    let chi = kronecker_character(disc)?;
    let l1 = l1_direct(&chi)?;
    let unit = fundamental_unit(disc)?;
    let h_real = (disc as f64).sqrt() * l1.re / (2.0 * unit.regulator);
    let h = round_h(h_real);
    let residual = (h_real - h as f64).abs();
    if !(residual <= cfg.oracle_residual_max) || !(h_real >= 0.5) {
        return Err(Error::Verification(format!(
            "D = {disc}: direct route gives h_real = {h_real}, residual {residual:.3e}"
        )));
    }
    Ok(h)
}

/// Reports for every fundamental discriminant in `[lo, hi]`, ascending, each
/// cross-checked against [`class_number_oracle`]. Per-discriminant problems
/// are recorded in the report rather than aborting the batch.
pub fn batch_class_numbers(lo: i64, hi: i64, cfg: &EngineConfig) -> Result<Vec<ClassNumberReport>> {
    if lo < 5 || lo > hi {
        return Err(Error::invalid(format!("need 5 <= lo <= hi, got [{lo}, {hi}]")));
    }
    let discs: Vec<i64> = fundamental_discriminants(lo, hi).collect();
    Ok(discs
        .into_par_iter()
        .map(|disc| {
            let mut report = match class_number(disc, cfg) {
                Ok(r) => r,
                Err(e) => return ClassNumberReport::failed(disc, e.to_string()),
            };
            match class_number_oracle(disc, cfg) {
                Ok(h) => {
                    report.oracle_h = Some(h);
                    if h != report.h {
                        report.mark_failed(format!("oracle gives h = {h}, formula gives {}", report.h));
                    }
                }
                Err(e) => report.mark_failed(e.to_string()),
            }
            report
        })
        .collect())
}
