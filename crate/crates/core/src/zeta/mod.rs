//! Hurwitz and Riemann zeta, Dirichlet L-series at integers `s ≥ 2`, and the
//! periodic zeta function `Φ(s, β) = Σ_{n ≥ 1} e^{2πiβn} n^{-s}`.
//!
//! `Φ(s, a/m)` is available by three independent routes: the defining series
//! (truncated), a rearrangement into Hurwitz zeta values, and an expansion
//! over the characters of every divisor of `m`.

mod hurwitz;
mod identities;
mod lseries;
mod periodic;

pub use hurwitz::{hurwitz_zeta, riemann_zeta, HurwitzTable, HurwitzValue};
pub use identities::{lemma_l1_residual, lemma_l2_residual, mobius_inversion_residual};
pub use lseries::{l_series, l_series_from_table, LValue};
pub use periodic::{
    coprime_periodic_sum, coprime_periodic_sum_direct, direct_tail_bound, periodic_zeta_direct,
    periodic_zeta_hurwitz, periodic_zeta_prop_mp, PeriodicZetaTable, PhiValue, PropMpExpansion,
};

pub(crate) fn check_s(s: u32) -> crate::Result<()> {
    if s < 2 {
        return Err(crate::Error::invalid(format!("s = {s} is outside the half-plane of convergence")));
    }
    Ok(())
}
