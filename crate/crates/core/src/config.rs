//! Engine tolerances and precision knobs, kept in one record so that checks can
//! be tightened or relaxed uniformly.

#[derive(Debug, Clone, PartialEq)]
pub struct EngineConfig {
    /// Number of directly summed terms in the Euler–Maclaurin Hurwitz evaluator.
    pub hurwitz_terms: usize,
    /// Number of Bernoulli corrections `B_2 .. B_{2K}` in Euler–Maclaurin.
    pub bernoulli_corrections: usize,
    /// Relative stop threshold for the central-binomial series.
    pub series_rel_tol: f64,
    /// Term cap for the central-binomial series at |x| = 2.
    pub series_term_cap: u64,
    /// Tolerance for the L-series / periodic zeta identity residuals.
    pub identity_tol: f64,
    /// Tolerance for the log-sine expansion residual.
    pub logsine_tol: f64,
    /// Tolerance for agreement between the two L(1, ψ) routes.
    pub route_tol: f64,
    /// Largest |h_real - h| accepted by the class number formula.
    pub h_residual_max: f64,
    /// Largest |Im(A + B + C + S)| accepted.
    pub imag_leak_max: f64,
    /// Largest rounding residual accepted by the Dirichlet-formula oracle.
    pub oracle_residual_max: f64,
    /// Largest discriminant the binary64 class number formula is trusted for.
    pub max_discriminant: i64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            hurwitz_terms: 50,
            bernoulli_corrections: 5,
            series_rel_tol: 1e-16,
            series_term_cap: 1_000_000,
            identity_tol: 1e-9,
            logsine_tol: 1e-8,
            route_tol: 1e-8,
            h_residual_max: 0.01,
            imag_leak_max: 1e-8,
            oracle_residual_max: 1e-6,
            max_discriminant: 2000,
        }
    }
}

impl EngineConfig {
    /// Scales every tolerance by `factor`. A factor below one tightens the
    /// thresholds and lengthens the Euler–Maclaurin head, by at most 10×
    /// since binary64 gains nothing beyond that.
    pub fn scaled(&self, factor: f64) -> Self {
        assert!(factor > 0.0 && factor.is_finite(), "tolerance scale must be positive");
        let boost = (1.0 / factor).clamp(1.0, 10.0);
        EngineConfig {
            hurwitz_terms: (self.hurwitz_terms as f64 * boost).ceil() as usize,
            bernoulli_corrections: self.bernoulli_corrections,
            series_rel_tol: self.series_rel_tol * factor,
            series_term_cap: self.series_term_cap,
            identity_tol: self.identity_tol * factor,
            logsine_tol: self.logsine_tol * factor,
            route_tol: self.route_tol * factor,
            h_residual_max: self.h_residual_max * factor,
            imag_leak_max: self.imag_leak_max * factor,
            oracle_residual_max: self.oracle_residual_max * factor,
            max_discriminant: self.max_discriminant,
        }
    }
}
