//! The central-binomial series `s(k, x) = Σ_{n ≥ 1} x^{2n} / (C(2n, n) n^k)`
//! for `|x| ≤ 2`, the log-sine identity it satisfies, and the series block of
//! the L(1) formula.

use std::f64::consts::PI;

use num_bigint::BigUint;

use crate::arith::gcd;
use crate::characters::DirichletCharacter;
use crate::config::EngineConfig;
use crate::error::{Error, Result};
use crate::zeta::{periodic_zeta_hurwitz, riemann_zeta};
use crate::ComplexScalar;

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> DoubleDouble {
    let s = a + b;
    DoubleDouble { hi: s, lo: b - (s - a) }
}

impl DoubleDouble {
    const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };

    fn square(x: f64) -> Self {
        let p = x * x;
        DoubleDouble { hi: p, lo: x.mul_add(x, -p) }
    }

    fn add(self, o: Self) -> Self {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let d = quick_two_sum(s, e + t);
        quick_two_sum(d.hi, d.lo + f)
    }

    fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p) + (self.hi * o.lo + self.lo * o.hi);
        quick_two_sum(p, e)
    }

    fn mul_f64(self, b: f64) -> Self {
        let p = self.hi * b;
        let e = self.hi.mul_add(b, -p) + self.lo * b;
        quick_two_sum(p, e)
    }

    fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let p = q1 * b;
        let p_err = q1.mul_add(b, -p);
        let (s, e) = two_sum(self.hi, -p);
        let q2 = (s + (e - p_err + self.lo)) / b;
        quick_two_sum(q1, q2)
    }

    fn value(self) -> f64 {
        self.hi + self.lo
    }
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> BigUint {
    let mut c = BigUint::from(1u32);
    // c = C(n + i, i) after step i
    for i in 1..=n {
        c = c * (n + i) / i;
    }
    c
}

/// Terms `t_n = x^{2n} / (C(2n, n) n^k)`, `n = 1, 2, ...`, by the recurrence
/// `t_{n+1} = t_n x² (n+1)/(2(2n+1)) (n/(n+1))^k` carried in double-double
/// precision.
pub struct SeriesTerms {
    k: u32,
    x2: DoubleDouble,
    n: u64,
    term: DoubleDouble,
}

impl SeriesTerms {
    pub fn new(k: u32, x: f64) -> Self {
        let x2 = DoubleDouble::square(x);
        SeriesTerms { k, x2, n: 0, term: DoubleDouble::ZERO }
    }

    fn next_dd(&mut self) -> DoubleDouble {
        if self.n == 0 {
            self.n = 1;
            self.term = self.x2.div_f64(2.0);
            return self.term;
        }
        let n = self.n as f64;
        let mut t = self.term.mul(self.x2).div_f64(2.0 * (2.0 * n + 1.0));
        for _ in 0..self.k {
            t = t.mul_f64(n);
        }
        for _ in 1..self.k {
            t = t.div_f64(n + 1.0);
        }
        self.n += 1;
        self.term = t;
        t
    }
}

impl Iterator for SeriesTerms {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        Some(self.next_dd().value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: f64,
    pub terms_used: u64,
    pub last_term_magnitude: f64,
    /// Estimate of the omitted tail already folded into `value` (non-zero
    /// only at `|x| = 2`, where convergence is algebraic).
    pub tail_estimate: f64,
}

// 4^n / C(2n, n) = √(πn) (1 + 1/(8n) + 1/(128n²) − 5/(1024n³) − 21/(32768n⁴) + …)
const CENTRAL_ASYMPTOTIC: [f64; 5] = [1.0, 1.0 / 8.0, 1.0 / 128.0, -5.0 / 1024.0, -21.0 / 32768.0];

/// `Σ_{n > N} 4^n / (C(2n, n) n^k)` from the asymptotic expansion and
/// Euler–Maclaurin: `∫_N^∞ f − f(N)/2 − f'(N)/12 + f'''(N)/720`.
fn boundary_tail(k: u32, n: u64) -> f64 {
    let n = n as f64;
    let mut integral = 0.0;
    let mut f = 0.0;
    let mut f1 = 0.0;
    let mut f3 = 0.0;
    for (j, &c) in CENTRAL_ASYMPTOTIC.iter().enumerate() {
        let p = 0.5 - k as f64 - j as f64;
        integral += c * n.powf(p + 1.0) / (-p - 1.0);
        f += c * n.powf(p);
        f1 += c * p * n.powf(p - 1.0);
        f3 += c * p * (p - 1.0) * (p - 2.0) * n.powf(p - 3.0);
    }
    PI.sqrt() * (integral - f / 2.0 - f1 / 12.0 + f3 / 720.0)
}

/// `s(k, x)` for `k ≥ 2`, `|x| ≤ 2`.
///
/// Every ratio `t_{n+1}/t_n` is at most `ρ = x²/4`, so for `|x| < 2` the
/// summation stops once `t_n` and the geometric tail bound `t_n ρ/(1 − ρ)`
/// both drop below `series_rel_tol · max(1, |s|)`. At `|x| = 2` the terms
/// decay like `n^{1/2−k}`; the first `series_term_cap` terms are summed and
/// the remainder is added from the asymptotic expansion of `C(2n, n)`.
pub fn s_series(k: u32, x: f64, cfg: &EngineConfig) -> Result<SeriesResult> {
    if k < 2 {
        return Err(Error::invalid(format!("s(k, x) needs k ≥ 2, got {k}")));
    }
    if !(x.abs() <= 2.0) {
        return Err(Error::invalid(format!("s(k, x) needs |x| ≤ 2, got {x}")));
    }
    if x == 0.0 {
        return Ok(SeriesResult { value: 0.0, terms_used: 1, last_term_magnitude: 0.0, tail_estimate: 0.0 });
    }

    let rho = x * x / 4.0;
    let boundary = x.abs() == 2.0;
    let geometric = if boundary { f64::INFINITY } else { rho / (1.0 - rho) };
    let mut terms = SeriesTerms::new(k, x);
    let mut sum = DoubleDouble::ZERO;
    let mut last;
    let mut used = 0u64;
    loop {
        let t = terms.next_dd();
        sum = sum.add(t);
        used += 1;
        last = t.value();
        if boundary {
            if used >= cfg.series_term_cap.max(1) {
                break;
            }
            continue;
        }
        let scale = cfg.series_rel_tol * sum.value().abs().max(1.0);
        if last <= scale && last * geometric <= scale {
            break;
        }
    }

    let tail_estimate = if boundary { boundary_tail(k, used) } else { 0.0 };
    Ok(SeriesResult {
        value: sum.value() + tail_estimate,
        terms_used: used,
        last_term_magnitude: last,
        tail_estimate,
    })
}

fn check_half_range(a: u64, m: u64) -> Result<()> {
    if a == 0 || 2 * a >= m {
        return Err(Error::invalid(format!("need 0 < a < m/2, got a = {a}, m = {m}")));
    }
    if gcd(a, m) != 1 {
        return Err(Error::invalid(format!("a = {a} is not coprime to m = {m}")));
    }
    Ok(())
}

/// Residual of the log-sine expansion at `θ = 2πa/m`:
///
/// `log(2 sin(πa/m)) = m²ζ(3)/(2π²a²) + m²/(4π²a²) s(3, 2 sin(πa/m))
///                    − m/(πa) Im Φ(2, a/m) − m²/(2π²a²) Re Φ(3, a/m)`.
pub fn zucker_residual(a: u64, m: u64, cfg: &EngineConfig) -> Result<f64> {
    check_half_range(a, m)?;
    let (af, mf) = (a as f64, m as f64);
    let x = 2.0 * (PI * af / mf).sin();
    let lhs = x.ln();
    let z3 = riemann_zeta(3, cfg)?;
    let phi2 = periodic_zeta_hurwitz(2, a, m, cfg)?.value;
    let phi3 = periodic_zeta_hurwitz(3, a, m, cfg)?.value;
    let c = mf * mf / (PI * PI * af * af);
    let rhs = c / 2.0 * z3 + c / 4.0 * s_series(3, x, cfg)?.value
        - mf / (PI * af) * phi2.im
        - c / 2.0 * phi3.re;
    Ok((lhs - rhs).abs())
}

/// `Σ_{0 < a < m/2} ψ̄(a) a^{-2} s(3, 2 sin(πa/m))`, i.e. the double series
/// `Σ_n 1/(C(2n,n) n³) Σ_a ψ̄(a)/a² (2 sin(πa/m))^{2n}` summed with `a`
/// outermost.
pub fn theorem_s_term(psi: &DirichletCharacter, cfg: &EngineConfig) -> Result<ComplexScalar> {
    let m = psi.modulus();
    let psi_bar = psi.conjugate();
    let mut total = ComplexScalar::new(0.0, 0.0);
    for a in (1..).take_while(|&a: &u64| 2 * a < m) {
        let w = psi_bar.eval(a as i64);
        if w.norm_sqr() == 0.0 {
            continue;
        }
        let x = 2.0 * (PI * a as f64 / m as f64).sin();
        total += w * (s_series(3, x, cfg)?.value / (a * a) as f64);
    }
    Ok(total)
}
