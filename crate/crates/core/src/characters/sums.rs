use super::DirichletCharacter;
use crate::arith::{factorize, gcd};
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// `τ(χ) = Σ_{ν mod m} χ(ν) e^{2πiν/m}`, always by the defining sum so that
/// imprimitive characters get their (possibly vanishing) value.
pub fn gauss_sum(chi: &DirichletCharacter) -> ComplexScalar {
    let m = chi.modulus();
    let roots = chi.group().additive_roots();
    // ν = m contributes χ(0) · 1, which only survives for m = 1
    (1..=m)
        .filter_map(|v| chi.value_index(v as i64).map(|j| (v, j)))
        .map(|(v, j)| chi.group().root(j) * roots[(v % m) as usize])
        .sum()
}

/// `c_m(k) = φ(m) μ(m/g) / φ(m/g)` with `g = gcd(m, k)`.
pub fn ramanujan_sum(m: u64, k: i64) -> Result<i64> {
    if m == 0 {
        return Err(Error::invalid("Ramanujan sum needs a positive modulus"));
    }
    let g = gcd(m, k.unsigned_abs());
    let q = factorize(m / g)?;
    let phi_m = factorize(m)?.euler_phi() as i64;
    Ok(phi_m * q.mobius() / q.euler_phi() as i64)
}

/// `Σ_{ν mod m, (ν, m) = 1} e^{2πiνk/m}` summed term by term.
pub fn ramanujan_sum_direct(m: u64, k: i64) -> ComplexScalar {
    let m_i = m as i64;
    (1..=m)
        .filter(|&v| gcd(v, m) == 1)
        .map(|v| {
            let r = ((v as i64 * k).rem_euclid(m_i)) as f64 / m as f64;
            ComplexScalar::from_polar(1.0, std::f64::consts::TAU * r)
        })
        .sum()
}

/// `B_j = Σ_{0 < a < M/2} a^j χ(a) ψ̄(a)`.
///
/// When `psi_bar` is given the range is taken from its modulus `M` and the
/// summand uses the pointwise product of the two characters; otherwise
/// `M` is the modulus of `chi`.
pub fn b_sum(chi: &DirichletCharacter, psi_bar: Option<&DirichletCharacter>, j: i32) -> ComplexScalar {
    let range = psi_bar.map_or(chi.modulus(), DirichletCharacter::modulus);
    (1..)
        .take_while(|&a: &u64| 2 * a < range)
        .map(|a| {
            let mut v = chi.eval(a as i64);
            if let Some(psi_bar) = psi_bar {
                v *= psi_bar.eval(a as i64);
            }
            v * (a as f64).powi(j)
        })
        .sum()
}
