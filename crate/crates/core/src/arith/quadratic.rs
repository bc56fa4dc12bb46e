//! Real quadratic fields: Kronecker symbol, fundamental discriminants and
//! fundamental units.

use num_bigint::{BigInt, BigUint};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factorize;
use crate::error::{Error, Result};

/// Kronecker symbol `(D / n)` for `n ≥ 0`.
pub fn kronecker_symbol(disc: i64, n: u64) -> i64 {
    if n == 0 {
        return i64::from(disc.abs() == 1);
    }
    let twos = n.trailing_zeros();
    let odd = n >> twos;
    let mut result = 1;
    if twos > 0 {
        if disc % 2 == 0 {
            return 0;
        }
        if matches!(disc.rem_euclid(8), 3 | 5) && twos % 2 == 1 {
            result = -1;
        }
    }
    result * jacobi(disc.rem_euclid(odd as i64) as u64, odd)
}

/// Jacobi symbol `(a / n)` for odd `n ≥ 1`.
fn jacobi(mut a: u64, mut n: u64) -> i64 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// True for discriminants of real quadratic fields.
pub fn is_fundamental_discriminant(disc: i64) -> bool {
    if disc <= 1 {
        return false;
    }
    let squarefree = |n: i64| factorize(n as u64).map(|f| f.is_squarefree()).unwrap_or(false);
    match disc % 4 {
        1 => squarefree(disc),
        0 => {
            let q = disc / 4;
            matches!(q % 4, 2 | 3) && squarefree(q)
        }
        _ => false,
    }
}

/// Fundamental discriminants in `[lo, hi]`, ascending.
pub fn fundamental_discriminants(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    (lo.max(2)..=hi).filter(|&d| is_fundamental_discriminant(d))
}

/// The fundamental unit `ε = (x + y√D)/2 > 1` with `x² − D y² = ±4`.
#[derive(Debug, Clone, PartialEq)]
pub struct FundamentalUnitData {
    pub disc: i64,
    pub x: BigUint,
    pub y: BigUint,
    /// `+1` or `-1`: the norm of ε.
    pub norm_sign: i8,
    /// `log ε`.
    pub regulator: f64,
}

impl FundamentalUnitData {
    fn new(disc: i64, x: BigUint, y: BigUint) -> Self {
        let lhs = BigInt::from(x.clone()).pow(2) - BigInt::from(disc) * BigInt::from(y.clone()).pow(2);
        let norm_sign = if lhs.is_positive() { 1 } else { -1 };
        debug_assert_eq!(lhs.abs(), BigInt::from(4));
        let regulator = log_half_sum(&x, &y, disc);
        FundamentalUnitData { disc, x, y, norm_sign, regulator }
    }
}

fn big_ln(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("64-bit value").ln() + shift as f64 * std::f64::consts::LN_2
}

/// `ln((x + y√D)/2)` without overflowing for large units.
fn log_half_sum(x: &BigUint, y: &BigUint, disc: i64) -> f64 {
    let sqrt_d = (disc as f64).sqrt();
    if x.bits() <= 52 && y.bits() <= 52 {
        let (x, y) = (x.to_f64().unwrap(), y.to_f64().unwrap());
        return ((x + y * sqrt_d) / 2.0).ln();
    }
    let ln_x = big_ln(x);
    let ratio = (big_ln(y) + sqrt_d.ln() - ln_x).exp();
    ln_x + ratio.ln_1p() - std::f64::consts::LN_2
}

/// Continued-fraction expansion of `(P0 + √d)/Q0` with `P0 = 1, Q0 = 2,
/// d = D` for `D ≡ 1 (mod 4)` and `P0 = 0, Q0 = 1, d = D/4` otherwise. The
/// first index `k` with `Q_{k+1} = Q0` yields `G_k² − d q_k² = ±Q0²`, where
/// `G_k = Q0 p_k − P0 q_k`.
pub fn fundamental_unit(disc: i64) -> Result<FundamentalUnitData> {
    if !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamentalDiscriminant(disc));
    }
    let (d, p0, q0): (i64, i64, i64) = if disc % 4 == 1 { (disc, 1, 2) } else { (disc / 4, 0, 1) };
    let root = d.sqrt();

    let (mut big_p, mut big_q) = (p0, q0);
    let (mut p_prev, mut p_cur) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q_cur) = (BigInt::one(), BigInt::zero());
    // the period of √d is O(√d log d); this bound is never reached
    for _ in 0..(4 * disc as usize + 16) {
        let a = (big_p + root) / big_q;
        let p_next = BigInt::from(a) * &p_cur + &p_prev;
        let q_next = BigInt::from(a) * &q_cur + &q_prev;
        p_prev = std::mem::replace(&mut p_cur, p_next);
        q_prev = std::mem::replace(&mut q_cur, q_next);

        big_p = a * big_q - big_p;
        big_q = (d - big_p * big_p) / big_q;
        debug_assert!(big_q > 0);

        if big_q == q0 {
            let g = BigInt::from(q0) * &p_cur - BigInt::from(p0) * &q_cur;
            let x = if q0 == 2 { g } else { g * 2 };
            let x = x.to_biguint().expect("positive convergent");
            let y = q_cur.to_biguint().expect("positive convergent");
            return Ok(FundamentalUnitData::new(disc, x, y));
        }
    }
    unreachable!("continued fraction of a quadratic irrational is periodic")
}

/// Smallest `y ≤ y_max` admitting `x² − D y² = ±4`, scanning norm −4 first so
/// that the smaller `x` wins when both signs occur.
pub fn fundamental_unit_brute_force(disc: i64, y_max: u64) -> Option<FundamentalUnitData> {
    let disc_u = u128::try_from(disc).ok()?;
    for y in 1..=y_max as u128 {
        let dy2 = disc_u * y * y;
        for x2 in [dy2.checked_sub(4), Some(dy2 + 4)].into_iter().flatten() {
            if x2 == 0 {
                continue;
            }
            let x = x2.sqrt();
            if x * x == x2 {
                return Some(FundamentalUnitData::new(disc, BigUint::from(x), BigUint::from(y)));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker_symbol(5, 1), 1);
        assert_eq!(kronecker_symbol(5, 2), -1);
        assert_eq!(kronecker_symbol(5, 5), 0);
        assert_eq!(kronecker_symbol(5, 0), 0);
        assert_eq!(kronecker_symbol(1, 0), 1);
        assert_eq!(kronecker_symbol(8, 3), -1);
        assert_eq!(kronecker_symbol(8, 7), 1);
        assert_eq!(kronecker_symbol(12, 5), -1);
        assert_eq!(kronecker_symbol(12, 11), 1);
        assert_eq!(kronecker_symbol(-4, 3), -1);
    }

    #[test]
    fn kronecker_is_periodic_and_multiplicative() {
        for disc in (2..=100).filter(|&d| is_fundamental_discriminant(d)) {
            let du = disc as u64;
            for n in 0..3 * du {
                assert_eq!(kronecker_symbol(disc, n), kronecker_symbol(disc, n + du), "D={disc} n={n}");
                assert_eq!(kronecker_symbol(disc, n) == 0, gcd(n, du) != 1 || n == 0);
            }
            for a in 1..=2 * du {
                for b in 1..=40 {
                    assert_eq!(
                        kronecker_symbol(disc, a * b),
                        kronecker_symbol(disc, a) * kronecker_symbol(disc, b)
                    );
                }
            }
        }
    }

    #[test]
    fn fundamental_discriminant_examples() {
        assert!(is_fundamental_discriminant(5));
        assert!(is_fundamental_discriminant(8));
        assert!(is_fundamental_discriminant(12));
        assert!(!is_fundamental_discriminant(9));
        assert!(!is_fundamental_discriminant(1));
        assert!(!is_fundamental_discriminant(-4));
        assert!(!is_fundamental_discriminant(16));
        assert!(!is_fundamental_discriminant(20));
        assert!(!is_fundamental_discriminant(25));
        let listed: Vec<i64> = fundamental_discriminants(1, 41).collect();
        assert_eq!(listed, vec![5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41]);
    }

    #[test]
    fn unit_examples() {
        let u = fundamental_unit(5).unwrap();
        assert_eq!((u.x.clone(), u.y.clone()), (BigUint::from(1u32), BigUint::from(1u32)));
        assert_eq!(u.norm_sign, -1);
        assert!((u.regulator - ((1.0 + 5f64.sqrt()) / 2.0).ln()).abs() < 1e-15);

        let u = fundamental_unit(8).unwrap();
        assert_eq!((u.x.clone(), u.y.clone()), (BigUint::from(2u32), BigUint::from(1u32)));
        assert_eq!(u.norm_sign, -1);
        assert!((u.regulator - (1.0 + 2f64.sqrt()).ln()).abs() < 1e-15);

        let u = fundamental_unit(13).unwrap();
        assert_eq!((u.x.clone(), u.y.clone()), (BigUint::from(3u32), BigUint::from(1u32)));

        assert_eq!(fundamental_unit(9), Err(Error::NotFundamentalDiscriminant(9)));
    }

    #[test]
    fn continued_fraction_matches_brute_force() {
        for disc in fundamental_discriminants(5, 200) {
            let cf = fundamental_unit(disc).unwrap();
            let bf = fundamental_unit_brute_force(disc, 1_000_000)
                .unwrap_or_else(|| panic!("no unit with small y for D = {disc}"));
            assert_eq!(cf, bf, "D = {disc}");
            assert!(cf.regulator > 0.0);
        }
    }

    #[test]
    fn large_units_keep_exact_norm() {
        // D = 4·94: ε = 2143295 + 221064√94
        let u = fundamental_unit(376).unwrap();
        assert_eq!(u.x, BigUint::from(2u32 * 2_143_295));
        assert_eq!(u.y, BigUint::from(221_064u32));
        for disc in fundamental_discriminants(1800, 2000) {
            let u = fundamental_unit(disc).unwrap();
            let norm = BigInt::from(u.x.clone()).pow(2) - BigInt::from(disc) * BigInt::from(u.y.clone()).pow(2);
            assert_eq!(norm, BigInt::from(4 * i64::from(u.norm_sign)));
            let approx = (big_ln(&u.x) - std::f64::consts::LN_2).max(0.0);
            assert!((u.regulator - approx).abs() < 1.0, "D = {disc}");
        }
    }
}
