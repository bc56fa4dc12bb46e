use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

/// The first `count` Bernoulli numbers `B_0, B_1, ...` (with `B_1 = -1/2`),
/// from the recurrence `Σ_{k=0}^{n} C(n+1, k) B_k = 0`.
pub fn bernoulli_numbers(count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    for n in 0..count {
        if n == 0 {
            out.push(Rational::one());
            continue;
        }
        // binomials C(n+1, k) for k = 0..n
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (k, b) in out.iter().enumerate() {
            acc += Rational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
        }
        // binom is now C(n+1, n) = n + 1
        out.push(-acc / Rational::from_integer(binom));
    }
    out
}
