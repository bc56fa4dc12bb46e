use std::sync::OnceLock;

use crate::error::{Error, Result};

const SIEVE_LIMIT: u64 = 1 << 16;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = SIEVE_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Prime factorization `n = ∏ p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn mobius(&self) -> i64 {
        if self.is_squarefree() {
            if self.factors.len() % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }

    pub fn euler_phi(&self) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| (p - 1) * p.pow(e - 1))
            .product()
    }

    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let current = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..current {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Trial division against a sieve of primes below 2^16, then by odd
/// candidates for whatever cofactor remains.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::invalid("cannot factorize 0"));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        push(p, &mut rest);
    }
    let mut p = SIEVE_LIMIT + 1;
    while rest > 1 && p.saturating_mul(p) <= rest {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn mobius(n: u64) -> Result<i64> {
    Ok(factorize(n)?.mobius())
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while n > 1 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        out
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(5).unwrap().factors(), &[(5, 1)]);
        assert_eq!(factorize(360).unwrap().factors(), trial_division(360).as_slice());
        assert_eq!(factorize(360).unwrap().factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorize_matches_trial_division() {
        for n in 1..3000 {
            assert_eq!(factorize(n).unwrap().factors(), trial_division(n).as_slice(), "n = {n}");
        }
        // cofactor beyond the sieve
        let big = 65_537u64 * 65_539;
        assert_eq!(factorize(big).unwrap().factors(), &[(65_537, 1), (65_539, 1)]);
    }

    #[test]
    fn multiplicative_function_examples() {
        assert_eq!(mobius(1).unwrap(), 1);
        assert_eq!(mobius(12).unwrap(), 0);
        assert_eq!(mobius(30).unwrap(), -1);
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(5).unwrap(), 4);
        let direct = (1..=36u64).filter(|&a| gcd(a, 36) == 1).count() as u64;
        assert_eq!(euler_phi(36).unwrap(), direct);
        assert_eq!(direct, 12);
        assert!(mobius(0).is_err());
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(divisors(5).unwrap(), vec![1, 5]);
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert!(divisors(0).is_err());
    }

    #[test]
    fn mobius_and_phi_are_multiplicative() {
        for a in 1..=50u64 {
            for b in 1..=50u64 {
                if gcd(a, b) != 1 {
                    continue;
                }
                assert_eq!(mobius(a * b).unwrap(), mobius(a).unwrap() * mobius(b).unwrap());
                assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
            }
        }
    }

    #[test]
    fn divisor_sum_identities() {
        for n in 1..=500u64 {
            let divs = divisors(n).unwrap();
            let phi_sum: u64 = divs.iter().map(|&d| euler_phi(d).unwrap()).sum();
            assert_eq!(phi_sum, n);
            let mu_sum: i64 = divs.iter().map(|&d| mobius(d).unwrap()).sum();
            assert_eq!(mu_sum, i64::from(n == 1));
        }
    }
}
