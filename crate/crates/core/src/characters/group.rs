use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;

use super::DirichletCharacter;
use crate::arith::{factorize, gcd};
use crate::error::{Error, Result};
use crate::ComplexScalar;

/// The group `(ℤ/mℤ)^×` with a fixed generator basis, and with it the dual
/// group of characters.
///
/// Generators: one primitive root per odd prime power, `-1` for `4`, and
/// `{-1, 5}` for `2^k`, `k ≥ 3`, each lifted to a residue mod `m` that is
/// `1` modulo the other prime-power components.
#[derive(Debug)]
pub struct CharacterGroup {
    modulus: u64,
    generators: Vec<u64>,
    orders: Vec<u64>,
    /// lcm of the generator orders
    exponent: u64,
    /// `exponent / orders[i]`
    weights: Vec<u64>,
    /// `dlog[a]` is the offset of the exponent vector of `a` in `dlog_data`
    dlog: Vec<Option<usize>>,
    dlog_data: Vec<u32>,
    /// `e^{2πik/exponent}`
    roots: Vec<ComplexScalar>,
    /// `e^{2πiν/m}`, built on first use
    additive_roots: OnceLock<Vec<ComplexScalar>>,
}

fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = (base % m) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(m as i128) as u64
}

/// Smallest primitive root modulo the odd prime power `p^e`.
fn primitive_root(p: u64, e: u32) -> u64 {
    let pe = p.pow(e);
    let phi = (p - 1) * p.pow(e - 1);
    let mut prime_divisors: Vec<u64> = factorize(p - 1).expect("p > 1").primes().collect();
    if e > 1 {
        prime_divisors.push(p);
    }
    (2..pe)
        .find(|&g| g % p != 0 && prime_divisors.iter().all(|&q| pow_mod(g, phi / q, pe) != 1))
        .expect("odd prime powers have primitive roots")
}

pub fn build_group(modulus: u64) -> Result<Arc<CharacterGroup>> {
    if modulus == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let fact = factorize(modulus)?;
    for &(p, e) in fact.factors() {
        let pe = p.pow(e);
        let rest = modulus / pe;
        // x ≡ local (mod p^e), x ≡ 1 (mod rest)
        let lift = |local: u64| -> u64 {
            if rest == 1 {
                return local % pe;
            }
            let t = ((local + pe - 1) % pe) as u128 * inverse_mod(rest % pe, pe) as u128 % pe as u128;
            (1 + rest as u128 * t) as u64 % modulus
        };
        if p == 2 {
            if e >= 2 {
                generators.push(lift(pe - 1));
                orders.push(2);
            }
            if e >= 3 {
                generators.push(lift(5));
                orders.push(1 << (e - 2));
            }
        } else {
            generators.push(lift(primitive_root(p, e)));
            orders.push((p - 1) * p.pow(e - 1));
        }
    }

    let exponent = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));
    let weights = orders.iter().map(|&o| exponent / o).collect();
    let group_order: u64 = orders.iter().product();

    let rank = generators.len();
    let mut dlog = vec![None; modulus as usize];
    let mut dlog_data = Vec::with_capacity(group_order as usize * rank);
    let mut exps = vec![0u32; rank];
    for _ in 0..group_order {
        let value = generators
            .iter()
            .zip(&exps)
            .fold(1 % modulus, |acc, (&g, &k)| {
                (acc as u128 * pow_mod(g, u64::from(k), modulus) as u128 % modulus as u128) as u64
            });
        debug_assert!(dlog[value as usize].is_none());
        dlog[value as usize] = Some(dlog_data.len());
        dlog_data.extend_from_slice(&exps);
        // mixed-radix increment, first generator least significant
        for (k, &ord) in exps.iter_mut().zip(&orders) {
            *k += 1;
            if u64::from(*k) < ord {
                break;
            }
            *k = 0;
        }
    }

    let roots = (0..exponent)
        .map(|k| {
            let (s, c) = (TAU * k as f64 / exponent as f64).sin_cos();
            ComplexScalar::new(c, s)
        })
        .collect();

    Ok(Arc::new(CharacterGroup {
        modulus,
        generators,
        orders,
        exponent,
        weights,
        dlog,
        dlog_data,
        roots,
        additive_roots: OnceLock::new(),
    }))
}

impl CharacterGroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn generator_orders(&self) -> &[u64] {
        &self.orders
    }

    /// `φ(m)`.
    pub fn order(&self) -> u64 {
        self.orders.iter().product()
    }

    /// Exponent of the group: every character value is an `exponent`-th root
    /// of unity.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub(crate) fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Exponent vector of `a` over the generators, or `None` when
    /// `gcd(a, m) > 1`.
    pub fn dlog(&self, a: i64) -> Option<&[u32]> {
        let r = a.rem_euclid(self.modulus as i64) as usize;
        self.dlog[r].map(|off| &self.dlog_data[off..off + self.generators.len()])
    }

    pub(crate) fn root(&self, k: u64) -> ComplexScalar {
        self.roots[(k % self.exponent) as usize]
    }

    /// `e^{2πiν/m}` for `ν = 0..m`.
    pub fn additive_roots(&self) -> &[ComplexScalar] {
        self.additive_roots.get_or_init(|| {
            let m = self.modulus as f64;
            (0..self.modulus)
                .map(|v| {
                    let (s, c) = (TAU * v as f64 / m).sin_cos();
                    ComplexScalar::new(c, s)
                })
                .collect()
        })
    }

    /// Character with the given mixed-radix index.
    pub fn character(self: &Arc<Self>, index: u64) -> Result<DirichletCharacter> {
        if index >= self.order() {
            return Err(Error::invalid(format!(
                "character index {index} out of range for modulus {} ({} characters)",
                self.modulus,
                self.order()
            )));
        }
        let mut rest = index;
        let exps = self
            .orders
            .iter()
            .map(|&o| {
                let e = rest % o;
                rest /= o;
                e as u32
            })
            .collect();
        Ok(DirichletCharacter::from_parts(Arc::clone(self), exps))
    }

    pub fn principal(self: &Arc<Self>) -> DirichletCharacter {
        DirichletCharacter::from_parts(Arc::clone(self), vec![0; self.generators.len()])
    }

    pub fn is_unit(&self, a: i64) -> bool {
        gcd(a.unsigned_abs(), self.modulus) == 1
    }
}

/// All `φ(m)` characters in mixed-radix index order; the principal character
/// comes first.
pub fn enumerate_characters(group: &Arc<CharacterGroup>) -> Vec<DirichletCharacter> {
    (0..group.order()).map(|i| group.character(i).expect("index in range")).collect()
}
