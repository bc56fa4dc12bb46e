use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use super::{build_group, CharacterGroup};
use crate::arith::{divisors, is_fundamental_discriminant, kronecker_symbol};
use crate::error::{Error, Result};
use crate::ComplexScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A Dirichlet character modulo `m`, stored as its exponent vector over the
/// generators of the owning [`CharacterGroup`]: `χ(g_i) = e^{2πi k_i/ord_i}`.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<CharacterGroup>,
    exponents: Vec<u32>,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirichletCharacter")
            .field("modulus", &self.modulus())
            .field("index", &self.index())
            .field("exponents", &self.exponents)
            .finish()
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.exponents == other.exponents
    }
}

impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    pub(crate) fn from_parts(group: Arc<CharacterGroup>, exponents: Vec<u32>) -> Self {
        debug_assert_eq!(exponents.len(), group.generators().len());
        DirichletCharacter { group, exponents }
    }

    /// Builds the character taking the prescribed values on the generators.
    /// Each value must be a root of unity of order dividing the generator's
    /// order.
    pub fn from_generator_values<F>(group: &Arc<CharacterGroup>, value: F) -> Result<Self>
    where
        F: Fn(u64) -> ComplexScalar,
    {
        let mut exponents = Vec::with_capacity(group.generators().len());
        for (&g, &ord) in group.generators().iter().zip(group.generator_orders()) {
            let v = value(g);
            let turns = v.arg() / TAU * ord as f64;
            let k = (turns.round() as i64).rem_euclid(ord as i64) as u64;
            let expected = ComplexScalar::from_polar(1.0, TAU * k as f64 / ord as f64);
            if (expected - v).norm() > 1e-9 {
                return Err(Error::invalid(format!(
                    "value {v} at generator {g} is not a root of unity of order dividing {ord}"
                )));
            }
            exponents.push(k as u32);
        }
        Ok(DirichletCharacter::from_parts(Arc::clone(group), exponents))
    }

    pub fn group(&self) -> &Arc<CharacterGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Mixed-radix index, first generator least significant.
    pub fn index(&self) -> u64 {
        let mut index = 0;
        let mut radix = 1;
        for (&k, &ord) in self.exponents.iter().zip(self.group.generator_orders()) {
            index += u64::from(k) * radix;
            radix *= ord;
        }
        index
    }

    /// `χ(a) = e^{2πi j / N}` with `N` the group exponent; `None` when
    /// `gcd(a, m) > 1`.
    pub fn value_index(&self, a: i64) -> Option<u64> {
        let dlog = self.group.dlog(a)?;
        let n = self.group.exponent();
        let j = dlog
            .iter()
            .zip(&self.exponents)
            .zip(self.group.weights())
            .fold(0u64, |acc, ((&d, &k), &w)| (acc + u64::from(d) * u64::from(k) % n * w) % n);
        Some(j)
    }

    pub fn eval(&self, a: i64) -> ComplexScalar {
        match self.value_index(a) {
            Some(j) => self.group.root(j),
            None => ComplexScalar::new(0.0, 0.0),
        }
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&k| k == 0)
    }

    /// True when every value is real (`χ = χ̄`).
    pub fn is_real(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn order(&self) -> u64 {
        use num_integer::Integer;
        self.exponents
            .iter()
            .zip(self.group.generator_orders())
            .fold(1u64, |acc, (&k, &ord)| acc.lcm(&(ord / ord.gcd(&u64::from(k)))))
    }

    pub fn parity(&self) -> Parity {
        match self.value_index(-1) {
            Some(0) => Parity::Even,
            _ => Parity::Odd,
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn conjugate(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(self.group.generator_orders())
            .map(|(&k, &ord)| ((ord - u64::from(k)) % ord) as u32)
            .collect();
        DirichletCharacter::from_parts(Arc::clone(&self.group), exponents)
    }

    /// Pointwise product of two characters of the same modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus() != other.modulus() {
            return Err(Error::invalid("characters have different moduli"));
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(self.group.generator_orders())
            .map(|((&a, &b), &ord)| ((u64::from(a) + u64::from(b)) % ord) as u32)
            .collect();
        Ok(DirichletCharacter::from_parts(Arc::clone(&self.group), exponents))
    }

    /// Smallest `f | m` such that `χ` is trivial on units `a ≡ 1 (mod f)`.
    pub fn conductor(&self) -> u64 {
        let m = self.modulus();
        for f in divisors(m).expect("modulus is positive") {
            let trivial = (1..=m)
                .step_by(f as usize)
                .all(|a| matches!(self.value_index(a as i64), None | Some(0)));
            if trivial {
                return f;
            }
        }
        m
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus()
    }
}

/// The quadratic character `a ↦ (D / a)` as an element of the character group
/// modulo `D`.
pub fn kronecker_character(disc: i64) -> Result<DirichletCharacter> {
    if !is_fundamental_discriminant(disc) {
        return Err(Error::NotFundamentalDiscriminant(disc));
    }
    let group = build_group(disc as u64)?;
    let chi = DirichletCharacter::from_generator_values(&group, |g| {
        ComplexScalar::new(kronecker_symbol(disc, g) as f64, 0.0)
    })?;
    debug_assert!((0..disc).all(|a| {
        (chi.eval(a) - ComplexScalar::new(kronecker_symbol(disc, a as u64) as f64, 0.0)).norm() < 1e-12
    }));
    Ok(chi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use crate::characters::enumerate_characters;

    fn close(a: ComplexScalar, b: ComplexScalar) -> bool {
        (a - b).norm() < 1e-12
    }

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn enumeration_counts() {
        let g1 = build_group(1).unwrap();
        let chars = enumerate_characters(&g1);
        assert_eq!(chars.len(), 1);
        assert!(chars[0].is_principal());

        let g5 = build_group(5).unwrap();
        let chars = enumerate_characters(&g5);
        assert_eq!(chars.len(), 4);
        assert!(chars[0].is_principal());
        for (nu, chi) in chars.iter().enumerate() {
            let i_pow = c(0.0, 1.0).powu(nu as u32);
            assert!(close(chi.eval(2), i_pow), "chi_{nu}(2) = i^{nu}");
            assert_eq!(chi.index(), nu as u64);
        }

        let g12 = build_group(12).unwrap();
        let chars = enumerate_characters(&g12);
        assert_eq!(chars.len(), 4);
        assert!(chars.iter().all(|chi| chi.order() <= 2));
    }

    #[test]
    fn evaluation_examples() {
        let g5 = build_group(5).unwrap();
        let chars = enumerate_characters(&g5);
        assert!(close(chars[0].eval(3), c(1.0, 0.0)));
        assert!(close(chars[1].eval(2), c(0.0, 1.0)));
        assert!(close(chars[1].eval(4), c(-1.0, 0.0)));
        assert_eq!(chars[1].eval(10), c(0.0, 0.0));
        assert!(close(chars[1].eval(-3), chars[1].eval(2)));
    }

    #[test]
    fn parity_examples() {
        let g5 = build_group(5).unwrap();
        let chars = enumerate_characters(&g5);
        assert_eq!(chars[0].parity(), Parity::Even);
        assert_eq!(chars[1].parity(), Parity::Odd);
        assert_eq!(chars[2].parity(), Parity::Even);
        assert_eq!(chars[3].parity(), Parity::Odd);
        for m in [1u64, 2, 7, 30] {
            assert_eq!(build_group(m).unwrap().principal().parity(), Parity::Even);
        }
    }

    #[test]
    fn conductor_examples() {
        let g5 = build_group(5).unwrap();
        let chars = enumerate_characters(&g5);
        assert_eq!(chars[0].conductor(), 1);
        assert!(!chars[0].is_primitive());
        assert_eq!(chars[2].conductor(), 5);
        assert!(chars[2].is_primitive());

        let chi5 = kronecker_character(5).unwrap();
        assert_eq!(chi5, chars[2]);
        let g10 = build_group(10).unwrap();
        let induced = DirichletCharacter::from_generator_values(&g10, |a| chi5.eval(a as i64)).unwrap();
        for a in 0..10 {
            if gcd(a as u64, 10) == 1 {
                assert!(close(induced.eval(a), chi5.eval(a)));
            }
        }
        assert_eq!(induced.conductor(), 5);
        assert!(!induced.is_primitive());
    }

    #[test]
    fn conjugate_examples() {
        let g5 = build_group(5).unwrap();
        let chars = enumerate_characters(&g5);
        assert_eq!(chars[0].conjugate(), chars[0]);
        assert_eq!(chars[1].conjugate(), chars[3]);
        assert_eq!(chars[2].conjugate(), chars[2]);
        for m in 1..=30u64 {
            let g = build_group(m).unwrap();
            for chi in enumerate_characters(&g) {
                let bar = chi.conjugate();
                for a in 0..m as i64 {
                    assert!(close(bar.eval(a), chi.eval(a).conj()));
                }
                if chi.order() <= 2 {
                    assert_eq!(bar, chi);
                    assert!(chi.is_real());
                }
            }
        }
    }

    #[test]
    fn homomorphism_and_support() {
        for m in 1..=40u64 {
            let g = build_group(m).unwrap();
            for chi in enumerate_characters(&g) {
                assert!(close(chi.eval(1), c(1.0, 0.0)));
                for a in 0..m as i64 {
                    let va = chi.eval(a);
                    assert_eq!(va.norm() == 0.0, gcd(a as u64, m) != 1, "m={m} a={a}");
                    if va.norm() != 0.0 {
                        assert!((va.norm() - 1.0).abs() < 1e-12);
                        assert!(close(va.powu(chi.order() as u32), c(1.0, 0.0)));
                    }
                    for b in 0..m as i64 {
                        assert!(close(chi.eval(a * b), va * chi.eval(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonality_relations() {
        for m in 1..=24u64 {
            let g = build_group(m).unwrap();
            let chars = enumerate_characters(&g);
            let phi = g.order() as f64;
            for a in 0..m as i64 {
                for cc in 0..m as i64 {
                    let s: ComplexScalar = chars.iter().map(|chi| chi.eval(cc).conj() * chi.eval(a)).sum();
                    let expected = if a == cc && gcd((a * cc) as u64, m) == 1 { phi } else { 0.0 };
                    assert!((s - c(expected, 0.0)).norm() < 1e-10, "m={m} a={a} c={cc}");
                }
            }
            for x in &chars {
                for y in &chars {
                    let s: ComplexScalar = (0..m as i64).map(|a| x.eval(a) * y.eval(a).conj()).sum();
                    let expected = if x == y { 1.0 } else { 0.0 };
                    assert!((s / phi - c(expected, 0.0)).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn kronecker_characters_are_even_primitive() {
        for disc in crate::arith::fundamental_discriminants(5, 300) {
            let chi = kronecker_character(disc).unwrap();
            assert!(chi.is_even());
            assert!(chi.is_primitive(), "D = {disc}");
            assert!(chi.is_real());
            assert!(!chi.is_principal());
        }
        assert!(kronecker_character(9).is_err());
    }

    #[test]
    fn rejects_non_root_values() {
        let g5 = build_group(5).unwrap();
        assert!(DirichletCharacter::from_generator_values(&g5, |_| c(0.5, 0.0)).is_err());
        assert!(g5.character(4).is_err());
    }
}
