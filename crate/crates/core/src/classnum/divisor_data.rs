use crate::arith::divisors;
use crate::characters::{build_group, enumerate_characters, gauss_sum, DirichletCharacter, Parity};
use crate::config::EngineConfig;
use crate::error::Result;
use crate::zeta::{l_series_from_table, HurwitzTable};
use crate::ComplexScalar;

/// One character `χ mod d` for a divisor `d | m`, with the ingredients of
/// the odd (`L(2, ·)`) or even (`L(3, ·)`) block.
#[derive(Debug, Clone)]
pub struct CharacterEntry {
    pub divisor: u64,
    pub character: DirichletCharacter,
    pub parity: Parity,
    /// `d²/φ(d)` for odd characters, `d³/φ(d)` for even ones.
    pub weight: f64,
    /// `τ(χ̄) L(2, χ)` for odd, `τ(χ̄) L(3, χ)` for even characters.
    pub coefficient: ComplexScalar,
}

/// Every character of every divisor of `m`, split by parity.
#[derive(Debug, Clone)]
pub struct DivisorCharacterData {
    modulus: u64,
    entries: Vec<CharacterEntry>,
}

impl DivisorCharacterData {
    pub fn new(modulus: u64, cfg: &EngineConfig) -> Result<Self> {
        let mut entries = Vec::new();
        for d in divisors(modulus)? {
            let group = build_group(d)?;
            let phi = group.order() as f64;
            let chars = enumerate_characters(&group);
            let has_odd = chars.iter().any(|c| !c.is_even());
            let table2 = if has_odd { Some(HurwitzTable::new(2, d, cfg)?) } else { None };
            let table3 = HurwitzTable::new(3, d, cfg)?;
            let df = d as f64;
            for chi in chars {
                let parity = chi.parity();
                let (weight, l) = match parity {
                    Parity::Odd => {
                        let table = table2.as_ref().expect("built when odd characters exist");
                        (df * df / phi, l_series_from_table(&chi, table)?.value)
                    }
                    Parity::Even => (df * df * df / phi, l_series_from_table(&chi, &table3)?.value),
                };
                let coefficient = gauss_sum(&chi.conjugate()) * l;
                entries.push(CharacterEntry { divisor: d, character: chi, parity, weight, coefficient });
            }
        }
        Ok(DivisorCharacterData { modulus, entries })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[CharacterEntry] {
        &self.entries
    }

    /// `Σ_{d | m} w_d Σ_{χ mod d, parity} f(χ) τ(χ̄) L(s, χ)`.
    pub fn block<F>(&self, parity: Parity, mut f: F) -> ComplexScalar
    where
        F: FnMut(&DirichletCharacter) -> ComplexScalar,
    {
        self.entries
            .iter()
            .filter(|e| e.parity == parity)
            .map(|e| f(&e.character) * e.coefficient * e.weight)
            .sum()
    }
}
