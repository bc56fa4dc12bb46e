//! Dirichlet characters modulo `m`, realised through an explicit generator
//! basis of `(ℤ/mℤ)^×`, together with the classical character sums.

mod character;
mod group;
mod sums;

pub use character::{kronecker_character, DirichletCharacter, Parity};
pub use group::{build_group, enumerate_characters, CharacterGroup};
pub use sums::{b_sum, gauss_sum, ramanujan_sum, ramanujan_sum_direct};
