//! Irreducible characters of `S_n`, Young's orthogonal idempotents and the
//! central idempotents `P_λ` (by two independent routes).

pub mod cache;
mod characters;
mod idempotents;

pub use characters::{character, character_table, install_character_table, CharacterTable, CHARACTER_SCHEMA};
pub use idempotents::{central_idempotent, young_idempotent, CentralRoute};
