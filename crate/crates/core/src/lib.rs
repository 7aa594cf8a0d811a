//! Exact inertial (orbifold) products for global quotients `[X/G]` with `G`
//! finite and `X` a point or a linear representation.

pub mod characters;
pub mod chern_loc;
pub mod cyclotomic;
pub mod dixon;
pub mod error;
pub mod group;
pub mod inertia;
pub mod input;
pub mod logtrace;
pub mod rings;

pub use characters::{character_table, CharacterTable, ClassFunction};
pub use cyclotomic::{Cyclotomic, Rational};
pub use error::{Error, Result};
pub use group::{FiniteGroup, Subgroup};
