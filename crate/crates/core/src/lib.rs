//! Finite presentations of the mapping class group of a nonorientable
//! surface with at most one boundary component and of its twist subgroup,
//! together with the machinery to derive, check and cross-validate them:
//! free-group words, certified Tietze moves, Reidemeister-Schreier
//! rewriting, a GF(2) homology representation and Smith normal form
//! abelianization.

pub mod abelianize;
pub mod catalog;
pub mod derivation;
pub mod error;
pub mod f2rep;
pub mod parse;
pub mod presentation;
pub mod rewriting;
pub mod serialize;
pub mod symbol;
pub mod tietze;
pub mod word;

pub use error::Error;
pub use presentation::{Kind, Meta, Presentation, Relator, Variant};
pub use symbol::{Family, GeneratorSymbol};
pub use word::{Letter, ParityMap, Word};
