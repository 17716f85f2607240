//! Generator alphabet.
//!
//! Every presentation in the toolkit is written over a closed family of
//! generator symbols: the Dehn twists `a_i`, `b`, `b_i`, the crosscap slide
//! `y`, the twist-subgroup generators `e`, `f`, `y^2`, `c`, `bbar_i`, and the
//! closed-surface generators `rho`, `rhobar`.
//!
//! Symbols produced by the Reidemeister-Schreier process for a non-trivial
//! coset carry a coset tag; `a3` in coset 1 prints as `a3_y` and stands for
//! the Schreier generator `y a3 y^-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Largest genus accepted by default by catalog builders and the parser.
pub const DEFAULT_MAX_GENUS: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    Y,
    E,
    F,
    Usq,
    C,
    BSeq,
    BBar,
    Rho,
    RhoBar,
}

impl Family {
    pub fn is_indexed(self) -> bool {
        matches!(self, Family::A | Family::BSeq | Family::BBar)
    }

    fn stem(self) -> &'static str {
        match self {
            Family::A => "a",
            Family::B => "b",
            Family::Y => "y",
            Family::E => "e",
            Family::F => "f",
            Family::Usq => "u",
            Family::C => "c",
            Family::BSeq => "b",
            Family::BBar => "B",
            Family::Rho => "r",
            Family::RhoBar => "R",
        }
    }
}

/// A generator symbol. `index` is present exactly for the indexed families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorSymbol {
    family: Family,
    index: Option<u32>,
    coset: u8,
}

impl GeneratorSymbol {
    pub fn new(family: Family, index: Option<u32>) -> Result<Self, Error> {
        if family.is_indexed() != index.is_some() {
            return Err(Error::InvalidSymbol(format!(
                "family {family:?} {} an index",
                if family.is_indexed() {
                    "requires"
                } else {
                    "takes no"
                }
            )));
        }
        Ok(GeneratorSymbol {
            family,
            index,
            coset: 0,
        })
    }

    const fn plain(family: Family) -> Self {
        GeneratorSymbol {
            family,
            index: None,
            coset: 0,
        }
    }

    const fn indexed(family: Family, i: u32) -> Self {
        GeneratorSymbol {
            family,
            index: Some(i),
            coset: 0,
        }
    }

    pub const fn a(i: u32) -> Self {
        Self::indexed(Family::A, i)
    }
    pub const fn b() -> Self {
        Self::plain(Family::B)
    }
    pub const fn y() -> Self {
        Self::plain(Family::Y)
    }
    pub const fn e() -> Self {
        Self::plain(Family::E)
    }
    pub const fn f() -> Self {
        Self::plain(Family::F)
    }
    /// The twist-subgroup generator `y^2`, atomic in twist alphabets.
    pub const fn usq() -> Self {
        Self::plain(Family::Usq)
    }
    pub const fn c() -> Self {
        Self::plain(Family::C)
    }
    pub const fn bseq(i: u32) -> Self {
        Self::indexed(Family::BSeq, i)
    }
    pub const fn bbar(i: u32) -> Self {
        Self::indexed(Family::BBar, i)
    }
    pub const fn rho() -> Self {
        Self::plain(Family::Rho)
    }
    pub const fn rhobar() -> Self {
        Self::plain(Family::RhoBar)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn index(&self) -> Option<u32> {
        self.index
    }

    /// Coset tag; 0 for ordinary symbols.
    pub fn coset(&self) -> u8 {
        self.coset
    }

    /// The same symbol tagged with a coset of a Schreier transversal.
    pub fn in_coset(self, coset: u8) -> Self {
        GeneratorSymbol { coset, ..self }
    }

    /// The symbol with its coset tag stripped.
    pub fn base(self) -> Self {
        self.in_coset(0)
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.stem())?;
        if let Some(i) = self.index {
            write!(f, "{i}")?;
        }
        match self.coset {
            0 => Ok(()),
            1 => f.write_str("_y"),
            k => write!(f, "_c{k}"),
        }
    }
}

impl FromStr for GeneratorSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidSymbol(s.to_string());
        let (body, coset) = match s.split_once('_') {
            None => (s, 0u8),
            Some((body, "y")) => (body, 1),
            Some((body, tag)) => {
                let k = tag
                    .strip_prefix('c')
                    .and_then(|d| d.parse::<u8>().ok())
                    .filter(|&k| k >= 2)
                    .ok_or_else(bad)?;
                (body, k)
            }
        };
        let mut chars = body.chars();
        let head = chars.next().ok_or_else(bad)?;
        let digits = chars.as_str();
        let index = if digits.is_empty() {
            None
        } else {
            if !digits.bytes().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            Some(digits.parse::<u32>().map_err(|_| bad())?)
        };
        let sym = match (head, index) {
            ('a', Some(i)) if i >= 1 => GeneratorSymbol::a(i),
            ('b', None) => GeneratorSymbol::b(),
            ('b', Some(i)) => GeneratorSymbol::bseq(i),
            ('B', Some(i)) => GeneratorSymbol::bbar(i),
            ('y', None) => GeneratorSymbol::y(),
            ('e', None) => GeneratorSymbol::e(),
            ('f', None) => GeneratorSymbol::f(),
            ('u', None) => GeneratorSymbol::usq(),
            ('c', None) => GeneratorSymbol::c(),
            ('r', None) => GeneratorSymbol::rho(),
            ('R', None) => GeneratorSymbol::rhobar(),
            _ => return Err(bad()),
        };
        if let Some(i) = index {
            if i > 2 * DEFAULT_MAX_GENUS {
                return Err(Error::InvalidSymbol(format!(
                    "{s}: index exceeds alphabet bound"
                )));
            }
        }
        Ok(sym.in_coset(coset))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let syms = [
            GeneratorSymbol::a(1),
            GeneratorSymbol::a(11),
            GeneratorSymbol::b(),
            GeneratorSymbol::bseq(0),
            GeneratorSymbol::bbar(3),
            GeneratorSymbol::y(),
            GeneratorSymbol::usq(),
            GeneratorSymbol::rho(),
            GeneratorSymbol::rhobar(),
            GeneratorSymbol::a(4).in_coset(1),
            GeneratorSymbol::b().in_coset(3),
        ];
        for s in syms {
            let text = s.to_string();
            assert_eq!(text.parse::<GeneratorSymbol>().unwrap(), s, "{text}");
        }
    }

    #[test]
    fn index_presence_is_enforced() {
        assert!(GeneratorSymbol::new(Family::A, None).is_err());
        assert!(GeneratorSymbol::new(Family::Y, Some(2)).is_err());
        assert_eq!(
            GeneratorSymbol::new(Family::BBar, Some(2)).unwrap(),
            GeneratorSymbol::bbar(2)
        );
    }

    #[test]
    fn b_and_b0_are_distinct() {
        assert_ne!(GeneratorSymbol::b(), GeneratorSymbol::bseq(0));
        assert_eq!(
            "b0".parse::<GeneratorSymbol>().unwrap(),
            GeneratorSymbol::bseq(0)
        );
    }

    #[test]
    fn rejects_junk() {
        for s in ["", "x", "a", "a0", "y2", "a1_z", "a1_c1", "e7"] {
            assert!(s.parse::<GeneratorSymbol>().is_err(), "{s}");
        }
    }
}
