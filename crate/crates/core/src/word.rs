//! Free-group words over the generator alphabet.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::symbol::GeneratorSymbol;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub symbol: GeneratorSymbol,
    pub inverse: bool,
}

impl Letter {
    pub fn new(symbol: GeneratorSymbol, exponent: i8) -> Self {
        debug_assert!(exponent == 1 || exponent == -1);
        Letter {
            symbol,
            inverse: exponent < 0,
        }
    }

    pub fn pos(symbol: GeneratorSymbol) -> Self {
        Letter {
            symbol,
            inverse: false,
        }
    }

    pub fn neg(symbol: GeneratorSymbol) -> Self {
        Letter {
            symbol,
            inverse: true,
        }
    }

    pub fn exponent(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            inverse: !self.inverse,
            ..self
        }
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}^-1", self.symbol)
        } else {
            write!(f, "{}", self.symbol)
        }
    }
}

/// Freely reduce a raw letter sequence in place (stack scan).
pub fn free_reduce(letters: &mut Vec<Letter>) {
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters.iter() {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    *letters = out;
}

pub fn is_freely_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|w| !w[0].cancels(w[1]))
}

/// Inverse of a raw letter sequence.
pub fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inv()).collect()
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Freely reduces the given letters.
    pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut v: Vec<Letter> = letters.into_iter().collect();
        free_reduce(&mut v);
        Word { letters: v }
    }

    pub fn generator(s: GeneratorSymbol) -> Self {
        Word {
            letters: vec![Letter::pos(s)],
        }
    }

    /// Product of the given symbols, each with exponent +1.
    pub fn product<I: IntoIterator<Item = GeneratorSymbol>>(symbols: I) -> Self {
        Word::reduce(symbols.into_iter().map(Letter::pos))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: invert_letters(&self.letters),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.letters);
        v.extend_from_slice(&other.letters);
        free_reduce(&mut v);
        Word { letters: v }
    }

    /// `by * self * by^-1`
    pub fn conjugate(&self, by: &Word) -> Word {
        by.concat(self).concat(&by.inverse())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::with_capacity(base.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            out.extend_from_slice(&base.letters);
        }
        Word::reduce(out)
    }

    /// Replace each letter `(s, e)` by `map(s)^e` and reduce.
    pub fn substitute_with<F>(&self, mut map: F) -> Result<Word, Error>
    where
        F: FnMut(GeneratorSymbol) -> Option<Word>,
    {
        let mut cache: HashMap<GeneratorSymbol, (Word, Word)> = HashMap::new();
        let mut out = Vec::with_capacity(self.len());
        for l in &self.letters {
            if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(l.symbol) {
                let img =
                    map(l.symbol).ok_or_else(|| Error::MissingSymbol(l.symbol.to_string()))?;
                let inv = img.inverse();
                e.insert((img, inv));
            }
            let (img, inv) = &cache[&l.symbol];
            out.extend_from_slice(if l.inverse {
                &inv.letters
            } else {
                &img.letters
            });
        }
        free_reduce(&mut out);
        Ok(Word { letters: out })
    }

    pub fn substitute(&self, map: &HashMap<GeneratorSymbol, Word>) -> Result<Word, Error> {
        self.substitute_with(|s| map.get(&s).cloned())
    }

    /// Parity of the word under `p`, as 0 or 1.
    pub fn parity(&self, p: &ParityMap) -> Result<u8, Error> {
        let mut acc = 0u8;
        for l in &self.letters {
            acc ^= p.get(l.symbol)?;
        }
        Ok(acc)
    }

    pub fn exponent_sum(&self, s: GeneratorSymbol) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.symbol == s)
            .map(|l| l.exponent() as i64)
            .sum()
    }

    pub fn symbols(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        self.letters.iter().map(|l| l.symbol)
    }

    pub fn contains_symbol(&self, s: GeneratorSymbol) -> bool {
        self.letters.iter().any(|l| l.symbol == s)
    }

    /// Raw cyclic rotation: the last `len - k` letters moved in front, i.e.
    /// `w[k..] w[..k]`. The result need not be freely reduced.
    pub fn rotation(&self, k: usize) -> Vec<Letter> {
        rotate_letters(&self.letters, k)
    }

    /// Remove matching letter pairs from both ends; returns the cyclic core.
    pub fn cyclic_core(&self) -> Word {
        let l = &self.letters;
        let (mut i, mut j) = (0usize, l.len());
        while j >= i + 2 && l[i].cancels(l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word {
            letters: l[i..j].to_vec(),
        }
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

pub fn rotate_letters(letters: &[Letter], k: usize) -> Vec<Letter> {
    if letters.is_empty() {
        return Vec::new();
    }
    let k = k % letters.len();
    let mut v = Vec::with_capacity(letters.len());
    v.extend_from_slice(&letters[k..]);
    v.extend_from_slice(&letters[..k]);
    v
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl From<GeneratorSymbol> for Word {
    fn from(s: GeneratorSymbol) -> Word {
        Word::generator(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(f, &self.letters)
    }
}

pub(crate) fn fmt_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Text form of a raw letter sequence.
pub fn letters_to_text(letters: &[Letter]) -> String {
    struct Raw<'a>(&'a [Letter]);
    impl fmt::Display for Raw<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            fmt_letters(f, self.0)
        }
    }
    Raw(letters).to_string()
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word, Error> {
        crate::parse::parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Homomorphism from the free group on an alphabet to Z/2.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParityMap {
    assignment: BTreeMap<GeneratorSymbol, u8>,
}

impl ParityMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (GeneratorSymbol, u8)>>(pairs: I) -> Self {
        ParityMap {
            assignment: pairs.into_iter().map(|(s, p)| (s, p & 1)).collect(),
        }
    }

    pub fn set(&mut self, s: GeneratorSymbol, parity: u8) {
        self.assignment.insert(s, parity & 1);
    }

    pub fn get(&self, s: GeneratorSymbol) -> Result<u8, Error> {
        self.assignment
            .get(&s)
            .copied()
            .ok_or_else(|| Error::MissingSymbol(s.to_string()))
    }

    pub fn is_total_on(&self, alphabet: &[GeneratorSymbol]) -> bool {
        alphabet.iter().all(|s| self.assignment.contains_key(s))
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorSymbol, u8)> + '_ {
        self.assignment.iter().map(|(s, p)| (*s, *p))
    }
}
