//! Named derived words.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::parse::w;
use crate::word::Word;

use super::{a_run, b_seq_top, embedding_map};

/// Entries longer than this are left out of the table (and listed in
/// `omitted`); the `b_i` recursion grows by a factor of about seven per step.
pub const MAX_DERIVED_LEN: usize = 1 << 22;

/// `z_k` as text over `a_i` and `e`, for `3 <= k`.
pub(crate) fn z_text(k: u32) -> String {
    let mut left: Vec<String> = (4..=k).rev().map(|j| format!("a{} a{j}", j - 1)).collect();
    left.push("e^-1 a3 a1^-1 e^-1".into());
    let right: Vec<String> = (2..=k).map(|j| format!("a{j}^-1 a{}^-1", j - 1)).collect();
    format!("({}) ({})", left.join(" "), right.join(" "))
}

/// `z_k` over the twist alphabet; requires `3 <= k <= g - 1`.
pub fn z_word(g: u32, k: u32) -> Result<Word, Error> {
    if k < 3 || k + 1 > g {
        return Err(Error::OutOfRange(format!(
            "z_{k} needs 3 <= k <= g - 1 = {}",
            g.saturating_sub(1)
        )));
    }
    Ok(w(&z_text(k)))
}

/// `b_i` expanded through `b_0 = a1`, `b_1 = b` and
/// `b_{i+1} = (b_{i-1} a_{2i} .. a_{2i+3} b_i)^5 (b_{i-1} a_{2i} .. a_{2i+3})^-6`.
/// Returns `None` once the word exceeds `max_len`.
pub fn b_sequence_word(i: u32, max_len: usize) -> Option<Word> {
    let mut prev = w("a1");
    if i == 0 {
        return Some(prev);
    }
    let mut cur = w("b");
    for k in 1..i {
        let run = prev.concat(&w(&a_run(2 * k, 2 * k + 3)));
        let next = run.concat(&cur).pow(5).concat(&run.pow(-6));
        if next.len() > max_len {
            return None;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Some(cur)
}

/// Derived words for a genus. `twist` holds words over the twist-subgroup
/// alphabet, `ambient` words over the mapping class group alphabet; names
/// follow the generator text syntax where one exists (`e`, `B2`, `r`, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedWordTable {
    pub g: u32,
    pub s: u8,
    pub twist: BTreeMap<String, Word>,
    pub ambient: BTreeMap<String, Word>,
    /// Names whose words exceed `MAX_DERIVED_LEN`.
    pub omitted: Vec<String>,
}

impl DerivedWordTable {
    /// Ambient form of a derived word.
    pub fn get(&self, name: &str) -> Result<&Word, Error> {
        self.ambient.get(name).ok_or_else(|| {
            Error::OutOfRange(format!("no derived word {name:?} for g = {}", self.g))
        })
    }

    pub fn get_twist(&self, name: &str) -> Result<&Word, Error> {
        self.twist.get(name).ok_or_else(|| {
            Error::OutOfRange(format!("no twist-level word {name:?} for g = {}", self.g))
        })
    }
}

/// The `rho` word: `(a1 .. a_{g-1})^g` for odd `g`, and for even `g`
/// `(y^-1 A y A)^{(g-2)/2} y^-1 A` with `A = a2 .. a_{g-1}`.
pub fn rho_word(g: u32) -> Word {
    if g % 2 == 1 {
        w(&format!("({})^{g}", a_run(1, g - 1)))
    } else {
        let a = a_run(2, g - 1);
        w(&format!("(y^-1 {a} y {a})^{} y^-1 {a}", (g - 2) / 2))
    }
}

pub fn derived_words(g: u32, s: u8) -> Result<DerivedWordTable, Error> {
    if g < 3 || s > 1 {
        return Err(Error::OutOfRange(format!(
            "derived words need g >= 3 and s <= 1 (got g = {g}, s = {s})"
        )));
    }
    let mut twist = BTreeMap::new();
    let mut ambient = BTreeMap::new();
    let mut omitted = Vec::new();
    let emb = embedding_map(g, s);
    let to_ambient = |x: &Word| {
        x.substitute_with(|s| Some(emb.get(&s).cloned().unwrap_or_else(|| Word::generator(s))))
    };

    ambient.insert("e".into(), w("y a2^-1 y^-1"));
    ambient.insert("f".into(), w("y^-1 a2^-1 y"));
    ambient.insert("u".into(), w("y y"));
    if g >= 4 {
        ambient.insert("c".into(), w("y b y^-1"));
    }
    if let Some(top) = b_seq_top(g) {
        for i in 0..=top {
            match b_sequence_word(i, MAX_DERIVED_LEN) {
                Some(b) => {
                    ambient.insert(format!("B{i}"), b.conjugate(&w("y")));
                    ambient.insert(format!("b{i}"), b);
                }
                None => {
                    omitted.push(format!("b{i}"));
                    omitted.push(format!("B{i}"));
                }
            }
        }
    }
    if s == 0 {
        let rho = rho_word(g);
        ambient.insert("R".into(), w("y").concat(&rho));
        ambient.insert("r".into(), rho);
    }
    for k in 3..g {
        twist.insert(format!("z{k}"), z_word(g, k)?);
    }
    if g >= 4 {
        twist.insert("e'".into(), w("(a3 a2)^-1 e^-1 (a3 a2)"));
        twist.insert("f'".into(), w("(a1 a2 a3) f^-1 (a1 a2 a3)^-1"));
    }
    if g >= 5 {
        twist.insert("c'".into(), w("(a1 e a3^-1 a4^-1) c (a1 e a3^-1 a4^-1)^-1"));
        twist.insert("b'".into(), w("(a4 a3 a2 a1)^-1 b^-1 (a4 a3 a2 a1)"));
        twist.insert("a'".into(), w("(a3^-1 e a2 a3)^-1 a4 (a3^-1 e a2 a3)"));
    }
    if g >= 4 {
        twist.insert(
            "Bbar1_sym".into(),
            w("(a2 e a1) a3^-1 (a2 e a1) a3 (a2 f a1) a3^-1 (a2 f a1) a3"),
        );
    }
    twist.insert("Bbar2_1_sym".into(), w("u^-1 (a2 e a1)^2 (a2 f a1)^2"));
    for (name, word) in &twist {
        ambient.insert(name.clone(), to_ambient(word)?);
    }
    Ok(DerivedWordTable {
        g,
        s,
        twist,
        ambient,
        omitted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_and_rho() {
        let t = derived_words(5, 0).unwrap();
        assert_eq!(t.get("e").unwrap(), &w("y a2^-1 y^-1"));
        assert_eq!(t.get("r").unwrap(), &w("(a1 a2 a3 a4)^5"));
        assert!(t.get("b0").is_err());
    }

    #[test]
    fn z3_instantiates_the_product() {
        assert_eq!(
            z_word(4, 3).unwrap(),
            w("e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1")
        );
        assert_eq!(
            z_word(6, 5).unwrap(),
            w("a4 a5 a3 a4 e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 a4^-1")
        );
        assert!(z_word(4, 4).is_err());
        assert!(z_word(6, 2).is_err());
    }

    #[test]
    fn b_sequence_starts() {
        assert_eq!(b_sequence_word(0, 100).unwrap(), w("a1"));
        assert_eq!(b_sequence_word(1, 100).unwrap(), w("b"));
        let b2 = b_sequence_word(2, 1000).unwrap();
        assert_eq!(b2, w("(a1 a2 a3 a4 a5 b)^5 (a1 a2 a3 a4 a5)^-6"));
        assert!(b_sequence_word(5, 100).is_none());
    }
}
