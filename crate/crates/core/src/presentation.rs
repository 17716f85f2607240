//! Finitely presented groups with labelled relators.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::symbol::GeneratorSymbol;
use crate::word::{rotate_letters, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Mcg,
    Twist,
    /// Small hand-written groups (tests, examples).
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    #[serde(rename = "standard")]
    Standard,
    #[serde(rename = "uwF")]
    UwF,
    #[serde(rename = "full")]
    Full,
    #[serde(rename = "reduced")]
    Reduced,
    /// Unsimplified Reidemeister-Schreier output.
    #[serde(rename = "raw")]
    Raw,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Mcg => "mcg",
            Kind::Twist => "twist",
            Kind::Other => "other",
        })
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::UwF => "uwF",
            Variant::Full => "full",
            Variant::Reduced => "reduced",
            Variant::Raw => "raw",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "mcg" => Ok(Kind::Mcg),
            "twist" => Ok(Kind::Twist),
            "other" => Ok(Kind::Other),
            _ => Err(Error::InvalidKey(format!("unknown kind {s:?}"))),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "standard" => Ok(Variant::Standard),
            "uwF" | "uwf" => Ok(Variant::UwF),
            "full" => Ok(Variant::Full),
            "reduced" => Ok(Variant::Reduced),
            "raw" => Ok(Variant::Raw),
            _ => Err(Error::InvalidKey(format!("unknown variant {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Meta {
    pub g: u32,
    pub s: u8,
    pub kind: Kind,
    pub variant: Variant,
}

impl Meta {
    pub fn other() -> Self {
        Meta {
            g: 0,
            s: 0,
            kind: Kind::Other,
            variant: Variant::Standard,
        }
    }
}

/// Where a Reidemeister-Schreier relator came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Provenance {
    pub source: String,
    pub transversal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relator {
    pub label: String,
    pub word: Word,
    pub provenance: Option<Provenance>,
}

impl Relator {
    /// The label is normalized (`Bbar7_1` becomes `B̄7₁`).
    pub fn new(label: impl Into<String>, word: Word) -> Self {
        Relator {
            label: normalize_label(&label.into()),
            word,
            provenance: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<GeneratorSymbol>,
    relators: Vec<Relator>,
    pub meta: Meta,
}

impl Presentation {
    /// Checks that labels are unique and relators only use alphabet symbols.
    pub fn new(
        meta: Meta,
        generators: Vec<GeneratorSymbol>,
        relators: Vec<Relator>,
    ) -> Result<Self, Error> {
        let p = Presentation {
            generators,
            relators,
            meta,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), Error> {
        let mut gens = HashSet::new();
        for g in &self.generators {
            if !gens.insert(*g) {
                return Err(Error::Invalid(format!("generator {g} listed twice")));
            }
        }
        let mut labels = HashSet::new();
        for r in &self.relators {
            if !labels.insert(r.label.as_str()) {
                return Err(Error::DuplicateLabel(r.label.clone()));
            }
            if let Some(s) = r.word.symbols().find(|s| !gens.contains(s)) {
                return Err(Error::Invalid(format!(
                    "relator {} uses {s}, which is not a generator",
                    r.label
                )));
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn has_generator(&self, s: GeneratorSymbol) -> bool {
        self.generators.contains(&s)
    }

    pub fn relator(&self, label: &str) -> Option<&Relator> {
        let label = normalize_label(label);
        self.relators.iter().find(|r| r.label == label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.relators.iter().map(|r| r.label.as_str())
    }

    pub(crate) fn push_relator(&mut self, r: Relator) -> Result<(), Error> {
        if self.relators.iter().any(|x| x.label == r.label) {
            return Err(Error::DuplicateLabel(r.label));
        }
        if let Some(s) = r.word.symbols().find(|s| !self.generators.contains(s)) {
            return Err(Error::Invalid(format!(
                "relator {} uses {s}, which is not a generator",
                r.label
            )));
        }
        self.relators.push(r);
        Ok(())
    }

    pub(crate) fn push_generator(&mut self, s: GeneratorSymbol) {
        self.generators.push(s);
    }

    pub(crate) fn take_relator(&mut self, label: &str) -> Result<Relator, Error> {
        let label = normalize_label(label);
        let i = self
            .relators
            .iter()
            .position(|r| r.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        Ok(self.relators.remove(i))
    }

    pub(crate) fn parts_mut(&mut self) -> (&mut Vec<GeneratorSymbol>, &mut Vec<Relator>) {
        (&mut self.generators, &mut self.relators)
    }

    /// Drop relators whose word is empty.
    pub fn without_trivial_relators(mut self) -> Self {
        self.relators.retain(|r| !r.word.is_empty());
        self
    }

    /// Restrict to the relators whose label satisfies `keep`.
    pub fn filter_relators<F: FnMut(&Relator) -> bool>(&self, mut keep: F) -> Self {
        Presentation {
            generators: self.generators.clone(),
            relators: self.relators.iter().filter(|r| keep(r)).cloned().collect(),
            meta: self.meta,
        }
    }
}

/// True iff `u` is a cyclic rotation of `v` or of `v^-1`, after free reduction.
///
/// Rotations are taken letter by letter on the freely reduced words and the
/// rotated word is compared after free reduction, so a relator and any
/// conjugate obtained by rotation match.
pub fn relators_equal_cyclically(u: &Word, v: &Word) -> bool {
    if u == v {
        return true;
    }
    // Rotation preserves the cyclic core up to rotation; compare cores.
    let cu = u.cyclic_core();
    let cv = v.cyclic_core();
    if cu.len() != cv.len() {
        return false;
    }
    if cu.is_empty() {
        return true;
    }
    let target = cu.letters();
    let n = cv.len();
    let inv = cv.inverse();
    for cand in [&cv, &inv] {
        for k in 0..n {
            if rotate_letters(cand.letters(), k) == target {
                return true;
            }
        }
    }
    false
}

/// Canonical form of a relator label. Accepts the ASCII spelling
/// (`Bbar7_1`, `Abar2_3`) as well as the display spelling (`B̄7₁`).
pub fn normalize_label(label: &str) -> String {
    let mut out = String::with_capacity(label.len());
    let mut chars = label.chars().peekable();
    let mut depth = 0usize;
    let mut prev_alnum = false;
    while let Some(c) = chars.next() {
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
        if depth == 0 && c.is_ascii_uppercase() && label_rest_starts_with_bar(&mut chars) {
            out.push(c);
            out.push('\u{0304}');
            prev_alnum = true;
            continue;
        }
        if depth == 0 && c == '_' && prev_alnum && chars.peek().is_some_and(|d| d.is_ascii_digit())
        {
            while let Some(d) = chars.peek().copied().filter(|d| d.is_ascii_digit()) {
                out.push(char::from_u32(0x2080 + d.to_digit(10).unwrap_or(0)).unwrap_or(d));
                chars.next();
            }
            continue;
        }
        prev_alnum = c.is_alphanumeric();
        out.push(c);
    }
    out
}

fn label_rest_starts_with_bar(chars: &mut std::iter::Peekable<std::str::Chars<'_>>) -> bool {
    let mut probe = chars.clone();
    if probe.next() == Some('b') && probe.next() == Some('a') && probe.next() == Some('r') {
        chars.next();
        chars.next();
        chars.next();
        true
    } else {
        false
    }
}

/// ASCII spelling of a label: `B̄7₁` becomes `Bbar7_1`.
pub fn ascii_label(label: &str) -> String {
    let mut out = String::with_capacity(label.len() + 4);
    let mut in_sub = false;
    for c in label.chars() {
        match c {
            '\u{0304}' => {
                out.push_str("bar");
                in_sub = false;
            }
            '\u{2080}'..='\u{2089}' => {
                if !in_sub {
                    out.push('_');
                    in_sub = true;
                }
                out.push(char::from_u32('0' as u32 + (c as u32 - 0x2080)).unwrap_or('?'));
            }
            _ => {
                in_sub = false;
                out.push(c);
            }
        }
    }
    out
}
