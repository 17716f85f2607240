//! Parameterized presentations of `M(N_{g,s})` and `T(N_{g,s})` for
//! `s` in {0, 1}, the dictionary of derived words, and the maps between the
//! twist-subgroup alphabet and the ambient one.

mod mcg;
mod twist;
mod words;

pub mod chains;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::parse::w;
use crate::presentation::{normalize_label, Kind, Meta, Presentation, Relator, Variant};
use crate::symbol::{GeneratorSymbol, DEFAULT_MAX_GENUS};
use crate::word::{Letter, ParityMap, Word};

pub use words::{
    b_sequence_word, derived_words, rho_word, z_word, DerivedWordTable, MAX_DERIVED_LEN,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CatalogKey {
    pub g: u32,
    pub s: u8,
    pub kind: Kind,
    pub variant: Variant,
}

impl CatalogKey {
    /// Validated key.
    pub fn new(g: u32, s: u8, kind: Kind, variant: Variant) -> Result<Self, Error> {
        let k = CatalogKey {
            g,
            s,
            kind,
            variant,
        };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<(), Error> {
        self.validate_with_max(DEFAULT_MAX_GENUS)
    }

    pub fn validate_with_max(&self, max_genus: u32) -> Result<(), Error> {
        let CatalogKey {
            g,
            s,
            kind,
            variant,
        } = *self;
        let bad = |m: String| Err(Error::InvalidKey(m));
        if s > 1 {
            return bad(format!(
                "s = {s}: only surfaces with s = 0 or s = 1 boundary components are covered"
            ));
        }
        if g > max_genus {
            return bad(format!(
                "g = {g} exceeds the configured maximum genus {max_genus}"
            ));
        }
        match (kind, s) {
            (Kind::Mcg, 1) | (Kind::Twist, 1) if g < 3 => {
                return bad(format!("g = {g}: the presentations with s = 1 require g >= 3"))
            }
            (Kind::Mcg, 0) if g < 4 => {
                return bad(format!("g = {g}: the closed-surface mapping class group presentation requires g >= 4"))
            }
            (Kind::Twist, 0) if g < 4 || (g % 2 == 1 && g < 5) => {
                return bad(format!(
                    "g = {g}: the closed-surface twist subgroup presentation requires odd g >= 5 or even g >= 4"
                ))
            }
            (Kind::Other, _) => return bad("kind \"other\" has no catalog entry".into()),
            _ => {}
        }
        let ok = match (kind, s) {
            (Kind::Mcg, 1) => variant == Variant::Standard,
            (Kind::Mcg, _) => matches!(variant, Variant::Standard | Variant::UwF),
            _ => matches!(variant, Variant::Full | Variant::Reduced),
        };
        if !ok {
            let allowed = match (kind, s) {
                (Kind::Mcg, 1) => "standard",
                (Kind::Mcg, _) => "standard or uwF",
                _ => "full or reduced",
            };
            return bad(format!(
                "variant {variant} is not available for {kind} with s = {s} (use {allowed})"
            ));
        }
        Ok(())
    }

    pub fn meta(&self) -> Meta {
        Meta {
            g: self.g,
            s: self.s,
            kind: self.kind,
            variant: self.variant,
        }
    }

    /// Fixture file stem, e.g. `twist_g4_s1_full`.
    pub fn file_stem(&self) -> String {
        format!("{}_g{}_s{}_{}", self.kind, self.g, self.s, self.variant)
    }

    /// Every valid key with `g` in the range, in a fixed order.
    pub fn all(genera: impl IntoIterator<Item = u32>) -> Vec<CatalogKey> {
        let mut out = Vec::new();
        for g in genera {
            for (kind, s, variants) in [
                (Kind::Mcg, 1, &[Variant::Standard][..]),
                (Kind::Mcg, 0, &[Variant::Standard, Variant::UwF][..]),
                (Kind::Twist, 1, &[Variant::Full, Variant::Reduced][..]),
                (Kind::Twist, 0, &[Variant::Full, Variant::Reduced][..]),
            ] {
                for &variant in variants {
                    let k = CatalogKey {
                        g,
                        s,
                        kind,
                        variant,
                    };
                    if k.validate().is_ok() {
                        out.push(k);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CatalogKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} g={} s={} {}",
            self.kind, self.g, self.s, self.variant
        )
    }
}

/// `a_from a_(from+1) ... a_to` as text; empty when `from > to`.
pub(crate) fn a_run(from: u32, to: u32) -> String {
    (from..=to)
        .map(|i| format!("a{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Relator `lhs rhs^-1` under a label given in ASCII spelling.
pub(crate) fn eq(label: &str, lhs: &str, rhs: &str) -> Relator {
    Relator::new(normalize_label(label), w(lhs).concat(&w(rhs).inverse()))
}

pub(crate) fn commutes(label: &str, x: &str, y: &str) -> Relator {
    eq(label, &format!("{x} {y}"), &format!("{y} {x}"))
}

pub(crate) fn braids(label: &str, x: &str, y: &str) -> Relator {
    eq(label, &format!("{x} {y} {x}"), &format!("{y} {x} {y}"))
}

/// Number of `b_i` generators minus one, for even `g >= 6`.
pub(crate) fn b_seq_top(g: u32) -> Option<u32> {
    (g.is_multiple_of(2) && g >= 6).then(|| (g - 2) / 2)
}

/// Generator list of a catalog presentation.
pub fn generators(key: &CatalogKey) -> Vec<GeneratorSymbol> {
    let g = key.g;
    let mut out: Vec<GeneratorSymbol> = (1..g).map(GeneratorSymbol::a).collect();
    match key.kind {
        Kind::Twist => {
            out.extend([
                GeneratorSymbol::e(),
                GeneratorSymbol::f(),
                GeneratorSymbol::usq(),
            ]);
            if g >= 4 {
                out.extend([GeneratorSymbol::b(), GeneratorSymbol::c()]);
            }
            if let Some(top) = b_seq_top(g) {
                out.extend((0..=top).map(GeneratorSymbol::bseq));
                out.extend(((g - 6) / 2..=top).map(GeneratorSymbol::bbar));
            }
            if key.s == 0 {
                out.push(if g % 2 == 1 {
                    GeneratorSymbol::rho()
                } else {
                    GeneratorSymbol::rhobar()
                });
            }
        }
        _ => {
            out.push(GeneratorSymbol::y());
            if g >= 4 {
                out.push(GeneratorSymbol::b());
            }
            if let Some(top) = b_seq_top(g) {
                out.extend((0..=top).map(GeneratorSymbol::bseq));
            }
            if key.s == 0 {
                out.push(GeneratorSymbol::rho());
            }
        }
    }
    out
}

/// Build the presentation for a key.
pub fn build(key: &CatalogKey) -> Result<Presentation, Error> {
    key.validate()?;
    let relators = match key.kind {
        Kind::Mcg => mcg::relators(key.g, key.s, key.variant),
        Kind::Twist => twist::relators(key.g, key.s, key.variant),
        Kind::Other => unreachable!("rejected by validate"),
    };
    Presentation::new(key.meta(), generators(key), relators)
}

/// Canonical parity map on the mapping class group alphabet: `y` is odd,
/// twists are even, and `rho` is odd exactly for even `g`.
pub fn mcg_parity(g: u32, s: u8) -> ParityMap {
    let key = CatalogKey {
        g,
        s,
        kind: Kind::Mcg,
        variant: Variant::Standard,
    };
    let mut p = ParityMap::new();
    for x in generators(&key) {
        let bit = match x {
            x if x == GeneratorSymbol::y() => 1,
            x if x == GeneratorSymbol::rho() => u8::from(g.is_multiple_of(2)),
            _ => 0,
        };
        p.set(x, bit);
    }
    p
}

/// Images of the twist-subgroup generators in the ambient alphabet.
pub fn embedding_map(g: u32, s: u8) -> BTreeMap<GeneratorSymbol, Word> {
    let key = CatalogKey {
        g,
        s,
        kind: Kind::Twist,
        variant: Variant::Full,
    };
    let y = Word::generator(GeneratorSymbol::y());
    generators(&key)
        .into_iter()
        .map(|x| {
            let image = match x.family() {
                crate::symbol::Family::E => w("y a2^-1 y^-1"),
                crate::symbol::Family::F => w("y^-1 a2^-1 y"),
                crate::symbol::Family::Usq => w("y y"),
                crate::symbol::Family::C => w("y b y^-1"),
                crate::symbol::Family::BBar => {
                    Word::generator(GeneratorSymbol::bseq(x.index().unwrap_or(0))).conjugate(&y)
                }
                crate::symbol::Family::RhoBar => w("y r"),
                _ => Word::generator(x),
            };
            (x, image)
        })
        .collect()
}

/// Renaming of raw Reidemeister-Schreier output to the conventional
/// names: `a2_y -> e^-1`, `b_y -> c`, `b<i>_y -> B<i>`, and for even `g`
/// with `s = 0`, `r_y -> R`.
pub fn conventional_renaming(g: u32, s: u8) -> BTreeMap<GeneratorSymbol, Letter> {
    let mut m = BTreeMap::new();
    m.insert(
        GeneratorSymbol::a(2).in_coset(1),
        Letter::neg(GeneratorSymbol::e()),
    );
    if g >= 4 {
        m.insert(
            GeneratorSymbol::b().in_coset(1),
            Letter::pos(GeneratorSymbol::c()),
        );
    }
    if let Some(top) = b_seq_top(g) {
        for i in 0..=top {
            m.insert(
                GeneratorSymbol::bseq(i).in_coset(1),
                Letter::pos(GeneratorSymbol::bbar(i)),
            );
        }
    }
    if s == 0 && g.is_multiple_of(2) {
        m.insert(
            GeneratorSymbol::rho().in_coset(1),
            Letter::pos(GeneratorSymbol::rhobar()),
        );
    }
    m
}

/// Apply a generator renaming (each generator goes to a signed letter).
pub fn apply_renaming(
    p: &Presentation,
    map: &BTreeMap<GeneratorSymbol, Letter>,
) -> Result<Presentation, Error> {
    let gens = p
        .generators()
        .iter()
        .map(|g| map.get(g).map_or(*g, |l| l.symbol))
        .collect();
    let relators = p
        .relators()
        .iter()
        .map(|r| {
            let word = Word::reduce(r.word.letters().iter().map(|l| match map.get(&l.symbol) {
                Some(t) if l.inverse => t.inv(),
                Some(t) => *t,
                None => *l,
            }));
            Relator { word, ..r.clone() }
        })
        .collect();
    Presentation::new(p.meta, gens, relators)
}

/// Proof-level relations of the twist subgroup that are not part of any
/// catalog variant but are used by the derivation fixtures.
pub fn proof_relators(g: u32) -> Vec<Relator> {
    twist::proof_relators(g)
}

/// The presentation in which ambient and twist-level derivations are
/// checked: the mapping class group relators (with both families of
/// closed-surface relators when `s = 0`), the twist generators with their
/// defining relators `def:<x>`, all relators of the full twist variant and
/// the proof-level relations.
pub fn working_presentation(g: u32, s: u8) -> Result<Presentation, Error> {
    let mcg_key = CatalogKey::new(g, s, Kind::Mcg, Variant::Standard)?;
    let mut gens = generators(&mcg_key);
    let mut relators = mcg::relators(g, s, Variant::Standard);
    if s == 0 {
        for r in mcg::relators(g, s, Variant::UwF) {
            if !relators.iter().any(|x| x.label == r.label) {
                relators.push(r);
            }
        }
    }
    let emb = embedding_map(g, s);
    for (x, image) in &emb {
        if image != &Word::generator(*x) {
            gens.push(*x);
            relators.push(Relator::new(
                crate::tietze::definition_label(*x),
                Word::generator(*x).concat(&image.inverse()),
            ));
        }
    }
    for r in twist_context_relators(g, s)? {
        if !relators.iter().any(|x| x.label == r.label) {
            relators.push(r);
        }
    }
    Presentation::new(Meta::other(), gens, relators)
}

/// The full twist presentation (when it exists) together with the proof
/// relations; the context for derivations inside the twist subgroup.
pub fn twist_context(g: u32, s: u8) -> Result<Presentation, Error> {
    let key = CatalogKey::new(g, s, Kind::Twist, Variant::Full)?;
    Presentation::new(
        Meta::other(),
        generators(&key),
        twist_context_relators(g, s)?,
    )
}

fn twist_context_relators(g: u32, s: u8) -> Result<Vec<Relator>, Error> {
    let mut rels = if CatalogKey::new(g, s, Kind::Twist, Variant::Full).is_ok() {
        twist::relators(g, s, Variant::Full)
    } else {
        twist::relators(g, 1, Variant::Full)
    };
    rels.extend(twist::proof_relators(g));
    Ok(rels)
}
