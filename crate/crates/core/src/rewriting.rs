//! Reidemeister-Schreier rewriting for a finite-index subgroup given by a
//! permutation action on cosets.
//!
//! Only index 2 is built from a parity map. Coset `k >= 1` tags subgroup
//! generators with the coset of their transversal element, so `(y, a2)`
//! becomes the symbol `a2_y`; the pair `(y, y)` becomes `u`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::presentation::{Kind, Meta, Presentation, Provenance, Relator, Variant};
use crate::symbol::GeneratorSymbol;
use crate::word::{Letter, ParityMap, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetStructure {
    transversal: Vec<Word>,
    /// Per generator: image of each coset under right multiplication.
    action: BTreeMap<GeneratorSymbol, Vec<usize>>,
}

impl CosetStructure {
    /// Build from an explicit action. The transversal must start with the
    /// empty word and each entry must lie in its own coset.
    pub fn new(
        transversal: Vec<Word>,
        action: BTreeMap<GeneratorSymbol, Vec<usize>>,
    ) -> Result<Self, Error> {
        let n = transversal.len();
        if n == 0 || !transversal[0].is_empty() {
            return Err(Error::Coset(
                "first transversal element must be the identity".into(),
            ));
        }
        for (s, perm) in &action {
            let mut seen = vec![false; n];
            if perm.len() != n {
                return Err(Error::Coset(format!("action of {s} has wrong length")));
            }
            for &j in perm {
                if j >= n || std::mem::replace(&mut seen[j], true) {
                    return Err(Error::Coset(format!("action of {s} is not a permutation")));
                }
            }
        }
        let c = CosetStructure {
            transversal,
            action,
        };
        for (i, t) in c.transversal.iter().enumerate() {
            if c.coset_of_from(0, t.letters())? != i {
                return Err(Error::Coset(format!(
                    "transversal element {t} is not in coset {i}"
                )));
            }
        }
        Ok(c)
    }

    pub fn index(&self) -> usize {
        self.transversal.len()
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    pub fn act(&self, coset: usize, s: GeneratorSymbol, exponent: i8) -> Result<usize, Error> {
        let perm = self
            .action
            .get(&s)
            .ok_or_else(|| Error::MissingSymbol(s.to_string()))?;
        Ok(if exponent > 0 {
            perm[coset]
        } else {
            perm.iter().position(|&j| j == coset).unwrap_or(coset)
        })
    }

    fn coset_of_from(&self, start: usize, letters: &[Letter]) -> Result<usize, Error> {
        letters
            .iter()
            .try_fold(start, |i, l| self.act(i, l.symbol, l.exponent()))
    }

    /// Coset of the element `w`.
    pub fn coset_of(&self, w: &Word) -> Result<usize, Error> {
        self.coset_of_from(0, w.letters())
    }

    /// The transversal element heading the coset reached from coset `i` by `x`.
    fn rep_after(&self, i: usize, x: GeneratorSymbol) -> Result<&Word, Error> {
        Ok(&self.transversal[self.act(i, x, 1)?])
    }

    /// Machine symbol of the Schreier generator `(u_i, x)`, or `None` when
    /// `u_i x` is freely equal to its coset representative.
    pub fn symbol_for(
        &self,
        i: usize,
        x: GeneratorSymbol,
    ) -> Result<Option<GeneratorSymbol>, Error> {
        let def = self.transversal[i]
            .concat(&Word::generator(x))
            .concat(&self.rep_after(i, x)?.inverse());
        if def.is_empty() {
            return Ok(None);
        }
        if i == 1 && x == GeneratorSymbol::y() && self.transversal[1] == Word::generator(x) {
            return Ok(Some(GeneratorSymbol::usq()));
        }
        let tag = u8::try_from(i).map_err(|_| Error::Coset("index too large".into()))?;
        Ok(Some(x.in_coset(tag)))
    }
}

/// Index-2 structure with transversal `{1, odd}` for the kernel of `p`.
pub fn build_coset_structure(p: &ParityMap, odd: GeneratorSymbol) -> Result<CosetStructure, Error> {
    if p.get(odd)? != 1 {
        return Err(Error::Coset(format!(
            "{odd} has parity 0 and cannot head the nontrivial coset"
        )));
    }
    let action = p
        .iter()
        .map(|(s, par)| (s, if par == 1 { vec![1, 0] } else { vec![0, 1] }))
        .collect();
    CosetStructure::new(vec![Word::identity(), Word::generator(odd)], action)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupGenerator {
    pub coset_rep: Word,
    pub base: GeneratorSymbol,
    pub coset: usize,
    pub symbol: GeneratorSymbol,
    pub display_name: String,
    definition: Word,
}

impl SubgroupGenerator {
    /// `u x (ux-bar)^-1` as a word over the ambient alphabet.
    pub fn definition(&self) -> &Word {
        &self.definition
    }
}

impl fmt::Display for SubgroupGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_name)
    }
}

fn display_name(def: &Word) -> String {
    def.letters()
        .iter()
        .map(|l| {
            if l.inverse {
                format!("{}\u{207b}\u{00b9}", l.symbol)
            } else {
                l.symbol.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join("\u{00b7}")
}

/// All nontrivial Schreier generators, ordered by coset, then by the
/// ambient generator order.
pub fn subgroup_generators(
    p: &Presentation,
    c: &CosetStructure,
) -> Result<Vec<SubgroupGenerator>, Error> {
    let mut out = Vec::new();
    for (i, u) in c.transversal.iter().enumerate() {
        for &x in p.generators() {
            if let Some(symbol) = c.symbol_for(i, x)? {
                let definition = u
                    .concat(&Word::generator(x))
                    .concat(&c.rep_after(i, x)?.inverse());
                out.push(SubgroupGenerator {
                    coset_rep: u.clone(),
                    base: x,
                    coset: i,
                    symbol,
                    display_name: display_name(&definition),
                    definition,
                });
            }
        }
    }
    Ok(out)
}

/// Rewrite `u r u^-1`, where `u` is the transversal element of coset
/// `coset`, as a word in the Schreier generators.
pub fn rewrite_relator(r: &Word, coset: usize, c: &CosetStructure) -> Result<Word, Error> {
    if coset >= c.index() {
        return Err(Error::Coset(format!("no coset {coset}")));
    }
    let mut i = coset;
    let mut out = Vec::with_capacity(r.len());
    for l in r.letters() {
        if l.inverse {
            let j = c.act(i, l.symbol, -1)?;
            if let Some(s) = c.symbol_for(j, l.symbol)? {
                out.push(Letter::neg(s));
            }
            i = j;
        } else {
            if let Some(s) = c.symbol_for(i, l.symbol)? {
                out.push(Letter::pos(s));
            }
            i = c.act(i, l.symbol, 1)?;
        }
    }
    if i != coset {
        return Err(Error::NotInSubgroup(r.to_string()));
    }
    Ok(Word::reduce(out))
}

fn coset_tag(c: &CosetStructure, i: usize) -> String {
    let t = &c.transversal[i];
    if t.is_empty() {
        "1".to_string()
    } else {
        t.to_string().replace(' ', "")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RsReport {
    /// Relators produced before dropping empty ones (index times input count).
    pub rewritten: usize,
    pub dropped: Vec<String>,
}

/// Raw subgroup presentation. Relators are labelled `label@u`, carry their
/// provenance, and empty ones are dropped.
pub fn reidemeister_schreier(p: &Presentation, c: &CosetStructure) -> Result<Presentation, Error> {
    reidemeister_schreier_with_report(p, c).map(|(q, _)| q)
}

pub fn reidemeister_schreier_with_report(
    p: &Presentation,
    c: &CosetStructure,
) -> Result<(Presentation, RsReport), Error> {
    let gens = subgroup_generators(p, c)?;
    let mut report = RsReport::default();
    let mut relators = Vec::new();
    for r in p.relators() {
        for i in 0..c.index() {
            let word = rewrite_relator(&r.word, i, c).map_err(|e| match e {
                Error::NotInSubgroup(_) => Error::NotInSubgroup(r.label.clone()),
                other => other,
            })?;
            let tag = coset_tag(c, i);
            let label = format!("{}@{}", r.label, tag);
            report.rewritten += 1;
            if word.is_empty() {
                log::info!("dropping empty rewritten relator {label}");
                report.dropped.push(label);
                continue;
            }
            relators.push(Relator {
                label,
                word,
                provenance: Some(Provenance {
                    source: r.label.clone(),
                    transversal: tag,
                }),
            });
        }
    }
    let meta = Meta {
        kind: if p.meta.kind == Kind::Mcg {
            Kind::Twist
        } else {
            p.meta.kind
        },
        variant: Variant::Raw,
        ..p.meta
    };
    let q = Presentation::new(meta, gens.iter().map(|s| s.symbol).collect(), relators)?;
    Ok((q, report))
}
