//! Derivation fixtures: the proof chains as checkable scripts.
//!
//! A [`Chain`] records steps while a word is rewritten. In relator mode the
//! word may be conjugated (rotated), so the physical word is always
//! `conj . mid . conj^-1` with `mid` freely and cyclically reduced after
//! every move; rotations and cyclic reductions only move letters between
//! `mid` and `conj` and are realised with free insertions. In equality mode
//! `conj` stays empty and the script proves `start = end`.

use serde::{Deserialize, Serialize};

use crate::derivation::{
    apply_step, check_derivation, relator_instance, DerivationReport, DerivationScript, Direction,
    Step,
};
use crate::error::Error;
use crate::parse::{parse_letters, w};
use crate::presentation::{normalize_label, Presentation};
use crate::word::{invert_letters, letters_to_text, rotate_letters, Letter, Word};

use super::words::z_text;
use super::{a_run, twist_context, working_presentation};

const B2_E: &str = "a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2";
const B2_F: &str = "a2 a1 f a1 a2 a1 a2 a1 a2 e a1 a2";

pub struct Chain<'p> {
    pres: &'p Presentation,
    start: Word,
    steps: Vec<Step>,
    conj: Vec<Letter>,
    mid: Vec<Letter>,
    cyclic: bool,
    physical: Vec<Letter>,
}

fn letters(text: &str) -> Result<Vec<Letter>, Error> {
    parse_letters(text)
}

fn chain_err(msg: String) -> Error {
    Error::Invalid(format!("chain: {msg}"))
}

impl<'p> Chain<'p> {
    /// Prove `start = 1`; conjugation allowed.
    pub fn relator(pres: &'p Presentation, start: &str) -> Result<Self, Error> {
        Self::new(pres, start, true)
    }

    /// Prove `start = end`.
    pub fn equality(pres: &'p Presentation, start: &str) -> Result<Self, Error> {
        Self::new(pres, start, false)
    }

    /// Start from the empty word and insert the relator `label` as `lhs rhs^-1`.
    pub fn from_relator(
        pres: &'p Presentation,
        label: &str,
        lhs: &str,
        rhs: &str,
    ) -> Result<Self, Error> {
        let mut c = Self::new(pres, "1", true)?;
        let mut body = letters(lhs)?;
        body.extend(invert_letters(&letters(rhs)?));
        c.replace_at(label, 0, &[], &body)?;
        c.normalize()?;
        Ok(c)
    }

    fn new(pres: &'p Presentation, start: &str, cyclic: bool) -> Result<Self, Error> {
        let start = w(start);
        let mut c = Chain {
            pres,
            mid: start.letters().to_vec(),
            physical: start.letters().to_vec(),
            start,
            steps: Vec::new(),
            conj: Vec::new(),
            cyclic,
        };
        c.normalize()?;
        Ok(c)
    }

    /// The current word (`mid`).
    pub fn current(&self) -> Word {
        Word::reduce(self.mid.iter().copied())
    }

    pub fn steps(&self) -> usize {
        self.steps.len()
    }

    fn push(&mut self, step: Step) -> Result<(), Error> {
        let next =
            apply_step(self.pres, &self.physical, &step).map_err(|f| Error::Certificate {
                step: self.steps.len(),
                reason: format!("{} (expected {}, found {})", f.reason, f.expected, f.actual),
            })?;
        self.physical = next;
        self.steps.push(step);
        Ok(())
    }

    fn sync_check(&self) -> Result<(), Error> {
        let mut expect = self.conj.clone();
        expect.extend_from_slice(&self.mid);
        expect.extend(invert_letters(&self.conj));
        if expect != self.physical {
            return Err(chain_err(format!(
                "bookkeeping mismatch: {} vs {}",
                letters_to_text(&expect),
                letters_to_text(&self.physical)
            )));
        }
        Ok(())
    }

    /// Insert `x x^-1` (for a word `x`) at `mid` offset `at`.
    fn insert_pair(&mut self, at: usize, x: &[Letter]) -> Result<(), Error> {
        let base = self.conj.len() + at;
        for (i, l) in x.iter().enumerate() {
            self.push(Step::FreeInsert {
                position: base + i,
                letter: *l,
            })?;
        }
        Ok(())
    }

    /// Move the first `k` letters of `mid` to its end.
    pub fn rotate(&mut self, k: usize) -> Result<&mut Self, Error> {
        if !self.cyclic && k != 0 {
            return Err(chain_err("rotation in an equality chain".into()));
        }
        let k = if self.mid.is_empty() {
            0
        } else {
            k % self.mid.len()
        };
        if k == 0 {
            return Ok(self);
        }
        let head = self.mid[..k].to_vec();
        let n = self.mid.len();
        self.insert_pair(n, &head)?;
        self.conj.extend_from_slice(&head);
        self.mid = rotate_letters(&self.mid, k);
        self.sync_check()?;
        Ok(self)
    }

    /// Free reduction of `mid`, then (relator mode) cyclic reduction.
    fn normalize(&mut self) -> Result<(), Error> {
        while let Some(i) =
            (0..self.mid.len().saturating_sub(1)).find(|&i| self.mid[i].cancels(self.mid[i + 1]))
        {
            let pos = self.conj.len() + i;
            self.push(Step::FreeCancel { position: pos })?;
            self.mid.drain(i..i + 2);
        }
        if self.cyclic {
            while self.mid.len() >= 2 && self.mid[0].cancels(self.mid[self.mid.len() - 1]) {
                let l = self.mid.remove(0);
                self.mid.pop();
                self.conj.push(l);
            }
        }
        self.sync_check()
    }

    /// Replace `from` at `mid` offset `at` (no wrap) by `to` using `label`.
    fn replace_at(
        &mut self,
        label: &str,
        at: usize,
        from: &[Letter],
        to: &[Letter],
    ) -> Result<(), Error> {
        let label = normalize_label(label);
        let rel = self
            .pres
            .relator(&label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        let mut target = from.to_vec();
        target.extend(invert_letters(to));
        let n = rel.word.len();
        let mut found = None;
        'search: for inverted in [false, true] {
            for rotation in 0..n.max(1) {
                if relator_instance(&rel.word, rotation, inverted) == target {
                    found = Some((rotation, inverted));
                    break 'search;
                }
            }
        }
        let (rotation, inverted) = found.ok_or_else(|| {
            chain_err(format!(
                "{label}: {} -> {} is not an instance",
                letters_to_text(from),
                letters_to_text(to)
            ))
        })?;
        self.push(Step::ApplyRelator {
            label,
            position: self.conj.len() + at,
            span: from.len(),
            rotation,
            inverted,
            direction: Direction::Forward,
        })?;
        self.mid.splice(at..at + from.len(), to.iter().copied());
        self.sync_check()
    }

    fn occurrences(&self, pat: &[Letter]) -> Vec<usize> {
        let n = self.mid.len();
        if pat.is_empty() || pat.len() > n {
            return Vec::new();
        }
        (0..n)
            .filter(|&o| {
                (self.cyclic || o + pat.len() <= n)
                    && pat
                        .iter()
                        .enumerate()
                        .all(|(i, l)| self.mid[(o + i) % n] == *l)
            })
            .collect()
    }

    /// Rewrite the `k`-th (cyclic) occurrence of `from` into `to` with the
    /// relator `label`, then reduce.
    pub fn mv_at(
        &mut self,
        label: &str,
        from: &str,
        to: &str,
        k: usize,
    ) -> Result<&mut Self, Error> {
        let (from, to) = (letters(from)?, letters(to)?);
        let occ = self.occurrences(&from);
        let Some(&o) = occ.get(k) else {
            return Err(chain_err(format!(
                "{label}: occurrence {k} of {} not found in {}",
                letters_to_text(&from),
                letters_to_text(&self.mid)
            )));
        };
        let at = if o + from.len() > self.mid.len() {
            self.rotate(o)?;
            0
        } else {
            o
        };
        self.replace_at(label, at, &from, &to)?;
        self.normalize()?;
        Ok(self)
    }

    pub fn mv(&mut self, label: &str, from: &str, to: &str) -> Result<&mut Self, Error> {
        self.mv_at(label, from, to, 0)
    }

    /// Apply a sequence of `(label, from, to, occurrence)` moves.
    pub fn moves(&mut self, list: &[(&str, &str, &str, usize)]) -> Result<&mut Self, Error> {
        for (label, from, to, k) in list {
            self.mv_at(label, from, to, *k)?;
        }
        Ok(self)
    }

    /// Rewrite every occurrence of `from`, left to right.
    pub fn mv_all(&mut self, label: &str, from: &str, to: &str) -> Result<&mut Self, Error> {
        let pat = letters(from)?;
        while !self.occurrences(&pat).is_empty() {
            self.mv_at(label, from, to, 0)?;
        }
        Ok(self)
    }

    /// Waypoint: the current word must be `text` (up to rotation in relator mode).
    pub fn expect(&mut self, text: &str) -> Result<&mut Self, Error> {
        let want = w(text);
        let want = if self.cyclic {
            want.cyclic_core()
        } else {
            want
        };
        let cur = self.mid.clone();
        let n = cur.len();
        if n == want.len() {
            let hit = if self.cyclic {
                (0..n.max(1)).find(|&k| rotate_letters(&cur, k) == want.letters())
            } else {
                (cur == want.letters()).then_some(0)
            };
            if let Some(k) = hit {
                return self.rotate(k);
            }
        }
        Err(chain_err(format!(
            "expected {want}, reached {}",
            letters_to_text(&cur)
        )))
    }

    /// Waypoint for an equation `lhs = rhs`.
    pub fn expect_eq(&mut self, lhs: &str, rhs: &str) -> Result<&mut Self, Error> {
        let text = format!("({lhs}) ({rhs})^-1");
        self.expect(&text)
    }

    fn finish_with(mut self, end: Word) -> Result<DerivationScript, Error> {
        self.normalize()?;
        while let Some(i) = (0..self.physical.len().saturating_sub(1))
            .find(|&i| self.physical[i].cancels(self.physical[i + 1]))
        {
            self.push(Step::FreeCancel { position: i })?;
        }
        let script = DerivationScript::new(self.start, end, self.steps);
        check_derivation(self.pres, &script).into_result()?;
        Ok(script)
    }

    /// Close an equality chain at `end`.
    pub fn finish(self, end: &str) -> Result<DerivationScript, Error> {
        self.finish_with(w(end))
    }

    /// Close a relator chain whose word has been reduced to the identity.
    pub fn finish_trivial(self) -> Result<DerivationScript, Error> {
        if !self.mid.is_empty() {
            return Err(chain_err(format!(
                "word not trivial: {}",
                letters_to_text(&self.mid)
            )));
        }
        self.finish_with(Word::identity())
    }

    /// Close a chain started with [`Chain::from_relator`]: the end is the
    /// reduced physical word.
    pub fn finish_open(self) -> Result<DerivationScript, Error> {
        let mut phys = self.physical.clone();
        crate::word::free_reduce(&mut phys);
        self.finish_with(Word::reduce(phys))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContextKind {
    /// Full twist presentation plus proof relations.
    Twist,
    /// Mapping class group, twist generators with definitions, and twist relators.
    Working,
}

/// A shipped derivation: checked in `context(g, s)` with the relator
/// `target` (if any) removed; the script must then certify `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationFixture {
    pub name: String,
    pub g: u32,
    pub s: u8,
    pub context: ContextKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<String>,
    pub statement: String,
    pub script: DerivationScript,
}

impl DerivationFixture {
    /// The presentation the script is checked against.
    pub fn presentation(&self) -> Result<Presentation, Error> {
        let p = match self.context {
            ContextKind::Twist => twist_context(self.g, self.s)?,
            ContextKind::Working => working_presentation(self.g, self.s)?,
        };
        Ok(match &self.target {
            Some(t) => {
                let t = normalize_label(t);
                p.filter_relators(|r| r.label != t)
            }
            None => p,
        })
    }

    /// Check the script; for a target relator also check that the script
    /// certifies it.
    pub fn check(&self) -> Result<DerivationReport, Error> {
        let p = self.presentation()?;
        let report = check_derivation(&p, &self.script);
        if !report.ok {
            return Ok(report);
        }
        if let Some(t) = &self.target {
            let full = match self.context {
                ContextKind::Twist => twist_context(self.g, self.s)?,
                ContextKind::Working => working_presentation(self.g, self.s)?,
            };
            let rel = full
                .relator(t)
                .ok_or_else(|| Error::UnknownLabel(t.clone()))?;
            if !self.script.certifies(&rel.word) {
                return Ok(DerivationReport {
                    ok: false,
                    steps_checked: self.script.steps.len(),
                    failure: Some(crate::derivation::StepFailure {
                        step: self.script.steps.len(),
                        reason: format!("script does not certify {t}"),
                        expected: rel.word.to_string(),
                        actual: self.script.certified_relator().to_string(),
                    }),
                });
            }
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).unwrap_or_default();
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }
}

fn fixture(
    name: &str,
    (g, s): (u32, u8),
    context: ContextKind,
    target: Option<&str>,
    statement: &str,
    script: DerivationScript,
) -> DerivationFixture {
    DerivationFixture {
        name: name.into(),
        g,
        s,
        context,
        target: target.map(normalize_label),
        statement: statement.into(),
        script,
    }
}

/// Names of the shipped fixtures, in generation order.
pub const FIXTURE_NAMES: &[&str] = &[
    "bbar2_1",
    "bbar1_2_reduction",
    "d1_superfluous",
    "d6",
    "d7",
    "bbar7_3",
    "cbar5_odd",
    "cbar5_even",
    "cbar2_odd",
    "cbar3_even",
    "cbar4a_odd",
    "cbar4_even",
    "abar7_proof_form",
];

/// Build one fixture by name.
pub fn build_fixture(name: &str) -> Result<DerivationFixture, Error> {
    match name {
        "bbar2_1" => bbar2_1(),
        "bbar1_2_reduction" => bbar1_2_reduction(),
        "d1_superfluous" => d1_superfluous(),
        "d6" => d6(8, 7),
        "d7" => d7(8, 7),
        "bbar7_3" => bbar7_3(),
        "cbar5_odd" => cbar5_odd(),
        "cbar5_even" => cbar5_even(),
        "cbar2_odd" => cbar2_odd(),
        "cbar3_even" => cbar3_even(),
        "cbar4a_odd" => cbar4a_odd(5),
        "cbar4_even" => cbar4_even(6),
        "abar7_proof_form" => abar7_proof_form(),
        _ => Err(Error::OutOfRange(format!(
            "no derivation fixture named {name:?}"
        ))),
    }
}

pub fn all_fixtures() -> Result<Vec<DerivationFixture>, Error> {
    FIXTURE_NAMES.iter().map(|n| build_fixture(n)).collect()
}

/// The (B2) rewriting, from the ambient relation down to `u = a2 a1 e ...`.
fn bbar2_1() -> Result<DerivationFixture, Error> {
    let pres =
        working_presentation(4, 1)?.filter_relators(|r| r.label != normalize_label("Bbar2_1"));
    let t = "(a2 a1 y^-1 a2^-1 y a1 a2)";
    let mut c = Chain::from_relator(&pres, "B2", &format!("y {t} y"), &format!("a1 {t} a1"))?;
    c.moves(&[
        ("B5", "a1 y^-1", "y^-1 a1^-1", 0),
        ("def:e", "y a2 y^-1", "e^-1", 0),
        ("B5", "y a1", "a1^-1 y", 0),
        ("def:e", "y a2", "e^-1 y", 0),
        ("def:f", "y^-1 a2 y", "f^-1", 0),
    ])?;
    c.expect("(e^-1 a1^-1 a2^-1 a1^-1 e^-1 y y) (a1 a2 a1 f a1 a2 a1)^-1")?;
    c.moves(&[
        ("def:u", "y y", "u", 0),
        ("A2[i=1]", "a1^-1 a2^-1 a1^-1", "a2^-1 a1^-1 a2^-1", 1),
    ])?;
    c.expect_eq("u", "e a1 a2 a1 e a1 a2 a1 f a2 a1 a2")?;
    c.moves(&[("A2[i=1]", "a1^-1 a2^-1 a1^-1", "a2^-1 a1^-1 a2^-1", 1)])?;
    c.expect_eq("u", "e a2 a1 a2 e a1 a2 a1 f a2 a1 a2")?;
    c.moves(&[
        ("Bbar4_2", "a2^-1 f^-1", "f^-1 a2^-1", 0),
        ("Bbar4_1", "e^-1 a2^-1", "a2^-1 e^-1", 0),
        ("Bbar4_1", "a2^-1 e^-1", "e^-1 a2^-1", 1),
    ])?;
    c.expect_eq("u", "a2 e a1 e a2 a1 a2 a1 a2 f a1 a2")?;
    c.moves(&[("Abar2_1", "e^-1 a1^-1 e^-1", "a1^-1 e^-1 a1^-1", 0)])?;
    c.expect_eq("u", B2_E)?;
    let script = c.finish_open()?;
    Ok(fixture(
        "bbar2_1",
        (4, 1),
        ContextKind::Working,
        Some("Bbar2_1"),
        "the ambient relation (B2) rewritten over the twist generators gives u = a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2",
        script,
    ))
}

/// (B̄1₂) is a consequence of the other twist relations.
fn bbar1_2_reduction() -> Result<DerivationFixture, Error> {
    let pres = twist_context(4, 1)?.filter_relators(|r| r.label != normalize_label("Bbar1_2"));
    let mut c = Chain::relator(
        &pres,
        "u (f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1) (a2 a3 a1 a2 e a1 a3^-1 e u)^-1",
    )?;
    let e_inv = "a2^-1 a1^-1 f^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1 a1^-1 e^-1 a1^-1 a2^-1";
    c.moves(&[
        ("Bbar2_1", "u", B2_E, 0),
        ("Bbar2_1", "u^-1", e_inv, 0),
        ("Bbar2_2", e_inv, B2_F, 0),
        ("A2[i=1]", "a2 a1 a2", "a1 a2 a1", 3),
        ("A2[i=1]", "a1 a2 a1", "a2 a1 a2", 2),
    ])?;
    c.expect(&format!(
        "(({B2_E})(f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1)) \
         ((a2 a3 a1 a2 e a1 a3^-1 e)(a2^-1 a1^-1 e^-1 a1^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1 f^-1 a1^-1 a2^-1))^-1"
    ))?;
    c.moves(&[
        ("A2[i=1]", "a2 a1 a2", "a1 a2 a1", 1),
        ("Abar2_3", "a1 f a1", "f a1 f", 0),
        ("Bbar4_2", "f a2", "a2 f", 0),
        ("A1[i=1,j=3]", "a1^-1 a3^-1", "a3^-1 a1^-1", 0),
        ("Abar2_1", "a1 e a1", "e a1 e", 1),
        ("A1[i=1,j=3]", "a1^-1 a3^-1 a1", "a3^-1", 0),
        ("Bbar4_1", "e a2 e^-1", "a2", 0),
    ])?;
    c.expect(
        "((e a1 a2 a1 a1 a2 f a1 a2)(a3 a1^-1 f^-1 a2^-1 a3^-1)) \
         ((a3 a2 e a1 a3^-1)(a2^-1 a1^-1 e^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1 f^-1))^-1",
    )?;
    c.moves(&[
        ("A2[i=1]", "a1 a2 a1", "a2 a1 a2", 0),
        ("Bbar4_1", "e a2", "a2 e", 0),
        ("Bbar4_2", "a2 f", "f a2", 0),
        ("A2[i=1]", "a2 a1 a2", "a1 a2 a1", 0),
        ("Abar2_3", "a1 f a1", "f a1 f", 0),
        ("Bbar4_2", "f a2", "a2 f", 0),
        ("A1[i=1,j=3]", "a1 a3", "a3 a1", 0),
        ("Bbar4_2", "f a2", "a2 f", 0),
        ("Bbar4_1", "a2 e", "e a2", 1),
        ("A2[i=1]", "a2 a1 a2", "a1 a2 a1", 0),
        ("A1[i=1,j=3]", "a1 a3 a1^-1", "a3", 0),
        ("Abar2_1", "a1 e a1", "e a1 e", 0),
        ("Bbar4_1", "e a2", "a2 e", 0),
    ])?;
    c.expect(
        "((e a1 a2 f a1 a2)(f a3 f^-1 a2^-1 a3^-1) a2) \
         (a2^-1 (a3 a2 e a3^-1)(e^-1 a2^-1 a1^-1 e^-1 a2^-1 a1^-1 f^-1))^-1",
    )?;
    c.moves(&[
        ("Abar2_4", "f a3 f^-1", "a3 f^-1 a3^-1", 0),
        ("A2[i=2]", "a3^-1 a2^-1 a3^-1", "a2^-1 a3^-1 a2^-1", 0),
        ("Abar2_2", "e a3 e^-1", "a3 e^-1 a3^-1", 0),
        ("A2[i=2]", "a3^-1 a2^-1 a3^-1 a2", "a2^-1 a3^-1", 0),
    ])?;
    c.expect("((a1 a2 f a1 a2)(a3 f^-1 a2^-1 a3^-1 f)) ((e^-1 a3 a2 e a3^-1)(a2^-1 a1^-1 e^-1 a2^-1 a1^-1))^-1")?;
    c.moves(&[
        ("Bbar4_2", "f^-1 a2^-1", "a2^-1 f^-1", 0),
        ("A2[i=2]", "a2 a3 a2^-1", "a3^-1 a2 a3", 0),
        ("Abar2_4", "a3 f^-1 a3^-1", "f a3 f^-1", 0),
        ("Bbar4_1", "e^-1 a2^-1", "a2^-1 e^-1", 0),
        ("A2[i=2]", "a2 a3 a2^-1", "a3^-1 a2 a3", 0),
        ("Abar2_2", "a3 e^-1 a3^-1 e", "e a3", 0),
    ])?;
    c.expect("(a1 a2 f a1 a3^-1 a2 f a3) (a3^-1 e^-1 a2^-1 a3 a1^-1 e^-1 a2^-1 a1^-1)^-1")?;
    c.moves(&[
        ("Bbar4_1", "a2 e", "e a2", 1),
        ("Bbar4_2", "a2 f", "f a2", 1),
    ])?;
    c.expect("(a2 a3 a1 a2 f a1 a3^-1 f) (e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1)^-1")?;
    c.mv(
        "Bbar1",
        "a2 a3 a1 a2 f a1 a3^-1 f",
        "e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1",
    )?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "bbar1_2_reduction",
        (4, 1),
        ContextKind::Twist,
        Some("Bbar1_2"),
        "u (f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1) = (a2 a3 a1 a2 e a1 a3^-1 e) u follows from the remaining relations",
        script,
    ))
}

/// `f = u^-1 e u` from (B̄2₁) and braid relations.
fn d1_superfluous() -> Result<DerivationFixture, Error> {
    let pres = twist_context(4, 1)?.filter_relators(|r| r.label != normalize_label("D1"));
    let e_inv = "a2^-1 a1^-1 f^-1 a2^-1 a1^-1 a2^-1 a1^-1 a2^-1 a1^-1 e^-1 a1^-1 a2^-1";
    let mut c = Chain::relator(&pres, "f (u^-1 e u)^-1")?;
    c.moves(&[("Bbar2_1", "u", B2_E, 0), ("Bbar2_1", "u^-1", e_inv, 0)])?;
    c.expect_eq("f", &format!("({B2_E})^-1 e ({B2_E})"))?;
    c.moves(&[
        ("Bbar4_2", "f a2^-1", "a2^-1 f", 0),
        ("Abar2_3", "f a1^-1 f^-1", "a1^-1 f^-1 a1", 0),
        ("A2[i=1]", "a1 a2^-1 a1^-1", "a2^-1 a1^-1 a2", 0),
        ("A2[i=1]", "a1^-1 a2^-1 a1^-1", "a2^-1 a1^-1 a2^-1", 0),
        ("Bbar4_1", "a2^-1 e^-1", "e^-1 a2^-1", 0),
        ("Abar2_1", "e^-1 a1^-1 e^-1", "a1^-1 e^-1 a1^-1", 0),
    ])?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "d1_superfluous",
        (4, 1),
        ContextKind::Twist,
        Some("D1"),
        "f = u^-1 e u follows from the remaining relations",
        script,
    ))
}

/// `z_k u = u z_k`: `u` passes the outer letters by (B̄3) and the core by
/// (B̄1₂) followed by (B̄1).
fn d6(g: u32, k: u32) -> Result<DerivationFixture, Error> {
    let pres = twist_context(g, 1)?;
    let pe_inv = "e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1";
    let pf = "a2 a3 a1 a2 f a1 a3^-1 f";
    let commute = |i: u32| {
        if i == 3 {
            "Bbar3".to_string()
        } else {
            format!("Bbar3[i={i}]")
        }
    };
    let mut c = Chain::equality(&pres, &format!("{} u", z_text(k)))?;
    for j in (4..=k).rev() {
        for i in [j - 1, j] {
            c.mv(&commute(i), &format!("a{i}^-1 u"), &format!("u a{i}^-1"))?;
        }
    }
    c.mv("Bbar1_2", &format!("{pe_inv} u"), &format!("u {pf}"))?;
    c.mv("Bbar1", pf, pe_inv)?;
    for j in 4..=k {
        for i in [j, j - 1] {
            c.mv(&commute(i), &format!("a{i} u"), &format!("u a{i}"))?;
        }
    }
    let script = c.finish(&format!("u {}", z_text(k)))?;
    Ok(fixture(
        "d6",
        (g, 1),
        ContextKind::Twist,
        None,
        &format!("z{k} u = u z{k}"),
        script,
    ))
}

/// `z_k f z_k^-1 = a2^-1`: `f` passes the outer letters by (Ā1₂), the core
/// switches to the `f` form by (B̄1), and the local identity
/// `W f W^-1 = a2^-1` with `W = a3 a4 (a2 a3 a1 a2 f a1 a3^-1 f) a4^-1 a3^-1`
/// follows from (A1), (A2), (Ā1₂) and (Ā2₄).
fn d7(g: u32, k: u32) -> Result<DerivationFixture, Error> {
    let pres = twist_context(g, 1)?;
    let pe_inv = "e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1";
    let pf = "a2 a3 a1 a2 f a1 a3^-1 f";
    let z = z_text(k);
    let mut c = Chain::relator(&pres, &format!("{z} f ({z})^-1 a2"))?;
    for j in (5..=k).rev() {
        for i in [j - 1, j] {
            c.mv(
                &format!("Abar1_2[j={i}]"),
                &format!("a{i}^-1 f"),
                &format!("f a{i}^-1"),
            )?;
        }
    }
    c.moves(&[
        ("Bbar1", pe_inv, pf, 0),
        (
            "Bbar1",
            "a2 a3 a1 a2 e a1 a3^-1 e",
            "f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1",
            0,
        ),
    ])?;
    for j in (5..=k).rev() {
        for i in [j - 1, j] {
            c.mv(
                &format!("A1[i=2,j={i}]"),
                &format!("a{i}^-1 a2"),
                &format!("a2 a{i}^-1"),
            )?;
        }
    }
    let w = format!("a3 a4 {pf} a4^-1 a3^-1");
    c.expect(&format!("({w}) f ({w})^-1 a2"))?;
    c.moves(&[
        ("A1[i=2,j=4]", "a4 a2", "a2 a4", 0),
        ("Abar1_2[j=4]", "f a4^-1", "a4^-1 f", 0),
        ("Abar2_4", "f a3^-1 f", "a3^-1 f a3^-1", 0),
        ("A2[i=3]", "a3^-1 a4^-1 a3^-1", "a4^-1 a3^-1 a4^-1", 0),
        ("A1[i=1,j=4]", "a1 a4^-1", "a4^-1 a1", 0),
        ("Abar1_2[j=4]", "f a4^-1", "a4^-1 f", 0),
        ("A1[i=2,j=4]", "a2 a4^-1", "a4^-1 a2", 0),
        ("A1[i=1,j=4]", "a1 a4^-1", "a4^-1 a1", 0),
        ("A2[i=3]", "a4 a3 a4^-1", "a3^-1 a4 a3", 0),
        ("A2[i=2]", "a3 a2 a3^-1", "a2^-1 a3 a2", 0),
        ("A1[i=2,j=4]", "a2 a4", "a4 a2", 0),
        ("Abar1_2[j=4]", "a4^-1 f", "f a4^-1", 0),
    ])?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "d7",
        (g, 1),
        ContextKind::Twist,
        None,
        &format!("z{k} f z{k}^-1 = a2^-1"),
        script,
    ))
}

/// (B̄7₃) from (B̄1) and the ambient (B7).
fn bbar7_3() -> Result<DerivationFixture, Error> {
    let pres =
        working_presentation(6, 1)?.filter_relators(|r| r.label != normalize_label("Bbar7_3"));
    let q = "a4 a5 a3 a4 a2 a3 a1 a2";
    let q_inv = "a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 a4^-1";
    let pe_inv = "e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1";
    let l = format!("a4 a5 a3 a4 {pe_inv} a4^-1 a3^-1 a5^-1 a4^-1");
    let mut c = Chain::relator(&pres, &format!("({l}) u^-1 c u ({l})^-1 b^-1"))?;
    c.moves(&[
        ("def:u", "u", "y y", 0),
        ("def:u", "u^-1", "y^-1 y^-1", 0),
        ("def:c", "c", "y b y^-1", 0),
        ("Bbar1", pe_inv, "a2 a3 a1 a2 f a1 a3^-1 f", 0),
        (
            "Bbar1",
            "a2 a3 a1 a2 e a1 a3^-1 e",
            "f^-1 a3 a1^-1 f^-1 a2^-1 a1^-1 a3^-1 a2^-1",
            0,
        ),
    ])?;
    c.mv_all("def:f", "f", "y^-1 a2^-1 y")?;
    c.mv_all("def:f", "f^-1", "y^-1 a2 y")?;
    c.moves(&[
        ("B5", "y a1", "a1^-1 y", 0),
        ("B3[i=3]", "y a3^-1", "a3^-1 y", 0),
        ("B3[i=4]", "y a4^-1", "a4^-1 y", 0),
        ("B3[i=3]", "y a3^-1", "a3^-1 y", 0),
        ("B3[i=5]", "y a5^-1", "a5^-1 y", 0),
        ("B3[i=4]", "y a4^-1", "a4^-1 y", 0),
        ("B3[i=4]", "y a4", "a4 y", 0),
        ("B3[i=5]", "y a5", "a5 y", 0),
        ("B3[i=3]", "y a3", "a3 y", 0),
        ("B3[i=4]", "y a4", "a4 y", 0),
        ("B5", "a1^-1 y^-1", "y^-1 a1", 0),
        ("B3[i=3]", "y a3 y^-1", "a3", 0),
    ])?;
    let commutator = format!("{q} y^-1 {q_inv} b {q} y {q_inv} b^-1");
    c.expect(&commutator)?;
    c.mv("B7", &commutator, "1")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "bbar7_3",
        (6, 1),
        ContextKind::Working,
        Some("Bbar7_3"),
        "z5 u^-1 c u = b z5",
        script,
    ))
}

fn closed_working(g: u32, target: &str) -> Result<Presentation, Error> {
    let t = normalize_label(target);
    Ok(working_presentation(g, 0)?.filter_relators(|r| r.label != t))
}

fn cbar5_odd() -> Result<DerivationFixture, Error> {
    let pres = closed_working(5, "Cbar5")?;
    let mut c = Chain::relator(&pres, "r u (u^-1 r)^-1")?;
    c.mv_all("def:u", "u", "y y")?;
    c.mv_all("C5", "r y", "y^-1 r")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar5_odd",
        (5, 0),
        ContextKind::Working,
        Some("Cbar5"),
        "r u = u^-1 r",
        script,
    ))
}

fn cbar5_even() -> Result<DerivationFixture, Error> {
    let pres = closed_working(6, "Cbar5")?;
    let mut c = Chain::relator(&pres, "R u (u^-1 R)^-1")?;
    c.mv_all("def:R", "R", "y r")?;
    c.mv_all("def:R", "R^-1", "r^-1 y^-1")?;
    c.mv_all("def:u", "u", "y y")?;
    c.mv_all("C5", "r y", "y^-1 r")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar5_even",
        (6, 0),
        ContextKind::Working,
        Some("Cbar5"),
        "R u = u^-1 R",
        script,
    ))
}

fn cbar2_odd() -> Result<DerivationFixture, Error> {
    let pres = closed_working(5, "Cbar2")?;
    let mut c = Chain::relator(&pres, "r e (f r)^-1")?;
    c.mv("def:e", "e", "y a2^-1 y^-1")?;
    c.mv("def:f", "f^-1", "y^-1 a2 y")?;
    c.mv("C5", "r y", "y^-1 r")?;
    c.mv("C2[i=2]", "r a2^-1", "a2^-1 r")?;
    c.mv("C5", "r y^-1", "y r")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar2_odd",
        (5, 0),
        ContextKind::Working,
        Some("Cbar2"),
        "r e = f r",
        script,
    ))
}

fn cbar3_even() -> Result<DerivationFixture, Error> {
    let pres = closed_working(6, "Cbar3")?;
    let mut c = Chain::relator(&pres, "R R")?;
    c.mv_all("def:R", "R", "y r")?;
    c.mv("C5", "r y", "y^-1 r")?;
    c.mv("C3", "r r", "1")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar3_even",
        (6, 0),
        ContextKind::Working,
        Some("Cbar3"),
        "R^2 = 1",
        script,
    ))
}

/// (C̄4a) from (C4a) for odd `g`.
fn cbar4a_odd(g: u32) -> Result<DerivationFixture, Error> {
    let pres = closed_working(g, "Cbar4a")?;
    let tail = a_run(2, g - 1);
    let n = (g - 1) / 2;
    let mut c = Chain::relator(&pres, &format!("({tail} e^-1 {})^{n}", a_run(3, g - 1)))?;
    c.mv_all("def:e", "e^-1", "y a2 y^-1")?;
    for i in 3..g {
        c.mv_all(
            &format!("B3[i={i}]"),
            &format!("y^-1 a{i}"),
            &format!("a{i} y^-1"),
        )?;
    }
    c.expect(&format!("(y^-1 {tail} y {tail})^{n}"))?;
    c.mv("C4a", &format!("(y^-1 {tail} y {tail})^{n}"), "1")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar4a_odd",
        (g, 0),
        ContextKind::Working,
        Some("Cbar4a"),
        &format!("({tail} e^-1 {})^{n} = 1", a_run(3, g - 1)),
        script,
    ))
}

/// (C̄4) through the ambient (C4); the standard closed relator (C4b) is
/// not needed.
fn cbar4_even(g: u32) -> Result<DerivationFixture, Error> {
    let pres = closed_working(g, "Cbar4")?;
    let tail = a_run(2, g - 1);
    let mut c = Chain::relator(&pres, &format!("(R {tail})^{}", g - 1))?;
    c.mv_all("def:R", "R", "y r")?;
    c.mv("C4", &format!("(y r {tail})^{}", g - 1), "1")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "cbar4_even",
        (g, 0),
        ContextKind::Working,
        Some("Cbar4"),
        &format!("(R {tail})^{} = 1", g - 1),
        script,
    ))
}

/// `B0 = a1^-1`, the form of (Ā7) used inside the proofs.
fn abar7_proof_form() -> Result<DerivationFixture, Error> {
    let pres =
        working_presentation(6, 0)?.filter_relators(|r| r.label != normalize_label("Abar7a[i=0]"));
    let mut c = Chain::relator(&pres, "B0 a1")?;
    c.mv("def:B0", "B0", "y b0 y^-1")?;
    c.mv("A7[i=0]", "b0", "a1")?;
    c.mv("B5", "y a1 y^-1", "a1^-1")?;
    let script = c.finish_trivial()?;
    Ok(fixture(
        "abar7_proof_form",
        (6, 0),
        ContextKind::Working,
        Some("Abar7a[i=0]"),
        "B0 = a1^-1",
        script,
    ))
}
