//! Derivation scripts: sequences of elementary word moves, each of which
//! replaces the current word by one equal to it in a presented group.
//!
//! The current word is a raw letter sequence. Moves never reduce implicitly;
//! free reduction is spelled out with `FreeCancel` (and undone with
//! `FreeInsert`). Only the final word is compared with `end` after free
//! reduction.
//!
//! `ApplyRelator` addresses a relator `r` by label. With `q = r` (or `r^-1`
//! when `inverted`) and `q' = q[rotation..] q[..rotation]`, a forward move
//! requires `q'[..span]` at `position` and replaces it by `(q'[span..])^-1`;
//! a backward move performs the opposite replacement. Since `q'` is a
//! conjugate of `r^{+-1}`, both sides of the replacement are equal in the
//! group.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::presentation::{relators_equal_cyclically, Presentation};
use crate::symbol::GeneratorSymbol;
use crate::word::{invert_letters, letters_to_text, rotate_letters, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Direction {
    #[serde(rename = "->")]
    Forward,
    #[serde(rename = "<-")]
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// Insert `letter letter^-1` before `position`.
    FreeInsert {
        position: usize,
        #[serde(with = "letter_text")]
        letter: Letter,
    },
    /// Delete the cancelling pair at `position`, `position + 1`.
    FreeCancel { position: usize },
    ApplyRelator {
        label: String,
        position: usize,
        span: usize,
        rotation: usize,
        inverted: bool,
        direction: Direction,
    },
    /// Forward: replace every occurrence of `symbol^{+-1}` by
    /// `definition^{+-1}`. Backward: replace every non-overlapping
    /// occurrence of `definition` (left to right) by `symbol`. Requires a
    /// relator equal to `symbol definition^-1` up to rotation and inversion.
    SubstituteDef {
        symbol: GeneratorSymbol,
        definition: Word,
        direction: Direction,
    },
}

mod letter_text {
    use super::*;

    pub fn serialize<S: Serializer>(l: &Letter, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&l.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Letter, D::Error> {
        let text = String::deserialize(d)?;
        let letters = crate::parse::parse_letters(&text).map_err(serde::de::Error::custom)?;
        match letters.as_slice() {
            [l] => Ok(*l),
            _ => Err(serde::de::Error::custom(format!(
                "expected a single letter, got {text:?}"
            ))),
        }
    }
}

impl Serialize for GeneratorSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GeneratorSymbol {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationScript {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<Step>,
}

impl DerivationScript {
    pub fn new(start: Word, end: Word, steps: Vec<Step>) -> Self {
        DerivationScript { start, end, steps }
    }

    /// The relator this script proves to be a consequence: `start end^-1`.
    pub fn certified_relator(&self) -> Word {
        self.start.concat(&self.end.inverse())
    }

    /// True iff the script certifies `w` as a relator (up to rotation and
    /// inversion).
    pub fn certifies(&self, w: &Word) -> bool {
        relators_equal_cyclically(w, &self.certified_relator())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepFailure {
    /// Index of the failing step; `steps.len()` when only the final
    /// comparison with `end` fails.
    pub step: usize,
    pub reason: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationReport {
    pub ok: bool,
    pub steps_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<StepFailure>,
}

impl fmt::Display for DerivationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "ok ({} steps)", self.steps_checked),
            Some(fl) => write!(
                f,
                "FAILED at step {}: {}\n  expected: {}\n  actual:   {}",
                fl.step, fl.reason, fl.expected, fl.actual
            ),
        }
    }
}

impl DerivationReport {
    pub fn into_result(self) -> Result<(), Error> {
        match self.failure {
            None => Ok(()),
            Some(fl) => Err(Error::Certificate {
                step: fl.step,
                reason: format!(
                    "{} (expected {}, found {})",
                    fl.reason, fl.expected, fl.actual
                ),
            }),
        }
    }
}

/// The relator instance `q'` addressed by an `ApplyRelator` step.
pub fn relator_instance(r: &Word, rotation: usize, inverted: bool) -> Vec<Letter> {
    let q = if inverted { r.inverse() } else { r.clone() };
    rotate_letters(q.letters(), rotation)
}

/// Apply one step to a raw word.
pub fn apply_step(
    p: &Presentation,
    current: &[Letter],
    step: &Step,
) -> Result<Vec<Letter>, StepFailure> {
    let fail = |reason: String, expected: String, actual: String| StepFailure {
        step: 0,
        reason,
        expected,
        actual,
    };
    match step {
        Step::FreeInsert { position, letter } => {
            if *position > current.len() {
                return Err(fail(
                    "position past end of word".into(),
                    format!("position <= {}", current.len()),
                    position.to_string(),
                ));
            }
            let mut v = Vec::with_capacity(current.len() + 2);
            v.extend_from_slice(&current[..*position]);
            v.push(*letter);
            v.push(letter.inv());
            v.extend_from_slice(&current[*position..]);
            Ok(v)
        }
        Step::FreeCancel { position } => {
            let p0 = *position;
            if p0 + 1 >= current.len() || !current[p0].cancels(current[p0 + 1]) {
                let found = current.get(p0..(p0 + 2).min(current.len())).unwrap_or(&[]);
                return Err(fail(
                    "no cancelling pair".into(),
                    "x x^-1".into(),
                    letters_to_text(found),
                ));
            }
            let mut v = current.to_vec();
            v.drain(p0..p0 + 2);
            Ok(v)
        }
        Step::ApplyRelator {
            label,
            position,
            span,
            rotation,
            inverted,
            direction,
        } => {
            let rel = p
                .relator(label)
                .ok_or_else(|| fail("unknown relator".into(), label.clone(), "missing".into()))?;
            let n = rel.word.len();
            if *span > n || (n > 0 && *rotation >= n) || (n == 0 && *rotation != 0) {
                return Err(fail(
                    "span or rotation out of range".into(),
                    format!("span <= {n}, rotation < {n}"),
                    format!("span {span}, rotation {rotation}"),
                ));
            }
            let inst = relator_instance(&rel.word, *rotation, *inverted);
            let head = inst[..*span].to_vec();
            let tail = invert_letters(&inst[*span..]);
            let (from, to) = match direction {
                Direction::Forward => (head, tail),
                Direction::Backward => (tail, head),
            };
            let end = position + from.len();
            if end > current.len() || current[*position..end] != from[..] {
                let found = current
                    .get(*position..end.min(current.len()))
                    .unwrap_or(&[]);
                return Err(fail(
                    format!("relator {label} does not match at position {position}"),
                    letters_to_text(&from),
                    letters_to_text(found),
                ));
            }
            let mut v = Vec::with_capacity(current.len() + to.len());
            v.extend_from_slice(&current[..*position]);
            v.extend_from_slice(&to);
            v.extend_from_slice(&current[end..]);
            Ok(v)
        }
        Step::SubstituteDef {
            symbol,
            definition,
            direction,
        } => {
            let def_rel = Word::generator(*symbol).concat(&definition.inverse());
            if !p
                .relators()
                .iter()
                .any(|r| relators_equal_cyclically(&r.word, &def_rel))
            {
                return Err(fail(
                    format!("no defining relator for {symbol}"),
                    format!("{symbol} = {definition}"),
                    "missing".into(),
                ));
            }
            if definition.contains_symbol(*symbol) {
                return Err(fail(
                    "definition mentions the defined symbol".into(),
                    symbol.to_string(),
                    definition.to_string(),
                ));
            }
            Ok(match direction {
                Direction::Forward => {
                    let inv = definition.inverse();
                    let mut v = Vec::with_capacity(current.len());
                    for l in current {
                        if l.symbol == *symbol {
                            v.extend_from_slice(if l.inverse {
                                inv.letters()
                            } else {
                                definition.letters()
                            });
                        } else {
                            v.push(*l);
                        }
                    }
                    v
                }
                Direction::Backward => {
                    let pat = definition.letters();
                    let mut v = Vec::with_capacity(current.len());
                    let mut i = 0;
                    while i < current.len() {
                        if !pat.is_empty() && current[i..].starts_with(pat) {
                            v.push(Letter::pos(*symbol));
                            i += pat.len();
                        } else {
                            v.push(current[i]);
                            i += 1;
                        }
                    }
                    v
                }
            })
        }
    }
}

/// Validate every step of `d` against the relators of `p`.
pub fn check_derivation(p: &Presentation, d: &DerivationScript) -> DerivationReport {
    let mut current: Vec<Letter> = d.start.letters().to_vec();
    for (i, step) in d.steps.iter().enumerate() {
        match apply_step(p, &current, step) {
            Ok(next) => current = next,
            Err(mut fl) => {
                fl.step = i;
                return DerivationReport {
                    ok: false,
                    steps_checked: i,
                    failure: Some(fl),
                };
            }
        }
    }
    let fin = Word::reduce(current);
    if fin != d.end {
        return DerivationReport {
            ok: false,
            steps_checked: d.steps.len(),
            failure: Some(StepFailure {
                step: d.steps.len(),
                reason: "final word differs from the claimed end".into(),
                expected: d.end.to_string(),
                actual: fin.to_string(),
            }),
        };
    }
    DerivationReport {
        ok: true,
        steps_checked: d.steps.len(),
        failure: None,
    }
}

/// All intermediate raw words of a script, starting with `start`.
pub fn trace(p: &Presentation, d: &DerivationScript) -> Result<Vec<Vec<Letter>>, StepFailure> {
    let mut out = vec![d.start.letters().to_vec()];
    for (i, step) in d.steps.iter().enumerate() {
        let next = apply_step(p, out.last().map(|v| v.as_slice()).unwrap_or(&[]), step).map_err(
            |mut f| {
                f.step = i;
                f
            },
        )?;
        out.push(next);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::w;
    use crate::presentation::{Meta, Relator};

    fn twist_fragment() -> Presentation {
        let gens = ["a1", "a2", "e", "u", "y"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        Presentation::new(
            Meta::other(),
            gens,
            vec![
                Relator::new("A\u{304}2\u{2081}", w("a1 e a1 e^-1 a1^-1 e^-1")),
                Relator::new("def:u", w("u y^-1 y^-1")),
            ],
        )
        .unwrap()
    }

    #[test]
    fn single_braid_step() {
        let p = twist_fragment();
        let d = DerivationScript::new(
            w("a1 e a1"),
            w("e a1 e"),
            vec![Step::ApplyRelator {
                label: "Abar2_1".into(),
                position: 0,
                span: 3,
                rotation: 0,
                inverted: false,
                direction: Direction::Forward,
            }],
        );
        let rep = check_derivation(&p, &d);
        assert!(rep.ok, "{rep}");
        // The backward move undoes it.
        let back = DerivationScript::new(
            w("e a1 e"),
            w("a1 e a1"),
            vec![Step::ApplyRelator {
                label: "Abar2_1".into(),
                position: 0,
                span: 3,
                rotation: 0,
                inverted: false,
                direction: Direction::Backward,
            }],
        );
        assert!(check_derivation(&p, &back).ok);
    }

    #[test]
    fn reflexivity() {
        let p = twist_fragment();
        let d = DerivationScript::new(w("a1 e"), w("a1 e"), vec![]);
        assert!(check_derivation(&p, &d).ok);
    }

    #[test]
    fn mismatch_reports_step_and_words() {
        let p = twist_fragment();
        let d = DerivationScript::new(
            w("a1 e a1"),
            w("e a1 e"),
            vec![Step::ApplyRelator {
                label: "Abar2_1".into(),
                position: 1,
                span: 3,
                rotation: 0,
                inverted: false,
                direction: Direction::Forward,
            }],
        );
        let rep = check_derivation(&p, &d);
        let fl = rep.failure.unwrap();
        assert_eq!(fl.step, 0);
        assert_eq!(fl.expected, "a1 e a1");
        assert_eq!(fl.actual, "e a1");
    }

    #[test]
    fn free_moves_and_final_comparison() {
        let p = twist_fragment();
        let a1: GeneratorSymbol = "a1".parse().unwrap();
        let d = DerivationScript::new(
            w("e"),
            w("e"),
            vec![
                Step::FreeInsert {
                    position: 1,
                    letter: Letter::neg(a1),
                },
                Step::FreeCancel { position: 1 },
            ],
        );
        assert!(check_derivation(&p, &d).ok);
        let bad = DerivationScript::new(w("e"), w("e"), vec![Step::FreeCancel { position: 0 }]);
        assert_eq!(check_derivation(&p, &bad).failure.unwrap().step, 0);
        let wrong_end = DerivationScript::new(w("e"), w("a1"), vec![]);
        assert_eq!(check_derivation(&p, &wrong_end).failure.unwrap().step, 0);
    }

    #[test]
    fn substitute_definition_both_ways() {
        let p = twist_fragment();
        let d = DerivationScript::new(
            w("u a1 u^-1"),
            w("y y a1 y^-1 y^-1"),
            vec![Step::SubstituteDef {
                symbol: "u".parse().unwrap(),
                definition: w("y y"),
                direction: Direction::Forward,
            }],
        );
        assert!(check_derivation(&p, &d).ok);
        let back = DerivationScript::new(
            w("y y a1"),
            w("u a1"),
            vec![Step::SubstituteDef {
                symbol: "u".parse().unwrap(),
                definition: w("y y"),
                direction: Direction::Backward,
            }],
        );
        assert!(check_derivation(&p, &back).ok);
        let missing = DerivationScript::new(
            w("e"),
            w("y"),
            vec![Step::SubstituteDef {
                symbol: "e".parse().unwrap(),
                definition: w("y"),
                direction: Direction::Forward,
            }],
        );
        assert!(!check_derivation(&p, &missing).ok);
    }

    #[test]
    fn script_json_round_trip() {
        let d = DerivationScript::new(
            w("a1 e a1"),
            w("e a1 e"),
            vec![
                Step::ApplyRelator {
                    label: "A\u{304}2\u{2081}".into(),
                    position: 0,
                    span: 3,
                    rotation: 0,
                    inverted: false,
                    direction: Direction::Forward,
                },
                Step::FreeInsert {
                    position: 0,
                    letter: Letter::neg(GeneratorSymbol::y()),
                },
                Step::FreeCancel { position: 0 },
            ],
        );
        let text = serde_json::to_string(&d).unwrap();
        let back: DerivationScript = serde_json::from_str(&text).unwrap();
        assert_eq!(back, d);
    }
}
