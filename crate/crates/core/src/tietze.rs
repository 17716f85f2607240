//! Certified Tietze transformations.
//!
//! Adding or removing a relator requires a derivation script showing that
//! the relator is a consequence of the remaining ones. Generators are added
//! together with a defining relator and removed by substituting their
//! definition.

use crate::derivation::{check_derivation, DerivationScript};
use crate::error::Error;
use crate::presentation::{normalize_label, relators_equal_cyclically, Presentation, Relator};
use crate::symbol::GeneratorSymbol;
use crate::word::Word;

/// Default label of the defining relator of an added generator.
pub fn definition_label(s: GeneratorSymbol) -> String {
    format!("def:{s}")
}

/// Add a fresh generator `s` with defining relator `s = def`, labelled
/// `def:<s>`.
pub fn tietze_add_generator(
    p: &Presentation,
    s: GeneratorSymbol,
    def: &Word,
) -> Result<Presentation, Error> {
    tietze_add_generator_labeled(p, s, def, &definition_label(s))
}

pub fn tietze_add_generator_labeled(
    p: &Presentation,
    s: GeneratorSymbol,
    def: &Word,
    label: &str,
) -> Result<Presentation, Error> {
    if p.has_generator(s) {
        return Err(Error::Tietze(format!("generator {s} already present")));
    }
    if let Some(x) = def.symbols().find(|x| !p.has_generator(*x)) {
        return Err(Error::Tietze(format!(
            "definition of {s} uses unknown symbol {x}"
        )));
    }
    let mut out = p.clone();
    out.push_generator(s);
    out.push_relator(Relator::new(
        normalize_label(label),
        Word::generator(s).concat(&def.inverse()),
    ))?;
    Ok(out)
}

/// Remove generator `s`, which must have a defining relator `s = def` (up to
/// rotation and inversion) with `def` free of `s`. Every other relator has
/// `s` replaced by `def`.
pub fn tietze_remove_generator(
    p: &Presentation,
    s: GeneratorSymbol,
    def: &Word,
) -> Result<Presentation, Error> {
    if !p.has_generator(s) {
        return Err(Error::Tietze(format!("{s} is not a generator")));
    }
    if def.contains_symbol(s) {
        return Err(Error::Tietze(format!("definition {def} mentions {s}")));
    }
    let def_rel = Word::generator(s).concat(&def.inverse());
    let idx = p
        .relators()
        .iter()
        .position(|r| relators_equal_cyclically(&r.word, &def_rel))
        .ok_or_else(|| Error::Tietze(format!("no relator {s} = {def}")))?;
    let mut out = p.clone();
    let (gens, rels) = out.parts_mut();
    rels.remove(idx);
    gens.retain(|g| *g != s);
    for r in rels.iter_mut() {
        if r.word.contains_symbol(s) {
            r.word = r.word.substitute_with(|x| {
                if x == s {
                    Some(def.clone())
                } else {
                    Some(Word::generator(x))
                }
            })?;
        }
    }
    Ok(out)
}

/// Add relator `w` under `label`; `certificate` must check against `p` and
/// certify `w`.
pub fn tietze_add_relator(
    p: &Presentation,
    label: &str,
    w: &Word,
    certificate: &DerivationScript,
) -> Result<Presentation, Error> {
    if !certificate.certifies(w) {
        return Err(Error::Tietze(format!(
            "certificate proves {} = {}, which does not yield relator {w}",
            certificate.start, certificate.end
        )));
    }
    check_derivation(p, certificate).into_result()?;
    let mut out = p.clone();
    out.push_relator(Relator::new(normalize_label(label), w.clone()))?;
    Ok(out)
}

/// Remove the relator `label`; `certificate` must certify it using only the
/// remaining relators.
pub fn tietze_remove_relator(
    p: &Presentation,
    label: &str,
    certificate: &DerivationScript,
) -> Result<Presentation, Error> {
    let mut out = p.clone();
    let removed = out.take_relator(label)?;
    if !certificate.certifies(&removed.word) {
        return Err(Error::Tietze(format!(
            "certificate proves {} = {}, which does not yield relator {}",
            certificate.start, certificate.end, removed.label
        )));
    }
    check_derivation(&out, certificate).into_result()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivation::{Direction, Step};
    use crate::parse::w;
    use crate::presentation::Meta;

    fn x_z() -> Presentation {
        // <x, z | z = x^2> spelled with x = a1, z = a2.
        Presentation::new(
            Meta::other(),
            vec![GeneratorSymbol::a(1), GeneratorSymbol::a(2)],
            vec![Relator::new("z", w("a2 a1^-2"))],
        )
        .unwrap()
    }

    #[test]
    fn eliminate_defined_generator() {
        let p = tietze_remove_generator(&x_z(), GeneratorSymbol::a(2), &w("a1 a1")).unwrap();
        assert_eq!(p.generators(), &[GeneratorSymbol::a(1)]);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn remove_generator_rejects_self_reference() {
        let err = tietze_remove_generator(&x_z(), GeneratorSymbol::a(2), &w("a2 a1")).unwrap_err();
        assert!(matches!(err, Error::Tietze(_)));
    }

    #[test]
    fn add_then_remove_generator() {
        let p = x_z();
        let q = tietze_add_generator(&p, GeneratorSymbol::y(), &w("a1 a2")).unwrap();
        assert!(q.relator("def:y").is_some());
        let back = tietze_remove_generator(&q, GeneratorSymbol::y(), &w("a1 a2")).unwrap();
        assert_eq!(back, p);
        assert!(tietze_add_generator(&p, GeneratorSymbol::a(1), &w("1")).is_err());
        assert!(tietze_add_generator(&p, GeneratorSymbol::e(), &w("b")).is_err());
    }

    #[test]
    fn relator_with_certificate() {
        let p = x_z();
        // a2^2 = a1^4 follows from a2 = a1^2.
        let cert = DerivationScript::new(
            w("a2 a2"),
            w("a1 a1 a1 a1"),
            vec![
                Step::ApplyRelator {
                    label: "z".into(),
                    position: 0,
                    span: 1,
                    rotation: 0,
                    inverted: false,
                    direction: Direction::Forward,
                },
                Step::ApplyRelator {
                    label: "z".into(),
                    position: 2,
                    span: 1,
                    rotation: 0,
                    inverted: false,
                    direction: Direction::Forward,
                },
            ],
        );
        let q = tietze_add_relator(&p, "sq", &w("a2 a2 a1^-4"), &cert).unwrap();
        assert_eq!(q.relators().len(), 2);
        let back = tietze_remove_relator(&q, "sq", &cert).unwrap();
        assert_eq!(back, p);
        // The certificate may not use the relator it removes.
        let circular = DerivationScript::new(
            w("a2"),
            w("a1 a1"),
            vec![Step::ApplyRelator {
                label: "z".into(),
                position: 0,
                span: 1,
                rotation: 0,
                inverted: false,
                direction: Direction::Forward,
            }],
        );
        match tietze_remove_relator(&p, "z", &circular) {
            Err(Error::Certificate { step, .. }) => assert_eq!(step, 0),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            tietze_remove_relator(&p, "nope", &circular),
            Err(Error::UnknownLabel(_))
        ));
        // A certificate for a different relator is refused.
        assert!(tietze_add_relator(&p, "other", &w("a1"), &cert).is_err());
    }
}
