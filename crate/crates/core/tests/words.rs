use proptest::prelude::*;
use twistpres::parse::{parse_word, w};
use twistpres::presentation::relators_equal_cyclically;
use twistpres::{GeneratorSymbol, Letter, Word};

const ALPHABET: [&str; 4] = ["a1", "a2", "y", "e"];

fn letter_strategy() -> impl Strategy<Value = (usize, bool)> {
    (0..ALPHABET.len(), any::<bool>())
}

fn to_letters(raw: &[(usize, bool)]) -> Vec<Letter> {
    raw.iter()
        .map(|&(i, inv)| {
            let s: GeneratorSymbol = ALPHABET[i].parse().unwrap();
            if inv {
                Letter::neg(s)
            } else {
                Letter::pos(s)
            }
        })
        .collect()
}

/// Remove the leftmost cancelling pair until none is left.
fn naive_reduce(mut v: Vec<(usize, bool)>) -> Vec<(usize, bool)> {
    loop {
        let hit =
            (0..v.len().saturating_sub(1)).find(|&i| v[i].0 == v[i + 1].0 && v[i].1 != v[i + 1].1);
        match hit {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

fn naive_cyclic_core(x: &[Letter]) -> Vec<Letter> {
    let mut v = x.to_vec();
    while v.len() >= 2 && v[0] == v[v.len() - 1].inv() {
        v.pop();
        v.remove(0);
    }
    v
}

fn naive_cyclic_equal(u: &[Letter], v: &[Letter]) -> bool {
    let (u, v) = (naive_cyclic_core(u), naive_cyclic_core(v));
    let (u, v) = (u.as_slice(), v.as_slice());
    if u.len() != v.len() {
        return false;
    }
    if u.is_empty() {
        return true;
    }
    let inv: Vec<Letter> = v.iter().rev().map(|l| l.inv()).collect();
    (0..v.len()).any(|k| {
        let rot = |x: &[Letter]| [&x[k..], &x[..k]].concat();
        rot(v) == u || rot(&inv) == u
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reduce_matches_naive_and_is_idempotent(raw in prop::collection::vec(letter_strategy(), 0..40)) {
        let word = Word::reduce(to_letters(&raw));
        let expected = to_letters(&naive_reduce(raw.clone()));
        prop_assert_eq!(word.letters(), expected.as_slice());
        prop_assert_eq!(Word::reduce(word.letters().iter().copied()), word);
    }

    #[test]
    fn inverse_and_concat(a in prop::collection::vec(letter_strategy(), 0..20),
                          b in prop::collection::vec(letter_strategy(), 0..20),
                          c in prop::collection::vec(letter_strategy(), 0..20)) {
        let (a, b, c) = (Word::reduce(to_letters(&a)), Word::reduce(to_letters(&b)), Word::reduce(to_letters(&c)));
        prop_assert!(a.concat(&a.inverse()).is_identity());
        prop_assert_eq!(a.inverse().inverse(), a.clone());
        prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
        prop_assert_eq!(a.concat(&b).inverse(), b.inverse().concat(&a.inverse()));
    }

    #[test]
    fn text_round_trip(raw in prop::collection::vec(letter_strategy(), 0..30)) {
        let word = Word::reduce(to_letters(&raw));
        prop_assert_eq!(parse_word(&word.to_string()).unwrap(), word);
    }

    #[test]
    fn cyclic_equality_agrees_with_rotation_search(raw in prop::collection::vec(letter_strategy(), 1..16),
                                                   other in prop::collection::vec(letter_strategy(), 1..16),
                                                   k in 0usize..16, invert in any::<bool>(), related in any::<bool>()) {
        let u = Word::reduce(to_letters(&raw));
        prop_assume!(!u.is_empty());
        let mut v: Vec<Letter> = if related { u.rotation(k % u.len()) } else { to_letters(&other) };
        if invert {
            v = v.iter().rev().map(|l| l.inv()).collect();
        }
        let v = Word::reduce(v);
        prop_assert_eq!(relators_equal_cyclically(&u, &v), naive_cyclic_equal(u.letters(), v.letters()));
    }

    #[test]
    fn cyclic_equality_is_symmetric(a in prop::collection::vec(letter_strategy(), 1..8),
                                    b in prop::collection::vec(letter_strategy(), 1..8)) {
        let (a, b) = (Word::reduce(to_letters(&a)), Word::reduce(to_letters(&b)));
        prop_assume!(!a.is_empty() && !b.is_empty());
        prop_assert_eq!(relators_equal_cyclically(&a, &b), relators_equal_cyclically(&b, &a));
        prop_assert!(relators_equal_cyclically(&a, &a));
    }
}

#[test]
fn syntax_variants_agree() {
    assert_eq!(w("a1*a2'"), w("a1 a2^-1"));
    assert_eq!(w("(a1 y)^3"), w("a1 y a1 y a1 y"));
    assert_eq!(w("(a1 y)^-2"), w("y^-1 a1^-1 y^-1 a1^-1"));
    assert_eq!(w("a1 a1^-1 1"), Word::identity());
}
