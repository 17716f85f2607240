use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use twistpres::abelianize::{exponent_matrix, invariants_of, IntMatrix};
use twistpres::catalog::chains::DerivationFixture;
use twistpres::catalog::{
    self, derived_words, embedding_map, mcg_parity, rho_word, z_word, CatalogKey,
};
use twistpres::parse::w;
use twistpres::presentation::{ascii_label, relators_equal_cyclically};
use twistpres::serialize::{parse_json, to_json};
use twistpres::{Error, Kind, Presentation, Variant};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn build(g: u32, s: u8, kind: Kind, variant: Variant) -> Presentation {
    catalog::build(&CatalogKey::new(g, s, kind, variant).unwrap()).unwrap()
}

fn family_counts(p: &Presentation) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for r in p.relators() {
        *m.entry(ascii_label(r.label.split('[').next().unwrap()))
            .or_insert(0) += 1;
    }
    m
}

/// Relation families and multiplicities, read off the printed side
/// conditions family by family.
fn expected(key: &CatalogKey) -> BTreeMap<String, usize> {
    let g = key.g as usize;
    let even_big = g.is_multiple_of(2) && g >= 6;
    let full = key.variant == Variant::Full;
    let mut rows: Vec<(&str, usize)> = vec![
        ("A1", if g >= 4 { (g - 2) * (g - 3) / 2 } else { 0 }),
        ("A2", g - 2),
        (
            "A3",
            if g >= 4 {
                g - 1 - usize::from(g >= 5)
            } else {
                0
            },
        ),
        ("A4", usize::from(g >= 5)),
        ("A5", usize::from(g >= 5)),
        ("A6", usize::from(g >= 7)),
        ("A7", if even_big { 2 } else { 0 }),
        ("A8", if even_big { (g - 4) / 2 } else { 0 }),
        ("A9a", usize::from(g == 6)),
        ("A9b", usize::from(even_big && g >= 8)),
    ];
    let between = |lo: usize, hi: usize| usize::from((lo..=hi).contains(&g));
    match key.kind {
        Kind::Mcg => {
            rows.extend([
                ("B1", usize::from(g >= 4)),
                ("B2", 1),
                ("B3", g.saturating_sub(3)),
                ("B4", 1),
                ("B5", 1),
                ("B6", usize::from(g >= 4)),
                ("B7", usize::from(g >= 6)),
                ("B8", usize::from(g >= 5)),
            ]);
            if key.s == 0 {
                let odd = g % 2 == 1;
                rows.extend([
                    ("C1a", usize::from(odd)),
                    ("C1b", usize::from(!odd)),
                    ("C3", 1),
                ]);
                if key.variant == Variant::UwF {
                    rows.extend([("C2", g - 1), ("C5", 1), ("C4", 1)]);
                } else {
                    rows.extend([
                        ("C2_1", 1),
                        ("C4a", usize::from(odd)),
                        ("C4b", usize::from(!odd)),
                    ]);
                }
            }
        }
        _ => {
            let closed_odd = key.s == 0 && g % 2 == 1;
            let closed_even = key.s == 0 && g.is_multiple_of(2);
            let drop = |superfluous: bool, n: usize| if superfluous && !full { 0 } else { n };
            rows.extend([
                ("Abar1_1", drop(closed_even, g.saturating_sub(4))),
                ("Abar1_2", drop(closed_odd, g.saturating_sub(4))),
                ("Abar2_1", drop(closed_even, 1)),
                ("Abar2_2", drop(closed_even, usize::from(g >= 4))),
                ("Abar2_3", 1),
                ("Abar3_1", between(4, 5)),
                ("Abar3_2", between(4, 5)),
                (
                    "Abar4",
                    if full {
                        usize::from(g >= 5)
                    } else {
                        between(5, 6)
                    },
                ),
                (
                    "Abar5",
                    if full {
                        usize::from(g >= 5)
                    } else {
                        between(5, 6)
                    },
                ),
                (
                    "Abar6",
                    if full {
                        usize::from(g >= 7)
                    } else {
                        between(7, 8)
                    },
                ),
                ("Bbar1", usize::from(g >= 4)),
                ("Bbar2_1", 1),
                ("Bbar2_2", drop(closed_odd, 1)),
                ("Bbar3", if full { g - 2 } else { usize::from(g >= 4) }),
                ("Bbar4_1", 1),
                ("Bbar4_2", drop(closed_odd, 1)),
                ("Bbar6_1", usize::from(g >= 4)),
                (
                    "Bbar6_2",
                    if full {
                        usize::from(g >= 4)
                    } else {
                        between(4, 5)
                    },
                ),
                ("Bbar7_1", usize::from(g >= 6)),
                ("Bbar7_2", usize::from(g >= 6)),
                ("Bbar8_1", usize::from(g >= 5)),
                (
                    "Bbar8_2",
                    if full {
                        usize::from(g >= 5)
                    } else {
                        between(5, 6)
                    },
                ),
                ("Abar7a", if g == 6 { 2 } else { 0 }),
                ("Abar7b", usize::from(g == 8)),
                (
                    "Abar7c",
                    if even_big {
                        [(g - 6) / 2, (g - 4) / 2]
                            .iter()
                            .filter(|&&i| i >= 2)
                            .count()
                    } else {
                        0
                    },
                ),
                ("Abar8a", usize::from(g == 6)),
                ("Abar8b", usize::from(even_big && g >= 8)),
                ("Abar9a", usize::from(g == 6)),
                ("Abar9b", usize::from(even_big && g >= 8)),
                ("D1", usize::from(full)),
                ("Bbar1_2", usize::from(full && g >= 4)),
            ]);
            if closed_odd {
                rows.extend([
                    ("C1a", 1),
                    ("Cbar1a", 1),
                    ("C2", g - 1),
                    ("Cbar2", 1),
                    ("Cbar5", 1),
                    ("C3", 1),
                    ("Cbar4a", 1),
                ]);
            }
            if closed_even {
                rows.extend([
                    ("C1b", 1),
                    ("Cbar2_1", 1),
                    ("Cbar2_2", g - 3),
                    ("Cbar2_3", 1),
                    ("Cbar5", 1),
                    ("Cbar3", 1),
                    ("Cbar4", 1),
                ]);
            }
        }
    }
    rows.into_iter()
        .filter(|&(_, n)| n > 0)
        .map(|(f, n)| (f.to_string(), n))
        .collect()
}

#[test]
fn relator_families_match_independent_enumeration() {
    let keys = CatalogKey::all(3..=12);
    assert_eq!(keys.len(), 66);
    for key in keys {
        let p = catalog::build(&key).unwrap();
        assert_eq!(family_counts(&p), expected(&key), "{}", key.file_stem());
    }
}

#[test]
fn stated_examples() {
    let g4 = build(4, 1, Kind::Twist, Variant::Reduced);
    let names: Vec<String> = g4.generators().iter().map(|s| s.to_string()).collect();
    assert_eq!(names, ["a1", "a2", "a3", "e", "f", "u", "b", "c"]);

    let g3 = build(3, 1, Kind::Twist, Variant::Full);
    let names: Vec<String> = g3.generators().iter().map(|s| s.to_string()).collect();
    assert_eq!(names, ["a1", "a2", "e", "f", "u"]);
    assert!(g3.relators().iter().all(|r| !r
        .word
        .to_string()
        .split(' ')
        .any(|t| t.starts_with('b') || t.starts_with('c'))));

    let g6 = build(6, 1, Kind::Twist, Variant::Reduced);
    let a7a: Vec<_> = g6
        .relators()
        .iter()
        .filter(|r| ascii_label(&r.label).starts_with("Abar7a"))
        .map(|r| r.word.clone())
        .collect();
    assert!(a7a.contains(&w("B0 a1")));
    assert!(a7a.contains(&w("B1 c^-1")));
    let a9a = g6
        .relators()
        .iter()
        .find(|r| ascii_label(&r.label) == "Abar9a")
        .unwrap();
    assert!(relators_equal_cyclically(&a9a.word, &w("B2 c B2^-1 c^-1")));

    let t = derived_words(4, 1).unwrap();
    assert_eq!(t.get("e").unwrap(), &w("y a2^-1 y^-1"));
    assert_eq!(
        rho_word(5),
        w("a1 a2 a3 a4 a1 a2 a3 a4 a1 a2 a3 a4 a1 a2 a3 a4 a1 a2 a3 a4")
    );
    assert_eq!(
        embedding_map(5, 1)[&"f".parse().unwrap()],
        w("y^-1 a2^-1 y")
    );
    assert_eq!(embedding_map(5, 1)[&"u".parse().unwrap()], w("y y"));
}

#[test]
fn z_words_follow_the_product_formula() {
    assert_eq!(
        z_word(4, 3).unwrap(),
        w("e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1")
    );
    assert_eq!(
        z_word(6, 5).unwrap(),
        w("a4 a5 a3 a4 e^-1 a3 a1^-1 e^-1 a2^-1 a1^-1 a3^-1 a2^-1 a4^-1 a3^-1 a5^-1 a4^-1")
    );
    assert!(z_word(4, 4).is_err());
    assert!(z_word(9, 2).is_err());
}

#[test]
fn embedding_images_lie_in_the_subgroup() {
    for g in 3..=12 {
        for s in 0..=1 {
            let par = mcg_parity(g, s);
            for (x, image) in embedding_map(g, s) {
                if s == 0 && g == 3 {
                    continue;
                }
                assert_eq!(image.parity(&par).unwrap(), 0, "g={g} s={s} {x}");
            }
        }
    }
}

#[test]
fn mcg_relators_have_even_parity() {
    for key in CatalogKey::all(3..=12)
        .into_iter()
        .filter(|k| k.kind == Kind::Mcg)
    {
        let par = mcg_parity(key.g, key.s);
        for r in catalog::build(&key).unwrap().relators() {
            assert_eq!(
                r.word.parity(&par).unwrap(),
                0,
                "{} {}",
                key.file_stem(),
                r.label
            );
        }
    }
}

/// Exponent sums straight from the JSON text.
fn matrix_from_json(text: &str) -> (IntMatrix, usize) {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    let gens: Vec<&str> = v["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g.as_str().unwrap())
        .collect();
    let rows: Vec<Vec<i64>> = v["relators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let mut row = vec![0i64; gens.len()];
            for t in r["word"]
                .as_str()
                .unwrap()
                .split_whitespace()
                .filter(|t| *t != "1")
            {
                let (name, e) = t.strip_suffix("^-1").map_or((t, 1), |b| (b, -1));
                row[gens.iter().position(|g| *g == name).unwrap()] += e;
            }
            row
        })
        .collect();
    (IntMatrix::from_rows(&rows), gens.len())
}

#[test]
fn exponent_matrices_agree_with_text_count() {
    for key in CatalogKey::all(3..=12) {
        let text =
            fs::read_to_string(root().join(format!("fixtures/catalog/{}.json", key.file_stem())))
                .unwrap();
        let (m, cols) = matrix_from_json(&text);
        let p = catalog::build(&key).unwrap();
        assert_eq!(cols, p.generators().len());
        assert_eq!(exponent_matrix(&p), m, "{}", key.file_stem());
        assert_eq!(invariants_of(&m), invariants_of(&exponent_matrix(&p)));
    }
}

#[test]
fn corpus_round_trips_through_json() {
    let mut seen = 0;
    for entry in fs::read_dir(root().join("fixtures/catalog")).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        let p = parse_json(&text).unwrap();
        assert_eq!(to_json(&p), text);
        seen += 1;
    }
    for entry in fs::read_dir(root().join("fixtures/derivations")).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        assert_eq!(DerivationFixture::from_json(&text).unwrap().to_json(), text);
        seen += 1;
    }
    assert_eq!(seen, 66 + 13);
}

#[test]
fn shipped_catalog_is_current() {
    for key in CatalogKey::all(3..=12) {
        let text =
            fs::read_to_string(root().join(format!("fixtures/catalog/{}.json", key.file_stem())))
                .unwrap();
        assert_eq!(
            to_json(&catalog::build(&key).unwrap()),
            text,
            "{}",
            key.file_stem()
        );
    }
}

#[test]
fn invalid_keys_name_the_hypothesis() {
    let cases = [
        (2, 1, Kind::Mcg, Variant::Standard, "g >= 3"),
        (3, 0, Kind::Mcg, Variant::Standard, "g >= 4"),
        (3, 0, Kind::Twist, Variant::Full, "odd g >= 5"),
        (5, 1, Kind::Mcg, Variant::UwF, "variant uwF"),
        (5, 1, Kind::Twist, Variant::Standard, "full or reduced"),
        (5, 2, Kind::Twist, Variant::Full, "s = 2"),
    ];
    for (g, s, kind, variant, needle) in cases {
        match CatalogKey::new(g, s, kind, variant) {
            Err(Error::InvalidKey(m)) => assert!(m.contains(needle), "{m}"),
            other => panic!("{other:?}"),
        }
    }
}
