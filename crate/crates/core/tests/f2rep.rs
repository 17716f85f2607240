use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use twistpres::catalog::{self, embedding_map, CatalogKey};
use twistpres::f2rep::{
    alpha_class, beta_class, evaluate, rep_assignment, search_y_matrices, transvection,
    twist_rep_assignment, verify_presentation, F2Matrix, F2Vector,
};
use twistpres::{Kind, Letter, Variant, Word};

type Dense = Vec<Vec<u8>>;

fn coords(v: &F2Vector) -> Vec<u8> {
    (0..v.dim).map(|i| ((v.bits >> i) & 1) as u8).collect()
}

/// `I + v v^T` written out entry by entry.
fn dense_transvection(v: &F2Vector) -> Dense {
    let c = coords(v);
    (0..v.dim)
        .map(|i| {
            (0..v.dim)
                .map(|j| u8::from(i == j) ^ (c[i] & c[j]))
                .collect()
        })
        .collect()
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(0, |acc, k| acc ^ (a[i][k] & b[k][j])))
                .collect()
        })
        .collect()
}

fn dense_of(m: &F2Matrix) -> Dense {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| m.get(i, j)).collect())
        .collect()
}

fn classes(g: u32) -> Vec<(String, F2Vector)> {
    let mut out: Vec<(String, F2Vector)> = (1..g)
        .map(|i| (format!("a{i}"), alpha_class(g, i)))
        .collect();
    if g >= 4 {
        out.push(("b".into(), beta_class(g)));
    }
    out
}

#[test]
fn transvections_match_entrywise_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=20);
        let v = F2Vector {
            dim,
            bits: rng.gen::<u64>() & ((1u64 << dim) - 1),
        };
        assert_eq!(dense_of(&transvection(&v)), dense_transvection(&v));
        let x = F2Vector {
            dim,
            bits: rng.gen::<u64>() & ((1u64 << dim) - 1),
        };
        let expect = if x.dot(&v) == 1 {
            x.bits ^ v.bits
        } else {
            x.bits
        };
        assert_eq!(transvection(&v).apply(&x).bits, expect);
    }
}

#[test]
fn commute_iff_orthogonal_braid_iff_not() {
    for g in 3..=12 {
        let cl = classes(g);
        for (i, (nu, u)) in cl.iter().enumerate() {
            for (nv, v) in &cl[i + 1..] {
                let (tu, tv) = (transvection(u), transvection(v));
                let commute = tu.mul(&tv) == tv.mul(&tu);
                let braid = tu.mul(&tv).mul(&tu) == tv.mul(&tu).mul(&tv);
                assert_eq!(commute, u.dot(v) == 0, "g={g} {nu} {nv}");
                assert_eq!(braid, u.dot(v) == 1, "g={g} {nu} {nv}");
                let (du, dv) = (dense_transvection(u), dense_transvection(v));
                assert_eq!(dense_of(&tu.mul(&tv)), dense_mul(&du, &dv));
            }
        }
    }
}

#[test]
fn even_weight_transvections_are_involutions() {
    let mut rng = StdRng::seed_from_u64(23);
    let mut seen = 0;
    while seen < 200 {
        let dim = rng.gen_range(2..=24);
        let v = F2Vector {
            dim,
            bits: rng.gen::<u64>() & ((1u64 << dim) - 1),
        };
        if v.dot(&v) == 1 {
            continue;
        }
        seen += 1;
        assert!(transvection(&v).mul(&transvection(&v)).is_identity());
    }
    for g in 3..=12 {
        for (_, v) in classes(g) {
            assert_eq!(v.dot(&v), 0);
        }
    }
}

#[test]
fn square_of_any_transvection() {
    // T_v^2 = I + <v,v> v v^T, so odd-weight classes give singular maps.
    let mut rng = StdRng::seed_from_u64(29);
    for _ in 0..200 {
        let dim = rng.gen_range(1..=16);
        let v = F2Vector {
            dim,
            bits: rng.gen::<u64>() & ((1u64 << dim) - 1),
        };
        let t = transvection(&v);
        let sq = dense_of(&t.mul(&t));
        let c = coords(&v);
        let w = v.dot(&v);
        for i in 0..dim {
            for j in 0..dim {
                assert_eq!(sq[i][j], u8::from(i == j) ^ (w & c[i] & c[j]));
            }
        }
        if w == 1 {
            assert!(t.inverse().is_none());
            assert_eq!(t.apply(&v).bits, 0);
        }
    }
}

#[test]
fn twist_images_factor_through_the_embedding() {
    let mut rng = StdRng::seed_from_u64(31);
    for g in 3..=10u32 {
        for s in 0..=1u8 {
            if g == 3 && s == 0 {
                continue;
            }
            let ambient = rep_assignment(g, s).unwrap();
            let twist = twist_rep_assignment(g, s, &ambient).unwrap();
            let emb = embedding_map(g, s);
            let alphabet: Vec<_> = emb.keys().copied().collect();
            for _ in 0..50 {
                let letters: Vec<Letter> = (0..rng.gen_range(0..20))
                    .map(|_| {
                        let x = alphabet[rng.gen_range(0..alphabet.len())];
                        if rng.gen_bool(0.5) {
                            Letter::pos(x)
                        } else {
                            Letter::neg(x)
                        }
                    })
                    .collect();
                let word = Word::reduce(letters);
                let pushed = word.substitute_with(|x| emb.get(&x).cloned()).unwrap();
                assert_eq!(
                    evaluate(&word, &twist).unwrap(),
                    evaluate(&pushed, &ambient).unwrap()
                );
            }
            for variant in [Variant::Full, Variant::Reduced] {
                let key = CatalogKey::new(g, s, Kind::Twist, variant).unwrap();
                let p = catalog::build(&key).unwrap();
                let report = verify_presentation(&p, &twist).unwrap();
                assert!(report.ok(), "{} {:?}", key.file_stem(), report.failures);
            }
        }
    }
}

#[test]
fn matrices_are_invertible_and_products_compose() {
    for g in 4..=12u32 {
        let amb = rep_assignment(g, 1).unwrap();
        for x in amb.symbols() {
            let m = amb.get(x).unwrap();
            assert!(m.mul(&m.inverse().unwrap()).is_identity());
        }
        let a = dense_transvection(&alpha_class(g, 1));
        let b = dense_transvection(&beta_class(g));
        let word: Word = "a1 b a1".parse().unwrap();
        assert_eq!(
            dense_of(&evaluate(&word, &amb).unwrap()),
            dense_mul(&dense_mul(&a, &b), &a)
        );
    }
}

#[test]
#[ignore = "exhaustive over 2^25 matrices"]
fn y_search_at_genus_five() {
    let sols = search_y_matrices(5).unwrap();
    assert!(sols.iter().any(|m| m.is_identity()));
    let key = CatalogKey::new(5, 1, Kind::Mcg, Variant::Standard).unwrap();
    let p = catalog::build(&key).unwrap();
    for m in &sols {
        let mut r = rep_assignment(5, 1).unwrap();
        r.insert("y".parse().unwrap(), m.clone()).unwrap();
        for label in ["B1", "B3", "B4", "B5"] {
            for rel in p
                .relators()
                .iter()
                .filter(|r| r.label.split('[').next() == Some(label))
            {
                assert!(evaluate(&rel.word, &r).unwrap().is_identity());
            }
        }
    }
}
