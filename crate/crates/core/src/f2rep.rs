//! The action on first homology with GF(2) coefficients.
//!
//! Classes are written in the basis `mu_1 .. mu_g` of the one-sided
//! circles; the intersection form is the identity form in this basis. A
//! Dehn twist about a circle of class `v` acts as the transvection
//! `x -> x + <x, v> v`. The twist `a_i` has class `mu_i + mu_{i+1}`, `b` has
//! class `mu_1 + mu_2 + mu_3 + mu_4` (the circle around the first four
//! crosscaps), and the crosscap slide `y` acts as the identity.

use std::collections::BTreeMap;
use std::fmt;

use crate::catalog::{self, CatalogKey};
use crate::error::Error;
use crate::presentation::{Kind, Presentation, Variant};
use crate::rewriting;
use crate::symbol::GeneratorSymbol;
use crate::word::Word;

/// Largest dimension the bit-packed rows can hold.
pub const MAX_DIM: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct F2Vector {
    pub dim: usize,
    pub bits: u64,
}

impl F2Vector {
    pub fn zero(dim: usize) -> Self {
        F2Vector { dim, bits: 0 }
    }

    /// Sum of the basis vectors `e_i` for the given 1-based indices.
    pub fn from_indices(dim: usize, idx: &[usize]) -> Self {
        let bits = idx.iter().fold(0u64, |acc, &i| acc ^ (1u64 << (i - 1)));
        F2Vector { dim, bits }
    }

    /// Standard bilinear form.
    pub fn dot(&self, other: &F2Vector) -> u8 {
        ((self.bits & other.bits).count_ones() & 1) as u8
    }
}

/// Square matrix over GF(2); row `i` is a bit mask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    dim: usize,
    rows: Vec<u64>,
}

impl F2Matrix {
    pub fn identity(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        F2Matrix {
            dim,
            rows: (0..dim).map(|i| 1u64 << i).collect(),
        }
    }

    pub fn from_rows(dim: usize, rows: Vec<u64>) -> Self {
        assert!(dim <= MAX_DIM && rows.len() == dim);
        let mask = if dim == 64 {
            u64::MAX
        } else {
            (1u64 << dim) - 1
        };
        assert!(
            rows.iter().all(|r| r & !mask == 0),
            "row has bits beyond the dimension"
        );
        F2Matrix { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        ((self.rows[i] >> j) & 1) as u8
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| *r == 1u64 << i)
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.dim, other.dim);
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                let mut acc = 0u64;
                let mut bits = r;
                while bits != 0 {
                    let k = bits.trailing_zeros() as usize;
                    acc ^= other.rows[k];
                    bits &= bits - 1;
                }
                acc
            })
            .collect();
        F2Matrix {
            dim: self.dim,
            rows,
        }
    }

    /// Image of a column vector.
    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        let bits = self.rows.iter().enumerate().fold(0u64, |acc, (i, r)| {
            acc | ((((r & v.bits).count_ones() & 1) as u64) << i)
        });
        F2Vector {
            dim: self.dim,
            bits,
        }
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<F2Matrix> {
        let n = self.dim;
        let mut a = self.rows.clone();
        let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| (a[r] >> col) & 1 == 1)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && (a[r] >> col) & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Some(F2Matrix { dim: n, rows: inv })
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| if self.get(i, j) == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        write!(f, "[{}]", rows.join(" "))
    }
}

/// `x -> x + <x, v> v`.
pub fn transvection(v: &F2Vector) -> F2Matrix {
    let rows = (0..v.dim)
        .map(|i| {
            let own = 1u64 << i;
            if (v.bits >> i) & 1 == 1 {
                own ^ v.bits
            } else {
                own
            }
        })
        .collect();
    F2Matrix { dim: v.dim, rows }
}

/// Matrices for the letters of an alphabet (inverses are cached).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepAssignment {
    pub g: u32,
    pub s: u8,
    images: BTreeMap<GeneratorSymbol, (F2Matrix, F2Matrix)>,
}

impl RepAssignment {
    pub fn new(g: u32, s: u8) -> Self {
        RepAssignment {
            g,
            s,
            images: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, x: GeneratorSymbol, m: F2Matrix) -> Result<(), Error> {
        let inv = m
            .inverse()
            .ok_or_else(|| Error::Invalid(format!("matrix for {x} is singular")))?;
        self.images.insert(x, (m, inv));
        Ok(())
    }

    pub fn get(&self, x: GeneratorSymbol) -> Option<&F2Matrix> {
        self.images.get(&x).map(|p| &p.0)
    }

    pub fn dim(&self) -> usize {
        self.g as usize
    }

    pub fn symbols(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        self.images.keys().copied()
    }
}

pub fn evaluate(w: &Word, r: &RepAssignment) -> Result<F2Matrix, Error> {
    let mut acc = F2Matrix::identity(r.dim());
    for l in w.letters() {
        let (m, inv) = r
            .images
            .get(&l.symbol)
            .ok_or_else(|| Error::MissingSymbol(l.symbol.to_string()))?;
        acc = acc.mul(if l.inverse { inv } else { m });
    }
    Ok(acc)
}

/// Class of the twist `a_i`.
pub fn alpha_class(g: u32, i: u32) -> F2Vector {
    F2Vector::from_indices(g as usize, &[i as usize, i as usize + 1])
}

/// Class of the twist `b`.
pub fn beta_class(g: u32) -> F2Vector {
    F2Vector::from_indices(g as usize, &[1, 2, 3, 4])
}

/// Assignment on the mapping class group alphabet, with `y` sent to
/// `y_matrix` (the identity by default).
pub fn rep_assignment_with_y(g: u32, s: u8, y_matrix: F2Matrix) -> Result<RepAssignment, Error> {
    if g < 3 || g as usize > MAX_DIM {
        return Err(Error::OutOfRange(format!(
            "representation needs 3 <= g <= {MAX_DIM}"
        )));
    }
    let mut r = RepAssignment::new(g, s);
    for i in 1..g {
        r.insert(GeneratorSymbol::a(i), transvection(&alpha_class(g, i)))?;
    }
    r.insert(GeneratorSymbol::y(), y_matrix)?;
    if g >= 4 {
        r.insert(GeneratorSymbol::b(), transvection(&beta_class(g)))?;
    }
    if g.is_multiple_of(2) && g >= 6 {
        // b_{i+1} = (b_{i-1} a_{2i}..a_{2i+3} b_i)^5 (b_{i-1} a_{2i}..a_{2i+3})^-6 on matrices.
        let a = |i: u32| transvection(&alpha_class(g, i));
        let mut prev = a(1);
        let mut cur = transvection(&beta_class(g));
        r.insert(GeneratorSymbol::bseq(0), prev.clone())?;
        r.insert(GeneratorSymbol::bseq(1), cur.clone())?;
        for i in 1..=(g - 4) / 2 {
            let run = (2 * i..=2 * i + 3).fold(prev.clone(), |m, k| m.mul(&a(k)));
            let x = pow(&run.mul(&cur), 5);
            let next = x.mul(&pow(&run.inverse().expect("invertible"), 6));
            r.insert(GeneratorSymbol::bseq(i + 1), next.clone())?;
            prev = std::mem::replace(&mut cur, next);
        }
    }
    if s == 0 {
        let rho = evaluate(&catalog::rho_word(g), &r)?;
        r.insert(GeneratorSymbol::rho(), rho)?;
    }
    Ok(r)
}

pub fn rep_assignment(g: u32, s: u8) -> Result<RepAssignment, Error> {
    rep_assignment_with_y(g, s, F2Matrix::identity(g as usize))
}

fn pow(m: &F2Matrix, n: u32) -> F2Matrix {
    (0..n).fold(F2Matrix::identity(m.dim), |acc, _| acc.mul(m))
}

/// Assignment on the twist alphabet induced through `embedding_map`.
pub fn twist_rep_assignment(
    g: u32,
    s: u8,
    ambient: &RepAssignment,
) -> Result<RepAssignment, Error> {
    let mut r = RepAssignment::new(g, s);
    for (x, image) in catalog::embedding_map(g, s) {
        r.insert(x, evaluate(&image, ambient)?)?;
    }
    Ok(r)
}

/// Assignment suited to a presentation's alphabet. Raw rewriting output is
/// evaluated through the definitions of its Schreier generators over the
/// standard presentation with transversal `{1, y}`.
pub fn assignment_for(p: &Presentation) -> Result<RepAssignment, Error> {
    let ambient = rep_assignment(p.meta.g, p.meta.s)?;
    match (p.meta.kind, p.meta.variant) {
        (Kind::Mcg, _) => Ok(ambient),
        (_, Variant::Raw) => {
            let key = CatalogKey::new(p.meta.g, p.meta.s, Kind::Mcg, Variant::Standard)?;
            let mcg = catalog::build(&key)?;
            let c = rewriting::build_coset_structure(
                &catalog::mcg_parity(key.g, key.s),
                GeneratorSymbol::y(),
            )?;
            let mut r = RepAssignment::new(p.meta.g, p.meta.s);
            for sg in rewriting::subgroup_generators(&mcg, &c)? {
                r.insert(sg.symbol, evaluate(sg.definition(), &ambient)?)?;
            }
            Ok(r)
        }
        _ => twist_rep_assignment(p.meta.g, p.meta.s, &ambient),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    /// Labels of relators whose image is not the identity.
    pub failures: Vec<String>,
    /// Per relator: label and verdict.
    pub rows: Vec<(String, bool)>,
    pub y_matrix: String,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn verify_presentation(p: &Presentation, r: &RepAssignment) -> Result<VerifyReport, Error> {
    let mut rows = Vec::with_capacity(p.relators().len());
    for rel in p.relators() {
        let ok = evaluate(&rel.word, r)?.is_identity();
        rows.push((rel.label.clone(), ok));
    }
    let failures = rows
        .iter()
        .filter(|(_, ok)| !ok)
        .map(|(l, _)| l.clone())
        .collect();
    let y_matrix = r
        .get(GeneratorSymbol::y())
        .map(|m| m.to_string())
        .unwrap_or_else(|| F2Matrix::identity(r.dim()).to_string());
    Ok(VerifyReport {
        checked: rows.len(),
        failures,
        rows,
        y_matrix,
    })
}

/// All matrices in GL(g, 2) that, taken as the image of `y`, satisfy
/// (B3), (B5), (B4) and (B1) together with the fixed twist matrices.
/// Exhaustive over the `2^(g*g)` candidates, so practical only for small g.
pub fn search_y_matrices(g: u32) -> Result<Vec<F2Matrix>, Error> {
    if !(4..=5).contains(&g) {
        return Err(Error::OutOfRange(
            "the y-matrix search supports g = 4 and g = 5".into(),
        ));
    }
    let key = CatalogKey::new(g, 1, Kind::Mcg, Variant::Standard)?;
    let p = catalog::build(&key)?;
    let wanted = ["B3", "B5", "B4", "B1"];
    let constraints: Vec<&Word> = p
        .relators()
        .iter()
        .filter(|r| wanted.contains(&r.label.split('[').next().unwrap_or("")))
        .map(|r| &r.word)
        .collect();
    let n = g as usize;
    let mut base = rep_assignment(g, 1)?;
    let mut found = Vec::new();
    for code in 0u64..(1u64 << (n * n)) {
        let rows: Vec<u64> = (0..n)
            .map(|i| (code >> (i * n)) & ((1u64 << n) - 1))
            .collect();
        let m = F2Matrix::from_rows(n, rows);
        if m.inverse().is_none() {
            continue;
        }
        base.insert(GeneratorSymbol::y(), m.clone())?;
        if constraints
            .iter()
            .all(|w| evaluate(w, &base).map(|x| x.is_identity()).unwrap_or(false))
        {
            found.push(m);
        }
    }
    Ok(found)
}
