//! Abelianization through Smith normal form over arbitrary-precision
//! integers.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged matrix");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone().into());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q * row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let x = &self.data[src * self.cols + j] * q;
            if !x.is_zero() {
                self.data[dst * self.cols + j] += x;
            }
        }
    }

    /// col[dst] += q * col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let x = &self.data[i * self.cols + src] * q;
            if !x.is_zero() {
                self.data[i * self.cols + dst] += x;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }
}

/// Free rank and torsion coefficients `d_1 | d_2 | ... | d_k`, each >= 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Invariants from the diagonal of a Smith form with `cols` columns.
    pub fn from_diagonal(diag: &[BigInt], cols: usize) -> Self {
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let mut torsion: Vec<BigInt> = diag
            .iter()
            .filter(|d| !d.is_zero())
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        torsion.sort();
        AbelianInvariants {
            free_rank: cols - rank,
            torsion,
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 {
                "Z".to_string()
            } else {
                format!("Z^{}", self.free_rank)
            });
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" x "))
    }
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal matrix with `d = u * m * v`.
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub invariants: AbelianInvariants,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

struct Reducer {
    d: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reducer {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_row(dst, src, q);
        if let Some(u) = &mut self.u {
            u.add_row(dst, src, q);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.d.add_col(dst, src, q);
        if let Some(v) = &mut self.v {
            v.add_col(dst, src, q);
        }
    }
    fn negate_row(&mut self, i: usize) {
        self.d.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Position of the nonzero entry of least absolute value in the
    /// trailing block starting at (t, t).
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..self.d.rows {
            for j in t..self.d.cols {
                let x = self.d.get(i, j);
                if x.is_zero() {
                    continue;
                }
                let a = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| &a < b) {
                    let unit = a.is_one();
                    best = Some((i, j, a));
                    if unit {
                        return best.map(|(i, j, _)| (i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) {
        let n = self.d.rows.min(self.d.cols);
        for t in 0..n {
            let Some((pi, pj)) = self.min_pivot(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.d.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..self.d.rows {
                    let x = self.d.get(i, t);
                    if x.is_zero() {
                        continue;
                    }
                    let q = -x.div_floor(&p);
                    self.add_row(i, t, &q);
                    if !self.d.get(i, t).is_zero() {
                        clean = false;
                    }
                }
                for j in t + 1..self.d.cols {
                    let x = self.d.get(t, j);
                    if x.is_zero() {
                        continue;
                    }
                    let q = -x.div_floor(&p);
                    self.add_col(j, t, &q);
                    if !self.d.get(t, j).is_zero() {
                        clean = false;
                    }
                }
                if !clean {
                    // Bring the smallest remainder in row t / column t to the pivot.
                    let mut best = (t, t, self.d.get(t, t).abs());
                    for i in t + 1..self.d.rows {
                        let x = self.d.get(i, t);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (i, t, x.abs());
                        }
                    }
                    for j in t + 1..self.d.cols {
                        let x = self.d.get(t, j);
                        if !x.is_zero() && x.abs() < best.2 {
                            best = (t, j, x.abs());
                        }
                    }
                    self.swap_rows(t, best.0);
                    self.swap_cols(t, best.1);
                    continue;
                }
                // Divisibility: every later entry must be a multiple of the pivot.
                let bad = (t + 1..self.d.rows)
                    .find(|&i| (t + 1..self.d.cols).any(|j| !self.d.get(i, j).is_multiple_of(&p)));
                match bad {
                    Some(i) => {
                        self.add_row(t, i, &BigInt::one());
                    }
                    None => break,
                }
            }
            if self.d.get(t, t).is_negative() {
                self.negate_row(t);
            }
        }
    }
}

/// Smith normal form `d = u * m * v` with unimodular `u`, `v`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        d: m.clone(),
        u: Some(IntMatrix::identity(m.rows)),
        v: Some(IntMatrix::identity(m.cols)),
    };
    r.run();
    let diag: Vec<BigInt> = (0..m.rows.min(m.cols))
        .map(|i| r.d.get(i, i).clone())
        .collect();
    let invariants = AbelianInvariants::from_diagonal(&diag, m.cols);
    SmithForm {
        d: r.d,
        u: r.u.unwrap_or_else(|| IntMatrix::identity(0)),
        v: r.v.unwrap_or_else(|| IntMatrix::identity(0)),
        invariants,
    }
}

/// Invariants only; skips the transformation matrices.
pub fn invariants_of(m: &IntMatrix) -> AbelianInvariants {
    let mut r = Reducer {
        d: m.clone(),
        u: None,
        v: None,
    };
    r.run();
    let diag: Vec<BigInt> = (0..m.rows.min(m.cols))
        .map(|i| r.d.get(i, i).clone())
        .collect();
    AbelianInvariants::from_diagonal(&diag, m.cols)
}

/// Relators by generators; entry (r, j) is the exponent sum of generator j in
/// relator r.
pub fn exponent_matrix(p: &Presentation) -> IntMatrix {
    let col: HashMap<_, _> = p
        .generators()
        .iter()
        .enumerate()
        .map(|(j, g)| (*g, j))
        .collect();
    let mut m = IntMatrix::zeros(p.relators().len(), p.generators().len());
    for (i, r) in p.relators().iter().enumerate() {
        let mut sums = vec![0i64; p.generators().len()];
        for l in r.word.letters() {
            sums[col[&l.symbol]] += l.exponent() as i64;
        }
        for (j, s) in sums.into_iter().enumerate() {
            if s != 0 {
                m.set(i, j, BigInt::from(s));
            }
        }
    }
    m
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    invariants_of(&exponent_matrix(p))
}
