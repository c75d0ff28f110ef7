//! Sparse rational matrices and Weyl-algebra-valued matrices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::weyl::{PolynomialVector, WeylOperator};

/// A square matrix over ℚ, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixOperator {
    dim: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl MatrixOperator {
    pub fn zero(dim: usize) -> Self {
        MatrixOperator { dim, entries: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.add_entry(i, i, Rational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let mut m = Self::zero(rows.len());
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), rows.len(), "matrix must be square");
            for (j, v) in row.iter().enumerate() {
                m.add_entry(i, j, v.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn add_entry(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.dim && c < self.dim, "entry ({r}, {c}) out of range for dimension {}", self.dim);
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry((r, c)).or_default();
        *e += &v;
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_entry(r, c, v.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (&(r, c), v) in &self.entries {
            out.add_entry(r, c, v * s);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::zero(self.dim);
        for (&(r, k), v) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (c, w) in row {
                    out.add_entry(r, *c, v * *w);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut rows = vec![vec![Rational::zero(); self.dim]; self.dim];
        for (&(r, c), v) in &self.entries {
            rows[r][c] = v.clone();
        }
        rows
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }
}

/// An element of `𝕎_n ⊗ End V`, written as a matrix of Weyl operators. The
/// entry at `(r, c)` is the coefficient of the elementary matrix `E_{rc}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylMatrixOperator {
    dim: usize,
    entries: BTreeMap<(usize, usize), WeylOperator>,
}

impl WeylMatrixOperator {
    pub fn zero(dim: usize) -> Self {
        WeylMatrixOperator { dim, entries: BTreeMap::new() }
    }

    /// `w ⊗ m`.
    pub fn tensor(w: &WeylOperator, m: &MatrixOperator) -> Self {
        let mut out = Self::zero(m.dim());
        for (&(r, c), v) in m.entries() {
            out.add_entry(r, c, &w.scale(v));
        }
        out
    }

    /// `w ⊗ id`.
    pub fn scalar(w: &WeylOperator, dim: usize) -> Self {
        Self::tensor(w, &MatrixOperator::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_entry(&mut self, r: usize, c: usize, w: &WeylOperator) {
        if w.is_zero() {
            return;
        }
        let e = self.entries.entry((r, c)).or_default();
        e.add_assign(w);
        if e.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    pub fn get(&self, r: usize, c: usize) -> WeylOperator {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &WeylOperator)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// For `dim V = 1` the single Weyl operator; otherwise `None` unless
    /// the operator is `w ⊗ id`.
    pub fn as_scalar(&self) -> Option<WeylOperator> {
        let w = self.get(0, 0);
        if *self == Self::scalar(&w, self.dim) {
            Some(w)
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(r, c), w) in &other.entries {
            out.add_entry(r, c, w);
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (&(r, c), w) in &self.entries {
            out.add_entry(r, c, &w.scale(s));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut by_row: BTreeMap<usize, Vec<(usize, &WeylOperator)>> = BTreeMap::new();
        for (&(r, c), w) in &other.entries {
            by_row.entry(r).or_default().push((c, w));
        }
        let mut out = Self::zero(self.dim);
        for (&(r, k), w) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for (c, v) in row {
                    out.add_entry(r, *c, &w.mul(v));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Acts on `𝕊_n ⊗ V`, given as one polynomial per basis vector of `V`:
    /// `(x^a ⊗ m_c) ↦ Σ_r W_{rc}(x^a) ⊗ m_r`.
    pub fn apply(&self, v: &[PolynomialVector]) -> Vec<PolynomialVector> {
        let mut out = vec![PolynomialVector::zero(); self.dim];
        for (&(r, c), w) in &self.entries {
            out[r] = out[r].add(&w.apply(&v[c]));
        }
        out
    }

    fn render(&self, latex: bool) -> String {
        let text = |w: &WeylOperator| if latex { w.latex() } else { w.ascii() };
        if let Some(w) = self.as_scalar() {
            return if latex {
                format!("({})\\otimes \\mathrm{{id}}", w.latex())
            } else {
                format!("({}) (x) id", w.ascii())
            };
        }
        if self.entries.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(&(r, c), w)| {
                if latex {
                    format!("({})\\otimes E_{{{},{}}}", text(w), r + 1, c + 1)
                } else {
                    format!("({}) (x) E{},{}", text(w), r + 1, c + 1)
                }
            })
            .collect();
        parts.join(if latex { "+" } else { " + " })
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }

    pub fn ascii(&self) -> String {
        self.render(false)
    }
}

/// A rational written as a numerator/denominator pair of decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction(pub String, pub String);

impl From<&Rational> for Fraction {
    fn from(r: &Rational) -> Self {
        Fraction(r.numer().to_string(), r.denom().to_string())
    }
}

impl TryFrom<&Fraction> for Rational {
    type Error = crate::error::Error;

    fn try_from(f: &Fraction) -> Result<Self, Self::Error> {
        format!("{}/{}", f.0, f.1)
            .parse()
            .map_err(|_| crate::error::Error::Document(format!("bad fraction {}/{}", f.0, f.1)))
    }
}

/// `[row, col, numerator, denominator]` entries of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub dim: usize,
    pub entries: Vec<(usize, usize, Fraction)>,
}

impl From<&MatrixOperator> for MatrixDocument {
    fn from(m: &MatrixOperator) -> Self {
        MatrixDocument { dim: m.dim, entries: m.entries().map(|(&(r, c), v)| (r, c, v.into())).collect() }
    }
}
