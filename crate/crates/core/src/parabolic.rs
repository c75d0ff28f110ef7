//! Parabolic subalgebras from crossed-out simple roots.
//!
//! The generators of 𝔫₋ are ordered `u_1 < … < u_n` by comparing their
//! (negative) weights in graded lexicographic order. The generic PBW monomial
//! is `u_1^{a_1} … u_n^{a_n}` and `u_i` is renamed to `x_i`; for G_2 with the
//! short root crossed this is `g_{-6}^{a_1} g_{-5}^{a_2} g_{-4}^{a_3} g_{-3}^{a_4} g_{-1}^{a_5}`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::liealgebra::{BasisElement, ChevalleyAlgebra};
use crate::rootsystem::{graded_lex_compare, Root};
use crate::uea::GeneratorOrder;

#[derive(Debug, Clone)]
pub struct ParabolicDatum {
    crossed: Vec<bool>,
    levi_roots: Vec<i32>,
    nilradical_roots: Vec<i32>,
    generators: Vec<BasisElement>,
    weights: Vec<Root>,
    position: HashMap<BasisElement, usize>,
}

/// Parses `"1,0"` or `"(1, 0)"` into a crossed-root selector.
pub fn parse_crossed(s: &str) -> Result<Vec<bool>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| match t.trim() {
            "1" => Ok(true),
            "0" => Ok(false),
            other => Err(Error::InvalidInput(format!("crossed entries must be 0 or 1, got {other:?}"))),
        })
        .collect()
}

impl ParabolicDatum {
    pub fn new(alg: &ChevalleyAlgebra, crossed: &[bool]) -> Result<Self> {
        let rs = alg.roots();
        if crossed.len() != rs.rank() {
            return Err(Error::InvalidInput(format!(
                "crossed vector has length {}, rank is {}",
                crossed.len(),
                rs.rank()
            )));
        }
        let touches_crossed = |r: &Root| r.coords.iter().zip(crossed).any(|(c, x)| *x && *c != 0);
        let mut levi_roots = Vec::new();
        let mut nilradical_roots = Vec::new();
        for (k, r) in rs.positive_roots().iter().enumerate() {
            let k = k as i32 + 1;
            if touches_crossed(r) {
                nilradical_roots.push(k);
            } else {
                levi_roots.push(k);
                levi_roots.push(-k);
            }
        }
        levi_roots.sort_unstable();
        let mut negs: Vec<(Root, i32)> = nilradical_roots.iter().map(|&k| (rs.root(-k), -k)).collect();
        negs.sort_by(|a, b| graded_lex_compare(&a.0, &b.0));
        let generators: Vec<BasisElement> = negs.iter().map(|(_, k)| BasisElement::Root(*k)).collect();
        let weights: Vec<Root> = negs.into_iter().map(|(r, _)| r).collect();
        let position = generators.iter().enumerate().map(|(i, g)| (*g, i)).collect();
        Ok(ParabolicDatum {
            crossed: crossed.to_vec(),
            levi_roots,
            nilradical_roots,
            generators,
            weights,
            position,
        })
    }

    pub fn crossed(&self) -> &[bool] {
        &self.crossed
    }

    /// `n = dim 𝔫`.
    pub fn nilradical_dimension(&self) -> usize {
        self.generators.len()
    }

    /// Signed indices of roots in the Levi factor.
    pub fn levi_roots(&self) -> &[i32] {
        &self.levi_roots
    }

    /// Positive roots of the nilradical 𝔫, ascending.
    pub fn nilradical_roots(&self) -> &[i32] {
        &self.nilradical_roots
    }

    /// `u_1, …, u_n` in PBW-word order.
    pub fn generators(&self) -> &[BasisElement] {
        &self.generators
    }

    /// `β_i`, the weight of `u_i`.
    pub fn weights(&self) -> &[Root] {
        &self.weights
    }

    /// 0-based position of `b` among the `u_i`.
    pub fn position(&self, b: BasisElement) -> Option<usize> {
        self.position.get(&b).copied()
    }

    pub fn in_nminus(&self, b: BasisElement) -> bool {
        self.position.contains_key(&b)
    }

    /// Whether `b` lies in the nilradical 𝔫 (positive crossed root vector).
    pub fn in_nilradical(&self, b: BasisElement) -> bool {
        matches!(b, BasisElement::Root(k) if k > 0 && self.position.contains_key(&BasisElement::Root(-k)))
    }

    pub fn in_levi(&self, b: BasisElement) -> bool {
        match b {
            BasisElement::Cartan(_) => true,
            BasisElement::Root(k) => self.levi_roots.binary_search(&k).is_ok(),
        }
    }

    /// 0-based indices of uncrossed simple roots.
    pub fn levi_simple(&self) -> Vec<usize> {
        (0..self.crossed.len()).filter(|&i| !self.crossed[i]).collect()
    }

    /// Reduction order: `u_1 < … < u_n` below every other basis element.
    pub fn reduction_order(&self, alg: &ChevalleyAlgebra) -> GeneratorOrder {
        let n = self.generators.len() as u32;
        let ranks = alg
            .basis()
            .iter()
            .map(|&b| match self.position(b) {
                Some(p) => (b, p as u32),
                None => (b, n + alg.dense_index(b) as u32),
            })
            .collect();
        GeneratorOrder::new(ranks)
    }
}
