//! Finite-dimensional irreducible modules of the Levi factor.
//!
//! The module is grown from a highest-weight vector `v_0` one lowering step
//! at a time. A vector `v` below the top is determined by the tuple
//! `(e_j v)_j` over the Levi simple raising operators, since the only
//! vectors killed by every `e_j` in an irreducible highest-weight module are
//! multiples of `v_0`. Each candidate `f_i b` is therefore represented by
//!
//! ```text
//! e_j f_i b = f_i (e_j b) + δ_ij ⟨μ_b, α_i^∨⟩ b
//! ```
//!
//! which only involves vectors that are already known. Row reduction of
//! these tuples inside each weight space selects a basis and expresses every
//! other candidate in it, which is exactly the quotient of the Verma module by
//! its maximal submodule.
//!
//! The nilradical `𝔫` acts by zero; Cartan elements act diagonally.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealgebra::{BasisElement, ChevalleyAlgebra};
use crate::matrix::{Fraction, MatrixDocument, MatrixOperator};
use crate::parabolic::ParabolicDatum;
use crate::rational::Rational;

/// Default upper bound on `dim V`.
pub const DEFAULT_DIM_CAP: u64 = 1000;

#[derive(Debug, Clone)]
pub struct LeviModule {
    dim: usize,
    lambda: Vec<Rational>,
    /// `k` with weight `λ - Σ k_i α_i`, one per basis vector.
    lowerings: Vec<Vec<i64>>,
    action: HashMap<BasisElement, MatrixOperator>,
}

/// Sparse vector keyed by `(simple index, basis index)`.
type Image = BTreeMap<(usize, usize), Rational>;
/// An echelon row: pivot key, reduced image, and its combination over the
/// new basis vectors.
type CandidateRow = ((usize, usize), Image, BTreeMap<usize, Rational>);

fn axpy(target: &mut Image, s: &Rational, x: &Image) {
    for (k, v) in x {
        let e = target.entry(*k).or_default();
        *e += s * v;
        if e.is_zero() {
            target.remove(k);
        }
    }
}

/// Parses comma-separated rationals such as `"0,1/2"`.
pub fn parse_lambda(s: &str) -> Result<Vec<Rational>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| Error::InvalidInput(format!("bad weight entry {t:?}"))))
        .collect()
}

/// `(λ, α_i)` for fundamental coordinates `λ`.
fn pairing_simple(alg: &ChevalleyAlgebra, lambda: &[Rational], i: usize) -> Rational {
    &lambda[i] * &Rational::new(alg.roots().gram()[i][i], 2)
}

/// Weyl dimension formula for the semisimple part of the Levi factor.
pub fn weyl_dimension(alg: &ChevalleyAlgebra, parabolic: &ParabolicDatum, lambda: &[Rational]) -> Rational {
    let rs = alg.roots();
    let gram = rs.gram();
    let mut num = Rational::one();
    let mut den = Rational::one();
    for &k in parabolic.levi_roots().iter().filter(|k| **k > 0) {
        let root = rs.root(k);
        let len = rs.length_sq(k);
        let mut lam = Rational::zero();
        let mut rho = Rational::zero();
        for (i, &c) in root.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            // ⟨ω_i, α^∨⟩ = c_i (α_i, α_i) / (α, α)
            let w = Rational::new(c * gram[i][i], len);
            lam += &lambda[i] * &w;
            rho += w;
        }
        num = &num * &(&lam + &rho);
        den = &den * &rho;
    }
    &num * &den.recip()
}

impl LeviModule {
    /// The one-dimensional module on which everything acts by zero.
    pub fn trivial_module(rank: usize) -> Self {
        LeviModule {
            dim: 1,
            lambda: vec![Rational::zero(); rank],
            lowerings: vec![vec![0; rank]],
            action: HashMap::new(),
        }
    }

    /// The irreducible Levi module with highest weight `lambda`, given in
    /// fundamental coordinates. Entries on uncrossed roots must be
    /// non-negative integers; entries on crossed roots may be any rational.
    pub fn build_irreducible(
        alg: &ChevalleyAlgebra,
        parabolic: &ParabolicDatum,
        lambda: &[Rational],
        dim_cap: u64,
    ) -> Result<Self> {
        let rank = alg.rank();
        if lambda.len() != rank {
            return Err(Error::InvalidInput(format!("weight has {} entries, rank is {rank}", lambda.len())));
        }
        let simple = parabolic.levi_simple();
        for &i in &simple {
            if !lambda[i].is_integer() || lambda[i].is_negative() {
                return Err(Error::InvalidInput(format!(
                    "weight entry {} on uncrossed root {} must be a non-negative integer",
                    lambda[i],
                    i + 1
                )));
            }
        }
        let predicted = weyl_dimension(alg, parabolic, lambda);
        let predicted = predicted.to_i64().filter(|d| *d > 0).ok_or_else(|| {
            Error::InvalidInput(format!("Weyl dimension formula gave {predicted}"))
        })? as u64;
        if predicted > dim_cap {
            return Err(Error::Capacity { dim: predicted, cap: dim_cap });
        }

        let gram = alg.roots().gram();
        let weight_on = |k: &[i64], i: usize| -> Rational {
            let mut v = pairing_simple(alg, lambda, i);
            for (j, kj) in k.iter().enumerate() {
                v -= &Rational::from_int(kj * gram[j][i]);
            }
            v
        };

        let mut lowerings: Vec<Vec<i64>> = vec![vec![0; rank]];
        // f[s][b] and e[s][b] for the s-th Levi simple root, as sparse columns.
        let ns = simple.len();
        let mut f_cols: Vec<Vec<Vec<(usize, Rational)>>> = vec![Vec::new(); ns];
        let mut e_cols: Vec<Vec<Vec<(usize, Rational)>>> = vec![vec![Vec::new()]; ns];
        let mut level: Vec<usize> = vec![0];
        while !level.is_empty() {
            let mut groups: BTreeMap<Vec<i64>, Vec<(usize, usize, Image)>> = BTreeMap::new();
            let mut group_order: Vec<Vec<i64>> = Vec::new();
            for &b in &level {
                for (s, &i) in simple.iter().enumerate() {
                    let mut k = lowerings[b].clone();
                    k[i] += 1;
                    let mut img = Image::new();
                    for t in 0..ns {
                        for (bp, c) in &e_cols[t][b] {
                            for (q, d) in &f_cols[s][*bp] {
                                let e = img.entry((t, *q)).or_default();
                                *e += c * d;
                            }
                        }
                    }
                    let coroot = &weight_on(&lowerings[b], i) * &Rational::new(2, gram[i][i]);
                    *img.entry((s, b)).or_default() += coroot;
                    img.retain(|_, v| !v.is_zero());
                    if !groups.contains_key(&k) {
                        group_order.push(k.clone());
                    }
                    groups.entry(k).or_default().push((b, s, img));
                }
            }
            let mut next_level = Vec::new();
            for k in group_order {
                let cands = groups.remove(&k).unwrap();
                let mut rows: Vec<CandidateRow> = Vec::new();
                for (b, s, img) in cands {
                    let mut v = img.clone();
                    let mut comb: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (pivot, row, rcomb) in &rows {
                        let Some(x) = v.get(pivot).cloned() else { continue };
                        let t = &x * &row[pivot].recip();
                        axpy(&mut v, &-&t, row);
                        for (idx, c) in rcomb {
                            let e = comb.entry(*idx).or_default();
                            *e += &t * c;
                        }
                    }
                    comb.retain(|_, c| !c.is_zero());
                    if v.is_empty() {
                        if f_cols[s].len() <= b {
                            f_cols[s].resize(b + 1, Vec::new());
                        }
                        f_cols[s][b] = comb.into_iter().collect();
                        continue;
                    }
                    if lowerings.len() as u64 >= dim_cap {
                        return Err(Error::Capacity { dim: lowerings.len() as u64 + 1, cap: dim_cap });
                    }
                    let new = lowerings.len();
                    lowerings.push(k.clone());
                    next_level.push(new);
                    for t in 0..ns {
                        let col: Vec<(usize, Rational)> =
                            img.iter().filter(|((tt, _), _)| *tt == t).map(|((_, q), c)| (*q, c.clone())).collect();
                        e_cols[t].push(col);
                    }
                    if f_cols[s].len() <= b {
                        f_cols[s].resize(b + 1, Vec::new());
                    }
                    f_cols[s][b] = vec![(new, Rational::one())];
                    let pivot = *v.keys().next().unwrap();
                    let mut rcomb: BTreeMap<usize, Rational> = comb.into_iter().map(|(i, c)| (i, -c)).collect();
                    rcomb.insert(new, Rational::one());
                    rows.push((pivot, v, rcomb));
                }
            }
            level = next_level;
        }
        let dim = lowerings.len();
        if dim as u64 != predicted {
            return Err(Error::InvalidInput(format!(
                "constructed module has dimension {dim}, expected {predicted}"
            )));
        }

        let mut action: HashMap<BasisElement, MatrixOperator> = HashMap::new();
        for (s, &i) in simple.iter().enumerate() {
            let mut fm = MatrixOperator::zero(dim);
            for (b, col) in f_cols[s].iter().enumerate() {
                for (q, c) in col {
                    fm.add_entry(*q, b, c.clone());
                }
            }
            let mut em = MatrixOperator::zero(dim);
            for (b, col) in e_cols[s].iter().enumerate() {
                for (q, c) in col {
                    em.add_entry(*q, b, c.clone());
                }
            }
            let idx = alg.roots().index_of(&unit(rank, i)).expect("simple root");
            action.insert(BasisElement::Root(idx), em);
            action.insert(BasisElement::Root(-idx), fm);
        }
        for i in 0..rank {
            let mut h = MatrixOperator::zero(dim);
            for (b, k) in lowerings.iter().enumerate() {
                h.add_entry(b, b, weight_on(k, i));
            }
            action.insert(BasisElement::Cartan(i + 1), h);
        }
        // remaining Levi root vectors from brackets with simple ones, by height
        let mut pending: Vec<i32> = parabolic
            .levi_roots()
            .iter()
            .copied()
            .filter(|k| !action.contains_key(&BasisElement::Root(*k)))
            .collect();
        pending.sort_by_key(|k| (alg.roots().root(*k).height().abs(), *k));
        for k in pending {
            let target = BasisElement::Root(k);
            let root = alg.roots().root(k);
            let sign = if k > 0 { 1 } else { -1 };
            let (simple_idx, rest_idx) = simple
                .iter()
                .find_map(|&i| {
                    let s = alg.roots().index_of(&unit(rank, i)).unwrap() * sign;
                    let rest = root.sub(&alg.roots().root(s));
                    let r = alg.roots().index_of(&rest.coords)?;
                    (alg.structure_constant(s, r) != 0).then_some((s, r))
                })
                .expect("every non-simple Levi root splits off a simple one");
            let n = alg.structure_constant(simple_idx, rest_idx);
            let m = action[&BasisElement::Root(simple_idx)]
                .commutator(&action[&BasisElement::Root(rest_idx)])
                .scale(&Rational::new(1, n));
            action.insert(target, m);
        }
        Ok(LeviModule { dim, lambda: lambda.to_vec(), lowerings, action })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> &[Rational] {
        &self.lambda
    }

    /// `k` such that basis vector `b` has weight `λ - Σ k_i α_i`.
    pub fn lowering(&self, b: usize) -> &[i64] {
        &self.lowerings[b]
    }

    /// The action of a Levi or nilradical basis element; elements outside
    /// the stored Levi action (the nilradical) act by zero.
    pub fn act(&self, b: BasisElement) -> MatrixOperator {
        self.action.get(&b).cloned().unwrap_or_else(|| MatrixOperator::zero(self.dim))
    }

    /// Checks `act([x, y]) = [act(x), act(y)]` over all pairs from `elements`.
    /// Returns the first failing pair.
    pub fn check_homomorphism(&self, alg: &ChevalleyAlgebra, elements: &[BasisElement]) -> Option<(BasisElement, BasisElement)> {
        for (ix, &x) in elements.iter().enumerate() {
            for &y in &elements[ix + 1..] {
                let mut lhs = MatrixOperator::zero(self.dim);
                for (z, c) in alg.bracket_basis(x, y).terms() {
                    lhs = lhs.add(&self.act(*z).scale(c));
                }
                if lhs != self.act(x).commutator(&self.act(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn to_document(&self) -> LeviModuleDocument {
        let mut action: Vec<(String, MatrixDocument)> =
            self.action.iter().map(|(b, m)| (b.plain(), MatrixDocument::from(m))).collect();
        action.sort_by(|a, b| a.0.cmp(&b.0));
        LeviModuleDocument {
            dim: self.dim,
            lambda: self.lambda.iter().map(Fraction::from).collect(),
            lowerings: self.lowerings.clone(),
            action,
        }
    }
}

fn unit(rank: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = 1;
    v
}

/// Structured dump of a Levi module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviModuleDocument {
    pub dim: usize,
    pub lambda: Vec<Fraction>,
    pub lowerings: Vec<Vec<i64>>,
    pub action: Vec<(String, MatrixDocument)>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parabolic::parse_crossed;
    use crate::rootsystem::RootSystem;

    fn setup(t: &str, crossed: &str) -> (ChevalleyAlgebra, ParabolicDatum) {
        let alg = ChevalleyAlgebra::new(RootSystem::build(t.parse().unwrap()));
        let p = ParabolicDatum::new(&alg, &parse_crossed(crossed).unwrap()).unwrap();
        (alg, p)
    }

    fn levi_basis(alg: &ChevalleyAlgebra, p: &ParabolicDatum) -> Vec<BasisElement> {
        alg.basis().iter().copied().filter(|b| p.in_levi(*b)).collect()
    }

    /// Dimension of an irreducible sl_2 x … module straight from the
    /// product of (m_i + 1) for type A_1 factors, used as an independent
    /// oracle where the Levi factor is a product of A_1's.
    fn a1_product_dim(weights: &[i64]) -> i64 {
        weights.iter().map(|m| m + 1).product()
    }

    #[test]
    fn trivial() {
        let (alg, _) = setup("G2", "1,0");
        let m = LeviModule::trivial_module(2);
        assert_eq!(m.dim(), 1);
        assert!(m.act(BasisElement::Root(2)).is_zero());
        assert!(m.act(BasisElement::Cartan(1)).is_zero());
        assert!(m.check_homomorphism(&alg, alg.basis()).is_none());
    }

    #[test]
    fn sl2_levi_from_a2() {
        let (alg, p) = setup("A2", "1,0");
        for (w, dim) in [(0, 1), (1, 2), (2, 3), (5, 6)] {
            let lambda = vec![Rational::zero(), Rational::from_int(w)];
            let m = LeviModule::build_irreducible(&alg, &p, &lambda, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(m.dim(), dim);
            assert_eq!(m.dim() as i64, a1_product_dim(&[w]));
            assert!(m.check_homomorphism(&alg, &levi_basis(&alg, &p)).is_none());
        }
    }

    #[test]
    fn g2_long_root_levi() {
        let (alg, p) = setup("G2", "1,0");
        let lambda = parse_lambda("0,2").unwrap();
        let m = LeviModule::build_irreducible(&alg, &p, &lambda, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(m.dim() as i64, a1_product_dim(&[2]));
        assert_eq!(Rational::from_int(m.dim() as i64), weyl_dimension(&alg, &p, &lambda));
        assert!(m.check_homomorphism(&alg, &levi_basis(&alg, &p)).is_none());
        // the central direction h_1 acts by a scalar whenever λ_1 = 0 and the
        // module is generated from a weight orthogonal to it
        let with_crossed = parse_lambda("1/2,1").unwrap();
        let m2 = LeviModule::build_irreducible(&alg, &p, &with_crossed, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(m2.dim(), 2);
        assert!(m2.check_homomorphism(&alg, &levi_basis(&alg, &p)).is_none());
    }

    #[test]
    fn larger_levi_factors() {
        for (t, c, l) in [
            ("A3", "0,1,0", "1,0,1"),
            ("B3", "1,0,0", "0,1,1"),
            ("C3", "0,0,1", "1,1,0"),
            ("G2", "0,1", "3,0"),
            ("A4", "1,0,0,0", "0,1,0,1"),
            ("F4", "1,0,0,0", "0,0,1,0"),
        ] {
            let (alg, p) = setup(t, c);
            let lambda = parse_lambda(l).unwrap();
            let m = LeviModule::build_irreducible(&alg, &p, &lambda, DEFAULT_DIM_CAP).unwrap();
            assert_eq!(Rational::from_int(m.dim() as i64), weyl_dimension(&alg, &p, &lambda), "{t}");
            assert!(m.check_homomorphism(&alg, &levi_basis(&alg, &p)).is_none(), "{t} {l}");
            // weight grading: g_α moves weight spaces by α
            for &k in p.levi_roots() {
                let shift = alg.roots().root(k).coords;
                for (&(r, cidx), _) in m.act(BasisElement::Root(k)).entries() {
                    let d: Vec<i64> = m.lowering(cidx).iter().zip(m.lowering(r)).map(|(a, b)| a - b).collect();
                    assert_eq!(d, shift, "{t}: g_{k}");
                }
            }
        }
    }

    #[test]
    fn weyl_dimension_matches_classical_values() {
        // defining representations: sl_4 on C^4, so_7 spin module of B_3
        let (alg, p) = setup("A4", "0,0,0,1");
        assert_eq!(weyl_dimension(&alg, &p, &parse_lambda("1,0,0,0").unwrap()), Rational::from_int(4));
        assert_eq!(weyl_dimension(&alg, &p, &parse_lambda("0,1,0,0").unwrap()), Rational::from_int(6));
        let (alg, p) = setup("B4", "1,0,0,0");
        assert_eq!(weyl_dimension(&alg, &p, &parse_lambda("0,0,0,1").unwrap()), Rational::from_int(8));
        assert_eq!(weyl_dimension(&alg, &p, &parse_lambda("0,1,0,0").unwrap()), Rational::from_int(7));
    }

    #[test]
    fn rejects_bad_input() {
        let (alg, p) = setup("A2", "1,0");
        assert!(matches!(
            LeviModule::build_irreducible(&alg, &p, &parse_lambda("0,-1").unwrap(), 10),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            LeviModule::build_irreducible(&alg, &p, &parse_lambda("0,1/2").unwrap(), 10),
            Err(Error::InvalidInput(_))
        ));
        assert_eq!(
            LeviModule::build_irreducible(&alg, &p, &parse_lambda("0,20").unwrap(), 10).unwrap_err(),
            Error::Capacity { dim: 21, cap: 10 }
        );
    }
}
