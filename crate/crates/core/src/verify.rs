//! Independent checks of computed embeddings.
//!
//! * [`lie_closure`] spans the Lie algebra generated by a set of operators
//!   and compares its dimension with `dim 𝔤`.
//! * [`action_oracle`] recomputes `g·(u^a ⊗ m)` inside the generalized Verma
//!   module with plain integer exponents and compares it with the operator
//!   image applied to `x^a ⊗ m`.
//! * [`specialization_check`] evaluates `g·u` and its reduced form at integer
//!   exponents in the adjoint representation.
//!
//! None of these use the symbolic reduction or the `ω` construction, except
//! that [`specialization_check`] exists precisely to test the former.

use std::collections::{BTreeMap, HashMap};
use std::ops::Bound;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::embedding::{generator_sequence, Embedder, EmbeddingResult};
use crate::error::Result;
use crate::liealgebra::{BasisElement, ChevalleyAlgebra};
use crate::matrix::WeylMatrixOperator;
use crate::opcount;
use crate::parabolic::ParabolicDatum;
use crate::rational::Rational;
use crate::uea::{ReduceOptions, Reducer, UEAElement};
use crate::weyl::{PolynomialVector, WeylMonomial};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClosureReport {
    pub basis_size: usize,
    pub expected_dim: usize,
    pub pass: bool,
    pub bracket_depth: usize,
    pub brackets_evaluated: usize,
    pub op_count: u64,
    /// Set when a budget stopped the computation early.
    pub aborted: Option<String>,
}

#[derive(Debug, Clone, Copy)]
pub struct ClosureOptions {
    /// Stop once the span exceeds this size; defaults to `2 * expected_dim`.
    pub max_basis: Option<usize>,
    pub max_brackets: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { max_basis: None, max_brackets: 10_000_000 }
    }
}

type Key = (usize, usize, WeylMonomial);
type Vector = BTreeMap<Key, Rational>;

fn coordinates(op: &WeylMatrixOperator) -> Vector {
    let mut v = Vector::new();
    for (&(r, c), w) in op.entries() {
        for (m, x) in w.terms() {
            v.insert((r, c, m.clone()), x.clone());
        }
    }
    v
}

/// Row echelon form over sparse coordinates; every row has pivot entry 1
/// and no entries below its pivot key.
#[derive(Default)]
struct Echelon {
    rows: Vec<Vector>,
    pivots: HashMap<Key, usize>,
}

impl Echelon {
    fn reduce(&self, mut v: Vector) -> Vector {
        let mut cursor: Option<Key> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next().cloned(),
                Some(k) => v.range((Bound::Excluded(k.clone()), Bound::Unbounded)).next().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(&ri) = self.pivots.get(&k) {
                let t = v[&k].clone();
                for (key, val) in &self.rows[ri] {
                    let e = v.entry(key.clone()).or_default();
                    *e -= &(&t * val);
                    if e.is_zero() {
                        v.remove(key);
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, v: Vector) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, x)| (k.clone(), x.clone())) else {
            return false;
        };
        let inv = lead.recip();
        let row: Vector = r.into_iter().map(|(k, x)| (k, &x * &inv)).collect();
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

/// Dimension of the Lie algebra generated by `ops`, by breadth-first
/// brackets with the generators and exact elimination.
pub fn lie_closure(ops: &[WeylMatrixOperator], expected_dim: usize, options: ClosureOptions) -> ClosureReport {
    let max_basis = options.max_basis.unwrap_or(2 * expected_dim);
    let mut ops_used = 0u64;
    let mut insert = |ech: &mut Echelon, v: Vector| {
        let (added, n) = opcount::measure(|| ech.insert(v));
        ops_used += n;
        added
    };
    let mut report = {
        let mut ech = Echelon::default();
        let mut frontier: Vec<WeylMatrixOperator> = Vec::new();
        for op in ops {
            if insert(&mut ech, coordinates(op)) {
                frontier.push(op.clone());
            }
        }
        let mut depth = 0;
        let mut brackets = 0usize;
        let mut aborted = None;
        let mut extra_ops = 0u64;
        while !frontier.is_empty() && aborted.is_none() {
            depth += 1;
            let pairs: Vec<(usize, usize)> =
                (0..frontier.len()).flat_map(|i| (0..ops.len()).map(move |j| (i, j))).collect();
            let computed = bracket_batch(&pairs, &frontier, ops);
            let mut next = Vec::new();
            for (op, n_ops) in computed {
                extra_ops += n_ops;
                brackets += 1;
                if brackets > options.max_brackets {
                    aborted = Some(format!("bracket budget {} exhausted", options.max_brackets));
                    break;
                }
                if op.is_zero() {
                    continue;
                }
                if insert(&mut ech, coordinates(&op)) {
                    next.push(op);
                    if ech.len() > max_basis {
                        aborted = Some(format!("span exceeded {max_basis}"));
                        break;
                    }
                }
            }
            frontier = next;
        }
        ClosureReport {
            basis_size: ech.len(),
            expected_dim,
            pass: false,
            bracket_depth: depth,
            brackets_evaluated: brackets,
            op_count: extra_ops,
            aborted,
        }
    };
    report.op_count += ops_used;
    report.pass = report.aborted.is_none() && report.basis_size == expected_dim;
    report
}

fn bracket_batch(
    pairs: &[(usize, usize)],
    frontier: &[WeylMatrixOperator],
    ops: &[WeylMatrixOperator],
) -> Vec<(WeylMatrixOperator, u64)> {
    let one = |&(i, j): &(usize, usize)| opcount::measure(|| ops[j].commutator(&frontier[i]));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        pairs.par_iter().map(one).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        pairs.iter().map(one).collect()
    }
}

/// Elements of `U(𝔫₋) ⊗ V` in the basis `u^a ⊗ m_j`.
type ModuleElement = BTreeMap<(Vec<u32>, usize), Rational>;
type PbwElement = BTreeMap<Vec<u32>, Rational>;

/// The generalized Verma module with integer PBW exponents.
pub struct VermaModel<'a> {
    alg: &'a ChevalleyAlgebra,
    parabolic: &'a ParabolicDatum,
    embedder: &'a Embedder,
    lmul_cache: HashMap<(usize, Vec<u32>), PbwElement>,
    act_cache: HashMap<(BasisElement, Vec<u32>, usize), ModuleElement>,
}

fn first_nonzero(a: &[u32]) -> Option<usize> {
    a.iter().position(|x| *x > 0)
}

impl<'a> VermaModel<'a> {
    pub fn new(embedder: &'a Embedder) -> Self {
        VermaModel {
            alg: embedder.algebra(),
            parabolic: embedder.parabolic(),
            embedder,
            lmul_cache: HashMap::new(),
            act_cache: HashMap::new(),
        }
    }

    /// `u_i · u^b` in PBW form.
    fn lmul(&mut self, i: usize, b: &[u32]) -> PbwElement {
        if let Some(hit) = self.lmul_cache.get(&(i, b.to_vec())) {
            return hit.clone();
        }
        let mut out = PbwElement::new();
        match first_nonzero(b) {
            Some(j) if j < i => {
                let mut rest = b.to_vec();
                rest[j] -= 1;
                for (c, x) in self.lmul(i, &rest) {
                    for (d, y) in self.lmul(j, &c) {
                        *out.entry(d).or_default() += &x * &y;
                    }
                }
                let (ui, uj) = (self.parabolic.generators()[i], self.parabolic.generators()[j]);
                let br: Vec<(BasisElement, Rational)> =
                    self.alg.bracket_basis(ui, uj).terms().map(|(z, c)| (*z, c.clone())).collect();
                for (z, c) in br {
                    let pz = self.parabolic.position(z).expect("𝔫₋ is a subalgebra");
                    for (d, y) in self.lmul(pz, &rest) {
                        *out.entry(d).or_default() += &c * &y;
                    }
                }
                out.retain(|_, v| !v.is_zero());
            }
            _ => {
                let mut c = b.to_vec();
                c[i] += 1;
                out.insert(c, Rational::one());
            }
        }
        self.lmul_cache.insert((i, b.to_vec()), out.clone());
        out
    }

    /// `y · (u^a ⊗ m_j)`.
    pub fn act(&mut self, y: BasisElement, a: &[u32], j: usize) -> ModuleElement {
        let key = (y, a.to_vec(), j);
        if let Some(hit) = self.act_cache.get(&key) {
            return hit.clone();
        }
        let mut out = ModuleElement::new();
        match first_nonzero(a) {
            None => match self.parabolic.position(y) {
                Some(p) => {
                    let mut e = vec![0; a.len()];
                    e[p] = 1;
                    out.insert((e, j), Rational::one());
                }
                None => {
                    let m = self.embedder.module().act(y);
                    for (&(r, c), v) in m.entries() {
                        if c == j {
                            out.insert((vec![0; a.len()], r), v.clone());
                        }
                    }
                }
            },
            Some(i) => {
                let mut rest = a.to_vec();
                rest[i] -= 1;
                for ((b, mm), x) in self.act(y, &rest, j) {
                    for (c, z) in self.lmul(i, &b) {
                        *out.entry((c, mm)).or_default() += &x * &z;
                    }
                }
                let ui = self.parabolic.generators()[i];
                let br: Vec<(BasisElement, Rational)> =
                    self.alg.bracket_basis(y, ui).terms().map(|(z, c)| (*z, c.clone())).collect();
                for (z, c) in br {
                    for (k, x) in self.act(z, &rest, j) {
                        *out.entry(k).or_default() += &c * &x;
                    }
                }
                out.retain(|_, v| !v.is_zero());
            }
        }
        self.act_cache.insert(key, out.clone());
        out
    }
}

/// First discrepancy found by [`action_oracle`].
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ActionFailure {
    pub generator: String,
    pub exponents: Vec<u32>,
    pub module_index: usize,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ActionReport {
    pub checked: usize,
    pub failure: Option<ActionFailure>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// All exponent vectors of length `n` with total degree at most `cap`.
pub fn monomials_up_to(n: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; n]];
    let mut frontier = vec![vec![0u32; n]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.iter().rposition(|x| *x > 0).unwrap_or(0);
            for i in start..n {
                let mut e = m.clone();
                e[i] += 1;
                next.push(e);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Compares every simple-generator and Cartan image with the Verma-module
/// action on monomials of degree at most `degree_cap` tensor every basis
/// vector of `V`. With `samples = Some(k)` only `k` random monomials are used.
pub fn action_oracle(
    embedder: &Embedder,
    result: &EmbeddingResult,
    degree_cap: u32,
    samples: Option<usize>,
    seed: u64,
) -> ActionReport {
    let n = result.n;
    let dim = result.module_dim;
    let mut monos = monomials_up_to(n, degree_cap);
    if let Some(k) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        monos = (0..k).map(|_| monos[rng.gen_range(0..monos.len())].clone()).collect();
    }
    let mut model = VermaModel::new(embedder);
    let mut checked = 0;
    for img in &result.images {
        for a in &monos {
            for j in 0..dim {
                let mut input = vec![PolynomialVector::zero(); dim];
                input[j] = PolynomialVector::monomial(a);
                let computed = img.operator.apply(&input);
                let mut expected = vec![PolynomialVector::zero(); dim];
                for ((b, mm), x) in model.act(img.generator, a, j) {
                    expected[mm] = expected[mm].add(&PolynomialVector::monomial(&b).scale(&x));
                }
                checked += 1;
                if computed != expected {
                    return ActionReport {
                        checked,
                        failure: Some(ActionFailure {
                            generator: img.generator.latex(),
                            exponents: a.clone(),
                            module_index: j,
                            expected: expected.iter().map(|p| p.latex()).collect(),
                            computed: computed.iter().map(|p| p.latex()).collect(),
                        }),
                    };
                }
            }
        }
    }
    ActionReport { checked, failure: None }
}

/// Integer matrices of the adjoint representation in the basis of root
/// vectors and simple coroots, indexed like the algebra basis.
pub struct IntegralAdjoint {
    dim: usize,
    /// Sparse columns: `cols[x][j]` lists `(i, v)` with `ad(x) e_j = Σ v e_i`.
    cols: HashMap<BasisElement, Vec<Vec<(usize, i128)>>>,
}

impl IntegralAdjoint {
    pub fn new(alg: &ChevalleyAlgebra) -> Self {
        let rs = alg.roots();
        let dim = alg.dimension();
        let gram = rs.gram();
        // the j-th basis vector: root vectors as they are, h_i replaced by the simple coroot
        let vector = |b: BasisElement| -> BTreeMap<BasisElement, Rational> {
            match b {
                BasisElement::Cartan(i) => {
                    let mut m = BTreeMap::new();
                    m.insert(b, Rational::new(2, gram[i - 1][i - 1]));
                    m
                }
                _ => [(b, Rational::one())].into_iter().collect(),
            }
        };
        // coordinates of a Lie element in that basis
        let coords = |e: &crate::liealgebra::AlgebraElement| -> Vec<(usize, i128)> {
            e.terms()
                .map(|(b, c)| {
                    let v = match b {
                        BasisElement::Cartan(i) => c * &Rational::new(gram[i - 1][i - 1], 2),
                        _ => c.clone(),
                    };
                    let v = v.to_i64().expect("adjoint action is integral in the coroot basis");
                    (alg.dense_index(*b), v as i128)
                })
                .filter(|(_, v)| *v != 0)
                .collect()
        };
        let mut cols = HashMap::new();
        for &x in alg.basis() {
            let mut per = Vec::with_capacity(dim);
            for &y in alg.basis() {
                let mut br = crate::liealgebra::AlgebraElement::zero();
                for (b, c) in vector(y) {
                    br.add_scaled(alg.bracket_basis(x, b), &c);
                }
                per.push(coords(&br));
            }
            cols.insert(x, per);
        }
        IntegralAdjoint { dim, cols }
    }

    fn apply(&self, x: BasisElement, v: &[i128]) -> Vec<i128> {
        let mut out = vec![0i128; self.dim];
        for (j, vj) in v.iter().enumerate() {
            if *vj == 0 {
                continue;
            }
            for (i, a) in &self.cols[&x][j] {
                out[*i] += a * vj;
            }
        }
        out
    }

    /// The image of the `j`-th basis vector under a word, letters applied
    /// right to left.
    fn apply_word(&self, word: &[(BasisElement, u32)], j: usize) -> Vec<i128> {
        let mut v = vec![0i128; self.dim];
        v[j] = 1;
        for (g, k) in word.iter().rev() {
            for _ in 0..*k {
                v = self.apply(*g, &v);
            }
        }
        v
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SpecializationFailure {
    pub generator: String,
    pub exponents: Vec<i64>,
    pub reason: String,
}

/// Checks that `reduce(g·u)` and `g·u` agree in the adjoint representation
/// for every `a ∈ {0, …, max_value}^n`. Returns the number of
/// specializations checked.
pub fn specialization_check(
    alg: &ChevalleyAlgebra,
    parabolic: &ParabolicDatum,
    generators: &[BasisElement],
    max_value: i64,
) -> Result<std::result::Result<usize, SpecializationFailure>> {
    let adj = IntegralAdjoint::new(alg);
    let order = parabolic.reduction_order(alg);
    let n = parabolic.nilradical_dimension();
    let u = UEAElement::monomial(UEAElement::generic_word(parabolic.generators()));
    let mut reducer = Reducer::new(alg);
    let mut checked = 0;
    for &g in generators {
        let input = u.left_multiply(g);
        let (reduced, _) = reducer.reduce(&input, &order, ReduceOptions::default())?;
        let mut a = vec![0i64; n];
        loop {
            if let Err(reason) = compare_at(&adj, &input, &reduced, &a) {
                return Ok(Err(SpecializationFailure { generator: g.latex(), exponents: a, reason }));
            }
            checked += 1;
            let mut i = 0;
            while i < n && a[i] == max_value {
                a[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            a[i] += 1;
        }
    }
    Ok(Ok(checked))
}

/// `Σ_t p_t(a) M(word_t)` scaled to integers; `Err` on a negative exponent
/// with nonzero coefficient.
fn evaluate(adj: &IntegralAdjoint, e: &UEAElement, a: &[i64]) -> std::result::Result<(Vec<Vec<i128>>, i128), String> {
    let mut terms = Vec::new();
    let mut lcm: i128 = 1;
    for (m, p) in e.terms() {
        let c = p.evaluate(a);
        if c.is_zero() {
            continue;
        }
        let mut word = Vec::new();
        for (g, exp) in m.factors() {
            let k = exp.evaluate(a).to_i64().ok_or_else(|| format!("non-integral exponent in {}", m.latex()))?;
            if k < 0 {
                return Err(format!("negative exponent with coefficient {c} in {}", m.latex()));
            }
            word.push((*g, k as u32));
        }
        let den = c.denom().to_string().parse::<i128>().map_err(|e| e.to_string())?;
        lcm = lcm.lcm(&den);
        terms.push((word, c));
    }
    let d = adj.dim;
    let mut total = vec![vec![0i128; d]; d];
    for (word, c) in terms {
        let scaled = (&c * &Rational::from_int(lcm as i64)).to_i64().expect("scaled coefficient is integral") as i128;
        for (j, col) in total.iter_mut().enumerate() {
            let v = adj.apply_word(&word, j);
            for (i, x) in v.into_iter().enumerate() {
                col[i] += scaled * x;
            }
        }
    }
    Ok((total, lcm))
}

fn compare_at(adj: &IntegralAdjoint, input: &UEAElement, reduced: &UEAElement, a: &[i64]) -> std::result::Result<(), String> {
    let (lhs, l1) = evaluate(adj, input, a)?;
    let (rhs, l2) = evaluate(adj, reduced, a)?;
    for j in 0..adj.dim {
        for i in 0..adj.dim {
            if lhs[j][i] * l2 != rhs[j][i] * l1 {
                return Err(format!("matrices differ at ({i}, {j})"));
            }
        }
    }
    Ok(())
}

/// Simple generators and Cartan elements, the default set to check.
pub fn default_generators(alg: &ChevalleyAlgebra) -> Vec<BasisElement> {
    generator_sequence(alg.rank())
}

/// A random specialization of the `ω` contract: applies each image to `x^a`
/// and to the direct formula from its split terms.
pub fn omega_contract(embedder: &Embedder, result: &EmbeddingResult, samples: usize, max_value: u32, seed: u64) -> Result<Option<String>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for img in &result.images {
        for (trailing, data) in embedder.split_terms(&img.reduced)? {
            let w = crate::weyl::omega(&data)?;
            for _ in 0..samples {
                let a: Vec<u32> = (0..result.n).map(|_| rng.gen_range(0..=max_value)).collect();
                let lhs = w.apply(&PolynomialVector::monomial(&a));
                let rhs = crate::weyl::direct_action(&data, &a);
                if lhs != rhs {
                    return Ok(Some(format!(
                        "{} with trailing {:?} at {:?}: {} vs {}",
                        img.generator.latex(),
                        trailing.map(|t| t.latex()),
                        a,
                        lhs.latex(),
                        rhs.latex()
                    )));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::embed;
    use crate::levimodule::parse_lambda;
    use crate::rootsystem::RootSystem;
    use crate::weyl::WeylOperator;

    fn scalar(w: WeylOperator) -> WeylMatrixOperator {
        WeylMatrixOperator::scalar(&w, 1)
    }

    #[test]
    fn sl2_closure() {
        let x = WeylOperator::x(0);
        let xd = x.mul(&WeylOperator::d(0));
        let e = WeylOperator::term(Rational::from_int(-1), &[1], &[2]);
        let ops = vec![scalar(x.clone()), scalar(xd.scale(&Rational::from_int(-2))), scalar(e)];
        let r = lie_closure(&ops, 3, ClosureOptions::default());
        assert!(r.pass, "{r:?}");
        assert_eq!(r.basis_size, 3);
        let classical = vec![scalar(WeylOperator::d(0)), scalar(xd), scalar(x.mul(&x).mul(&WeylOperator::d(0)))];
        assert_eq!(lie_closure(&classical, 3, ClosureOptions::default()).basis_size, 3);
        // x and x²∂ alone already generate something infinite-dimensional
        let wild = vec![scalar(x.clone()), scalar(x.mul(&x).mul(&x).mul(&WeylOperator::d(0)))];
        let r = lie_closure(&wild, 3, ClosureOptions::default());
        assert!(!r.pass && r.aborted.is_some());
    }

    #[test]
    fn g2_closure_and_mutation() {
        let res = embed("G2".parse().unwrap(), &[true, false], &parse_lambda("0,0").unwrap()).unwrap();
        let ops: Vec<WeylMatrixOperator> = res.simple_images().into_iter().cloned().collect();
        let r = lie_closure(&ops, 14, ClosureOptions::default());
        assert!(r.pass, "{r:?}");
        let mut rev = ops.clone();
        rev.reverse();
        assert_eq!(lie_closure(&rev, 14, ClosureOptions::default()).basis_size, 14);
        let dropped = lie_closure(&ops[1..], 14, ClosureOptions::default());
        assert!(!dropped.pass);
        assert!(dropped.basis_size < 14 || dropped.aborted.is_some());
    }

    #[test]
    fn verma_oracle_g2() {
        let lambda = parse_lambda("0,0").unwrap();
        let emb = Embedder::new("G2".parse().unwrap(), &[true, false], &lambda).unwrap();
        let res = emb.embed().unwrap();
        let rep = action_oracle(&emb, &res, 4, None, 0);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.checked, 6 * monomials_up_to(5, 4).len());
    }

    #[test]
    fn verma_oracle_detects_sign_flip() {
        let lambda = parse_lambda("0,0").unwrap();
        let emb = Embedder::new("G2".parse().unwrap(), &[true, false], &lambda).unwrap();
        let mut res = emb.embed().unwrap();
        res.images[0].operator = res.images[0].operator.scale(&Rational::from_int(-1));
        let rep = action_oracle(&emb, &res, 4, None, 0);
        let f = rep.failure.expect("flipped sign must be detected");
        assert_eq!(f.generator, "g_{1}");
        assert_eq!(f.exponents.iter().sum::<u32>(), 1);
    }

    #[test]
    fn verma_oracle_nontrivial_module() {
        let lambda = parse_lambda("0,1").unwrap();
        let emb = Embedder::new("G2".parse().unwrap(), &[true, false], &lambda).unwrap();
        assert_eq!(emb.module().dim(), 2);
        let res = emb.embed().unwrap();
        let rep = action_oracle(&emb, &res, 3, None, 0);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(5, 4).len(), 126);
        assert_eq!(monomials_up_to(1, 3), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(monomials_up_to(0, 2).len(), 1);
    }

    #[test]
    fn specialization_a1_and_g2() {
        let alg = ChevalleyAlgebra::new(RootSystem::build("G2".parse().unwrap()));
        let p = ParabolicDatum::new(&alg, &[true, false]).unwrap();
        let gens = default_generators(&alg);
        assert_eq!(specialization_check(&alg, &p, &gens, 2).unwrap(), Ok(6 * 3usize.pow(5)));
    }

    #[test]
    fn specialization_detects_wrong_bracket() {
        let alg = ChevalleyAlgebra::new(RootSystem::build("A2".parse().unwrap()));
        let p = ParabolicDatum::new(&alg, &[true, true]).unwrap();
        let bad = alg.clone().with_bracket_override(
            BasisElement::Root(1),
            BasisElement::Root(-3),
            crate::liealgebra::AlgebraElement::term(BasisElement::Root(-2), Rational::from_int(2)),
        );
        // the reference representation comes from the unmodified table
        let adj = IntegralAdjoint::new(&alg);
        let order = p.reduction_order(&bad);
        let u = UEAElement::monomial(UEAElement::generic_word(p.generators()));
        let input = u.left_multiply(BasisElement::Root(1));
        let (reduced, _) = Reducer::new(&bad).reduce(&input, &order, ReduceOptions::default()).unwrap();
        let mut any = false;
        for a in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]] {
            any |= compare_at(&adj, &input, &reduced, &a).is_err();
        }
        assert!(any);
    }

    #[test]
    fn omega_contract_holds_for_g2() {
        let lambda = parse_lambda("0,0").unwrap();
        let emb = Embedder::new("G2".parse().unwrap(), &[true, false], &lambda).unwrap();
        let res = emb.embed().unwrap();
        assert_eq!(omega_contract(&emb, &res, 50, 6, 7).unwrap(), None);
    }
}
