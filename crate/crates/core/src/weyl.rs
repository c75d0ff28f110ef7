//! The Weyl algebra `𝕎_n` on `x_1, …, x_n, ∂_1, …, ∂_n` and its action on
//! polynomials.
//!
//! Operators are stored in normal order, every `x` to the left of every `∂`,
//! so structural equality is equality in `𝕎_n`. Variables are 0-based
//! internally and printed 1-based.
//!
//! Printed term order: higher total degree first; ties are broken by the
//! exponent of `∂_n`, then `∂_{n-1}`, down to `∂_1`, then `x_n` down to `x_1`,
//! larger exponent first. This reproduces the usual hand-written order, e.g.
//! `-3x_{1}\partial_{4}^{2}-2x_{3}\partial_{4}-3x_{2}\partial_{3}+x_{5}`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::Result;
use crate::polynomial::ExponentPolynomial;
use crate::rational::Rational;

/// Sparse exponent vector: sorted `(variable, exponent)` with exponents > 0.
pub type Exponents = SmallVec<[(u16, u32); 4]>;

/// Converts a dense exponent vector into sparse form.
pub fn sparse(dense: &[u32]) -> Exponents {
    dense.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, e)| (i as u16, *e)).collect()
}

/// Dense form of length `n`.
pub fn dense(e: &Exponents, n: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    for &(i, x) in e {
        v[i as usize] = x;
    }
    v
}

fn exp_of(e: &Exponents, var: u16) -> u32 {
    e.iter().find(|(v, _)| *v == var).map(|(_, x)| *x).unwrap_or(0)
}

fn exp_add(a: &Exponents, b: &Exponents) -> Exponents {
    let mut out = Exponents::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j]);
            j += 1;
        } else {
            out.push((a[i].0, a[i].1 + b[j].1));
            i += 1;
            j += 1;
        }
    }
    out
}

/// `a - b`, or `None` if some exponent would go negative.
fn exp_sub(a: &Exponents, b: &Exponents) -> Option<Exponents> {
    let mut out = Exponents::new();
    let mut j = 0;
    for &(v, x) in a {
        if j < b.len() && b[j].0 < v {
            return None;
        }
        if j < b.len() && b[j].0 == v {
            if b[j].1 > x {
                return None;
            }
            if x > b[j].1 {
                out.push((v, x - b[j].1));
            }
            j += 1;
        } else {
            out.push((v, x));
        }
    }
    if j < b.len() {
        return None;
    }
    Some(out)
}

fn exp_degree(e: &Exponents) -> u32 {
    e.iter().map(|(_, x)| x).sum()
}

/// From the highest variable down, larger exponent first.
fn rev_cmp(a: &Exponents, b: &Exponents) -> Ordering {
    let (mut i, mut j) = (a.len(), b.len());
    loop {
        match (i, j) {
            (0, 0) => return Ordering::Equal,
            (0, _) => return Ordering::Greater,
            (_, 0) => return Ordering::Less,
            _ => {
                let (va, ea) = a[i - 1];
                let (vb, eb) = b[j - 1];
                if va != vb {
                    return vb.cmp(&va);
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
        }
    }
}

/// `a (a-1) … (a-k+1)`.
fn falling(a: u32, k: u32) -> i128 {
    (0..k).fold(1i128, |acc, j| acc * (a as i128 - j as i128))
}

fn binom(n: u32, k: u32) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, j| acc * (n - j) as i128 / (j + 1) as i128)
}

fn rational_from_i128(v: i128) -> Rational {
    match i64::try_from(v) {
        Ok(s) => Rational::from_int(s),
        Err(_) => Rational::from_bigint(v.into()),
    }
}

/// A normal-ordered monomial `x^A ∂^B`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylMonomial {
    pub x: Exponents,
    pub d: Exponents,
}

impl WeylMonomial {
    pub fn degree(&self) -> u32 {
        exp_degree(&self.x) + exp_degree(&self.d)
    }

    fn display_cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| rev_cmp(&self.d, &other.d))
            .then_with(|| rev_cmp(&self.x, &other.x))
    }

    fn render(&self, latex: bool) -> String {
        let mut parts = Vec::new();
        for (name, e) in [("x", &self.x), (if latex { "\\partial" } else { "d" }, &self.d)] {
            for &(v, k) in e.iter() {
                let p = match (latex, k) {
                    (true, 1) => format!("{name}_{{{}}}", v + 1),
                    (true, _) => format!("{name}_{{{}}}^{{{k}}}", v + 1),
                    (false, 1) => format!("{name}{}", v + 1),
                    (false, _) => format!("{name}{}^{k}", v + 1),
                };
                parts.push(p);
            }
        }
        parts.join(if latex { "" } else { " " })
    }
}

fn render_sum<'a>(terms: impl Iterator<Item = (String, &'a Rational)>, latex: bool) -> String {
    let mut s = String::new();
    for (body, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if latex {
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
        } else if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let coeff = if a.is_one() && !body.is_empty() { String::new() } else { a.to_string() };
        s.push_str(&coeff);
        if !latex && !coeff.is_empty() && !body.is_empty() {
            s.push(' ');
        }
        s.push_str(&body);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// An element of `𝕊_n`, the polynomial ring in `x_1, …, x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolynomialVector {
    terms: BTreeMap<Exponents, Rational>,
}

impl PolynomialVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `x^a` for a dense exponent vector.
    pub fn monomial(a: &[u32]) -> Self {
        let mut p = Self::zero();
        p.add_term(sparse(a), Rational::one());
        p
    }

    pub fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponents) -> Rational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn latex(&self) -> String {
        let mut t: Vec<(&Exponents, &Rational)> = self.terms.iter().collect();
        t.sort_by(|a, b| exp_degree(b.0).cmp(&exp_degree(a.0)).then_with(|| rev_cmp(a.0, b.0)));
        render_sum(
            t.into_iter().map(|(e, c)| (WeylMonomial { x: e.clone(), d: Exponents::new() }.render(true), c)),
            true,
        )
    }
}

/// A normal-ordered element of `𝕎_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeylOperator {
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut w = Self::zero();
        w.add_term(WeylMonomial::default(), c);
        w
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c x^A ∂^B` from dense exponent vectors.
    pub fn term(c: Rational, a: &[u32], b: &[u32]) -> Self {
        let mut w = Self::zero();
        w.add_term(WeylMonomial { x: sparse(a), d: sparse(b) }, c);
        w
    }

    /// `x_{i+1}`.
    pub fn x(i: usize) -> Self {
        let mut w = Self::zero();
        w.add_term(WeylMonomial { x: sparse_unit(i, 1), d: Exponents::new() }, Rational::one());
        w
    }

    /// `∂_{i+1}`.
    pub fn d(i: usize) -> Self {
        let mut w = Self::zero();
        w.add_term(WeylMonomial { x: Exponents::new(), d: sparse_unit(i, 1) }, Rational::one());
        w
    }

    pub fn add_term(&mut self, m: WeylMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeylMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &WeylMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest variable index in use plus one.
    pub fn num_vars(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.x.iter().chain(m.d.iter()).map(|(v, _)| *v as usize + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Rational) {
        if s.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn neg(&self) -> Self {
        WeylOperator { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        WeylOperator { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    /// Product in `𝕎_n`, brought back to normal order with
    /// `∂^b x^c = Σ_k k! C(b,k) C(c,k) x^{c-k} ∂^{b-k}` in each variable.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                reorder(&m1.d, &m2.x, &mut |xk: Exponents, dk: Exponents, w: i128| {
                    let m = WeylMonomial { x: exp_add(&m1.x, &xk), d: exp_add(&dk, &m2.d) };
                    out.add_term(m, &c * &rational_from_i128(w));
                });
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The action on `𝕊_n`: `x_i` multiplies, `∂_i` differentiates.
    pub fn apply(&self, f: &PolynomialVector) -> PolynomialVector {
        let mut out = PolynomialVector::zero();
        for (m, c) in &self.terms {
            for (e, v) in &f.terms {
                let Some(rest) = exp_sub(e, &m.d) else { continue };
                let w: i128 = m.d.iter().map(|&(var, k)| falling(exp_of(e, var), k)).product();
                out.add_term(exp_add(&rest, &m.x), &(c * v) * &rational_from_i128(w));
            }
        }
        out
    }

    /// Terms in the printing order described in the module docs.
    pub fn display_terms(&self) -> Vec<(&WeylMonomial, &Rational)> {
        let mut t: Vec<(&WeylMonomial, &Rational)> = self.terms.iter().collect();
        t.sort_by(|a, b| a.0.display_cmp(b.0));
        t
    }

    /// `-3x_{2}\partial_{4}\partial_{5}^{3}+9x_{1}\partial_{4}^{2}\partial_{5}^{2}…`
    pub fn latex(&self) -> String {
        render_sum(self.display_terms().into_iter().map(|(m, c)| (m.render(true), c)), true)
    }

    /// `-3 x2 d4 d5^3 + 9 x1 d4^2 d5^2 …`
    pub fn ascii(&self) -> String {
        render_sum(self.display_terms().into_iter().map(|(m, c)| (m.render(false), c)), false)
    }
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

fn sparse_unit(i: usize, k: u32) -> Exponents {
    let mut e = Exponents::new();
    e.push((i as u16, k));
    e
}

/// Enumerates the normal-ordered expansion of `∂^b x^c` as
/// `(x-part, ∂-part, integer weight)` triples.
fn reorder(b: &Exponents, c: &Exponents, emit: &mut impl FnMut(Exponents, Exponents, i128)) {
    // variables where both sides are present
    let shared: Vec<(u16, u32, u32)> =
        b.iter().filter_map(|&(v, bk)| c.iter().find(|(w, _)| *w == v).map(|&(_, ck)| (v, bk, ck))).collect();
    let mut ks = vec![0u32; shared.len()];
    loop {
        let mut weight = 1i128;
        let mut xs = c.clone();
        let mut ds = b.clone();
        for (idx, &(v, bk, ck)) in shared.iter().enumerate() {
            let k = ks[idx];
            weight *= falling(bk, k) * binom(ck, k);
            if k > 0 {
                xs = exp_sub(&xs, &sparse_unit(v as usize, k)).expect("k <= c");
                ds = exp_sub(&ds, &sparse_unit(v as usize, k)).expect("k <= b");
            }
        }
        emit(xs, ds, weight);
        // next multi-index
        let mut i = 0;
        loop {
            if i == shared.len() {
                return;
            }
            if ks[i] < shared[i].1.min(shared[i].2) {
                ks[i] += 1;
                break;
            }
            ks[i] = 0;
            i += 1;
        }
    }
}

/// `Π x_i^{-b_i} (x_i ∂_i)^{m_i}` applied to every monomial of `p`, for a
/// shift with no positive entries.
fn omega_nonpositive(p: &ExponentPolynomial, shift: &[i64]) -> WeylOperator {
    let raise: Exponents = shift
        .iter()
        .enumerate()
        .filter(|(_, b)| **b < 0)
        .map(|(i, b)| (i as u16, (-b) as u32))
        .collect();
    let mut out = WeylOperator::zero();
    let mut euler_cache: BTreeMap<(u16, u32), WeylOperator> = BTreeMap::new();
    for (mono, c) in p.terms() {
        let mut op = WeylOperator::constant(c.clone());
        for &(v, m) in mono.iter() {
            let e = euler_cache
                .entry((v, m))
                .or_insert_with(|| {
                    let xd = WeylOperator::x(v as usize).mul(&WeylOperator::d(v as usize));
                    (0..m).fold(WeylOperator::one(), |acc, _| acc.mul(&xd))
                })
                .clone();
            op = op.mul(&e);
        }
        out.add_assign(&op);
    }
    let mut lifted = WeylOperator::zero();
    for (m, c) in out.terms {
        lifted.add_term(WeylMonomial { x: exp_add(&raise, &m.x), d: m.d }, c);
    }
    lifted
}

/// The unique `ω ∈ 𝕎_n` with `ω·x^a = p(a) x^{a-b}` for a `b`-compatible `p`.
///
/// With `b⁺` the positive part of `b`: divide `p` by the falling factorials
/// `a_k (a_k - 1) … (a_k - b_k + 1)`, substitute `a_k ↦ a_k + b_k` so that the
/// quotient is read off after `∂^{b⁺}` has acted, and build the remaining
/// non-positive shift from Euler operators.
pub fn omega_single(p: &ExponentPolynomial, shift: &[i64]) -> Result<WeylOperator> {
    let mut q = p.divide_by_falling_factorials(shift)?;
    let mut lowered = Exponents::new();
    let mut rest = shift.to_vec();
    for (k, &b) in shift.iter().enumerate() {
        if b > 0 {
            q = q.shift(k, b);
            lowered.push((k as u16, b as u32));
            rest[k] = 0;
        }
    }
    let base = omega_nonpositive(&q, &rest);
    let mut out = WeylOperator::zero();
    for (m, c) in base.terms {
        out.add_term(WeylMonomial { x: m.x, d: exp_add(&m.d, &lowered) }, c);
    }
    Ok(out)
}

/// Sum of [`omega_single`] over the data.
pub fn omega(data: &[(ExponentPolynomial, Vec<i64>)]) -> Result<WeylOperator> {
    let mut out = WeylOperator::zero();
    for (p, b) in data {
        out.add_assign(&omega_single(p, b)?);
    }
    Ok(out)
}

/// `Σ p(a) x^{a-b}` evaluated directly, dropping terms whose coefficient
/// vanishes. Panics if a nonzero coefficient meets a negative exponent,
/// which would mean `p` was not compatible with `b`.
pub fn direct_action(data: &[(ExponentPolynomial, Vec<i64>)], a: &[u32]) -> PolynomialVector {
    let vals: Vec<i64> = a.iter().map(|&v| v as i64).collect();
    let mut out = PolynomialVector::zero();
    for (p, b) in data {
        let c = p.evaluate(&vals);
        if c.is_zero() {
            continue;
        }
        let e: Vec<u32> = a
            .iter()
            .zip(b)
            .map(|(&ai, &bi)| {
                let v = ai as i64 - bi;
                assert!(v >= 0, "nonzero coefficient on a negative exponent");
                v as u32
            })
            .collect();
        out.add_term(sparse(&e), c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(v: i64) -> Rational {
        Rational::from_int(v)
    }

    fn x(i: usize) -> WeylOperator {
        WeylOperator::x(i - 1)
    }

    fn d(i: usize) -> WeylOperator {
        WeylOperator::d(i - 1)
    }

    fn a(i: usize) -> ExponentPolynomial {
        ExponentPolynomial::var(i - 1)
    }

    #[test]
    fn defining_relations() {
        assert_eq!(d(1).mul(&x(1)), x(1).mul(&d(1)).add(&WeylOperator::one()));
        assert_eq!(x(1).mul(&x(2)), x(2).mul(&x(1)));
        assert_eq!(d(1).mul(&x(2)), x(2).mul(&d(1)));
        let e = x(1).mul(&d(1));
        assert_eq!(e.mul(&e), WeylOperator::term(r(1), &[2], &[2]).add(&e));
    }

    #[test]
    fn action_examples() {
        let sq = PolynomialVector::monomial(&[2]);
        assert_eq!(d(1).apply(&sq), PolynomialVector::monomial(&[1]).scale(&r(2)));
        for m in 0..6 {
            let f = PolynomialVector::monomial(&[m]);
            assert_eq!(x(1).mul(&d(1)).apply(&f), f.scale(&r(m as i64)));
        }
        assert_eq!(d(1).mul(&d(2)).apply(&PolynomialVector::monomial(&[1, 1])), PolynomialVector::monomial(&[0, 0]));
        assert!(d(1).apply(&PolynomialVector::monomial(&[0, 3])).is_zero());
    }

    #[test]
    fn omega_examples() {
        let z = |n: usize| vec![0i64; n];
        assert_eq!(omega_single(&a(1), &z(3)).unwrap(), x(1).mul(&d(1)));
        assert_eq!(omega_single(&a(1), &[1, 0, 0]).unwrap(), d(1));
        assert_eq!(omega_single(&ExponentPolynomial::one(), &[-1, 0, 0]).unwrap(), x(1));
        let p = a(5).mul(&a(5).sub(&ExponentPolynomial::one())).mul(&a(5).sub(&ExponentPolynomial::from_int(2)));
        let w = omega_single(&p, &[0, -1, 0, 0, 3]).unwrap();
        assert_eq!(w, WeylOperator::term(r(1), &[0, 1, 0, 0, 0], &[0, 0, 0, 0, 3]));
        assert_eq!(w.latex(), "x_{2}\\partial_{5}^{3}");
        assert!(omega_single(&a(1), &[2]).is_err());
    }

    #[test]
    fn omega_with_shifted_quotient() {
        // a_4 a_5 (a_5 - 1) with b_4 = 1, b_5 = 1: quotient a_5 - 1, then a_5 ↦ a_5 + 1
        let p = a(4).mul(&a(5)).mul(&a(5).sub(&ExponentPolynomial::one()));
        let w = omega_single(&p, &[0, 0, 0, 1, 1]).unwrap();
        assert_eq!(w, WeylOperator::term(r(1), &[0, 0, 0, 0, 1], &[0, 0, 0, 1, 2]));
        for av in [[0u32, 0, 0, 1, 1], [1, 2, 0, 3, 4], [0, 0, 0, 2, 0]] {
            let data = vec![(p.clone(), vec![0, 0, 0, 1, 1])];
            assert_eq!(w.apply(&PolynomialVector::monomial(&av)), direct_action(&data, &av));
        }
    }

    #[test]
    fn printing() {
        let w = x(1).mul(&d(4)).mul(&d(4)).scale(&r(-3)).sub(&x(3).mul(&d(4)).scale(&r(2))).sub(&x(2).mul(&d(3)).scale(&r(3))).add(&x(5));
        assert_eq!(w.latex(), "-3x_{1}\\partial_{4}^{2}-2x_{3}\\partial_{4}-3x_{2}\\partial_{3}+x_{5}");
        assert_eq!(w.ascii(), "-3 x1 d4^2 - 2 x3 d4 - 3 x2 d3 + x5");
        assert_eq!(WeylOperator::zero().latex(), "0");
        assert_eq!(WeylOperator::constant(Rational::new(-1, 2)).latex(), "-1/2");
        let g = x(2).mul(&d(5)).mul(&d(5)).mul(&d(5)).sub(&x(1).mul(&d(4)).mul(&d(5)).mul(&d(5)).scale(&r(3)));
        assert_eq!(g.latex(), "x_{2}\\partial_{5}^{3}-3x_{1}\\partial_{4}\\partial_{5}^{2}");
    }

    fn small_op() -> impl Strategy<Value = WeylOperator> {
        prop::collection::vec((prop::array::uniform2(0u32..3), prop::array::uniform2(0u32..3), -3i64..4), 0..4)
            .prop_map(|ts| {
                let mut w = WeylOperator::zero();
                for (xa, db, c) in ts {
                    w.add_assign(&WeylOperator::term(r(c), &xa, &db));
                }
                w
            })
    }

    fn small_poly() -> impl Strategy<Value = PolynomialVector> {
        prop::collection::vec((prop::array::uniform2(0u32..5), -3i64..4), 0..4).prop_map(|ts| {
            let mut p = PolynomialVector::zero();
            for (e, c) in ts {
                p = p.add(&PolynomialVector::monomial(&e).scale(&r(c)));
            }
            p
        })
    }

    fn shift_poly() -> impl Strategy<Value = (ExponentPolynomial, Vec<i64>)> {
        (prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -4i64..5), 0..3), prop::array::uniform3(-2i64..3)).prop_map(
            |(ts, b)| {
                let mut q = ExponentPolynomial::from_terms(ts.into_iter().map(|(e0, e1, e2, c)| {
                    let mut m = crate::polynomial::PolyMonomial::new();
                    for (v, e) in [(0u16, e0), (1, e1), (2, e2)] {
                        if e > 0 {
                            m.push((v, e));
                        }
                    }
                    (m, r(c))
                }));
                for (k, &bk) in b.iter().enumerate() {
                    if bk > 0 {
                        q = q.mul(&ExponentPolynomial::falling_factorial(k, bk as u32));
                    }
                }
                (q, b.to_vec())
            },
        )
    }

    proptest! {
        #[test]
        fn action_is_a_homomorphism(u in small_op(), v in small_op(), f in small_poly()) {
            prop_assert_eq!(u.mul(&v).apply(&f), u.apply(&v.apply(&f)));
        }

        #[test]
        fn product_is_associative(u in small_op(), v in small_op(), w in small_op()) {
            prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        }

        #[test]
        fn omega_contract(data in prop::collection::vec(shift_poly(), 1..4), a in prop::array::uniform3(0u32..7)) {
            let w = omega(&data).unwrap();
            prop_assert_eq!(w.apply(&PolynomialVector::monomial(&a)), direct_action(&data, &a));
        }

        #[test]
        fn omega_ignores_data_order(mut data in prop::collection::vec(shift_poly(), 1..4), rot in 0usize..4) {
            let w = omega(&data).unwrap();
            let k = rot % data.len();
            data.rotate_left(k);
            data.reverse();
            prop_assert_eq!(omega(&data).unwrap(), w);
        }
    }
}
