//! Words in the universal enveloping algebra with polynomial exponents.
//!
//! A [`UEAMonomial`] is a product `g_{i_1}^{p_1} … g_{i_k}^{p_k}` whose exponents
//! are [`ExponentPolynomial`]s in `a_1, …, a_n`. A [`UEAElement`] is a finite sum
//! of such words with polynomial coefficients. [`reduce`] rewrites an element
//! with the two commutation identities
//!
//! ```text
//! a b^m = Σ_k C(m,k) (-1)^k b^{m-k} (ad b)^k(a)
//! b^m a = Σ_k C(m,k) (ad b)^k(a) b^{m-k}
//! ```
//!
//! until no adjacent out-of-order pair can be commuted.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::liealgebra::{AlgebraElement, BasisElement, ChevalleyAlgebra};
use crate::polynomial::ExponentPolynomial;

/// Total order on generators, given as integer ranks.
#[derive(Debug, Clone)]
pub struct GeneratorOrder {
    ranks: HashMap<BasisElement, u32>,
}

impl GeneratorOrder {
    pub fn new(ranks: Vec<(BasisElement, u32)>) -> Self {
        GeneratorOrder { ranks: ranks.into_iter().collect() }
    }

    /// Table order of the algebra basis.
    pub fn basis_order(alg: &ChevalleyAlgebra) -> Self {
        Self::new(alg.basis().iter().map(|&b| (b, alg.dense_index(b) as u32)).collect())
    }

    pub fn rank(&self, b: BasisElement) -> u32 {
        self.ranks[&b]
    }

    pub fn greater(&self, x: BasisElement, y: BasisElement) -> bool {
        self.rank(x) > self.rank(y)
    }
}

/// An ordered word of generators with polynomial exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UEAMonomial {
    factors: Vec<(BasisElement, ExponentPolynomial)>,
}

impl UEAMonomial {
    /// Builds a word, merging equal neighbours and dropping zero exponents.
    pub fn new(factors: impl IntoIterator<Item = (BasisElement, ExponentPolynomial)>) -> Self {
        let mut out: Vec<(BasisElement, ExponentPolynomial)> = Vec::new();
        for (g, p) in factors {
            if p.is_zero() {
                continue;
            }
            match out.last_mut() {
                Some((h, q)) if *h == g => {
                    let s = q.add(&p);
                    if s.is_zero() {
                        out.pop();
                    } else {
                        *q = s;
                    }
                }
                _ => out.push((g, p)),
            }
        }
        UEAMonomial { factors: out }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn generator(g: BasisElement) -> Self {
        Self::new([(g, ExponentPolynomial::one())])
    }

    pub fn factors(&self) -> &[(BasisElement, ExponentPolynomial)] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Concatenation, normalized.
    pub fn concat(&self, other: &UEAMonomial) -> UEAMonomial {
        Self::new(self.factors.iter().chain(other.factors.iter()).cloned())
    }

    /// No out-of-order pair, adjacent or not, has a non-negative integer
    /// exponent on either side.
    pub fn is_reduced(&self, order: &GeneratorOrder) -> bool {
        let f = &self.factors;
        for i in 0..f.len() {
            for j in i + 1..f.len() {
                if order.greater(f[i].0, f[j].0)
                    && (f[i].1.as_nonneg_integer().is_some() || f[j].1.as_nonneg_integer().is_some())
                {
                    return false;
                }
            }
        }
        true
    }

    /// Position `j` of the first adjacent out-of-order pair `(j, j+1)` that a
    /// commutation identity applies to.
    pub fn first_commutable(&self, order: &GeneratorOrder) -> Option<usize> {
        self.factors
            .windows(2)
            .position(|w| order.greater(w[0].0, w[1].0) && applicable(&w[0], &w[1]).is_some())
    }

    fn render(&self, latex: bool) -> String {
        let mut s = String::new();
        for (g, p) in &self.factors {
            if latex {
                s.push_str(&g.latex());
            } else {
                if !s.is_empty() {
                    s.push(' ');
                }
                s.push_str(&g.plain());
            }
            if p.as_constant().is_some_and(|c| c.is_one()) {
                continue;
            }
            if latex {
                s.push_str(&format!("^{{{}}}", p.latex()));
            } else if p.len() == 1 {
                s.push_str(&format!("^{}", p.plain()));
            } else {
                s.push_str(&format!("^({})", p.plain()));
            }
        }
        s
    }

    pub fn latex(&self) -> String {
        self.render(true)
    }

    pub fn plain(&self) -> String {
        self.render(false)
    }
}

impl fmt::Display for UEAMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Identity {
    /// `a b^m`, peeling one copy of the left factor.
    First,
    /// `b^m a`, peeling one copy of the right factor.
    Second,
}

fn is_nilpotent(g: BasisElement) -> bool {
    !g.is_cartan()
}

fn applicable(left: &(BasisElement, ExponentPolynomial), right: &(BasisElement, ExponentPolynomial)) -> Option<Identity> {
    if left.1.as_positive_integer().is_some() && is_nilpotent(right.0) {
        Some(Identity::First)
    } else if right.1.as_positive_integer().is_some() && is_nilpotent(left.0) {
        Some(Identity::Second)
    } else {
        None
    }
}

/// A sum of words with polynomial coefficients. Words never repeat and
/// coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UEAElement {
    terms: BTreeMap<UEAMonomial, ExponentPolynomial>,
}

impl UEAElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: UEAMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, ExponentPolynomial::one());
        e
    }

    /// The generic word `u_1^{a_1} … u_n^{a_n}`.
    pub fn generic_word(generators: &[BasisElement]) -> UEAMonomial {
        UEAMonomial::new(generators.iter().enumerate().map(|(i, g)| (*g, ExponentPolynomial::var(i))))
    }

    pub fn add_term(&mut self, m: UEAMonomial, c: ExponentPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &UEAElement) -> UEAElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ExponentPolynomial) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, p) in &self.terms {
            out.add_term(m.clone(), p.mul(c));
        }
        out
    }

    /// `g · self`.
    pub fn left_multiply(&self, g: BasisElement) -> UEAElement {
        let mut out = UEAElement::zero();
        for (m, c) in &self.terms {
            out.add_term(UEAMonomial::generator(g).concat(m), c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&UEAMonomial, &ExponentPolynomial)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &UEAMonomial) -> ExponentPolynomial {
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

    pub fn is_reduced(&self, order: &GeneratorOrder) -> bool {
        self.terms.keys().all(|m| m.is_reduced(order))
    }

    /// Coefficients in parentheses when they have several terms, e.g.
    /// `(-3a_{4}^{2}+3a_{4})g_{-6}^{a_{1}+1}…-2a_{4}g_{-6}^{a_{1}}…`.
    pub fn latex(&self) -> String {
        self.render(true)
    }

    pub fn plain(&self) -> String {
        self.render(false)
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (m, c) in &self.terms {
            let word = if latex { m.latex() } else { m.plain() };
            let (neg, body) = coefficient_text(c, latex);
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if word.is_empty() {
                s.push_str(if body.is_empty() { "1" } else { &body });
            } else {
                s.push_str(&body);
                if !latex && !body.is_empty() {
                    s.push(' ');
                }
                s.push_str(&word);
            }
        }
        s
    }
}

/// Sign and body of a coefficient printed in front of a word. Unit
/// coefficients have an empty body.
fn coefficient_text(c: &ExponentPolynomial, latex: bool) -> (bool, String) {
    let text = |p: &ExponentPolynomial| if latex { p.latex() } else { p.plain() };
    if let Some(v) = c.as_constant() {
        let a = v.abs();
        return (v.is_negative(), if a.is_one() { String::new() } else { a.to_string() });
    }
    if c.len() == 1 {
        let (_, lead) = &c.terms()[0];
        if lead.is_negative() {
            return (true, text(&c.neg()));
        }
        return (false, text(c));
    }
    (false, format!("({})", text(c)))
}

impl fmt::Display for UEAElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

/// Limits for [`reduce`].
#[derive(Debug, Clone, Copy)]
pub struct ReduceOptions {
    /// Maximum number of single commutation steps.
    pub step_budget: u64,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions { step_budget: 100_000_000 }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceStats {
    pub steps: u64,
    pub max_pending: usize,
}

/// Commutation engine bound to one algebra. Caches `(ad b)^k(a)` series.
pub struct Reducer<'a> {
    alg: &'a ChevalleyAlgebra,
    ad_cap: usize,
    cache: HashMap<(BasisElement, BasisElement), Vec<AlgebraElement>>,
}

impl<'a> Reducer<'a> {
    pub fn new(alg: &'a ChevalleyAlgebra) -> Self {
        Reducer { alg, ad_cap: 4 * alg.roots().max_height() as usize, cache: HashMap::new() }
    }

    /// `[a, (ad b)(a), (ad b)^2(a), …]` up to the last nonzero term.
    pub fn ad_series(&mut self, b: BasisElement, a: BasisElement) -> Result<&[AlgebraElement]> {
        if !self.cache.contains_key(&(b, a)) {
            let mut series = vec![AlgebraElement::basis(a)];
            loop {
                let next = self.alg.bracket(&AlgebraElement::basis(b), series.last().unwrap());
                if next.is_zero() {
                    break;
                }
                if series.len() > self.ad_cap {
                    return Err(Error::AdSeries(self.ad_cap));
                }
                series.push(next);
            }
            self.cache.insert((b, a), series);
        }
        Ok(&self.cache[&(b, a)])
    }

    /// One application of a commutation identity at the pair `(j, j+1)`.
    /// The first identity is used whenever the left exponent is a positive
    /// integer and the right generator is a root vector.
    pub fn commute_once(&mut self, m: &UEAMonomial, j: usize) -> Result<UEAElement> {
        let f = m.factors();
        if j + 1 >= f.len() {
            return Err(Error::NotCommutable(j));
        }
        let (left, right) = (&f[j], &f[j + 1]);
        let identity = applicable(left, right).ok_or(Error::NotCommutable(j))?;
        let prefix = &f[..j];
        let suffix = &f[j + 2..];
        let one = ExponentPolynomial::one();
        let mut out = UEAElement::zero();
        match identity {
            Identity::First => {
                let (a, b, m_exp) = (left.0, right.0, &right.1);
                let rest_a = left.1.sub(&one);
                let series = self.ad_series(b, a)?.to_vec();
                for (k, v) in series.iter().enumerate() {
                    let mut binom = m_exp.binomial(k as u32);
                    if k % 2 == 1 {
                        binom = binom.neg();
                    }
                    if binom.is_zero() {
                        continue;
                    }
                    let b_exp = m_exp.sub(&ExponentPolynomial::from_int(k as i64));
                    for (c, r) in v.terms() {
                        let word = UEAMonomial::new(
                            prefix
                                .iter()
                                .cloned()
                                .chain([(a, rest_a.clone()), (b, b_exp.clone()), (*c, one.clone())])
                                .chain(suffix.iter().cloned()),
                        );
                        out.add_term(word, binom.scale(r));
                    }
                }
            }
            Identity::Second => {
                let (b, m_exp, a) = (left.0, &left.1, right.0);
                let rest_a = right.1.sub(&one);
                let series = self.ad_series(b, a)?.to_vec();
                for (k, v) in series.iter().enumerate() {
                    let binom = m_exp.binomial(k as u32);
                    if binom.is_zero() {
                        continue;
                    }
                    let b_exp = m_exp.sub(&ExponentPolynomial::from_int(k as i64));
                    for (c, r) in v.terms() {
                        let word = UEAMonomial::new(
                            prefix
                                .iter()
                                .cloned()
                                .chain([(*c, one.clone()), (b, b_exp.clone()), (a, rest_a.clone())])
                                .chain(suffix.iter().cloned()),
                        );
                        out.add_term(word, binom.scale(r));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rewrites `e` until every word is reduced relative to `order`.
    pub fn reduce(&mut self, e: &UEAElement, order: &GeneratorOrder, opts: ReduceOptions) -> Result<(UEAElement, ReduceStats)> {
        let mut stats = ReduceStats::default();
        let mut done = UEAElement::zero();
        // Keyed by the position of the first commutable pair so that words
        // still far from reduced are processed first and like terms merge
        // before they are expanded.
        let mut pending: BTreeMap<(usize, UEAMonomial), ExponentPolynomial> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<(usize, UEAMonomial), ExponentPolynomial>,
                        done: &mut UEAElement,
                        m: UEAMonomial,
                        c: ExponentPolynomial|
         -> Result<()> {
            match m.first_commutable(order) {
                None => {
                    if !m.is_reduced(order) {
                        return Err(Error::ReductionStuck(m.latex()));
                    }
                    done.add_term(m, c);
                }
                Some(j) => {
                    let key = (j, m);
                    let merged = match pending.get(&key) {
                        Some(old) => old.add(&c),
                        None => c,
                    };
                    if merged.is_zero() {
                        pending.remove(&key);
                    } else {
                        pending.insert(key, merged);
                    }
                }
            }
            Ok(())
        };
        for (m, c) in e.terms() {
            push(&mut pending, &mut done, m.clone(), c.clone())?;
        }
        while let Some(((j, m), c)) = pending.pop_first() {
            stats.steps += 1;
            if stats.steps > opts.step_budget {
                return Err(Error::StepBudget(opts.step_budget));
            }
            let expanded = self.commute_once(&m, j)?;
            for (m2, c2) in expanded.terms {
                push(&mut pending, &mut done, m2, c2.mul(&c))?;
            }
            stats.max_pending = stats.max_pending.max(pending.len());
        }
        Ok((done, stats))
    }
}

/// Convenience wrapper around [`Reducer::reduce`].
pub fn reduce(alg: &ChevalleyAlgebra, e: &UEAElement, order: &GeneratorOrder, opts: ReduceOptions) -> Result<UEAElement> {
    Reducer::new(alg).reduce(e, order, opts).map(|(r, _)| r)
}
