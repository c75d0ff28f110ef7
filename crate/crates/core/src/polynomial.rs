//! Exact polynomials over ℚ in the exponent variables `a_1, …, a_n`.
//!
//! Variables are 0-based internally (`var = 0` prints as `a_1`). Terms are
//! kept sorted by monomial with no zero coefficients, so derived equality,
//! ordering and hashing are structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Sorted `(variable, exponent)` pairs, exponents positive.
pub type PolyMonomial = SmallVec<[(u16, u32); 2]>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentPolynomial {
    terms: Vec<(PolyMonomial, Rational)>,
}

fn mono_mul(a: &PolyMonomial, b: &PolyMonomial) -> PolyMonomial {
    let mut out = PolyMonomial::new();
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

fn mono_degree(m: &PolyMonomial) -> u32 {
    m.iter().map(|(_, e)| e).sum()
}

/// Display order: higher total degree first, then the exponent of the
/// highest-numbered variable decides, then the next one down.
fn display_cmp(a: &PolyMonomial, b: &PolyMonomial) -> Ordering {
    mono_degree(b).cmp(&mono_degree(a)).then_with(|| {
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
    })
}

impl ExponentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ExponentPolynomial { terms: vec![(PolyMonomial::new(), c)] }
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_int(c))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The variable `a_{var+1}`.
    pub fn var(var: usize) -> Self {
        let mut m = PolyMonomial::new();
        m.push((var as u16, 1));
        ExponentPolynomial { terms: vec![(m, Rational::one())] }
    }

    /// `a_{var+1} + c`.
    pub fn var_plus(var: usize, c: i64) -> Self {
        Self::var(var).add(&Self::from_int(c))
    }

    fn from_map(map: BTreeMap<PolyMonomial, Rational>) -> Self {
        ExponentPolynomial { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (PolyMonomial, Rational)>) -> Self {
        let mut map: BTreeMap<PolyMonomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            let e = map.entry(m).or_default();
            *e += &c;
        }
        Self::from_map(map)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(PolyMonomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_empty() => Some(c.clone()),
            _ => None,
        }
    }

    /// The value if the polynomial is a constant non-negative integer.
    pub fn as_nonneg_integer(&self) -> Option<u64> {
        self.as_constant().and_then(|c| c.to_i64()).and_then(|v| u64::try_from(v).ok())
    }

    /// The value if the polynomial is a constant positive integer.
    pub fn as_positive_integer(&self) -> Option<u64> {
        self.as_nonneg_integer().filter(|v| *v > 0)
    }

    /// For `a_{var+1} + c` returns `(var, c)`.
    pub fn as_shifted_var(&self) -> Option<(usize, i64)> {
        let mut var = None;
        let mut shift = 0;
        for (m, c) in &self.terms {
            match m.as_slice() {
                [] => shift = c.to_i64()?,
                [(v, 1)] if c.is_one() => var = Some(*v as usize),
                _ => return None,
            }
        }
        var.map(|v| (v, shift))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Greater
            } else if j == b.len() {
                Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &b[j].1;
                    if !s.is_zero() {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        ExponentPolynomial { terms: out }
    }

    pub fn neg(&self) -> Self {
        ExponentPolynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ExponentPolynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut map: BTreeMap<PolyMonomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = map.entry(mono_mul(ma, mb)).or_default();
                *e += ca * cb;
            }
        }
        Self::from_map(map)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `a_{var+1} ↦ a_{var+1} + delta`.
    pub fn shift(&self, var: usize, delta: i64) -> Self {
        if delta == 0 {
            return self.clone();
        }
        let lin = Self::var_plus(var, delta);
        let mut powers: Vec<Self> = vec![Self::one()];
        let mut map: BTreeMap<PolyMonomial, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = PolyMonomial::new();
            let mut e = 0;
            for &(v, x) in m {
                if v as usize == var {
                    e = x;
                } else {
                    rest.push((v, x));
                }
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul(&lin);
                powers.push(next);
            }
            for (pm, pc) in &powers[e as usize].terms {
                let entry = map.entry(mono_mul(&rest, pm)).or_default();
                *entry += c * pc;
            }
        }
        Self::from_map(map)
    }

    /// Substitutes the integer `value` for `a_{var+1}`.
    pub fn substitute(&self, var: usize, value: i64) -> Self {
        let v = Rational::from_int(value);
        Self::from_terms(self.terms.iter().map(|(m, c)| {
            let mut rest = PolyMonomial::new();
            let mut coeff = c.clone();
            for &(x, e) in m {
                if x as usize == var {
                    coeff = &coeff * &v.pow(e as i32);
                } else {
                    rest.push((x, e));
                }
            }
            (rest, coeff)
        }))
    }

    /// Evaluates at `a_{i+1} = values[i]`. Missing variables panic.
    pub fn evaluate(&self, values: &[i64]) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m {
                t = &t * &Rational::from_int(values[v as usize]).pow(e as i32);
            }
            acc += t;
        }
        acc
    }

    /// Degree in `a_{var+1}`.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .flat_map(|(m, _)| m.iter().filter(|(v, _)| *v as usize == var).map(|(_, e)| *e))
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| mono_degree(m)).max().unwrap_or(0)
    }

    /// Splits by the power of `a_{var+1}`: `p = Σ_d coeffs[d] a^d`.
    fn split_by(&self, var: usize) -> BTreeMap<u32, Vec<(PolyMonomial, Rational)>> {
        let mut by: BTreeMap<u32, Vec<(PolyMonomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = PolyMonomial::new();
            let mut e = 0;
            for &(v, x) in m {
                if v as usize == var {
                    e = x;
                } else {
                    rest.push((v, x));
                }
            }
            by.entry(e).or_default().push((rest, c.clone()));
        }
        by
    }

    /// Divides by the monic linear factor `(a_{var+1} - root)`; returns
    /// quotient and remainder (the remainder is free of `a_{var+1}`).
    pub fn divide_linear(&self, var: usize, root: i64) -> (Self, Self) {
        let by = self.split_by(var);
        let Some(&top) = by.keys().next_back() else {
            return (Self::zero(), Self::zero());
        };
        let part = |d: u32| -> Self { by.get(&d).map(|t| Self::from_terms(t.iter().cloned())).unwrap_or_default() };
        let r = Rational::from_int(root);
        let mut quotient = Self::zero();
        let mut carry = Self::zero();
        for d in (1..=top).rev() {
            // q_{d-1} = p_d + root * q_d
            carry = part(d).add(&carry.scale(&r));
            let mut m = PolyMonomial::new();
            if d > 1 {
                m.push((var as u16, d - 1));
            }
            quotient = quotient.add(&carry.mul(&ExponentPolynomial { terms: vec![(m, Rational::one())] }));
        }
        let remainder = part(0).add(&carry.scale(&r));
        (quotient, remainder)
    }

    /// `p / Π_{b_k > 0} a_k (a_k - 1) … (a_k - b_k + 1)`, exactly.
    pub fn divide_by_falling_factorials(&self, shift: &[i64]) -> Result<Self> {
        let mut p = self.clone();
        for (k, &b) in shift.iter().enumerate() {
            for j in 0..b.max(0) {
                let (q, r) = p.divide_linear(k, j);
                if !r.is_zero() {
                    return Err(Error::Incompatible { shift: shift.to_vec(), var: k + 1 });
                }
                p = q;
            }
        }
        Ok(p)
    }

    /// Whether the falling-factorial division by `shift` is exact.
    pub fn is_compatible(&self, shift: &[i64]) -> bool {
        self.divide_by_falling_factorials(shift).is_ok()
    }

    /// `a_{var+1}(a_{var+1} - 1) … (a_{var+1} - k + 1)`.
    pub fn falling_factorial(var: usize, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, j| acc.mul(&Self::var_plus(var, -(j as i64))))
    }

    /// `p (p - 1) … (p - c + 1) / c!`.
    pub fn binomial(&self, c: u32) -> Self {
        let mut acc = Self::one();
        let mut fact = Rational::one();
        for j in 0..c {
            acc = acc.mul(&self.sub(&Self::from_int(j as i64)));
            fact = &fact * &Rational::from_int(j as i64 + 1);
        }
        acc.scale(&fact.recip())
    }

    /// Terms in display order (see module docs).
    pub fn display_terms(&self) -> Vec<&(PolyMonomial, Rational)> {
        let mut t: Vec<&(PolyMonomial, Rational)> = self.terms.iter().collect();
        t.sort_by(|a, b| display_cmp(&a.0, &b.0));
        t
    }

    fn render(&self, latex: bool) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            if c.is_negative() {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() || m.is_empty() {
                out.push_str(&a.to_string());
            }
            for &(v, e) in m {
                if latex {
                    out.push_str(&format!("a_{{{}}}", v + 1));
                    if e > 1 {
                        out.push_str(&format!("^{{{e}}}"));
                    }
                } else {
                    out.push_str(&format!("a{}", v + 1));
                    if e > 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
            }
        }
        out
    }

    /// `-3a_{4}^{2}+3a_{4}`.
    pub fn latex(&self) -> String {
        self.render(true)
    }

    /// `-3a4^2+3a4`.
    pub fn plain(&self) -> String {
        self.render(false)
    }
}

impl fmt::Display for ExponentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.plain())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: usize) -> ExponentPolynomial {
        ExponentPolynomial::var(i - 1)
    }

    fn k(c: i64) -> ExponentPolynomial {
        ExponentPolynomial::from_int(c)
    }

    fn int_binomial(m: u64, c: u64) -> u64 {
        if c > m {
            return 0;
        }
        (0..c).fold(1u64, |acc, j| acc * (m - j) / (j + 1))
    }

    #[test]
    fn ring_examples() {
        let p = a(1).add(&k(1)).mul(&a(1).sub(&k(1)));
        assert_eq!(p, a(1).mul(&a(1)).sub(&k(1)));
        let sq = a(1).mul(&a(1));
        assert_eq!(sq.shift(0, -2), sq.sub(&a(1).scale(&Rational::from_int(4))).add(&k(4)));
        let half = a(1).mul(&a(1).sub(&k(1))).scale(&Rational::new(1, 2));
        assert_eq!(half.substitute(0, 3), k(3));
        assert_eq!(half.evaluate(&[3]), Rational::from_int(3));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(a(1).binomial(0), k(1));
        assert_eq!(a(1).binomial(2), a(1).mul(&a(1)).sub(&a(1)).scale(&Rational::new(1, 2)));
        assert_eq!(a(1).binomial(1).evaluate(&[5]), Rational::from_int(5));
    }

    #[test]
    fn division_examples() {
        let p = a(1).mul(&a(1).sub(&k(1)));
        assert_eq!(p.divide_by_falling_factorials(&[2, 0, 0]).unwrap(), k(1));
        // 3a_4a_5^2 - 3a_4a_5 with b_4 = 1, b_5 = 2
        let q = a(4).mul(&a(5)).mul(&a(5)).scale(&Rational::from_int(3)).sub(&a(4).mul(&a(5)).scale(&Rational::from_int(3)));
        assert_eq!(q.divide_by_falling_factorials(&[0, 0, -1, 1, 2]).unwrap(), k(3));
        // same polynomial with b_5 = 1 only leaves 3(a_5 - 1)
        assert_eq!(
            q.divide_by_falling_factorials(&[0, 0, 0, 1, 1]).unwrap(),
            a(5).sub(&k(1)).scale(&Rational::from_int(3))
        );
        assert!(matches!(
            a(1).divide_by_falling_factorials(&[2, 0]),
            Err(Error::Incompatible { var: 1, .. })
        ));
        // non-positive shifts impose nothing
        assert_eq!(a(2).divide_by_falling_factorials(&[-3, 0]).unwrap(), a(2));
    }

    #[test]
    fn display_order() {
        let p = a(4).mul(&a(4)).mul(&a(5)).mul(&a(5)).scale(&Rational::from_int(9))
            .sub(&a(4).mul(&a(5)).mul(&a(5)).scale(&Rational::from_int(9)))
            .sub(&a(4).mul(&a(4)).mul(&a(5)).scale(&Rational::from_int(9)))
            .add(&a(4).mul(&a(5)).scale(&Rational::from_int(9)));
        assert_eq!(p.latex(), "9a_{4}^{2}a_{5}^{2}-9a_{4}a_{5}^{2}-9a_{4}^{2}a_{5}+9a_{4}a_{5}");
        let q = k(1).sub(&a(5).mul(&a(5))).sub(&a(4).mul(&a(5)).scale(&Rational::from_int(3))).add(&a(5)).sub(&k(1));
        assert_eq!(q.latex(), "-a_{5}^{2}-3a_{4}a_{5}+a_{5}");
        assert_eq!(k(-2).latex(), "-2");
        assert_eq!(a(2).add(&k(-1)).plain(), "a2-1");
    }

    #[test]
    fn classification() {
        assert_eq!(k(3).as_nonneg_integer(), Some(3));
        assert_eq!(k(0).as_nonneg_integer(), Some(0));
        assert_eq!(k(-1).as_nonneg_integer(), None);
        assert_eq!(ExponentPolynomial::constant(Rational::new(1, 2)).as_nonneg_integer(), None);
        assert_eq!(a(2).add(&k(-1)).as_nonneg_integer(), None);
        assert_eq!(a(2).add(&k(-1)).as_shifted_var(), Some((1, -1)));
    }

    fn small_poly() -> impl Strategy<Value = ExponentPolynomial> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..2, -5i64..6), 0..5).prop_map(|ts| {
            ExponentPolynomial::from_terms(ts.into_iter().map(|(e0, e1, e2, c)| {
                let mut m = PolyMonomial::new();
                for (v, e) in [(0u16, e0), (1, e1), (2, e2)] {
                    if e > 0 {
                        m.push((v, e));
                    }
                }
                (m, Rational::from_int(c))
            }))
        })
    }

    proptest! {
        #[test]
        fn binomial_matches_integers(m in 0u64..=12, c in 0u32..=12) {
            let v = a(1).binomial(c).evaluate(&[m as i64]);
            prop_assert_eq!(v, Rational::from_int(int_binomial(m, c as u64) as i64));
        }

        #[test]
        fn ring_laws(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(p.mul(&q), q.mul(&p));
            prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
            prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
            prop_assert!(p.sub(&p).is_zero());
        }

        #[test]
        fn shift_agrees_with_evaluation(p in small_poly(), d in -3i64..4, x in prop::array::uniform3(-4i64..5)) {
            let shifted = p.shift(1, d);
            let mut y = x;
            y[1] += d;
            prop_assert_eq!(shifted.evaluate(&x), p.evaluate(&y));
        }

        #[test]
        fn division_iff_compatible(q in small_poly(), b in prop::array::uniform3(-2i64..4), extra in 0usize..3) {
            // products of falling factorials are compatible, and the quotient comes back exactly
            let mut p = q.clone();
            for (k, &bk) in b.iter().enumerate() {
                if bk > 0 {
                    p = p.mul(&ExponentPolynomial::falling_factorial(k, bk as u32));
                }
            }
            prop_assert_eq!(p.divide_by_falling_factorials(&b).unwrap(), q.clone());
            // perturbing by a polynomial not divisible by a_k breaks compatibility
            if !q.is_zero() && b[extra] > 0 {
                let broken = p.add(&k(1));
                prop_assert!(!broken.is_compatible(&b));
            }
        }

        #[test]
        fn translation_preserves_compatibility(q in small_poly(), b in prop::array::uniform3(-2i64..3),
                                               j in 0usize..3, c in 0u32..3) {
            let mut p = q;
            for (k, &bk) in b.iter().enumerate() {
                if bk > 0 {
                    p = p.mul(&ExponentPolynomial::falling_factorial(k, bk as u32));
                }
            }
            prop_assume!(p.is_compatible(&b));
            let moved = ExponentPolynomial::var(j).binomial(c).mul(&p.shift(j, -(c as i64)));
            let mut b2 = b;
            b2[j] += c as i64;
            prop_assert!(moved.is_compatible(&b2));
        }
    }
}
