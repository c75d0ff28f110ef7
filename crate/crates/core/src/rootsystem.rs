//! Root systems of the simple types, indexed in graded lexicographic order.
//!
//! Simple roots follow Humphreys' numbering (Bourbaki for all classical and
//! exceptional families):
//!
//! | type | diagram | lengths² |
//! |------|---------|----------|
//! | A_n  | 1 - 2 - ... - n | all 2 |
//! | B_n  | 1 - ... - (n-1) => n | α_n = 2, others 4 |
//! | C_n  | 1 - ... - (n-1) <= n | α_n = 4, others 2 |
//! | D_n  | 1 - ... - (n-2) forks into n-1 and n | all 2 |
//! | E_n  | 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4 | all 2 |
//! | F_4  | 1 - 2 => 3 - 4 | α_1, α_2 = 4; α_3, α_4 = 2 |
//! | G_2  | 1 <= 2 (first root short) | α_1 = 2, α_2 = 6 |
//!
//! The invariant form is normalized so that short roots have squared length 2.
//! The Cartan matrix is stored as `a_ij = <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j)`,
//! so for G_2 it reads `[[2, -1], [-3, 2]]`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(Error::InvalidInput(format!("no simple type {family:?}{rank}")))
        }
    }

    /// Number of positive roots by the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn dimension(&self) -> usize {
        2 * self.positive_root_count() + self.rank
    }

    /// Gram matrix `(α_i, α_j)` of the simple roots, short roots of length² 2.
    pub fn simple_root_gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let chain = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.family {
            Family::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n.saturating_sub(1) {
                    chain(&mut g, i, i + 1, -1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    g[i][i] = 4;
                }
                g[n - 1][n - 1] = 2;
                for i in 0..n - 1 {
                    chain(&mut g, i, i + 1, -2);
                }
            }
            Family::C => {
                for i in 0..n - 1 {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 0..n - 2 {
                    chain(&mut g, i, i + 1, -1);
                }
                chain(&mut g, n - 2, n - 1, -2);
            }
            Family::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 0..n - 2 {
                    chain(&mut g, i, i + 1, -1);
                }
                chain(&mut g, n - 3, n - 1, -1);
            }
            Family::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                chain(&mut g, 0, 2, -1);
                chain(&mut g, 1, 3, -1);
                for i in 2..n - 1 {
                    chain(&mut g, i, i + 1, -1);
                }
            }
            Family::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                chain(&mut g, 0, 1, -2);
                chain(&mut g, 1, 2, -2);
                chain(&mut g, 2, 3, -1);
            }
            Family::G => {
                g[0][0] = 2;
                g[1][1] = 6;
                chain(&mut g, 0, 1, -3);
            }
        }
        g
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidInput(format!("cannot parse Lie type {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest.parse().map_err(|_| bad())?;
        SimpleType::new(family, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Height first; ties are broken lexicographically with the last simple-root
/// coordinate most significant, so `α_1 < α_2 < … < α_r` and in G_2
/// `(1,0) < (0,1) < (1,1) < (2,1) < (3,1) < (3,2)`.
pub fn graded_lex_compare(a: &Root, b: &Root) -> Ordering {
    a.height()
        .cmp(&b.height())
        .then_with(|| a.coords.iter().rev().cmp(b.coords.iter().rev()))
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ty: SimpleType,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, i32>,
}

impl RootSystem {
    /// Builds all roots by extending known positive roots by simple roots,
    /// deciding root-ness from the α-string through each candidate.
    pub fn build(ty: SimpleType) -> RootSystem {
        let gram = ty.simple_root_gram();
        let n = ty.rank;
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        let simple: Vec<Root> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                Root::new(c)
            })
            .collect();
        let mut known: HashMap<Vec<i64>, ()> = simple.iter().map(|r| (r.coords.clone(), ())).collect();
        let mut layer = simple.clone();
        let mut all = simple.clone();
        while !layer.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &layer {
                for (i, alpha) in simple.iter().enumerate() {
                    // p: how far the α_i-string extends downward from β.
                    let mut p = 0;
                    let mut down = beta.sub(alpha);
                    while known.contains_key(&down.coords) {
                        p += 1;
                        down = down.sub(alpha);
                    }
                    let pairing: i64 = (0..n).map(|k| beta.coords[k] * gram[k][i]).sum::<i64>() * 2 / gram[i][i];
                    let q = p - pairing;
                    if q > 0 {
                        let up = beta.add(alpha);
                        if !known.contains_key(&up.coords) {
                            known.insert(up.coords.clone(), ());
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.sort_by(graded_lex_compare);
        let mut index = HashMap::new();
        for (k, r) in all.iter().enumerate() {
            index.insert(r.coords.clone(), k as i32 + 1);
            index.insert(r.negated().coords, -(k as i32 + 1));
        }
        RootSystem { ty, gram, cartan, positive: all, index }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn dimension(&self) -> usize {
        2 * self.positive.len() + self.rank()
    }

    /// Root for a signed index: `k > 0` is the k-th positive root, `-k` its negative.
    pub fn root(&self, index: i32) -> Root {
        assert!(index != 0 && index.unsigned_abs() as usize <= self.positive.len(), "bad root index {index}");
        let r = &self.positive[index.unsigned_abs() as usize - 1];
        if index > 0 {
            r.clone()
        } else {
            r.negated()
        }
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<i32> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    /// The invariant form `(a, b)` on simple-root coordinate vectors.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += a[i] * self.gram[i][j] * b[j];
            }
        }
        s
    }

    pub fn length_sq(&self, index: i32) -> i64 {
        let r = self.root(index);
        self.form(&r.coords, &r.coords)
    }

    pub fn max_height(&self) -> i64 {
        self.positive.last().map(Root::height).unwrap_or(0)
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            simple_type: self.ty.to_string(),
            cartan_matrix: self.cartan.clone(),
            positive_roots: self.positive.clone(),
        }
    }
}

/// Structured form of a root system: type string plus ordered positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub simple_type: String,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Root>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: close the simple roots under simple reflections.
    fn reflection_closure(ty: SimpleType) -> usize {
        let gram = ty.simple_root_gram();
        let n = ty.rank;
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut stack: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i] = 1;
                c
            })
            .collect();
        while let Some(r) = stack.pop() {
            if !seen.insert(r.clone()) {
                continue;
            }
            for i in 0..n {
                let pairing: i64 = (0..n).map(|k| r[k] * gram[k][i]).sum::<i64>() * 2 / gram[i][i];
                let mut s = r.clone();
                s[i] -= pairing;
                if !seen.contains(&s) {
                    stack.push(s);
                }
            }
        }
        seen.len()
    }

    fn all_types() -> Vec<SimpleType> {
        let mut v = Vec::new();
        for n in 1..=8 {
            v.push(SimpleType::new(Family::A, n).unwrap());
        }
        for n in 2..=8 {
            v.push(SimpleType::new(Family::B, n).unwrap());
            v.push(SimpleType::new(Family::C, n).unwrap());
        }
        for n in 4..=8 {
            v.push(SimpleType::new(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            v.push(SimpleType::new(Family::E, n).unwrap());
        }
        v.push(SimpleType::new(Family::F, 4).unwrap());
        v.push(SimpleType::new(Family::G, 2).unwrap());
        v
    }

    #[test]
    fn root_counts_match_reflection_oracle() {
        for ty in all_types() {
            let rs = RootSystem::build(ty);
            assert_eq!(2 * rs.num_positive(), reflection_closure(ty), "{ty}");
            assert_eq!(rs.num_positive(), ty.positive_root_count(), "{ty}");
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(RootSystem::build("G2".parse().unwrap()).dimension(), 14);
        assert_eq!(RootSystem::build("A1".parse().unwrap()).dimension(), 3);
        assert_eq!(RootSystem::build("E8".parse().unwrap()).dimension(), 248);
    }

    #[test]
    fn g2_order_and_highest_root() {
        let rs = RootSystem::build("G2".parse().unwrap());
        let coords: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(coords, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]);
        assert_eq!(rs.root(6).coords, vec![3, 2]);
        assert_eq!(rs.root(-6).coords, vec![-3, -2]);
        assert_eq!(rs.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(rs.length_sq(1), 2);
        assert_eq!(rs.length_sq(2), 6);
    }

    #[test]
    fn compare_examples() {
        let r = |c: &[i64]| Root::new(c.to_vec());
        assert_eq!(graded_lex_compare(&r(&[1, 0]), &r(&[0, 1])), Ordering::Less);
        assert_eq!(graded_lex_compare(&r(&[1, 1]), &r(&[0, 1])), Ordering::Greater);
        assert_eq!(graded_lex_compare(&r(&[1, 1]), &r(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn index_is_signed_bijection() {
        for ty in all_types() {
            let rs = RootSystem::build(ty);
            for k in 1..=rs.num_positive() as i32 {
                assert_eq!(rs.index_of(&rs.root(k).coords), Some(k));
                assert_eq!(rs.index_of(&rs.root(-k).coords), Some(-k));
            }
            assert!(rs.positive_roots().windows(2).all(|w| graded_lex_compare(&w[0], &w[1]) == Ordering::Less));
            assert!(rs.positive_roots()[..ty.rank].iter().all(|r| r.height() == 1));
        }
    }

    #[test]
    fn order_is_total_on_all_roots() {
        for ty in all_types().into_iter().filter(|t| t.rank <= 4) {
            let rs = RootSystem::build(ty);
            let mut roots: Vec<Root> = rs.positive_roots().to_vec();
            roots.extend(rs.positive_roots().iter().map(Root::negated));
            for a in &roots {
                for b in &roots {
                    let ab = graded_lex_compare(a, b);
                    assert_eq!(ab, graded_lex_compare(b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    for c in &roots {
                        if ab == Ordering::Less && graded_lex_compare(b, c) == Ordering::Less {
                            assert_eq!(graded_lex_compare(a, c), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_bad_types() {
        assert!(SimpleType::new(Family::B, 1).is_err());
        assert!(SimpleType::new(Family::D, 3).is_err());
        assert!(SimpleType::new(Family::E, 9).is_err());
        assert!(SimpleType::new(Family::F, 3).is_err());
        assert!("X3".parse::<SimpleType>().is_err());
        assert_eq!("e_8".parse::<SimpleType>().unwrap().to_string(), "E8");
    }
}
