//! Chevalley–Weyl basis and integral structure constants.
//!
//! Basis: root vectors `g_k` for every signed root index `k`, and Cartan
//! elements `h_i` dual to the simple roots through the invariant form, i.e.
//! `[h_i, g_β] = (α_i, β) g_β`. With this choice `[g_α, g_{-α}]` is the coroot
//! `2/(α,α) Σ c_i h_i`, which can carry fractional coefficients (e.g. `h_1 + 2/3 h_2`
//! in G_2), while all root-vector constants `N_{α,β}` are integers.
//!
//! Signs: `N_{α,β} = +(p+1)` on every extraspecial pair, where pairs are
//! ordered by root index (graded lex), and `N_{-α,-β} = -N_{α,β}`. The rest
//! follows from the usual Chevalley-basis identities.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::Rational;
use crate::rootsystem::RootSystem;

/// A Chevalley–Weyl basis vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// Root vector for a signed root index.
    Root(i32),
    /// `h_i`, 1-based simple root index.
    Cartan(usize),
}

impl BasisElement {
    fn sort_key(&self) -> (u8, i64) {
        match *self {
            BasisElement::Root(k) if k < 0 => (0, k as i64),
            BasisElement::Cartan(i) => (1, i as i64),
            BasisElement::Root(k) => (2, k as i64),
        }
    }

    pub fn root_index(&self) -> Option<i32> {
        match *self {
            BasisElement::Root(k) => Some(k),
            BasisElement::Cartan(_) => None,
        }
    }

    pub fn is_cartan(&self) -> bool {
        matches!(self, BasisElement::Cartan(_))
    }

    /// Table-2 style name: `g_{-6}`, `h_{1}`.
    pub fn latex(&self) -> String {
        match *self {
            BasisElement::Root(k) => format!("g_{{{k}}}"),
            BasisElement::Cartan(i) => format!("h_{{{i}}}"),
        }
    }

    pub fn plain(&self) -> String {
        match *self {
            BasisElement::Root(k) => format!("g{k}"),
            BasisElement::Cartan(i) => format!("h{i}"),
        }
    }

    pub fn parse(s: &str) -> Option<BasisElement> {
        let t: String = s.chars().filter(|c| !matches!(c, '{' | '}' | '_' | ' ')).collect();
        let (head, num) = t.split_at(1);
        match head {
            "g" => num.parse::<i32>().ok().filter(|k| *k != 0).map(BasisElement::Root),
            "h" => num.parse::<usize>().ok().filter(|i| *i > 0).map(BasisElement::Cartan),
            _ => None,
        }
    }
}

/// Order of the bracket table: `g_{-N} < … < g_{-1} < h_1 < … < h_r < g_1 < … < g_N`.
impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.latex())
    }
}

/// Sparse linear combination of basis elements; zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    terms: BTreeMap<BasisElement, Rational>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        Self::term(b, Rational::one())
    }

    pub fn term(b: BasisElement, c: Rational) -> Self {
        let mut e = Self::zero();
        e.add_term(b, c);
        e
    }

    pub fn add_term(&mut self, b: BasisElement, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgebraElement, c: &Rational) {
        for (b, v) in &other.terms {
            self.add_term(*b, v * c);
        }
    }

    pub fn scaled(&self, c: &Rational) -> AlgebraElement {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &BasisElement) -> Rational {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// `-h_{1}-2/3h_{2}` style rendering; `0` for the zero element.
    pub fn latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if i > 0 {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&a.to_string());
            }
            out.push_str(&b.latex());
        }
        out
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.latex())
    }
}

/// Outcome of a Jacobi-identity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub checked: usize,
    pub failure: Option<(BasisElement, BasisElement, BasisElement)>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    basis: Vec<BasisElement>,
    table: Vec<AlgebraElement>,
    constants: HashMap<(i32, i32), i64>,
}

impl ChevalleyAlgebra {
    pub fn new(roots: RootSystem) -> Self {
        let constants = structure_constants(&roots);
        let p = roots.num_positive() as i32;
        let r = roots.rank();
        let mut basis: Vec<BasisElement> = (1..=p).rev().map(|k| BasisElement::Root(-k)).collect();
        basis.extend((1..=r).map(BasisElement::Cartan));
        basis.extend((1..=p).map(BasisElement::Root));
        let mut alg = ChevalleyAlgebra { roots, basis, table: Vec::new(), constants };
        let dim = alg.basis.len();
        let mut table = Vec::with_capacity(dim * dim);
        for x in &alg.basis {
            for y in &alg.basis {
                table.push(alg.bracket_from_constants(*x, *y));
            }
        }
        alg.table = table;
        alg
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Basis in table order.
    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// Position of a basis element in [`Self::basis`].
    pub fn dense_index(&self, b: BasisElement) -> usize {
        let p = self.roots.num_positive();
        match b {
            BasisElement::Root(k) if k < 0 => (p as i32 + k) as usize,
            BasisElement::Cartan(i) => p + i - 1,
            BasisElement::Root(k) => p + self.rank() + k as usize - 1,
        }
    }

    /// `N_{α,β}` for signed root indices (0 when `α+β` is not a root).
    pub fn structure_constant(&self, a: i32, b: i32) -> i64 {
        self.constants.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Weight of a basis element in simple-root coordinates (zero for Cartan).
    pub fn weight(&self, b: BasisElement) -> Vec<i64> {
        match b {
            BasisElement::Root(k) => self.roots.root(k).coords,
            BasisElement::Cartan(_) => vec![0; self.rank()],
        }
    }

    /// The coroot `[g_k, g_{-k}]` expanded over the `h_i`.
    pub fn coroot(&self, k: i32) -> AlgebraElement {
        let root = self.roots.root(k);
        let scale = Rational::new(2, self.roots.form(&root.coords, &root.coords));
        let mut e = AlgebraElement::zero();
        for (i, c) in root.coords.iter().enumerate() {
            e.add_term(BasisElement::Cartan(i + 1), &scale * &Rational::from_int(*c));
        }
        e
    }

    fn bracket_from_constants(&self, x: BasisElement, y: BasisElement) -> AlgebraElement {
        use BasisElement::*;
        match (x, y) {
            (Cartan(_), Cartan(_)) => AlgebraElement::zero(),
            (Cartan(i), Root(k)) => {
                let mut a = vec![0; self.rank()];
                a[i - 1] = 1;
                let v = self.roots.form(&a, &self.roots.root(k).coords);
                AlgebraElement::term(Root(k), Rational::from_int(v))
            }
            (Root(_), Cartan(_)) => self.bracket_from_constants(y, x).scaled(&Rational::from_int(-1)),
            (Root(k), Root(l)) if k == -l => self.coroot(k),
            (Root(k), Root(l)) => {
                let s = self.roots.root(k).add(&self.roots.root(l));
                match self.roots.index_of(&s.coords) {
                    Some(m) => AlgebraElement::term(Root(m), Rational::from_int(self.structure_constant(k, l))),
                    None => AlgebraElement::zero(),
                }
            }
        }
    }

    /// Table lookup `[x, y]` for basis elements.
    pub fn bracket_basis(&self, x: BasisElement, y: BasisElement) -> &AlgebraElement {
        let d = self.basis.len();
        &self.table[self.dense_index(x) * d + self.dense_index(y)]
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let c = cx * cy;
                out.add_scaled(self.bracket_basis(*bx, *by), &c);
            }
        }
        out
    }

    /// Replaces `[x, y]` (and `[y, x]` by antisymmetry). Only useful for
    /// mutation tests of the verification routines.
    pub fn with_bracket_override(mut self, x: BasisElement, y: BasisElement, value: AlgebraElement) -> Self {
        let d = self.basis.len();
        let (ix, iy) = (self.dense_index(x), self.dense_index(y));
        self.table[iy * d + ix] = value.scaled(&Rational::from_int(-1));
        self.table[ix * d + iy] = value;
        self
    }

    fn jacobi_fails(&self, x: BasisElement, y: BasisElement, z: BasisElement) -> bool {
        let (ex, ey, ez) = (AlgebraElement::basis(x), AlgebraElement::basis(y), AlgebraElement::basis(z));
        let mut s = self.bracket(&ex, self.bracket_basis(y, z));
        s.add_scaled(&self.bracket(&ey, self.bracket_basis(z, x)), &Rational::one());
        s.add_scaled(&self.bracket(&ez, self.bracket_basis(x, y)), &Rational::one());
        !s.is_zero()
    }

    /// Checks the Jacobi identity over all basis triples.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let mut checked = 0;
        for &x in &self.basis {
            for &y in &self.basis {
                for &z in &self.basis {
                    checked += 1;
                    if self.jacobi_fails(x, y, z) {
                        return JacobiReport { checked, failure: Some((x, y, z)) };
                    }
                }
            }
        }
        JacobiReport { checked, failure: None }
    }

    /// Checks the Jacobi identity on `samples` random basis triples.
    pub fn verify_jacobi_sampled(&self, samples: usize, seed: u64) -> JacobiReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = self.basis.len();
        for checked in 1..=samples {
            let (x, y, z) = (self.basis[rng.gen_range(0..d)], self.basis[rng.gen_range(0..d)], self.basis[rng.gen_range(0..d)]);
            if self.jacobi_fails(x, y, z) {
                return JacobiReport { checked, failure: Some((x, y, z)) };
            }
        }
        JacobiReport { checked: samples, failure: None }
    }

    /// The bracket table laid out like a LaTeX array: header row, then one
    /// row per basis element `x` listing `[x, y]` for every column `y`.
    pub fn bracket_table_latex(&self) -> String {
        let mut out = String::new();
        out.push_str("\\begin{array}{cc|");
        out.push_str(&"c".repeat(self.basis.len()));
        out.push_str("}\n\\mathrm{roots}&[\\bullet, \\bullet]");
        for b in &self.basis {
            out.push_str(&format!("& {}", b.latex()));
        }
        out.push_str("\\\\\n");
        for &x in &self.basis {
            out.push_str(&format!("{}&{}", root_label(&self.weight(x)), x.latex()));
            for &y in &self.basis {
                out.push_str(&format!("& {}", self.bracket_basis(x, y).latex()));
            }
            out.push_str("\\\\\n");
        }
        out.push_str("\\end{array}\n");
        out
    }

    /// Plain-text bracket table with aligned columns.
    pub fn bracket_table_text(&self) -> String {
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec!["root".to_string(), "[x,y]".to_string()];
        header.extend(self.basis.iter().map(|b| b.latex()));
        rows.push(header);
        for &x in &self.basis {
            let mut row = vec![root_label(&self.weight(x)), x.latex()];
            row.extend(self.basis.iter().map(|&y| self.bracket_basis(x, y).latex()));
            rows.push(row);
        }
        let widths: Vec<usize> = (0..rows[0].len())
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for row in rows {
            let cells: Vec<String> = row.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
            out.push_str(cells.join(" ").trim_end());
            out.push('\n');
        }
        out
    }
}

fn root_label(coords: &[i64]) -> String {
    let parts: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `N_{α,β}` for every ordered pair of roots with `α+β` a root.
fn structure_constants(rs: &RootSystem) -> HashMap<(i32, i32), i64> {
    let p = rs.num_positive() as i32;
    let len = |k: i32| Rational::from_int(rs.length_sq(k));
    let add = |a: i32, b: i32| -> Option<i32> {
        let s = rs.root(a).add(&rs.root(b));
        rs.index_of(&s.coords)
    };

    let mut positive: HashMap<(i32, i32), i64> = HashMap::new();

    // General N for arbitrary signs, valid once the positive pairs summing to
    // lower heights are known.
    fn general(
        rs: &RootSystem,
        positive: &HashMap<(i32, i32), i64>,
        a: i32,
        b: i32,
    ) -> Rational {
        let s = rs.root(a).add(&rs.root(b));
        let Some(z) = rs.index_of(&s.coords) else {
            return Rational::zero();
        };
        let len = |k: i32| Rational::from_int(rs.length_sq(k));
        match (a > 0, b > 0) {
            (true, true) => Rational::from_int(*positive.get(&(a, b)).expect("lower-height constant")),
            (false, false) => -general(rs, positive, -a, -b),
            (false, true) => -general(rs, positive, b, a),
            (true, false) => {
                if z > 0 {
                    -(len(z) / len(a)) * general(rs, positive, -b, z)
                } else {
                    (len(z) / len(b)) * general(rs, positive, -z, a)
                }
            }
        }
    }

    for xi in 1..=p {
        let mut pairs: Vec<(i32, i32)> = Vec::new();
        for a in 1..xi {
            for b in (a + 1)..xi {
                if add(a, b) == Some(xi) {
                    pairs.push((a, b));
                }
            }
        }
        let Some(&(g, d)) = pairs.first() else {
            continue;
        };
        // extraspecial pair: +(p+1), p = length of the γ-string below δ
        let mut q = 0;
        let mut down = rs.root(d).sub(&rs.root(g));
        while rs.is_root(&down.coords) {
            q += 1;
            down = down.sub(&rs.root(g));
        }
        let ngd = q + 1;
        positive.insert((g, d), ngd);
        positive.insert((d, g), -ngd);
        for &(a, b) in &pairs[1..] {
            let mut acc = Rational::zero();
            if let Some(bg) = add(b, -g) {
                let t = general(rs, &positive, b, -g) * general(rs, &positive, a, -d) / len(bg);
                acc += t;
            }
            if let Some(ag) = add(a, -g) {
                let t = general(rs, &positive, -g, a) * general(rs, &positive, b, -d) / len(ag);
                acc += t;
            }
            let n = acc * len(xi) / Rational::from_int(ngd);
            let n = n.to_i64().expect("integral structure constant");
            positive.insert((a, b), n);
            positive.insert((b, a), -n);
        }
    }

    let mut all = HashMap::new();
    for a in (-p..=p).filter(|k| *k != 0) {
        for b in (-p..=p).filter(|k| *k != 0 && *k != -a) {
            if add(a, b).is_some() {
                let n = general(rs, &positive, a, b).to_i64().expect("integral structure constant");
                all.insert((a, b), n);
            }
        }
    }
    all
}
