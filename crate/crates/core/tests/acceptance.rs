//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `-- --nocapture --test-threads=1` to see them in order.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lieweyl::embedding::{embed, Embedder};
use lieweyl::levimodule::{parse_lambda, weyl_dimension};
use lieweyl::liealgebra::{BasisElement, ChevalleyAlgebra};
use lieweyl::matrix::WeylMatrixOperator;
use lieweyl::parabolic::ParabolicDatum;
use lieweyl::rootsystem::{RootSystem, SimpleType};
use lieweyl::verify::{action_oracle, default_generators, lie_closure, omega_contract, specialization_check, ClosureOptions};
use lieweyl::weyl::WeylOperator;
use lieweyl::Rational;

const G2_OPERATORS: &str = include_str!("data/g2_operators.tsv");
const G2_TABLE: &str = include_str!("data/g2_bracket_table.tsv");

fn report(n: u32, name: &str, failures: &[String], detail: &str) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n} ({name}): {status} {detail}");
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

fn ty(s: &str) -> SimpleType {
    s.parse().unwrap()
}

fn crossed(s: &str) -> Vec<bool> {
    s.split(',').map(|t| t == "1").collect()
}

fn algebra(t: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::new(RootSystem::build(ty(t)))
}

/// Nonempty crossed sets for a rank, in binary counting order.
fn parabolics(rank: usize) -> Vec<Vec<bool>> {
    (1u32..(1 << rank)).map(|m| (0..rank).map(|i| m >> i & 1 == 1).collect()).collect()
}

/// Reads `-3x_{1}\partial_{4}^{2}+x_{5}` into a Weyl operator in `n` variables.
fn parse_operator(s: &str, n: usize) -> WeylOperator {
    let mut out = WeylOperator::zero();
    let mut chunks = Vec::new();
    let mut cur = String::new();
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && !cur.is_empty() {
            chunks.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    chunks.push(cur);
    for chunk in chunks {
        let (sign, body) = match chunk.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, chunk.trim_start_matches('+')),
        };
        let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
        let coeff: i64 = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let mut rest = &body[digits.len()..];
        let (mut x, mut d) = (vec![0u32; n], vec![0u32; n]);
        while !rest.is_empty() {
            let is_x = rest.starts_with("x_{");
            rest = rest.strip_prefix("x_{").or_else(|| rest.strip_prefix("\\partial_{")).expect("x or partial");
            let close = rest.find('}').unwrap();
            let var: usize = rest[..close].parse().unwrap();
            rest = &rest[close + 1..];
            let mut power = 1;
            if let Some(r) = rest.strip_prefix("^{") {
                let close = r.find('}').unwrap();
                power = r[..close].parse().unwrap();
                rest = &r[close + 1..];
            }
            if is_x {
                x[var - 1] += power;
            } else {
                d[var - 1] += power;
            }
        }
        out.add_assign(&WeylOperator::term(Rational::from_int(sign * coeff), &x, &d));
    }
    out
}

#[test]
fn criterion_1_g2_golden_operators() {
    let start = Instant::now();
    let res = embed(ty("G2"), &[true, false], &parse_lambda("0,0").unwrap()).unwrap();
    let mut failures = Vec::new();
    for line in G2_OPERATORS.lines() {
        let (g, body) = line.split_once('\t').unwrap();
        let g = BasisElement::parse(g).unwrap();
        let expected = WeylMatrixOperator::scalar(&parse_operator(body, 5), 1);
        let got = res.image(g).unwrap();
        if *got != expected {
            failures.push(format!("{g}: got {}, expected {}", got.latex(), expected.latex()));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 1.0 {
        failures.push(format!("took {elapsed:?}"));
    }
    report(1, "G2 golden operators", &failures, &format!("4 operators exact in {elapsed:?}"));
}

#[test]
fn criterion_2_g2_bracket_table() {
    let alg = algebra("G2");
    let mut lines = G2_TABLE.lines();
    let cols: Vec<BasisElement> =
        lines.next().unwrap().split('\t').skip(2).map(|s| BasisElement::parse(s).unwrap()).collect();
    let mut failures = Vec::new();
    let mut cells = 0;
    for line in lines {
        let row: Vec<&str> = line.split('\t').collect();
        let x = BasisElement::parse(row[1]).unwrap();
        for (y, expected) in cols.iter().zip(&row[2..]) {
            cells += 1;
            let got = alg.bracket_basis(x, *y).latex();
            if got != *expected {
                failures.push(format!("[{x}, {y}] = {got}, expected {expected}"));
            }
        }
    }
    if cells != 196 {
        failures.push(format!("table has {cells} cells"));
    }
    report(2, "G2 bracket table", &failures, &format!("{cells} cells exact"));
}

#[test]
fn criterion_3_variable_counts() {
    let cases = [
        ("G2", "1,0", 5),
        ("G2", "0,1", 5),
        ("F4", "1,0,0,0", 15),
        ("F4", "0,0,0,1", 15),
        ("E6", "1,0,0,0,0,0", 16),
        ("E7", "0,0,0,0,0,0,1", 27),
        ("E8", "0,0,0,0,0,0,0,1", 57),
    ];
    let mut failures = Vec::new();
    for (t, c, n) in cases {
        let alg = algebra(t);
        let got = ParabolicDatum::new(&alg, &crossed(c)).unwrap().nilradical_dimension();
        if got != n {
            failures.push(format!("{t} ({c}): n = {got}, expected {n}"));
        }
    }
    report(3, "variable counts", &failures, "G2 5, F4 15, E6 16, E7 27, E8 57");
}

fn closure_case(t: &str, c: &str) -> Result<String, String> {
    let start = Instant::now();
    let rank = ty(t).rank;
    let res = embed(ty(t), &crossed(c), &vec![Rational::zero(); rank]).unwrap();
    let ops: Vec<WeylMatrixOperator> = res.simple_images().into_iter().cloned().collect();
    let dim = ty(t).dimension();
    let r = lie_closure(&ops, dim, ClosureOptions::default());
    let line = format!("{t} ({c}): span {} of {dim}, depth {}, {:?}", r.basis_size, r.bracket_depth, start.elapsed());
    if r.pass {
        Ok(line)
    } else {
        Err(format!("{line} {:?}", r.aborted))
    }
}

#[test]
fn criterion_4_closure_dimensions() {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (t, c) in [("G2", "1,0"), ("G2", "0,1"), ("F4", "1,0,0,0"), ("F4", "0,0,0,1"), ("E6", "1,0,0,0,0,0")] {
        match closure_case(t, c) {
            Ok(d) => details.push(d),
            Err(e) => failures.push(e),
        }
    }
    report(4, "closure dimensions", &failures, &details.join("; "));
}

#[test]
#[ignore = "long-running; about half a minute in release mode"]
fn criterion_4_closure_dimensions_e7_e8() {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for (t, c) in [("E7", "0,0,0,0,0,0,1"), ("E8", "0,0,0,0,0,0,0,1")] {
        match closure_case(t, c) {
            Ok(d) => details.push(d),
            Err(e) => failures.push(e),
        }
    }
    report(4, "closure dimensions E7/E8", &failures, &details.join("; "));
}

/// A nonzero weight whose Levi module has dimension at most 6: the first
/// fundamental weight of an uncrossed node, or of the first node for the
/// Borel subalgebra.
fn small_levi_weight(alg: &ChevalleyAlgebra, parabolic: &ParabolicDatum, cr: &[bool]) -> Vec<Rational> {
    let node = cr.iter().position(|c| !c).unwrap_or(0);
    let mut lambda = vec![Rational::zero(); cr.len()];
    lambda[node] = Rational::one();
    let dim = weyl_dimension(alg, parabolic, &lambda);
    assert!(dim <= Rational::from_int(6), "weight {lambda:?} gives dimension {dim}");
    lambda
}

#[test]
fn criterion_5_action_equivalence() {
    let mut failures = Vec::new();
    let mut configs = 0;
    let mut checked = 0;
    for t in ["A1", "A2", "B2", "G2"] {
        let alg = algebra(t);
        for cr in parabolics(ty(t).rank) {
            let p = ParabolicDatum::new(&alg, &cr).unwrap();
            for lambda in [vec![Rational::zero(); cr.len()], small_levi_weight(&alg, &p, &cr)] {
                let emb = Embedder::new(ty(t), &cr, &lambda).unwrap();
                let res = emb.embed().unwrap();
                let rep = action_oracle(&emb, &res, 4, None, 0);
                configs += 1;
                checked += rep.checked;
                if let Some(f) = rep.failure {
                    failures.push(format!("{t} {cr:?} {lambda:?}: {f:?}"));
                }
            }
        }
    }
    report(5, "action equivalence", &failures, &format!("{configs} configurations, {checked} (generator, monomial, vector) checks"));
}

#[test]
fn criterion_6_property_suites() {
    let mut failures = Vec::new();
    let mut notes = Vec::new();

    let exhaustive = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];
    let mut triples = 0;
    for t in exhaustive {
        let r = algebra(t).verify_jacobi();
        triples += r.checked;
        if let Some(f) = r.failure {
            failures.push(format!("Jacobi {t}: {f:?}"));
        }
    }
    for t in ["E6", "E7", "E8"] {
        let r = algebra(t).verify_jacobi_sampled(10_000, 1);
        triples += r.checked;
        if let Some(f) = r.failure {
            failures.push(format!("Jacobi {t}: {f:?}"));
        }
    }
    notes.push(format!("Jacobi {triples} triples"));

    let builds = [("G2", "1,0"), ("G2", "0,1"), ("B3", "0,1,0"), ("C3", "1,0,1"), ("F4", "0,0,0,1"), ("E6", "1,0,0,0,0,0")];
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut pairs = 0;
    for (t, c) in builds {
        let rank = ty(t).rank;
        let emb = Embedder::new(ty(t), &crossed(c), &vec![Rational::zero(); rank]).unwrap();
        let res = emb.embed().unwrap();
        if let Some(f) = omega_contract(&emb, &res, 200, 6, 3).unwrap() {
            failures.push(format!("omega {t}: {f}"));
        }
        // every (p, b) vanishes where a falling factorial of b does
        for img in &res.images {
            for (_, data) in emb.split_terms(&img.reduced).unwrap() {
                for (p, b) in data {
                    pairs += 1;
                    if !p.is_compatible(&b) {
                        failures.push(format!("{t} {}: incompatible shift {b:?}", img.generator));
                    }
                    for (k, &bk) in b.iter().enumerate() {
                        for j in 0..bk.max(0) {
                            for _ in 0..5 {
                                let mut a: Vec<i64> = (0..res.n).map(|_| rng.gen_range(-4..8)).collect();
                                a[k] = j;
                                if !p.evaluate(&a).is_zero() {
                                    failures.push(format!("{t} {}: p({a:?}) != 0 for b = {b:?}", img.generator));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    notes.push(format!("omega contract 200 samples x {} builds, {pairs} (p, b) pairs", builds.len()));

    let mut specs = 0;
    for t in ["A1", "A2", "G2"] {
        let alg = algebra(t);
        for cr in parabolics(ty(t).rank) {
            let p = ParabolicDatum::new(&alg, &cr).unwrap();
            match specialization_check(&alg, &p, &default_generators(&alg), 3).unwrap() {
                Ok(k) => specs += k,
                Err(f) => failures.push(format!("specialization {t} {cr:?}: {f:?}")),
            }
        }
    }
    notes.push(format!("{specs} adjoint specializations"));
    report(6, "property suites", &failures, &notes.join(", "));
}

#[test]
fn criterion_7_op_count_benchmark() {
    let reference = [
        ("E6", "0,0,0,0,0,1", 487_021u64),
        ("F4", "1,0,0,0", 374_377),
        ("F4", "0,0,0,1", 469_892),
        ("G2", "1,0", 22_185),
        ("G2", "0,1", 14_072),
    ];
    let mut rows = Vec::new();
    for (t, c, published) in reference {
        let rank = ty(t).rank;
        let res = embed(ty(t), &crossed(c), &vec![Rational::zero(); rank]).unwrap();
        rows.push(format!("{t} ({c}) n={} ops={} reference={published}", res.n, res.total_op_count()));
    }
    report(7, "op-count benchmark (informational)", &[], &rows.join("; "));
}
