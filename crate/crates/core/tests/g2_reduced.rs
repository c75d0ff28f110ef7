//! Reduced products `g·u` for G_2 with the short simple root crossed,
//! compared term by term with the published expansions.

use lieweyl::liealgebra::{BasisElement, ChevalleyAlgebra};
use lieweyl::parabolic::ParabolicDatum;
use lieweyl::polynomial::{ExponentPolynomial, PolyMonomial};
use lieweyl::rootsystem::RootSystem;
use lieweyl::uea::{ReduceOptions, Reducer, UEAElement, UEAMonomial};
use lieweyl::Rational;

/// Reads `{...}` starting at `s[0] == '{'`; returns contents and the rest.
fn braced(s: &str) -> (&str, &str) {
    assert!(s.starts_with('{'), "expected brace in {s}");
    let mut depth = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' => {
                depth -= 1;
                if depth == 0 {
                    return (&s[1..i], &s[i + 1..]);
                }
            }
            _ => {}
        }
    }
    panic!("unbalanced braces in {s}")
}

/// Splits at top-level `+`/`-` signs, keeping the sign with each piece.
fn split_signed(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > start => {
                out.push(&s[start..i]);
                start = i;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_poly(s: &str) -> ExponentPolynomial {
    let mut total = ExponentPolynomial::zero();
    for piece in split_signed(s) {
        let (neg, mut rest) = match piece.as_bytes()[0] {
            b'-' => (true, &piece[1..]),
            b'+' => (false, &piece[1..]),
            _ => (false, piece),
        };
        let digits = rest.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(rest.len());
        let mut coeff: Rational = if digits == 0 { Rational::one() } else { rest[..digits].parse().unwrap() };
        if neg {
            coeff = -coeff;
        }
        rest = &rest[digits..];
        let mut term = ExponentPolynomial::constant(coeff);
        while let Some(r) = rest.strip_prefix("a_") {
            let (idx, r) = braced(r);
            let var: usize = idx.parse().unwrap();
            let (exp, r) = match r.strip_prefix('^') {
                Some(r2) => {
                    let (e, r3) = braced(r2);
                    (e.parse::<u32>().unwrap(), r3)
                }
                None => (1, r),
            };
            let mut m = PolyMonomial::new();
            m.push(((var - 1) as u16, exp));
            term = term.mul(&ExponentPolynomial::from_terms([(m, Rational::one())]));
            rest = r;
        }
        assert!(rest.is_empty(), "unparsed polynomial text {rest:?}");
        total = total.add(&term);
    }
    total
}

fn parse_word(mut s: &str) -> UEAMonomial {
    let mut factors = Vec::new();
    while !s.is_empty() {
        let head = &s[..2];
        let (idx, r) = braced(&s[2..]);
        let g = BasisElement::parse(&format!("{head}{{{idx}}}")).unwrap();
        let (exp, r) = match r.strip_prefix('^') {
            Some(r2) => {
                let (e, r3) = braced(r2);
                (parse_poly(e), r3)
            }
            None => (ExponentPolynomial::one(), r),
        };
        factors.push((g, exp));
        s = r;
    }
    UEAMonomial::new(factors)
}

fn parse_element(s: &str) -> UEAElement {
    let mut e = UEAElement::zero();
    for piece in split_signed(s) {
        let (neg, rest) = match piece.as_bytes()[0] {
            b'-' => (true, &piece[1..]),
            b'+' => (false, &piece[1..]),
            _ => (false, piece),
        };
        let (coeff, word) = if let Some(r) = rest.strip_prefix('(') {
            let close = r.find(')').unwrap();
            (parse_poly(&r[..close]), &r[close + 1..])
        } else {
            let w = rest.find(['g', 'h']).unwrap_or(rest.len());
            let c = if w == 0 { ExponentPolynomial::one() } else { parse_poly(&rest[..w]) };
            (c, &rest[w..])
        };
        let coeff = if neg { coeff.neg() } else { coeff };
        e.add_term(parse_word(word), coeff);
    }
    e
}

fn setup() -> (ChevalleyAlgebra, ParabolicDatum) {
    let alg = ChevalleyAlgebra::new(RootSystem::build("G2".parse().unwrap()));
    let p = ParabolicDatum::new(&alg, &[true, false]).unwrap();
    (alg, p)
}

#[test]
fn parser_roundtrips_own_output() {
    let e = parse_element("(-3a_{4}^{2}+3a_{4})g_{-6}^{a_{1}+1}g_{-3}^{a_{4}-2}-2a_{4}g_{-4}^{a_{3}+1}h_{1}+g_{2}");
    assert_eq!(e.len(), 3);
    assert_eq!(parse_element(&e.latex()), e);
}

#[test]
fn reduced_products_match_published_expansions() {
    let (alg, p) = setup();
    let order = p.reduction_order(&alg);
    let u = UEAElement::monomial(UEAElement::generic_word(p.generators()));
    let golden = include_str!("data/g2_reduced.tsv");
    let mut reducer = Reducer::new(&alg);
    let mut seen = 0;
    for line in golden.lines().filter(|l| !l.trim().is_empty()) {
        let (name, body) = line.split_once('\t').unwrap();
        let g = BasisElement::parse(name).unwrap();
        let expected = parse_element(body);
        let (got, _) = reducer.reduce(&u.left_multiply(g), &order, ReduceOptions::default()).unwrap();
        assert!(got.is_reduced(&order));
        assert_eq!(got, expected, "{name}:\n got      {}\n expected {}", got.latex(), expected.latex());
        seen += 1;
    }
    assert_eq!(seen, 4);
}
