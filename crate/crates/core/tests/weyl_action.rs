//! Weyl algebras as differential operators on K[x₁,…,x_k]. A product in the
//! algebra must act as the composition of the operators.

mod common;

use std::collections::BTreeMap;

use pbwres::text::parse_polynomial;
use pbwres::{Algebra, Polynomial, Rational};
use proptest::prelude::*;

use common::*;

/// Commutative polynomial in the x variables.
type XPoly = BTreeMap<Vec<u32>, Rational>;

fn add_term(p: &mut XPoly, m: Vec<u32>, c: Rational) {
    let e = p.entry(m).or_insert_with(Rational::zero);
    *e += &c;
    if e.is_zero() {
        p.retain(|_, c| !c.is_zero());
    }
}

/// `∂_i p`.
fn derive(p: &XPoly, i: usize) -> XPoly {
    let mut out = XPoly::new();
    for (m, c) in p {
        if m[i] > 0 {
            let mut d = m.clone();
            d[i] -= 1;
            add_term(&mut out, d, c * &Rational::from_integer(m[i] as i64));
        }
    }
    out
}

/// Action of a PBW-ordered operator `Σ c x^a ∂^b` (x's before d's).
fn act(op: &Polynomial, k: usize, p: &XPoly) -> XPoly {
    let mut out = XPoly::new();
    for (m, c) in op.iter() {
        let e = m.exponents();
        let mut q = p.clone();
        for i in 0..k {
            for _ in 0..e[k + i] {
                q = derive(&q, i);
            }
        }
        for (qm, qc) in q {
            let shifted: Vec<u32> = qm.iter().zip(&e[..k]).map(|(a, b)| a + b).collect();
            add_term(&mut out, shifted, &qc * c);
        }
    }
    out
}

fn test_monomials(k: usize, max_deg: u32) -> Vec<XPoly> {
    let mut out = Vec::new();
    let mut stack = vec![vec![]];
    while let Some(m) = stack.pop() {
        if m.len() == k {
            if m.iter().sum::<u32>() <= max_deg {
                out.push(XPoly::from([(m, Rational::one())]));
            }
            continue;
        }
        for e in 0..=max_deg {
            let mut n: Vec<u32> = m.clone();
            n.push(e);
            stack.push(n);
        }
    }
    out
}

fn check_composition(
    alg: &Algebra,
    k: usize,
    f: &Polynomial,
    g: &Polynomial,
    max_deg: u32,
) -> bool {
    let fg = alg.mul(f, g);
    test_monomials(k, max_deg)
        .iter()
        .all(|p| act(&fg, k, p) == act(f, k, &act(g, k, p)))
}

#[test]
fn second_derivative_past_x() {
    let a = algebra(WEYL1);
    let lhs = a.mul(&parse_polynomial(a.spec(), "d^2").unwrap(), &a.var(0));
    assert_eq!(lhs, parse_polynomial(a.spec(), "x*d^2 + 2*d").unwrap());
    assert!(check_composition(
        &a,
        1,
        &parse_polynomial(a.spec(), "d^2").unwrap(),
        &a.var(0),
        4
    ));
}

fn raw() -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    prop::collection::vec((prop::collection::vec(0u32..=2, 4), -3i64..=3), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weyl1_products_compose(f in raw(), g in raw()) {
        let a = algebra(WEYL1);
        let mk = |r: &Vec<(Vec<u32>, i64)>| a.poly(r.iter().map(|(e, c)| {
            (pbwres::Monomial::new(e[..2].to_vec()), Rational::from_integer(*c))
        }));
        prop_assert!(check_composition(&a, 1, &mk(&f), &mk(&g), 6));
    }

    #[test]
    fn weyl2_products_compose(f in raw(), g in raw()) {
        let a = algebra(WEYL2);
        let mk = |r: &Vec<(Vec<u32>, i64)>| a.poly(r.iter().map(|(e, c)| {
            (pbwres::Monomial::new(e.clone()), Rational::from_integer(*c))
        }));
        prop_assert!(check_composition(&a, 2, &mk(&f), &mk(&g), 5));
    }
}
