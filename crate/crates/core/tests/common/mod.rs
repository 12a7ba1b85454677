//! Strategies shared by the property tests.
#![allow(dead_code)]

use logspencer::poly::{ExpVec, Poly, Rational};
use logspencer::weyl::WeylOp;
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, prop_oneof![Just(1i64), Just(1), Just(2), Just(3)]).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

pub fn exponent(n: usize, max_degree: u32) -> impl Strategy<Value = ExpVec> {
    prop::collection::vec(0..=max_degree, n)
        .prop_filter("bounded total degree", move |e| e.iter().sum::<u32>() <= max_degree)
        .prop_map(ExpVec::new)
}

pub fn poly(n: usize, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec((exponent(n, max_degree), rational()), 0..=max_terms)
        .prop_map(move |terms| Poly::from_terms(n, terms))
}

pub fn nonzero_poly(n: usize, max_degree: u32, max_terms: usize) -> impl Strategy<Value = Poly> {
    poly(n, max_degree, max_terms.max(1)).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn weyl(n: usize, max_order: u32, max_terms: usize) -> impl Strategy<Value = WeylOp> {
    prop::collection::vec((exponent(n, max_order), poly(n, 2, 2)), 0..=max_terms).prop_map(move |terms| {
        terms.into_iter().fold(WeylOp::zero(n), |acc, (beta, p)| &acc + &WeylOp::monomial(p, beta))
    })
}

pub fn point(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(rational(), n)
}
