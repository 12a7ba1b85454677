mod common;

use common::{nonzero_poly, poly, weyl};
use logspencer::parse::parse_operator;
use logspencer::poly::{apply_derivation, Poly, PolyRing, Rational};
use logspencer::weyl::WeylOp;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn associativity(p in weyl(3, 2, 3), q in weyl(3, 2, 3), r in weyl(3, 2, 3)) {
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    // The action on polynomials is faithful, so it pins down the product.
    #[test]
    fn product_acts_by_composition(p in weyl(2, 2, 3), q in weyl(2, 2, 3), f in poly(2, 4, 4)) {
        prop_assert_eq!(p.mul(&q).apply(&f), p.apply(&q.apply(&f)));
    }

    #[test]
    fn order_and_symbol_are_multiplicative(p in weyl(3, 3, 3), q in weyl(3, 3, 3)) {
        let pq = p.mul(&q);
        match (p.order(), q.order()) {
            (Some(a), Some(b)) => {
                prop_assert_eq!(pq.order(), Some(a + b));
                prop_assert_eq!(pq.principal_symbol().unwrap(), &p.principal_symbol().unwrap() * &q.principal_symbol().unwrap());
            }
            _ => prop_assert!(pq.is_zero()),
        }
    }

    #[test]
    fn commutators_lower_the_order(p in weyl(2, 2, 3), q in weyl(2, 2, 3)) {
        let c = p.commutator(&q);
        if let (Some(a), Some(b)) = (p.order(), q.order()) {
            prop_assert!(c.order().map_or(true, |k| k + 1 <= a + b));
        }
        prop_assert_eq!(c, -&q.commutator(&p));
    }

    #[test]
    fn first_order_action_on_fractions(
        a in prop::collection::vec(poly(2, 2, 2), 2),
        c in poly(2, 1, 1),
        g in poly(2, 2, 3),
        h in nonzero_poly(2, 2, 2),
        m in 0u32..3,
    ) {
        prop_assume!(!h.is_constant());
        // (δ + c)(g/h^m) = (δ(g)·h − m·g·δ(h) + c·g·h) / h^(m+1)
        let op = &WeylOp::from_derivation(&a) + &WeylOp::from_poly(c.clone());
        let mq = Rational::from_integer(m.into());
        let num = &(&(&apply_derivation(&a, &g) * &h) - &(&g * &apply_derivation(&a, &h)).scale(&mq)) + &(&(&c * &g) * &h);
        let (got, e) = op.apply_to_fraction(&g, m, &h).unwrap();
        // got / h^e == num / h^(m+1)
        let lhs = if e <= m + 1 { &got * &h.pow(m + 1 - e) } else { got.clone() };
        let rhs = if e > m + 1 { &num * &h.pow(e - m - 1) } else { num };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_round_trip(p in weyl(3, 3, 4)) {
        let ring = PolyRing::standard(3);
        prop_assert_eq!(parse_operator(&p.display(&ring), ring.names()).unwrap(), p);
    }
}

#[test]
fn canonical_commutation_relations() {
    let n = 3;
    for i in 0..n {
        for j in 0..n {
            let d = WeylOp::partial(n, i);
            let x = WeylOp::from_poly(Poly::var(n, j));
            let expected = if i == j { WeylOp::from_poly(Poly::one(n)) } else { WeylOp::zero(n) };
            assert_eq!(d.commutator(&x), expected);
            assert!(d.commutator(&WeylOp::partial(n, j)).is_zero());
        }
    }
}

#[test]
fn euler_operator_on_a_pole() {
    // (x∂x + y∂y)(1/(x² − y³)) has a numerator (−2x² + 3y³) over h².
    let ring = PolyRing::standard(2);
    let op = parse_operator("x*dx + y*dy", ring.names()).unwrap();
    let h = ring.parse("x^2 - y^3").unwrap();
    let (num, e) = op.apply_to_fraction(&Poly::one(2), 1, &h).unwrap();
    assert_eq!(e, 2);
    assert_eq!(num, ring.parse("-2*x^2 + 3*y^3").unwrap());
    // the weighted Euler field kills the pole down to a multiple of 1/h
    let weighted = parse_operator("3*x*dx + 2*y*dy", ring.names()).unwrap();
    let (num, e) = weighted.apply_to_fraction(&Poly::one(2), 1, &h).unwrap();
    assert_eq!((num, e), (Poly::from_int(2, -6), 1));
}
