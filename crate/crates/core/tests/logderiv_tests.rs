mod common;

use common::poly;
use logspencer::catalog;
use logspencer::logderiv::{
    bracket_coeffs, derivation_generators, find_frame, is_logarithmic, koszul_test, lie_derivative_topform, saito_test,
    Divisor, Freeness, LogDerivation, LogFrame, SaitoMode,
};
use logspencer::poly::{Poly, PolyRing, PolyVec, Rational};
use logspencer::weyl::WeylOp;
use logspencer::Error;
use proptest::prelude::*;

fn combine(frame: &LogFrame, lambda: &[Poly]) -> PolyVec {
    let n = frame.n();
    let mut out = vec![Poly::zero(n); n];
    for (l, row) in lambda.iter().zip(frame.rows()) {
        for (o, a) in out.iter_mut().zip(&row.coeffs) {
            *o = &*o + &(l * a);
        }
    }
    out
}

/// `−Σ ∂ᵢ ∘ aᵢ` as a Weyl operator, the right action on top forms written out
/// by hand.
fn top_form_oracle(a: &[Poly]) -> WeylOp {
    let n = a.len();
    let mut op = WeylOp::zero(n);
    for (i, ai) in a.iter().enumerate() {
        op = &op - &WeylOp::partial(n, i).mul(&WeylOp::from_poly(ai.clone()));
    }
    op
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn combinations_of_frame_rows_are_logarithmic(lambda in prop::collection::vec(poly(2, 2, 3), 2)) {
        let frame = catalog::cusp();
        let v = combine(&frame, &lambda);
        prop_assert!(is_logarithmic(&v, frame.divisor().h()).is_some());
        // the frame is a basis, so the coordinates come back unchanged
        prop_assert_eq!(frame.express(&v).unwrap(), lambda);
    }

    #[test]
    fn coordinates_in_the_normal_crossings_frame(lambda in prop::collection::vec(poly(3, 2, 2), 3)) {
        let frame = catalog::normal_crossings(3);
        let v = combine(&frame, &lambda);
        prop_assert_eq!(frame.express(&v).unwrap(), lambda);
    }

    #[test]
    fn top_form_law_without_poles(a in prop::collection::vec(poly(3, 2, 3), 3), g in poly(3, 2, 3)) {
        let h = Poly::one(3);
        prop_assert_eq!(lie_derivative_topform(&a, &g, 0, &h).unwrap(), top_form_oracle(&a).apply(&g));
    }

    #[test]
    fn top_form_law_with_poles(lambda in prop::collection::vec(poly(2, 1, 2), 2), g in poly(2, 2, 3), m in 1u32..3) {
        let frame = catalog::cusp();
        let a = combine(&frame, &lambda);
        let h = frame.divisor().h();
        let ours = lie_derivative_topform(&a, &g, m, h).unwrap();
        let (num, k) = top_form_oracle(&a).apply_to_fraction(&g, m, h).unwrap();
        // num / h^k == ours / h^m, with k ≤ m because δ is logarithmic
        prop_assert!(k <= m);
        prop_assert_eq!(&num * &h.pow(m - k), ours);
    }
}

#[test]
fn brackets_close_in_the_surface_frame() {
    let frame = catalog::non_spencer();
    let n = frame.n();
    for i in 0..n {
        for j in 0..n {
            let b = bracket_coeffs(&frame.rows()[i].coeffs, &frame.rows()[j].coeffs);
            assert!(is_logarithmic(&b, frame.divisor().h()).is_some());
            let c = frame.structure_constants(i, j);
            let recombined = combine(&frame, c);
            assert_eq!(recombined, b, "[δ{}, δ{}]", i + 1, j + 1);
        }
    }
}

#[test]
fn saito_constants_of_the_catalog() {
    let c = |frame: &LogFrame| frame.certificate().constant().unwrap();
    assert_eq!(c(&catalog::normal_crossings(3)), Rational::from_integer(1.into()));
    assert_eq!(c(&catalog::cusp()), Rational::from_integer((-6).into()));
    assert_eq!(c(&catalog::non_spencer()), Rational::from_integer(1.into()));
    assert_eq!(c(&catalog::smooth(2)), Rational::from_integer(1.into()));
}

#[test]
fn generators_yield_a_frame() {
    for frame in [catalog::cusp(), catalog::normal_crossings(3), catalog::smooth(3)] {
        let d = frame.divisor();
        let gens = derivation_generators(d).unwrap();
        assert!(gens.iter().all(|g| is_logarithmic(&g.coeffs, d.h()).is_some()));
        let found = find_frame(d, &gens, 200, SaitoMode::Global).unwrap().expect("free divisor");
        // both frames generate the same module
        for row in found.rows() {
            frame.express(&row.coeffs).unwrap();
        }
        for row in frame.rows() {
            found.express(&row.coeffs).unwrap();
        }
    }
}

#[test]
fn surface_generators_lie_in_the_frame_span() {
    let frame = catalog::non_spencer();
    for g in derivation_generators(frame.divisor()).unwrap() {
        frame.express(&g.coeffs).unwrap();
    }
}

#[test]
fn koszul_flags() {
    assert!(koszul_test(&catalog::normal_crossings(3)));
    assert!(koszul_test(&catalog::cusp()));
    assert!(koszul_test(&catalog::smooth(2)));
    assert!(!koszul_test(&catalog::non_spencer()));
}

#[test]
fn non_free_arrangement_has_no_frame() {
    // four generic planes through the origin
    let ring = PolyRing::standard(3);
    let d = Divisor::new(ring.parse("x*y*z*(x + y + z)").unwrap()).unwrap();
    let gens = derivation_generators(&d).unwrap();
    assert!(gens.len() > 3);
    assert!(find_frame(&d, &gens, 1000, SaitoMode::Global).unwrap().is_none());
}

#[test]
fn saito_rejects_bad_rows() {
    let ring = PolyRing::standard(2);
    let d = Divisor::new(ring.parse("x*y").unwrap()).unwrap();
    let p = |s: &str| ring.parse(s).unwrap();
    let not_log = vec![vec![p("1"), p("0")], vec![p("0"), p("y")]];
    assert!(matches!(saito_test(&not_log, &d, SaitoMode::Global).unwrap(), Freeness::Undetermined(_)));
    let too_big = vec![vec![p("x^2"), p("0")], vec![p("0"), p("y")]];
    assert!(matches!(saito_test(&too_big, &d, SaitoMode::Global).unwrap(), Freeness::Undetermined(_)));
    // (1 + x)·xy is only a unit multiple of h locally
    let local = vec![vec![p("x + x^2"), p("0")], vec![p("0"), p("y")]];
    assert!(matches!(saito_test(&local, &d, SaitoMode::Global).unwrap(), Freeness::Undetermined(_)));
    assert!(matches!(saito_test(&local, &d, SaitoMode::Local).unwrap(), Freeness::Certified(_)));
    assert!(matches!(saito_test(&not_log[..1], &d, SaitoMode::Global), Err(Error::Shape(_))));
}

#[test]
fn divisor_and_derivation_validation() {
    let ring = PolyRing::standard(2);
    assert!(Divisor::new(ring.parse("x^2*y").unwrap()).is_err());
    assert!(Divisor::new(Poly::zero(2)).is_err());
    let d = Divisor::new(ring.parse("x^2 - y^3").unwrap()).unwrap();
    assert!(LogDerivation::new(vec![Poly::one(2), Poly::zero(2)], &d).is_err());
    let euler = LogDerivation::new(vec![ring.parse("3*x").unwrap(), ring.parse("2*y").unwrap()], &d).unwrap();
    assert_eq!(euler.apply(d.h()), d.h().scale(&Rational::from_integer(6.into())));
}
