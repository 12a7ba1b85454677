//! Seeded randomized property suites over a frame: PBW rewriting, the Weyl
//! algebra, logarithmic derivations and the appendix identities.
//!
//! Each property draws from its own generator derived from the suite seed, so
//! results are reproducible and independent of which properties run.

use std::fmt;
use std::time::{Duration, Instant};

use crate::appendix::{self, DeltaElem, Relation};
use crate::envelope::{LieRinehart, RewriteStrategy, UElement};
use crate::logderiv::{self, LogFrame};
use crate::poly::{apply_derivation, Poly, PolyVec};
use crate::sample::Sampler;
use crate::weyl::WeylOp;

#[derive(Clone, Debug)]
pub struct PropertyOutcome {
    pub name: &'static str,
    pub samples: usize,
    pub failures: usize,
    /// Index of the first failing sample.
    pub first_failure: Option<usize>,
    pub elapsed: Duration,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub seed: u64,
    pub outcomes: Vec<PropertyOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(PropertyOutcome::passed)
    }

    pub fn elapsed(&self) -> Duration {
        self.outcomes.iter().map(|o| o.elapsed).sum()
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.outcomes.extend(other.outcomes);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.outcomes {
            let status = if o.passed() { "pass" } else { "FAIL" };
            write!(f, "{status} {} ({} samples", o.name, o.samples)?;
            if let Some(i) = o.first_failure {
                write!(f, ", {} failures, first at sample {i}", o.failures)?;
            }
            writeln!(f, ")")?;
        }
        Ok(())
    }
}

/// Sampler shape: variables and maximal coefficient degree.
#[derive(Clone, Copy)]
struct Shape(usize, u32);

fn run<F>(report: &mut SuiteReport, name: &'static str, samples: usize, shape: Shape, mut prop: F)
where
    F: FnMut(&mut Sampler) -> bool,
{
    let index = report.outcomes.len() as u64;
    let seed = report.seed ^ (index + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut s = Sampler::new(seed, shape.0).with_degree(shape.1).with_terms(2);
    let start = Instant::now();
    let mut failures = 0;
    let mut first_failure = None;
    for i in 0..samples {
        if !prop(&mut s) {
            failures += 1;
            first_failure.get_or_insert(i);
        }
    }
    report.outcomes.push(PropertyOutcome { name, samples, failures, first_failure, elapsed: start.elapsed() });
}

/// PBW confluence, associativity, and the morphism to the Weyl algebra.
pub fn run_envelope_suite(lr: &LieRinehart, samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport { seed, outcomes: Vec::new() };
    let (n, t) = (lr.nvars(), lr.rank());
    run(&mut report, "PBW confluence", samples, Shape(n, 3), |s| {
        let (a, b) = (s.u_element(t, 2, 2), s.u_element(t, 2, 2));
        lr.mul_with(&a, &b, RewriteStrategy::Leftmost) == lr.mul_with(&a, &b, RewriteStrategy::Rightmost)
    });
    run(&mut report, "u_mul associativity", samples, Shape(n, 3), |s| {
        let (a, b, c) = (s.u_element(t, 1, 2), s.u_element(t, 1, 2), s.u_element(t, 1, 2));
        lr.mul(&lr.mul(&a, &b), &c) == lr.mul(&a, &lr.mul(&b, &c))
    });
    run(&mut report, "to_weyl morphism", samples, Shape(n, 3), |s| {
        let (a, b) = (s.u_element(t, 2, 2), s.u_element(t, 2, 2));
        lr.to_weyl(&lr.mul(&a, &b)) == lr.to_weyl(&a).mul(&lr.to_weyl(&b))
    });
    let row_symbols: Vec<Poly> = (0..t).map(|i| lr.to_weyl(&lr.generator(i)).symbol_of_order(1)).collect();
    run(&mut report, "to_weyl symbols", samples, Shape(n, 3), |s| {
        let gamma = s.exponent(t, 3);
        let w = lr.to_weyl(&UElement::monomial(Poly::one(n), gamma.clone()));
        let expected =
            gamma.as_slice().iter().zip(&row_symbols).fold(Poly::one(2 * n), |acc, (&k, sym)| &acc * &sym.pow(k));
        w.symbol_of_order(gamma.degree()) == expected
    });
    report
}

/// Weyl algebra associativity, filtration and action.
pub fn run_weyl_suite(n: usize, samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport { seed, outcomes: Vec::new() };
    run(&mut report, "weyl_mul associativity", samples, Shape(n, 3), |s| {
        let (p, q, r) = (s.weyl_op(2, 2), s.weyl_op(2, 2), s.weyl_op(2, 2));
        p.mul(&q).mul(&r) == p.mul(&q.mul(&r))
    });
    run(&mut report, "symbol multiplicativity", samples, Shape(n, 3), |s| {
        let (p, q) = (s.weyl_op(3, 2), s.weyl_op(3, 2));
        let pq = p.mul(&q);
        match (p.order(), q.order()) {
            (Some(a), Some(b)) => {
                pq.order() == Some(a + b) && pq.symbol_of_order(a + b) == &p.symbol_of_order(a) * &q.symbol_of_order(b)
            }
            _ => pq.is_zero(),
        }
    });
    run(&mut report, "action compatibility", samples, Shape(n, 3), |s| {
        let (p, q, f) = (s.weyl_op(2, 2), s.weyl_op(2, 2), s.poly());
        p.mul(&q).apply(&f) == p.apply(&q.apply(&f))
    });
    run(&mut report, "Leibniz rule", samples, Shape(n, 3), |s| {
        let i = s.below(n);
        let (f, g) = (s.poly(), s.poly());
        let d = WeylOp::partial(n, i);
        d.apply(&(&f * &g)) == &(&d.apply(&f) * &g) + &(&f * &d.apply(&g))
    });
    report
}

fn random_log_field(s: &mut Sampler, frame: &LogFrame) -> PolyVec {
    let n = frame.divisor().nvars();
    let coeffs = s.field(frame.n());
    let mut out = vec![Poly::zero(n); n];
    for (a, row) in coeffs.iter().zip(frame.rows()) {
        for (o, c) in out.iter_mut().zip(&row.coeffs) {
            *o += &(a * c);
        }
    }
    out
}

/// Logarithmic derivations: bracket closure, α-additivity, Jacobi and the
/// right module law on top forms.
pub fn run_derivation_suite(frame: &LogFrame, samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport { seed, outcomes: Vec::new() };
    let h = frame.divisor().h();
    let n = h.nvars();
    run(&mut report, "bracket closure", samples, Shape(n, 2), |s| {
        let (a, b) = (random_log_field(s, frame), random_log_field(s, frame));
        let c = logderiv::bracket_coeffs(&a, &b);
        logderiv::is_logarithmic(&c, h).is_some() && frame.express(&c).is_ok()
    });
    run(&mut report, "alpha additivity", samples, Shape(n, 2), |s| {
        let (a, b) = (random_log_field(s, frame), random_log_field(s, frame));
        let (Some(aa), Some(ab)) = (logderiv::is_logarithmic(&a, h), logderiv::is_logarithmic(&b, h)) else {
            return false;
        };
        let expected = &apply_derivation(&a, &ab) - &apply_derivation(&b, &aa);
        logderiv::is_logarithmic(&logderiv::bracket_coeffs(&a, &b), h) == Some(expected)
    });
    run(&mut report, "Jacobi identity", samples, Shape(n, 2), |s| {
        let (a, b, c) = (random_log_field(s, frame), random_log_field(s, frame), random_log_field(s, frame));
        let br = logderiv::bracket_coeffs;
        let (x, y, z) = (br(&br(&a, &b), &c), br(&br(&b, &c), &a), br(&br(&c, &a), &b));
        x.iter().zip(&y).zip(&z).all(|((p, q), r)| (&(p + q) + r).is_zero())
    });
    run(&mut report, "right module law on top forms", samples, Shape(n, 2), |s| {
        let (a, b) = (random_log_field(s, frame), random_log_field(s, frame));
        let g = s.poly();
        let m = s.below(3) as u32;
        let act = |c: &[Poly], g: &Poly| logderiv::lie_derivative_topform(c, g, m, h);
        let lhs = (|| Ok::<_, crate::Error>(&act(&b, &act(&a, &g)?)? - &act(&a, &act(&b, &g)?)?))();
        let rhs = act(&logderiv::bracket_coeffs(&a, &b), &g);
        matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
    });
    report
}

fn delta(s: &mut Sampler, t: usize, support: &[usize]) -> DeltaElem {
    let a = if s.coin(0.5) { s.poly() } else { Poly::zero(s.nvars) };
    DeltaElem { a, lambda: s.field_on(t, support) }
}

fn word(s: &mut Sampler, t: usize, len: usize) -> Vec<DeltaElem> {
    let all: Vec<usize> = (0..t).collect();
    (0..len).map(|_| delta(s, t, &all)).collect()
}

/// The appendix identities on the regular modules `M = U`, `N = U₀`.
pub fn run_appendix_suite(lr: &LieRinehart, samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport { seed, outcomes: Vec::new() };
    let (n, t) = (lr.nvars(), lr.rank());
    let sub = lr.sub_basis().to_vec();
        run(&mut report, "commutation identity (a t_E)", samples, Shape(n, 3), |s| {
        let r = s.below(4);
        let w = word(s, t, r);
        let e = s.subset(r);
        let a = s.poly();
        appendix::commutation_first(lr, &a, &w, &e)
    });
    run(&mut report, "commutation identity (λ_E a)", samples, Shape(n, 3), |s| {
        let r = s.below(4);
        let w = word(s, t, r);
        let e = s.subset(r);
        let a = s.poly();
        appendix::commutation_second(lr, &a, &w, &e)
    });
    run(&mut report, "absorbing the last entry", samples, Shape(n, 3), |s| {
        let r = 1 + s.below(3);
        let mut w = word(s, t, r - 1);
        w.push(delta(s, t, &sub));
        let m = s.u_element(t, 1, 2);
        let nn = s.u_element_on(t, &sub, 1, 2);
        appendix::absorb_last(lr, &m, &w, &nn).unwrap_or(false)
    });
    run(&mut report, "peeling the first field", samples, Shape(n, 3), |s| {
        let r = 1 + s.below(3);
        let lambda = s.field(t);
        let rest = word(s, t, r - 1);
        let m = s.u_element(t, 1, 2);
        let nn = s.u_element_on(t, &sub, 1, 2);
        appendix::peel_first(lr, &m, &lambda, &rest, &nn)
    });
    run(&mut report, "closed form of ν", samples, Shape(n, 3), |s| {
        let r = s.below(5);
        let w = word(s, t, r);
        let m = s.u_element(t, 1, 1);
        let nn = s.u_element_on(t, &sub, 1, 2);
        appendix::nu(lr, &m, &w, &nn) == appendix::nu_closed_form(lr, &m, &w, &nn)
    });
    run(&mut report, "relation invariance", samples, Shape(n, 3), |s| {
        let (pl, sl) = (s.below(2), s.below(2));
        let prefix = word(s, t, pl);
        let suffix = word(s, t, sl);
        let rel = match s.below(5) {
            0 => Relation::FieldScalar { lambda: s.field(t), a: s.poly() },
            1 => Relation::FieldField { lambda: s.field(t), mu: s.field(t) },
            2 => Relation::ScalarScalar { a: s.poly(), b: s.poly() },
            3 => Relation::ScalarField { a: s.poly(), lambda: s.field(t) },
            _ => Relation::Constant { c: Poly::constant(n, s.coefficient()) },
        };
        let m = s.u_element(t, 1, 1);
        let nn = s.u_element_on(t, &sub, 1, 1);
        appendix::respects_relation(lr, &m, &prefix, &rel, &suffix, &nn)
    });
    run(&mut report, "right linearity of α", samples, Shape(n, 3), |s| {
        let m = s.u_element(t, 1, 2);
        let nn = s.u_element_on(t, &sub, 1, 2);
        let lambda = s.field_on(t, &sub);
        appendix::alpha_is_linear(lr, &m, &nn, &lambda)
    });
    report
}

/// Every suite, on the frame's enveloping algebra with the given sub-basis.
pub fn run_all(frame: &LogFrame, lr: &LieRinehart, samples: usize, seed: u64) -> SuiteReport {
    let mut report = run_envelope_suite(lr, samples, seed);
    report.extend(run_weyl_suite(lr.nvars(), samples, seed));
    report.extend(run_derivation_suite(frame, samples, seed));
    report.extend(run_appendix_suite(lr, samples, seed));
    report
}
