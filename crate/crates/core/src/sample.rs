//! Seeded random generators for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::envelope::UElement;
use crate::poly::{ExpVec, Poly, PolyVec, Rational};
use crate::weyl::WeylOp;

/// Bounded random polynomials, operators and enveloping-algebra elements.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
    pub nvars: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    pub coeff_bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, nvars: usize) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), nvars, max_degree: 2, max_terms: 3, coeff_bound: 5 }
    }

    pub fn with_degree(mut self, d: u32) -> Self {
        self.max_degree = d;
        self
    }

    pub fn with_terms(mut self, k: usize) -> Self {
        self.max_terms = k;
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn exponent(&mut self, len: usize, max_degree: u32) -> ExpVec {
        let mut e = vec![0u32; len];
        if len == 0 {
            return ExpVec::new(e);
        }
        let k = self.rng.gen_range(0..=max_degree);
        for _ in 0..k {
            let i = self.rng.gen_range(0..len);
            e[i] += 1;
        }
        ExpVec::new(e)
    }

    pub fn coefficient(&mut self) -> Rational {
        let b = self.coeff_bound;
        let mut num = 0;
        while num == 0 {
            num = self.rng.gen_range(-b..=b);
        }
        let den = if self.rng.gen_bool(0.25) { 2 } else { 1 };
        Rational::new(num.into(), den.into())
    }

    /// Possibly zero.
    pub fn poly(&mut self) -> Poly {
        let k = self.rng.gen_range(0..=self.max_terms);
        self.poly_with_terms(k)
    }

    pub fn nonzero_poly(&mut self) -> Poly {
        loop {
            let k = self.rng.gen_range(1..=self.max_terms.max(1));
            let p = self.poly_with_terms(k);
            if !p.is_zero() {
                return p;
            }
        }
    }

    fn poly_with_terms(&mut self, k: usize) -> Poly {
        let mut p = Poly::zero(self.nvars);
        for _ in 0..k {
            let e = self.exponent(self.nvars, self.max_degree);
            let c = self.coefficient();
            p.add_term(e, c);
        }
        p
    }

    /// Coefficient vector of length `t`, with some entries zero.
    pub fn field(&mut self, t: usize) -> PolyVec {
        (0..t).map(|_| if self.coin(0.4) { Poly::zero(self.nvars) } else { self.nonzero_poly() }).collect()
    }

    /// Field supported on the listed indices.
    pub fn field_on(&mut self, t: usize, support: &[usize]) -> PolyVec {
        (0..t)
            .map(|k| {
                if support.contains(&k) && self.coin(0.7) {
                    self.nonzero_poly()
                } else {
                    Poly::zero(self.nvars)
                }
            })
            .collect()
    }

    pub fn weyl_op(&mut self, max_order: u32, terms: usize) -> WeylOp {
        let n = self.nvars;
        let mut op = WeylOp::zero(n);
        for _ in 0..terms {
            let beta = self.exponent(n, max_order);
            let p = self.nonzero_poly();
            op = &op + &WeylOp::monomial(p, beta);
        }
        op
    }

    pub fn u_element(&mut self, t: usize, max_order: u32, terms: usize) -> UElement {
        self.u_element_on(t, &(0..t).collect::<Vec<_>>(), max_order, terms)
    }

    /// Element whose PBW monomials only use the listed basis indices.
    pub fn u_element_on(&mut self, t: usize, support: &[usize], max_order: u32, terms: usize) -> UElement {
        let mut u = UElement::zero(self.nvars, t);
        for _ in 0..terms {
            let mut gamma = vec![0u32; t];
            if !support.is_empty() {
                let k = self.rng.gen_range(0..=max_order);
                for _ in 0..k {
                    let i = *support.choose(&mut self.rng).unwrap();
                    gamma[i] += 1;
                }
            }
            let p = self.nonzero_poly();
            u.add_term(ExpVec::new(gamma), p);
        }
        u
    }

    /// Random subset of `0..r`, as a sorted list.
    pub fn subset(&mut self, r: usize) -> Vec<usize> {
        (0..r).filter(|_| self.rng.gen_bool(0.5)).collect()
    }
}
