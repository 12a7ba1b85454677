//! Differential operators with polynomial coefficients, kept in normal order
//! (coefficients to the left of derivatives).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{format_terms, ExpVec, Poly, PolyRing, Rational};

/// `Σ_β p_β(x) ∂^β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylOp {
    n: usize,
    terms: BTreeMap<ExpVec, Poly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc = acc * Rational::from_integer((n - i).into()) / Rational::from_integer((i + 1).into());
    }
    acc
}

/// All exponent vectors `κ ≤ β` componentwise.
fn sub_exponents(beta: &ExpVec) -> Vec<ExpVec> {
    let mut out = vec![Vec::new()];
    for &b in beta.as_slice() {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=b).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    out.into_iter().map(ExpVec::new).collect()
}

fn diff_by(p: &Poly, kappa: &ExpVec) -> Poly {
    let mut q = p.clone();
    for (i, &k) in kappa.as_slice().iter().enumerate() {
        for _ in 0..k {
            q = q.partial(i);
        }
    }
    q
}

impl WeylOp {
    pub fn zero(n: usize) -> Self {
        WeylOp { n, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: Poly) -> Self {
        let mut op = WeylOp::zero(p.nvars());
        op.add_term(ExpVec::zero(p.nvars()), p);
        op
    }

    /// `∂ᵢ` in `n` variables.
    pub fn partial(n: usize, i: usize) -> Self {
        WeylOp::monomial(Poly::one(n), ExpVec::unit(n, i))
    }

    /// `p·∂^β`.
    pub fn monomial(p: Poly, beta: ExpVec) -> Self {
        let mut op = WeylOp::zero(p.nvars());
        op.add_term(beta, p);
        op
    }

    /// The vector field `Σ aᵢ∂ᵢ` as an operator.
    pub fn from_derivation(coeffs: &[Poly]) -> Self {
        let n = coeffs.len();
        let mut op = WeylOp::zero(n);
        for (i, a) in coeffs.iter().enumerate() {
            op.add_term(ExpVec::unit(n, i), a.clone());
        }
        op
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, beta: &ExpVec) -> Poly {
        self.terms.get(beta).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    fn add_term(&mut self, beta: ExpVec, p: Poly) {
        assert_eq!(p.nvars(), self.n, "ambient mismatch");
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&beta) {
            Some(q) => {
                *q += &p;
                if q.is_zero() {
                    self.terms.remove(&beta);
                }
            }
            None => {
                self.terms.insert(beta, p);
            }
        }
    }

    /// Largest total ∂-degree; `None` stands for −∞ on the zero operator.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    /// The multiplication operator, if the order is at most zero.
    pub fn as_poly(&self) -> Option<Poly> {
        match self.order() {
            None => Some(Poly::zero(self.n)),
            Some(0) => Some(self.coeff(&ExpVec::zero(self.n))),
            Some(_) => None,
        }
    }

    /// Part of order exactly `k`, as a polynomial in `x₁..xₙ, ξ₁..ξₙ`.
    pub fn symbol_of_order(&self, k: u32) -> Poly {
        let n = self.n;
        let lift: Vec<usize> = (0..n).collect();
        let mut out = Poly::zero(2 * n);
        for (beta, p) in self.terms.iter().filter(|(b, _)| b.degree() == k) {
            let mut e = vec![0; 2 * n];
            e[n..].copy_from_slice(beta.as_slice());
            out += &(&p.embed(2 * n, &lift) * &Poly::monomial(ExpVec::new(e), Rational::one()));
        }
        out
    }

    /// Top-order part with `∂ᵢ ↦ ξᵢ`, in `2n` variables.
    pub fn principal_symbol(&self) -> Result<Poly> {
        let k = self.order().ok_or_else(|| Error::InvalidArgument("symbol of the zero operator".into()))?;
        Ok(self.symbol_of_order(k))
    }

    pub fn scale(&self, c: &Rational) -> WeylOp {
        if c.is_zero() {
            return WeylOp::zero(self.n);
        }
        WeylOp { n: self.n, terms: self.terms.iter().map(|(b, p)| (b.clone(), p.scale(c))).collect() }
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly(&self, q: &Poly) -> WeylOp {
        let mut out = WeylOp::zero(self.n);
        for (b, p) in &self.terms {
            out.add_term(b.clone(), q * p);
        }
        out
    }

    /// Normal-ordered product, by the Leibniz rule
    /// `∂^β q = Σ_{κ≤β} C(β,κ) ∂^κ(q) ∂^(β−κ)`.
    pub fn mul(&self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = WeylOp::zero(self.n);
        for (beta, p) in &self.terms {
            let kappas = sub_exponents(beta);
            for (gamma, q) in &rhs.terms {
                for kappa in &kappas {
                    let dq = diff_by(q, kappa);
                    if dq.is_zero() {
                        continue;
                    }
                    let c: Rational = beta
                        .as_slice()
                        .iter()
                        .zip(kappa.as_slice())
                        .map(|(&b, &k)| binomial(b, k))
                        .product();
                    let rest = beta.div(kappa).unwrap().mul(gamma);
                    out.add_term(rest, (p * &dq).scale(&c));
                }
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &WeylOp) -> WeylOp {
        &self.mul(rhs) - &rhs.mul(self)
    }

    /// Action on polynomials.
    pub fn apply(&self, g: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for (beta, p) in &self.terms {
            out += &(p * &diff_by(g, beta));
        }
        out
    }

    /// `P(g / h^m)` as `(N, k)` with value `N / h^k`, reduced so that `h ∤ N`
    /// when `k > 0`; the zero result is `(0, 0)`.
    pub fn apply_to_fraction(&self, g: &Poly, m: u32, h: &Poly) -> Result<(Poly, u32)> {
        if h.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        let start = reduce_fraction(g.clone(), m, h);
        let mut parts: Vec<(Poly, u32)> = Vec::new();
        for (beta, p) in &self.terms {
            let mut f = start.clone();
            for (i, &k) in beta.as_slice().iter().enumerate() {
                for _ in 0..k {
                    f = diff_fraction(&f, i, h);
                }
            }
            parts.push((p * &f.0, f.1));
        }
        let top = parts.iter().map(|(_, k)| *k).max().unwrap_or(0);
        let mut num = Poly::zero(self.n);
        for (p, k) in parts {
            num += &(&p * &h.pow(top - k));
        }
        Ok(reduce_fraction(num, top, h))
    }

    pub fn display(&self, ring: &PolyRing) -> String {
        let mut keys: Vec<&ExpVec> = self.terms.keys().collect();
        keys.sort_by(|a, b| crate::poly::MonomialOrder::DegRevLex.cmp(b, a));
        let mut pieces: Vec<(Rational, String)> = Vec::new();
        for beta in keys {
            let p = &self.terms[beta];
            let d = diff_string(ring, beta);
            if p.len() == 1 {
                let (e, c) = p.terms().next().unwrap();
                let m = ring.monomial_string(e);
                let body = match (m.as_str(), d.as_str()) {
                    ("", d) => d.to_string(),
                    (m, "") => m.to_string(),
                    (m, d) => format!("{m}*{d}"),
                };
                pieces.push((c.clone(), body));
            } else if d.is_empty() {
                pieces.push((Rational::one(), format!("({})", ring.format(p))));
            } else {
                pieces.push((Rational::one(), format!("({})*{d}", ring.format(p))));
            }
        }
        format_terms(pieces)
    }
}

fn diff_string(ring: &PolyRing, beta: &ExpVec) -> String {
    let mut parts = Vec::new();
    for (i, &k) in beta.as_slice().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(format!("d{}", ring.names()[i])),
            k => parts.push(format!("d{}^{k}", ring.names()[i])),
        }
    }
    parts.join("*")
}

fn reduce_fraction(mut num: Poly, mut k: u32, h: &Poly) -> (Poly, u32) {
    if num.is_zero() {
        return (num, 0);
    }
    while k > 0 {
        match num.div_exact(h) {
            Some(q) => {
                num = q;
                k -= 1;
            }
            None => break,
        }
    }
    (num, k)
}

/// `∂ᵢ(N/h^k) = (∂ᵢN·h − k·N·∂ᵢh) / h^(k+1)`.
fn diff_fraction(f: &(Poly, u32), i: usize, h: &Poly) -> (Poly, u32) {
    let (num, k) = f;
    if *k == 0 {
        return (num.partial(i), 0);
    }
    let kq = Rational::from_integer((*k).into());
    let top = &(&num.partial(i) * h) - &(num * &h.partial(i)).scale(&kq);
    reduce_fraction(top, k + 1, h)
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display(&PolyRing::standard(self.n)))
    }
}

impl Add<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut out = self.clone();
        for (b, p) in &rhs.terms {
            out.add_term(b.clone(), p.clone());
        }
        out
    }
}

impl Sub<&WeylOp> for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &-rhs
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp { n: self.n, terms: self.terms.iter().map(|(b, p)| (b.clone(), -p)).collect() }
    }
}
