//! Exact multivariate polynomials over the rationals.
//!
//! A [`Poly`] is a sparse map from dense exponent vectors to nonzero
//! [`Rational`] coefficients. The map is keyed by [`ExpVec`], whose derived
//! `Ord` is lexicographic with the first variable most significant; monomial
//! orders used for Gröbner computations live in [`MonomialOrder`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q` (optionally signed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &ExpVec) -> Option<ExpVec> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(ExpVec(out))
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables that occur with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Monomial orders on exponent vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Elimination order: degrevlex on variables `0..first`, ties broken by
    /// degrevlex on the remaining variables.
    Block { first: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => degrevlex(&a.0, &b.0),
            MonomialOrder::Block { first } => {
                let k = (*first).min(a.0.len());
                degrevlex(&a.0[..k], &b.0[..k]).then_with(|| degrevlex(&a.0[k..], &b.0[k..]))
            }
        }
    }
}

/// Polynomial in a fixed number of variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<ExpVec, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Poly::monomial(ExpVec::zero(nvars), c)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        Poly::constant(nvars, int(c))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Poly::monomial(ExpVec::unit(nvars, i), Rational::one())
    }

    pub fn monomial(exp: ExpVec, c: Rational) -> Self {
        let nvars = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    /// Builds a polynomial from (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, Rational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length does not match ambient ring");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.is_zero())
    }

    /// The constant value, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&ExpVec::zero(self.nvars)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e.get(i)).max().unwrap_or(0)
    }

    /// Common degree in the given variables, if every term has the same one.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| vars.iter().map(|&v| e.get(v)).sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add_term(&mut self, e: ExpVec, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms sorted in descending order for `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&ExpVec, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&ExpVec, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, e: &ExpVec, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(f, a)| (f.mul(e), a * c)).collect(),
        }
    }

    /// Makes the leading coefficient (for `order`) equal to one.
    pub fn monic(&self, order: &MonomialOrder) -> Poly {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(i);
            if k == 0 {
                continue;
            }
            let mut f = e.clone();
            f.0[i] -= 1;
            out.terms.insert(f, c * int(k as i64));
        }
        out
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert_eq!(self.nvars, d.nvars);
        let (lead_d, lc_d) = d.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((e, c)) = rem.terms.iter().next_back() {
            let shift = e.div(lead_d)?;
            let q = c / lc_d;
            rem = &rem - &d.mul_monomial(&shift, &q);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    /// Re-embeds into a ring with `nvars` variables; old variable `i` becomes
    /// new variable `map[i]`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars);
        let terms = self.terms.iter().map(|(e, c)| {
            let mut f = vec![0; nvars];
            for (i, &k) in e.as_slice().iter().enumerate() {
                f[map[i]] += k;
            }
            (ExpVec(f), c.clone())
        });
        Poly::from_terms(nvars, terms)
    }

    /// Restricts to the variables listed in `keep`, which must contain every
    /// variable that occurs.
    pub fn restrict(&self, keep: &[usize]) -> Option<Poly> {
        let mut out = Poly::zero(keep.len());
        for (e, c) in &self.terms {
            let f: Vec<u32> = keep.iter().map(|&v| e.get(v)).collect();
            if f.iter().sum::<u32>() != e.degree() {
                return None;
            }
            out.add_term(ExpVec(f), c.clone());
        }
        Some(out)
    }

    fn check_ambient(&self, other: &Poly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::AmbientMismatch { left: self.nvars, right: other.nvars })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ambient(other)?;
        Ok(self + other)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ambient(other)?;
        Ok(self - other)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ambient(other)?;
        Ok(self * other)
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "ambient mismatch");
        let mut out = Poly::zero(self.nvars);
        for (e, a) in &self.terms {
            for (f, b) in &rhs.terms {
                out.add_term(e.mul(f), a * b);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Element of a free module `ℚ[x]^r`.
pub type PolyVec = Vec<Poly>;

/// Matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// Determinant by fraction-free Bareiss elimination.
pub fn det(m: &PolyMatrix) -> Result<Poly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("determinant of a non-square {}-row matrix", n)));
    }
    if n == 0 {
        return Err(Error::Shape("determinant of an empty matrix".into()));
    }
    let nvars = m[0][0].nvars();
    let mut a: PolyMatrix = m.clone();
    let mut sign = false;
    let mut prev = Poly::one(nvars);
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(Poly::zero(nvars)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign { -d } else { d })
}

/// Variable names for a polynomial ring; handles parsing and canonical printing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    names: Vec<String>,
}

impl PolyRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        PolyRing { names: names.into_iter().map(Into::into).collect() }
    }

    /// `x,y,z` for up to three variables, `x1..xn` beyond.
    pub fn standard(n: usize) -> Self {
        if n <= 3 {
            PolyRing::new(["x", "y", "z"].iter().take(n).copied())
        } else {
            PolyRing::new((1..=n).map(|i| format!("x{i}")))
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The ring extended by one symbol variable per coordinate
    /// (`x, y, z, xi1, xi2, xi3`).
    pub fn with_symbols(&self) -> PolyRing {
        let mut names = self.names.clone();
        names.extend((1..=self.names.len()).map(|i| format!("xi{i}")));
        PolyRing { names }
    }

    pub fn parse(&self, src: &str) -> Result<Poly> {
        Ok(crate::parse::parse_poly(src, &self.names)?)
    }

    pub fn format(&self, p: &Poly) -> String {
        self.format_with(p, &MonomialOrder::DegRevLex)
    }

    /// Canonical text: terms in descending order of `order`.
    pub fn format_with(&self, p: &Poly, order: &MonomialOrder) -> String {
        assert_eq!(p.nvars(), self.nvars(), "ambient mismatch");
        let terms = p.sorted_terms(order);
        format_terms(terms.into_iter().map(|(e, c)| (c.clone(), self.monomial_string(e))))
    }

    pub fn monomial_string(&self, e: &ExpVec) -> String {
        let factors: Vec<String> = e
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &k)| k > 0)
            .map(|(i, &k)| if k == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], k) })
            .collect();
        factors.join("*")
    }
}

/// Joins `(coefficient, monomial)` pairs; an empty monomial string is the unit.
pub(crate) fn format_terms(terms: impl IntoIterator<Item = (Rational, String)>) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_empty() {
            out.push_str(&format_rational(&a));
        } else if a.is_one() {
            out.push_str(&m);
        } else {
            out.push_str(&format_rational(&a));
            out.push('*');
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = PolyRing::standard(self.nvars);
        write!(f, "{}", ring.format(self))
    }
}

/// `Σ coeffs[i]·∂ᵢ(g)`: applies a vector field to a polynomial.
pub fn apply_derivation(coeffs: &[Poly], g: &Poly) -> Poly {
    let mut out = Poly::zero(g.nvars());
    for (i, a) in coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let d = g.partial(i);
        if !d.is_zero() {
            out += &(a * &d);
        }
    }
    out
}

/// Squarefreeness over ℚ: `gcd(h, ∂₁h, …, ∂ₙh)` is constant.
pub fn squarefree_check(h: &Poly) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::InvalidDivisor("zero polynomial".into()));
    }
    if h.is_constant() {
        return Ok(true);
    }
    let mut g = h.clone();
    for i in 0..h.nvars() {
        let d = h.partial(i);
        if d.is_zero() {
            continue;
        }
        g = crate::groebner::gcd(&g, &d);
        if g.is_constant() {
            return Ok(true);
        }
    }
    Ok(g.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> PolyRing {
        PolyRing::new(["x", "y", "z"])
    }

    #[test]
    fn difference_of_squares() {
        let r = PolyRing::new(["x", "y"]);
        let p = &r.parse("x+y").unwrap() * &r.parse("x-y").unwrap();
        assert_eq!(p, r.parse("x^2-y^2").unwrap());
        assert_eq!(&p + &Poly::zero(2), p);
    }

    #[test]
    fn expands_the_surface_equation() {
        let r = ring3();
        let h = r.parse("(x*z+y)*(x^4+y^5+x*y^4)").unwrap();
        let expected = r.parse("x^2*y^4*z+x*y^5*z+x*y^5+y^6+x^5*z+x^4*y").unwrap();
        assert_eq!(h, expected);
    }

    #[test]
    fn partial_derivatives() {
        let r = ring3();
        assert_eq!(r.parse("x^2*y").unwrap().partial(0), r.parse("2*x*y").unwrap());
        assert!(r.parse("7/3").unwrap().partial(0).is_zero());
        let h = r.parse("(x*z+y)*(x^4+y^5+x*y^4)").unwrap();
        assert_eq!(h.partial(2), r.parse("x^2*y^4+x*y^5+x^5").unwrap());
    }

    #[test]
    fn determinants() {
        let r = ring3();
        let p = |s: &str| r.parse(s).unwrap();
        let diag = vec![
            vec![p("x"), p("0"), p("0")],
            vec![p("0"), p("y"), p("0")],
            vec![p("0"), p("0"), p("z")],
        ];
        assert_eq!(det(&diag).unwrap(), p("x*y*z"));
        let r2 = PolyRing::new(["x", "y"]);
        let q = |s: &str| r2.parse(s).unwrap();
        let cusp = vec![vec![q("3*x"), q("2*y")], vec![q("-3*y^2"), q("-2*x")]];
        assert_eq!(det(&cusp).unwrap(), q("-6*x^2+6*y^3"));
        // a zero pivot forces a row swap
        let swap = vec![vec![q("0"), q("1")], vec![q("1"), q("0")]];
        assert_eq!(det(&swap).unwrap(), q("-1"));
        let bad = vec![vec![q("x"), q("y")]];
        assert!(matches!(det(&bad), Err(Error::Shape(_))));
    }

    #[test]
    fn squarefree() {
        let r = PolyRing::new(["x", "y"]);
        assert!(!squarefree_check(&r.parse("x^2*y").unwrap()).unwrap());
        assert!(squarefree_check(&r.parse("x^2-y^3").unwrap()).unwrap());
        assert!(squarefree_check(&r.parse("x*y").unwrap()).unwrap());
        assert!(!squarefree_check(&r.parse("(x-y)^2*(x+y)").unwrap()).unwrap());
        assert!(matches!(squarefree_check(&Poly::zero(2)), Err(Error::InvalidDivisor(_))));
        let h = ring3().parse("(x*z+y)*(x^4+y^5+x*y^4)").unwrap();
        assert!(squarefree_check(&h).unwrap());
    }

    #[test]
    fn canonical_output_uses_descending_order() {
        let r = ring3();
        let p = r.parse("1 + x - 3/4*y*z + x^2").unwrap();
        assert_eq!(r.format(&p), "x^2 - 3/4*y*z + x + 1");
        assert_eq!(r.format_with(&p, &MonomialOrder::Lex), "x^2 + x - 3/4*y*z + 1");
        assert_eq!(r.format(&Poly::zero(3)), "0");
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Poly::var(2, 0);
        let b = Poly::var(3, 0);
        assert_eq!(a.checked_add(&b), Err(Error::AmbientMismatch { left: 2, right: 3 }));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::new(["x", "y"]);
        let f = r.parse("x^3 - y^3").unwrap();
        assert_eq!(f.div_exact(&r.parse("x-y").unwrap()).unwrap(), r.parse("x^2+x*y+y^2").unwrap());
        assert!(f.div_exact(&r.parse("x+y").unwrap()).is_none());
    }

    #[test]
    fn orders() {
        let a = ExpVec::new(vec![1, 0, 2]);
        let b = ExpVec::new(vec![0, 3, 0]);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        // degrevlex: x*z < y^2 since z is the cheapest variable
        let xz = ExpVec::new(vec![1, 0, 1]);
        let yy = ExpVec::new(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.cmp(&xz, &yy), Ordering::Less);
        let blk = MonomialOrder::Block { first: 1 };
        assert_eq!(blk.cmp(&ExpVec::new(vec![1, 0, 0]), &ExpVec::new(vec![0, 5, 5])), Ordering::Greater);
    }
}
