//! Enveloping algebra `U(L)` of a Lie–Rinehart algebra `L` that is free on a
//! basis `e₁, …, e_t` over `A = ℚ[x₁..xₙ]`.
//!
//! Elements are kept in PBW normal form `Σ f_γ e^γ` with coefficients on the
//! left and basis monomials in increasing index order. Products are normalized
//! with the rewrites `e_j e_i → e_i e_j + [e_j, e_i]` (`j > i`) and
//! `e_i g → g e_i + e_i(g)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Mutex;


use crate::error::{Error, Result};
use crate::groebner::Lifter;
use crate::logderiv::{bracket_coeffs, LogFrame};
use crate::poly::{apply_derivation, format_terms, ExpVec, Poly, PolyRing, PolyVec, Rational};
use crate::weyl::WeylOp;

/// `Σ f_γ e^γ` in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UElement {
    n: usize,
    t: usize,
    terms: BTreeMap<ExpVec, Poly>,
}

impl UElement {
    pub fn zero(n: usize, t: usize) -> Self {
        UElement { n, t, terms: BTreeMap::new() }
    }

    pub fn from_poly(p: Poly, t: usize) -> Self {
        UElement::monomial(p, ExpVec::zero(t))
    }

    pub fn one(n: usize, t: usize) -> Self {
        UElement::from_poly(Poly::one(n), t)
    }

    /// The basis element `eᵢ`.
    pub fn generator(n: usize, t: usize, i: usize) -> Self {
        UElement::monomial(Poly::one(n), ExpVec::unit(t, i))
    }

    /// `p·e^γ`.
    pub fn monomial(p: Poly, gamma: ExpVec) -> Self {
        let mut u = UElement::zero(p.nvars(), gamma.len());
        u.add_term(gamma, p);
        u
    }

    /// `Σ λ_k e_k`.
    pub fn from_field(lambda: &[Poly]) -> Self {
        let t = lambda.len();
        let n = lambda.first().map(Poly::nvars).expect("nonempty field");
        let mut u = UElement::zero(n, t);
        for (k, c) in lambda.iter().enumerate() {
            u.add_term(ExpVec::unit(t, k), c.clone());
        }
        u
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, gamma: &ExpVec) -> Poly {
        self.terms.get(gamma).cloned().unwrap_or_else(|| Poly::zero(self.n))
    }

    /// Coefficient of `e⁰`; for elements of `U₀` this is the action on `1`.
    pub fn constant_part(&self) -> Poly {
        self.coeff(&ExpVec::zero(self.t))
    }

    /// PBW order, `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    pub fn add_term(&mut self, gamma: ExpVec, p: Poly) {
        assert_eq!(p.nvars(), self.n, "ambient mismatch");
        assert_eq!(gamma.len(), self.t, "basis size mismatch");
        if p.is_zero() {
            return;
        }
        match self.terms.get_mut(&gamma) {
            Some(q) => {
                *q += &p;
                if q.is_zero() {
                    self.terms.remove(&gamma);
                }
            }
            None => {
                self.terms.insert(gamma, p);
            }
        }
    }

    fn add_scaled(&mut self, other: &UElement, by: &Poly) {
        for (g, p) in &other.terms {
            self.add_term(g.clone(), by * p);
        }
    }

    pub fn scale(&self, c: &Rational) -> UElement {
        let mut out = UElement::zero(self.n, self.t);
        for (g, p) in &self.terms {
            out.add_term(g.clone(), p.scale(c));
        }
        out
    }

    /// Left multiplication by a polynomial.
    pub fn mul_poly(&self, q: &Poly) -> UElement {
        let mut out = UElement::zero(self.n, self.t);
        out.add_scaled(self, q);
        out
    }

    /// True when every monomial only involves the listed basis indices.
    pub fn supported_on(&self, indices: &[usize]) -> bool {
        self.terms.keys().all(|g| g.support().all(|i| indices.contains(&i)))
    }

    pub fn display(&self, ring: &PolyRing, basis: &[String]) -> String {
        let mut keys: Vec<&ExpVec> = self.terms.keys().collect();
        keys.sort_by(|a, b| crate::poly::MonomialOrder::DegRevLex.cmp(b, a));
        let mut pieces: Vec<(Rational, String)> = Vec::new();
        for gamma in keys {
            let p = &self.terms[gamma];
            let mut factors = Vec::new();
            for (i, &k) in gamma.as_slice().iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(basis[i].clone()),
                    k => factors.push(format!("{}^{k}", basis[i])),
                }
            }
            let e = factors.join("*");
            if p.len() == 1 {
                let (m, c) = p.terms().next().unwrap();
                let m = ring.monomial_string(m);
                let body = match (m.is_empty(), e.is_empty()) {
                    (true, _) => e,
                    (false, true) => m,
                    (false, false) => format!("{m}*{e}"),
                };
                pieces.push((c.clone(), body));
            } else if e.is_empty() {
                pieces.push((Rational::from_integer(1.into()), format!("({})", ring.format(p))));
            } else {
                pieces.push((Rational::from_integer(1.into()), format!("({})*{e}", ring.format(p))));
            }
        }
        format_terms(pieces)
    }
}

impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let basis: Vec<String> = (1..=self.t).map(|i| format!("e{i}")).collect();
        f.write_str(&self.display(&PolyRing::standard(self.n), &basis))
    }
}

impl Add<&UElement> for &UElement {
    type Output = UElement;
    fn add(self, rhs: &UElement) -> UElement {
        let mut out = self.clone();
        for (g, p) in &rhs.terms {
            out.add_term(g.clone(), p.clone());
        }
        out
    }
}

impl Sub<&UElement> for &UElement {
    type Output = UElement;
    fn sub(self, rhs: &UElement) -> UElement {
        self + &-rhs
    }
}

impl Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement { n: self.n, t: self.t, terms: self.terms.iter().map(|(g, p)| (g.clone(), -p)).collect() }
    }
}

/// Which out-of-order adjacent pair to rewrite first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum RewriteStrategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Anchor and structure constants of a free Lie–Rinehart algebra, with a
/// designated sub-basis spanning a Lie subalgebra `L₀`.
pub struct LieRinehart {
    n: usize,
    anchor: Vec<PolyVec>,
    /// `structure[i][j][k] = c_ij^k`, antisymmetric in `i, j`.
    structure: Vec<Vec<PolyVec>>,
    sub_basis: Vec<usize>,
    memo: Mutex<HashMap<(RewriteStrategy, Vec<usize>), UElement>>,
}

impl Clone for LieRinehart {
    fn clone(&self) -> Self {
        LieRinehart {
            n: self.n,
            anchor: self.anchor.clone(),
            structure: self.structure.clone(),
            sub_basis: self.sub_basis.clone(),
            memo: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for LieRinehart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LieRinehart")
            .field("n", &self.n)
            .field("anchor", &self.anchor)
            .field("structure", &self.structure)
            .field("sub_basis", &self.sub_basis)
            .finish()
    }
}

impl LieRinehart {
    /// Validates the data: anchors are compatible with the brackets, the
    /// Jacobi identity holds, and the sub-basis is closed under brackets.
    /// `upper` lists `(i, j, c_ij)` for `i < j`; missing pairs are zero.
    pub fn new(anchor: Vec<PolyVec>, upper: &[(usize, usize, PolyVec)], sub_basis: Vec<usize>) -> Result<Self> {
        let t = anchor.len();
        let n = anchor.first().map(Vec::len).ok_or_else(|| Error::InvalidFrame("empty anchor".into()))?;
        if anchor.iter().any(|r| r.len() != n || r.iter().any(|p| p.nvars() != n)) {
            return Err(Error::InvalidFrame("anchor rows must have one entry per variable".into()));
        }
        let zero = vec![Poly::zero(n); t];
        let mut structure = vec![vec![zero; t]; t];
        for (i, j, c) in upper {
            let (i, j) = (*i, *j);
            if i >= j || j >= t || c.len() != t || c.iter().any(|p| p.nvars() != n) {
                return Err(Error::InvalidFrame(format!("bad structure constant entry ({}, {})", i + 1, j + 1)));
            }
            structure[j][i] = c.iter().map(|p| -p).collect();
            structure[i][j] = c.clone();
        }
        let mut sub_basis = sub_basis;
        sub_basis.sort_unstable();
        sub_basis.dedup();
        if sub_basis.iter().any(|&i| i >= t) {
            return Err(Error::InvalidFrame("sub-basis index out of range".into()));
        }
        let lr = LieRinehart { n, anchor, structure, sub_basis, memo: Mutex::new(HashMap::new()) };
        lr.validate()?;
        Ok(lr)
    }

    /// Structure constants read off the anchors, which must be independent.
    pub fn from_anchor(anchor: Vec<PolyVec>, sub_basis: Vec<usize>) -> Result<Self> {
        let t = anchor.len();
        let lifter = Lifter::new(&anchor)?;
        let mut upper = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                let c = lifter
                    .lift(&bracket_coeffs(&anchor[i], &anchor[j]))
                    .ok_or_else(|| Error::InvalidFrame(format!("[e{}, e{}] leaves the span", i + 1, j + 1)))?;
                upper.push((i, j, c));
            }
        }
        LieRinehart::new(anchor, &upper, sub_basis)
    }

    pub fn from_frame(frame: &LogFrame) -> Self {
        LieRinehart::from_frame_with_sub_basis(frame, Vec::new()).expect("empty sub-basis is closed")
    }

    pub fn from_frame_with_sub_basis(frame: &LogFrame, sub_basis: Vec<usize>) -> Result<Self> {
        let t = frame.n();
        let mut upper = Vec::new();
        for i in 0..t {
            for j in i + 1..t {
                upper.push((i, j, frame.structure_constants(i, j).clone()));
            }
        }
        LieRinehart::new(frame.matrix(), &upper, sub_basis)
    }

    fn validate(&self) -> Result<()> {
        let t = self.rank();
        for i in 0..t {
            for j in i + 1..t {
                let lhs = bracket_coeffs(&self.anchor[i], &self.anchor[j]);
                let rhs = self.field_anchor(&self.structure[i][j]);
                if lhs != rhs {
                    return Err(Error::InvalidFrame(format!(
                        "anchor of [e{}, e{}] disagrees with the structure constants",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..t {
            for j in i + 1..t {
                for k in j + 1..t {
                    let cyc = [(i, j, k), (j, k, i), (k, i, j)];
                    let mut sum = vec![Poly::zero(self.n); t];
                    for (a, b, c) in cyc {
                        let inner = self.unit_field(b, c);
                        let outer = self.field_bracket(&self.unit_vec(a), &inner);
                        for (s, o) in sum.iter_mut().zip(&outer) {
                            *s += o;
                        }
                    }
                    if sum.iter().any(|p| !p.is_zero()) {
                        return Err(Error::InvalidFrame(format!(
                            "Jacobi identity fails on (e{}, e{}, e{})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        for &i in &self.sub_basis {
            for &j in &self.sub_basis {
                let leaks = self.structure[i][j]
                    .iter()
                    .enumerate()
                    .any(|(k, c)| !c.is_zero() && !self.sub_basis.contains(&k));
                if leaks {
                    return Err(Error::InvalidFrame("sub-basis is not closed under brackets".into()));
                }
            }
        }
        Ok(())
    }

    fn unit_vec(&self, i: usize) -> PolyVec {
        (0..self.rank()).map(|k| if k == i { Poly::one(self.n) } else { Poly::zero(self.n) }).collect()
    }

    fn unit_field(&self, i: usize, j: usize) -> PolyVec {
        self.structure[i][j].clone()
    }

    /// Anchor of `Σ λ_k e_k` as a derivation.
    pub fn field_anchor(&self, lambda: &[Poly]) -> PolyVec {
        let mut out = vec![Poly::zero(self.n); self.n];
        for (c, row) in lambda.iter().zip(&self.anchor) {
            for (o, a) in out.iter_mut().zip(row) {
                *o += &(c * a);
            }
        }
        out
    }

    /// `λ(g)` for `λ = Σ λ_k e_k`.
    pub fn field_apply(&self, lambda: &[Poly], g: &Poly) -> Poly {
        apply_derivation(&self.field_anchor(lambda), g)
    }

    /// Lie–Rinehart bracket of `Σ f_i e_i` and `Σ g_j e_j`.
    pub fn field_bracket(&self, f: &[Poly], g: &[Poly]) -> PolyVec {
        let t = self.rank();
        let mut out = vec![Poly::zero(self.n); t];
        for i in 0..t {
            for j in 0..t {
                if f[i].is_zero() || g[j].is_zero() {
                    continue;
                }
                let fg = &f[i] * &g[j];
                for (o, c) in out.iter_mut().zip(&self.structure[i][j]) {
                    *o += &(&fg * c);
                }
            }
            if !f[i].is_zero() {
                for (o, gj) in out.iter_mut().zip(g) {
                    *o += &(&f[i] * &self.derive(i, gj));
                }
            }
            if !g[i].is_zero() {
                for (o, fj) in out.iter_mut().zip(f) {
                    *o -= &(&g[i] * &self.derive(i, fj));
                }
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.anchor.len()
    }

    pub fn anchor(&self) -> &[PolyVec] {
        &self.anchor
    }

    pub fn structure_constants(&self, i: usize, j: usize) -> &PolyVec {
        &self.structure[i][j]
    }

    pub fn sub_basis(&self) -> &[usize] {
        &self.sub_basis
    }

    /// `eᵢ(g)`.
    pub fn derive(&self, i: usize, g: &Poly) -> Poly {
        apply_derivation(&self.anchor[i], g)
    }

    pub fn zero(&self) -> UElement {
        UElement::zero(self.n, self.rank())
    }

    pub fn one(&self) -> UElement {
        UElement::one(self.n, self.rank())
    }

    pub fn generator(&self, i: usize) -> UElement {
        UElement::generator(self.n, self.rank(), i)
    }

    pub fn scalar(&self, p: Poly) -> UElement {
        UElement::from_poly(p, self.rank())
    }

    pub fn in_sub_algebra(&self, u: &UElement) -> bool {
        u.supported_on(&self.sub_basis)
    }

    /// Moves `c` to the left of the word `u`: `u·c = Σ q·s`.
    fn move_left(&self, u: &[usize], c: &Poly) -> BTreeMap<Vec<usize>, Poly> {
        let mut items: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
        if c.is_zero() {
            return items;
        }
        items.insert(Vec::new(), c.clone());
        for &l in u.iter().rev() {
            let mut next: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
            for (s, q) in items {
                let d = self.derive(l, &q);
                let mut longer = Vec::with_capacity(s.len() + 1);
                longer.push(l);
                longer.extend_from_slice(&s);
                accumulate(&mut next, longer, q);
                accumulate(&mut next, s, d);
            }
            items = next;
        }
        items
    }

    /// PBW normal form of the word `e_{w₁}⋯e_{w_k}`.
    pub fn normalize_word(&self, w: &[usize], strategy: RewriteStrategy) -> UElement {
        let t = self.rank();
        let descents: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&p| w[p] > w[p + 1]).collect();
        let p = match strategy {
            RewriteStrategy::Leftmost => descents.first(),
            RewriteStrategy::Rightmost => descents.last(),
        };
        let p = match p {
            Some(&p) => p,
            None => {
                let mut gamma = vec![0u32; t];
                for &i in w {
                    gamma[i] += 1;
                }
                return UElement::monomial(Poly::one(self.n), ExpVec::new(gamma));
            }
        };
        let key = (strategy, w.to_vec());
        if let Some(u) = self.memo.lock().unwrap().get(&key) {
            return u.clone();
        }
        let (j, i) = (w[p], w[p + 1]);
        let mut swapped = w.to_vec();
        swapped.swap(p, p + 1);
        let mut out = self.normalize_word(&swapped, strategy);
        for (k, c) in self.structure[j][i].iter().enumerate() {
            for (s, q) in self.move_left(&w[..p], c) {
                let mut word = s;
                word.push(k);
                word.extend_from_slice(&w[p + 2..]);
                out.add_scaled(&self.normalize_word(&word, strategy), &q);
            }
        }
        self.memo.lock().unwrap().insert(key, out.clone());
        out
    }

    pub fn mul(&self, a: &UElement, b: &UElement) -> UElement {
        self.mul_with(a, b, RewriteStrategy::default())
    }

    pub fn mul_with(&self, a: &UElement, b: &UElement, strategy: RewriteStrategy) -> UElement {
        assert_eq!((a.n, a.t), (self.n, self.rank()), "element from another algebra");
        assert_eq!((b.n, b.t), (self.n, self.rank()), "element from another algebra");
        let mut out = self.zero();
        for (gamma, f) in &a.terms {
            let wg = word_of(gamma);
            for (delta, g) in &b.terms {
                let wd = word_of(delta);
                for (s, q) in self.move_left(&wg, g) {
                    let mut word = s;
                    word.extend_from_slice(&wd);
                    out.add_scaled(&self.normalize_word(&word, strategy), &(f * &q));
                }
            }
        }
        out
    }

    /// Product of a list of factors, left to right.
    pub fn product(&self, factors: &[UElement]) -> UElement {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Image under `eᵢ ↦ Σ_j anchor[i][j] ∂_j`.
    pub fn to_weyl(&self, a: &UElement) -> WeylOp {
        let fields: Vec<WeylOp> = self.anchor.iter().map(|r| WeylOp::from_derivation(r)).collect();
        let mut out = WeylOp::zero(self.n);
        for (gamma, f) in &a.terms {
            let mut op = WeylOp::from_poly(f.clone());
            for i in word_of(gamma) {
                op = op.mul(&fields[i]);
            }
            out = &out + &op;
        }
        out
    }

    /// `[eᵢ, eⱼ] = Σ c_ij^k e_k`.
    pub fn bracket_element(&self, i: usize, j: usize) -> UElement {
        UElement::from_field(&self.structure[i][j])
    }
}

fn accumulate(map: &mut BTreeMap<Vec<usize>, Poly>, key: Vec<usize>, p: Poly) {
    if p.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(q) => {
            *q += &p;
            if q.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, p);
        }
    }
}

/// `e^γ` as the sorted word of basis indices.
fn word_of(gamma: &ExpVec) -> Vec<usize> {
    gamma.as_slice().iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn commuting_basis_reorders_freely() {
        let lr = LieRinehart::from_frame(&catalog::normal_crossings(3));
        let (e1, e2) = (lr.generator(0), lr.generator(1));
        assert_eq!(lr.mul(&e2, &e1), lr.mul(&e1, &e2));
    }

    #[test]
    fn non_spencer_reordering() {
        let frame = catalog::non_spencer();
        let lr = LieRinehart::from_frame(&frame);
        let ring = PolyRing::standard(3);
        let (e1, e2) = (lr.generator(0), lr.generator(1));
        let c = lr.scalar(ring.parse("x + y - 1/4*x*z").unwrap());
        assert_eq!(lr.mul(&e2, &e1), &lr.mul(&e1, &e2) - &lr.mul(&c, &e2));
        // e₁·x = x·e₁ + (x² + 5/4·xy)
        let x = lr.scalar(ring.parse("x").unwrap());
        let expected = &lr.mul(&x, &e1) + &lr.scalar(ring.parse("x^2 + 5/4*x*y").unwrap());
        assert_eq!(lr.mul(&e1, &x), expected);
    }

    #[test]
    fn images_in_weyl_algebra() {
        let frame = catalog::non_spencer();
        let lr = LieRinehart::from_frame(&frame);
        let ring = PolyRing::standard(3);
        let w = crate::parse::parse_operator("(x*z+y)*dz", ring.names()).unwrap();
        assert_eq!(lr.to_weyl(&lr.generator(1)), w);
        let e12 = lr.mul(&lr.generator(0), &lr.generator(1));
        let rows = frame.weyl_rows();
        assert_eq!(lr.to_weyl(&e12), rows[0].mul(&rows[1]));
        let g = ring.parse("x*y + 3").unwrap();
        assert_eq!(lr.to_weyl(&lr.scalar(g.clone())), WeylOp::from_poly(g));
    }

    #[test]
    fn strategies_agree_on_long_word() {
        let lr = LieRinehart::from_frame(&catalog::non_spencer());
        let w = [2, 1, 0, 2, 1];
        assert_eq!(
            lr.normalize_word(&w, RewriteStrategy::Leftmost),
            lr.normalize_word(&w, RewriteStrategy::Rightmost)
        );
    }

    #[test]
    fn rejects_inconsistent_data() {
        let ring = PolyRing::standard(2);
        let anchor = vec![
            vec![ring.parse("x").unwrap(), Poly::zero(2)],
            vec![Poly::zero(2), ring.parse("y").unwrap()],
        ];
        let bad = vec![(0, 1, vec![Poly::one(2), Poly::zero(2)])];
        assert!(matches!(LieRinehart::new(anchor.clone(), &bad, vec![]), Err(Error::InvalidFrame(_))));
        assert!(LieRinehart::new(anchor.clone(), &[], vec![0]).is_ok());
        let frame = catalog::non_spencer();
        assert!(matches!(LieRinehart::from_frame_with_sub_basis(&frame, vec![0, 2]), Err(Error::InvalidFrame(_))));
        assert!(LieRinehart::from_frame_with_sub_basis(&frame, vec![1]).is_ok());
    }

    #[test]
    fn structure_from_anchor_matches_frame() {
        let frame = catalog::non_spencer();
        let a = LieRinehart::from_anchor(frame.matrix(), vec![]).unwrap();
        let b = LieRinehart::from_frame(&frame);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.structure_constants(i, j), b.structure_constants(i, j));
            }
        }
    }
}
