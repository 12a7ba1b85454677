//! The multilinear maps `ν_r` used to build `β` in the associativity theorem
//! for mixed tensor products over nested enveloping algebras, evaluated on
//! regular modules, together with the identities they satisfy.
//!
//! Setting: `U = U(L)`, `U₀ = U(L₀)` for the Lie subalgebra spanned by the
//! designated sub-basis, `M = P = U` as right modules and `N = U₀` as a left
//! module. The map `α : M ⊗_A N → P` is `α(m ⊗ n) = m·ε(n)`, where
//! `ε(n) = n(1) ∈ A` is the action of `n` on `1`. This `α` is right
//! `U₀`-linear for the structure `(m ⊗ n)λ = mλ ⊗ n − m ⊗ λn`.

use crate::envelope::{LieRinehart, UElement};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyVec};

/// `t = a + λ` in `Δ = A ⊕ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaElem {
    pub a: Poly,
    pub lambda: PolyVec,
}

impl DeltaElem {
    pub fn scalar(a: Poly, t: usize) -> Self {
        let n = a.nvars();
        DeltaElem { a, lambda: vec![Poly::zero(n); t] }
    }

    pub fn field(lambda: PolyVec) -> Self {
        let n = lambda[0].nvars();
        DeltaElem { a: Poly::zero(n), lambda }
    }

    pub fn to_u(&self) -> UElement {
        &UElement::from_poly(self.a.clone(), self.lambda.len()) + &UElement::from_field(&self.lambda)
    }

    pub fn lambda_u(&self) -> UElement {
        UElement::from_field(&self.lambda)
    }

    pub fn in_delta0(&self, lr: &LieRinehart) -> bool {
        self.lambda.iter().enumerate().all(|(k, c)| c.is_zero() || lr.sub_basis().contains(&k))
    }
}

/// `α(m ⊗ n) = m·ε(n)`.
pub fn alpha(lr: &LieRinehart, m: &UElement, n: &UElement) -> UElement {
    lr.mul(m, &lr.scalar(n.constant_part()))
}

/// `ν_r(m, t₁⊗…⊗t_r, n)` by the defining recursion.
pub fn nu(lr: &LieRinehart, m: &UElement, word: &[DeltaElem], n: &UElement) -> UElement {
    match word.split_first() {
        None => alpha(lr, m, n),
        Some((t1, rest)) => {
            let first = nu(lr, &lr.mul(m, &t1.to_u()), rest, n);
            let second = lr.mul(&nu(lr, m, rest, n), &t1.lambda_u());
            &first - &second
        }
    }
}

/// `t_E = t_{i₁}⋯t_{i_l}` for increasing `E`.
pub fn t_product(lr: &LieRinehart, word: &[DeltaElem], e: &[usize]) -> UElement {
    lr.product(&e.iter().map(|&i| word[i].to_u()).collect::<Vec<_>>())
}

/// `λ_E = λ_{i_l}⋯λ_{i₁}`, in decreasing index order.
pub fn lambda_product(lr: &LieRinehart, word: &[DeltaElem], e: &[usize]) -> UElement {
    lr.product(&e.iter().rev().map(|&i| word[i].lambda_u()).collect::<Vec<_>>())
}

/// `λ_E(a) = λ_{i_l}(⋯λ_{i₁}(a)⋯)`.
pub fn lambda_apply(lr: &LieRinehart, word: &[DeltaElem], e: &[usize], a: &Poly) -> Poly {
    e.iter().fold(a.clone(), |acc, &i| lr.field_apply(&word[i].lambda, &acc))
}

/// All subsets of a sorted index list, each sorted.
fn subsets(e: &[usize]) -> Vec<Vec<usize>> {
    (0..1u32 << e.len())
        .map(|mask| e.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i).collect())
        .collect()
}

fn complement(e: &[usize], sub: &[usize]) -> Vec<usize> {
    e.iter().copied().filter(|i| !sub.contains(i)).collect()
}

fn signed(u: UElement, k: usize) -> UElement {
    if k % 2 == 0 {
        u
    } else {
        -&u
    }
}

/// `Σ_{E ⊂ I_r} (−1)^{#(I_r−E)} α((m t_E) ⊗ n) λ_{I_r−E}`.
pub fn nu_closed_form(lr: &LieRinehart, m: &UElement, word: &[DeltaElem], n: &UElement) -> UElement {
    let all: Vec<usize> = (0..word.len()).collect();
    let mut out = lr.zero();
    for e in subsets(&all) {
        let rest = complement(&all, &e);
        let mt = lr.mul(m, &t_product(lr, word, &e));
        let term = lr.mul(&alpha(lr, &mt, n), &lambda_product(lr, word, &rest));
        out = &out + &signed(term, rest.len());
    }
    out
}

/// First commutation identity: `a t_E = Σ_{E'⊂E} (−1)^{#(E−E')} t_{E'} λ_{E−E'}(a)`.
pub fn commutation_first(lr: &LieRinehart, a: &Poly, word: &[DeltaElem], e: &[usize]) -> bool {
    let lhs = lr.mul(&lr.scalar(a.clone()), &t_product(lr, word, e));
    let mut rhs = lr.zero();
    for sub in subsets(e) {
        let rest = complement(e, &sub);
        let coef = lambda_apply(lr, word, &rest, a);
        let term = lr.mul(&t_product(lr, word, &sub), &lr.scalar(coef));
        rhs = &rhs + &signed(term, rest.len());
    }
    lhs == rhs
}

/// Second commutation identity: `λ_E a = Σ_{E'⊂E} λ_{E'}(a) λ_{E−E'}`.
pub fn commutation_second(lr: &LieRinehart, a: &Poly, word: &[DeltaElem], e: &[usize]) -> bool {
    let lhs = lr.mul(&lambda_product(lr, word, e), &lr.scalar(a.clone()));
    let mut rhs = lr.zero();
    for sub in subsets(e) {
        let rest = complement(e, &sub);
        let coef = lambda_apply(lr, word, &sub, a);
        rhs = &rhs + &lambda_product(lr, word, &rest).mul_poly(&coef);
    }
    lhs == rhs
}

/// With `t_r ∈ Δ₀` and `n ∈ U₀`:
/// `ν_r(m, t₁⊗…⊗t_r, n) = ν_{r−1}(m, t₁⊗…⊗t_{r−1}, t_r n)`.
pub fn absorb_last(lr: &LieRinehart, m: &UElement, word: &[DeltaElem], n: &UElement) -> Result<bool> {
    let (last, init) = word.split_last().ok_or_else(|| Error::InvalidArgument("empty word".into()))?;
    if !last.in_delta0(lr) {
        return Err(Error::InvalidArgument("last entry is not in the sub-algebroid".into()));
    }
    if !lr.in_sub_algebra(n) {
        return Err(Error::InvalidArgument("n is not in the sub-algebra".into()));
    }
    let tn = lr.mul(&last.to_u(), n);
    Ok(nu(lr, m, word, n) == nu(lr, m, init, &tn))
}

/// `ν_{r−1}(mλ₁, t₂⊗…, n) − ν_r(m, λ₁⊗t₂⊗…, n) = ν_{r−1}(m, t₂⊗…, n)·λ₁`.
pub fn peel_first(lr: &LieRinehart, m: &UElement, lambda1: &PolyVec, rest: &[DeltaElem], n: &UElement) -> bool {
    let l1 = DeltaElem::field(lambda1.clone());
    let mut word = vec![l1.clone()];
    word.extend_from_slice(rest);
    let lhs = &nu(lr, &lr.mul(m, &l1.to_u()), rest, n) - &nu(lr, m, &word, n);
    let rhs = lr.mul(&nu(lr, m, rest, n), &l1.lambda_u());
    lhs == rhs
}

/// A defining relation of `U(L)` inserted between a prefix and a suffix of a
/// tensor word.
#[derive(Clone, Debug)]
pub enum Relation {
    /// `λ ⊗ a − a ⊗ λ − λ(a)`.
    FieldScalar { lambda: PolyVec, a: Poly },
    /// `λ ⊗ μ − μ ⊗ λ − [λ, μ]`.
    FieldField { lambda: PolyVec, mu: PolyVec },
    /// `a ⊗ b − ab`.
    ScalarScalar { a: Poly, b: Poly },
    /// `(aλ) − a ⊗ λ`.
    ScalarField { a: Poly, lambda: PolyVec },
    /// `c·1 − c` for a rational constant `c`.
    Constant { c: Poly },
}

/// `ν` vanishes on the relation: the two sides evaluate to the same element.
pub fn respects_relation(
    lr: &LieRinehart,
    m: &UElement,
    prefix: &[DeltaElem],
    rel: &Relation,
    suffix: &[DeltaElem],
    n: &UElement,
) -> bool {
    let t = lr.rank();
    let eval = |mid: Vec<DeltaElem>| {
        let mut w = prefix.to_vec();
        w.extend(mid);
        w.extend_from_slice(suffix);
        nu(lr, m, &w, n)
    };
    match rel {
        Relation::FieldScalar { lambda, a } => {
            let l = DeltaElem::field(lambda.clone());
            let s = DeltaElem::scalar(a.clone(), t);
            let lhs = eval(vec![l.clone(), s.clone()]);
            let rhs = &eval(vec![s, l]) + &eval(vec![DeltaElem::scalar(lr.field_apply(lambda, a), t)]);
            lhs == rhs
        }
        Relation::FieldField { lambda, mu } => {
            let l = DeltaElem::field(lambda.clone());
            let u = DeltaElem::field(mu.clone());
            let lhs = eval(vec![l.clone(), u.clone()]);
            let rhs = &eval(vec![u, l]) + &eval(vec![DeltaElem::field(lr.field_bracket(lambda, mu))]);
            lhs == rhs
        }
        Relation::ScalarScalar { a, b } => {
            let lhs = eval(vec![DeltaElem::scalar(a.clone(), t), DeltaElem::scalar(b.clone(), t)]);
            lhs == eval(vec![DeltaElem::scalar(a * b, t)])
        }
        Relation::ScalarField { a, lambda } => {
            let scaled: PolyVec = lambda.iter().map(|c| a * c).collect();
            let lhs = eval(vec![DeltaElem::field(scaled)]);
            lhs == eval(vec![DeltaElem::scalar(a.clone(), t), DeltaElem::field(lambda.clone())])
        }
        Relation::Constant { c } => {
            let q = c.constant_value().expect("constant relation needs a rational");
            let lhs = eval(vec![DeltaElem::scalar(c.clone(), t)]);
            lhs == eval(vec![]).scale(&q)
        }
    }
}

/// Right `U₀`-linearity of `α` on a generator `λ ∈ L₀`.
pub fn alpha_is_linear(lr: &LieRinehart, m: &UElement, n: &UElement, lambda: &PolyVec) -> bool {
    let l = UElement::from_field(lambda);
    let lhs = &alpha(lr, &lr.mul(m, &l), n) - &alpha(lr, m, &lr.mul(&l, n));
    lhs == lr.mul(&alpha(lr, m, n), &l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::PolyRing;

    fn setup() -> (LieRinehart, PolyRing) {
        (LieRinehart::from_frame(&catalog::non_spencer()), PolyRing::standard(3))
    }

    fn field(ring: &PolyRing, src: [&str; 3]) -> PolyVec {
        src.iter().map(|s| ring.parse(s).unwrap()).collect()
    }

    #[test]
    fn nu_zero_is_alpha() {
        let (lr, ring) = setup();
        let m = lr.generator(0);
        let n = lr.scalar(ring.parse("x + 2").unwrap());
        assert_eq!(nu(&lr, &m, &[], &n), lr.mul(&m, &n));
    }

    #[test]
    fn empty_subset_commutation() {
        let (lr, ring) = setup();
        let a = ring.parse("x*y").unwrap();
        let word = vec![DeltaElem::field(field(&ring, ["1", "0", "x"]))];
        assert!(commutation_first(&lr, &a, &word, &[]));
        assert!(commutation_second(&lr, &a, &word, &[]));
        assert!(commutation_first(&lr, &a, &word, &[0]));
        assert!(commutation_second(&lr, &a, &word, &[0]));
    }

    #[test]
    fn closed_form_small() {
        let (lr, ring) = setup();
        let m = &lr.generator(2) + &lr.scalar(ring.parse("y").unwrap());
        let n = lr.scalar(ring.parse("z - 1").unwrap());
        let word = vec![
            DeltaElem { a: ring.parse("x").unwrap(), lambda: field(&ring, ["1", "y", "0"]) },
            DeltaElem { a: ring.parse("0").unwrap(), lambda: field(&ring, ["0", "0", "z"]) },
        ];
        assert_eq!(nu(&lr, &m, &word, &n), nu_closed_form(&lr, &m, &word, &n));
    }

    #[test]
    fn absorb_requires_sub_algebra() {
        let (lr, ring) = setup();
        let m = lr.one();
        let n = lr.one();
        let word = vec![DeltaElem::field(field(&ring, ["1", "0", "0"]))];
        assert!(absorb_last(&lr, &m, &word, &n).is_err());
        let word = vec![DeltaElem::scalar(ring.parse("x").unwrap(), 3)];
        assert!(absorb_last(&lr, &m, &word, &n).unwrap());
    }

    #[test]
    fn multiplication_is_not_an_admissible_alpha() {
        // with α = multiplication the right U₀-linearity fails on the sub-basis
        let frame = catalog::non_spencer();
        let lr = LieRinehart::from_frame_with_sub_basis(&frame, vec![1]).unwrap();
        let ring = PolyRing::standard(3);
        let l = field(&ring, ["0", "1", "0"]);
        let m = lr.generator(0);
        let n = lr.generator(1);
        assert!(alpha_is_linear(&lr, &m, &n, &l));
        let lu = UElement::from_field(&l);
        let lhs = &lr.mul(&lr.mul(&m, &lu), &n) - &lr.mul(&m, &lr.mul(&lu, &n));
        assert_ne!(lhs, lr.mul(&lr.mul(&m, &n), &lu));
    }
}
