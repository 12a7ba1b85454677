//! Logarithmic derivations along a reduced divisor `D = {h = 0}`: generators,
//! Saito's determinant criterion, brackets, structure constants and the right
//! action on top forms.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{self, Lifter, ModuleOrder, ModuleOrderKind};
use crate::poly::{apply_derivation, det, squarefree_check, MonomialOrder, Poly, PolyMatrix, PolyVec, Rational};
use crate::weyl::WeylOp;

/// A reduced, non-constant hypersurface equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    h: Poly,
}

impl Divisor {
    pub fn new(h: Poly) -> Result<Divisor> {
        if h.is_constant() {
            return Err(Error::InvalidDivisor("constant equation".into()));
        }
        if !squarefree_check(&h)? {
            return Err(Error::InvalidDivisor("equation is not reduced".into()));
        }
        Ok(Divisor { h })
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn nvars(&self) -> usize {
        self.h.nvars()
    }
}

/// `δ = Σ coeffsᵢ ∂ᵢ` with `δ(h) = alpha·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDerivation {
    pub coeffs: PolyVec,
    pub alpha: Poly,
}

impl LogDerivation {
    pub fn new(coeffs: PolyVec, d: &Divisor) -> Result<LogDerivation> {
        if coeffs.len() != d.nvars() {
            return Err(Error::Shape(format!("{} coefficients in {} variables", coeffs.len(), d.nvars())));
        }
        let alpha = is_logarithmic(&coeffs, d.h())
            .ok_or_else(|| Error::InvalidArgument("derivation is not logarithmic".into()))?;
        Ok(LogDerivation { coeffs, alpha })
    }

    pub fn apply(&self, g: &Poly) -> Poly {
        apply_derivation(&self.coeffs, g)
    }

    pub fn to_weyl(&self) -> WeylOp {
        WeylOp::from_derivation(&self.coeffs)
    }

    pub fn divergence(&self) -> Poly {
        divergence(&self.coeffs)
    }
}

pub fn divergence(coeffs: &[Poly]) -> Poly {
    let n = coeffs.len();
    coeffs.iter().enumerate().fold(Poly::zero(n), |acc, (i, a)| &acc + &a.partial(i))
}

/// `Some(α)` with `δ(h) = α·h` when `h` divides `δ(h)`.
pub fn is_logarithmic(coeffs: &[Poly], h: &Poly) -> Option<Poly> {
    apply_derivation(coeffs, h).div_exact(h)
}

/// Generators of `Der(log D)`, read off the syzygies of `(∂₁h, …, ∂ₙh, h)` and
/// interreduced as a submodule of `ℚ[x]^n`.
pub fn derivation_generators(d: &Divisor) -> Result<Vec<LogDerivation>> {
    let n = d.nvars();
    let mut gens: Vec<Poly> = (0..n).map(|i| d.h().partial(i)).collect();
    gens.push(d.h().clone());
    let syz = groebner::syzygies(&gens)?;
    let projected: Vec<PolyVec> = syz.generators.into_iter().map(|s| s[..n].to_vec()).collect();
    let order = ModuleOrder::new(MonomialOrder::DegRevLex, ModuleOrderKind::PositionOverTerm);
    let gb = groebner::module_groebner_basis(n, n, &projected, order);
    gb.generators().into_iter().map(|v| LogDerivation::new(v, d)).collect()
}

/// How the unit in Saito's criterion is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SaitoMode {
    /// `det = c·h` with `c` a nonzero rational.
    #[default]
    Global,
    /// `det = c·h` with `c(0) ≠ 0`, a unit in the local ring at the origin.
    Local,
}

/// Proof data for `det(A) = c·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub det: Poly,
    pub cofactor: Poly,
}

impl FreenessCertificate {
    /// `c` as a rational when the cofactor is constant.
    pub fn constant(&self) -> Option<Rational> {
        self.cofactor.constant_value()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Certified(FreenessCertificate),
    Undetermined(String),
}

pub fn saito_test(rows: &[PolyVec], d: &Divisor, mode: SaitoMode) -> Result<Freeness> {
    let n = d.nvars();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("expected {n} rows of length {n}")));
    }
    if let Some(i) = rows.iter().position(|r| is_logarithmic(r, d.h()).is_none()) {
        return Ok(Freeness::Undetermined(format!("row {} is not logarithmic", i + 1)));
    }
    let dt = det(&rows.to_vec())?;
    let cofactor = match dt.div_exact(d.h()) {
        Some(c) => c,
        None => return Ok(Freeness::Undetermined("determinant is not a multiple of h".into())),
    };
    let unit = match mode {
        SaitoMode::Global => cofactor.constant_value().is_some_and(|c| !c.is_zero()),
        SaitoMode::Local => !cofactor.constant_term().is_zero(),
    };
    if unit {
        Ok(Freeness::Certified(FreenessCertificate { det: dt, cofactor }))
    } else {
        Ok(Freeness::Undetermined("determinant is not a unit multiple of h".into()))
    }
}

/// Coefficients of `[a, b]`: `Σᵢ (aᵢ ∂ᵢ b_k − bᵢ ∂ᵢ a_k)`.
pub fn bracket_coeffs(a: &[Poly], b: &[Poly]) -> PolyVec {
    (0..a.len()).map(|k| &apply_derivation(a, &b[k]) - &apply_derivation(b, &a[k])).collect()
}

pub fn bracket(a: &LogDerivation, b: &LogDerivation) -> LogDerivation {
    let coeffs = bracket_coeffs(&a.coeffs, &b.coeffs);
    let alpha = &a.apply(&b.alpha) - &b.apply(&a.alpha);
    LogDerivation { coeffs, alpha }
}

/// A certified basis of `Der(log D)` with its structure constants.
#[derive(Clone, Debug)]
pub struct LogFrame {
    divisor: Divisor,
    rows: Vec<LogDerivation>,
    certificate: FreenessCertificate,
    /// `structure[i][j][k] = c_ij^k`, antisymmetric in `i, j`.
    structure: Vec<Vec<PolyVec>>,
    lifter: Lifter,
}

impl LogFrame {
    pub fn new(divisor: Divisor, rows: Vec<PolyVec>, mode: SaitoMode) -> Result<LogFrame> {
        let certificate = match saito_test(&rows, &divisor, mode)? {
            Freeness::Certified(c) => c,
            Freeness::Undetermined(why) => return Err(Error::InvalidFrame(why)),
        };
        let rows: Vec<LogDerivation> =
            rows.into_iter().map(|r| LogDerivation::new(r, &divisor)).collect::<Result<_>>()?;
        let lifter = Lifter::new(&rows.iter().map(|r| r.coeffs.clone()).collect::<Vec<_>>())?;
        let n = rows.len();
        let mut frame = LogFrame { divisor, rows, certificate, structure: Vec::new(), lifter };
        let zero = vec![Poly::zero(n); n];
        let mut structure = vec![vec![zero; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = frame.express(&bracket_coeffs(&frame.rows[i].coeffs, &frame.rows[j].coeffs))?;
                structure[j][i] = c.iter().map(|p| -p).collect();
                structure[i][j] = c;
            }
        }
        frame.structure = structure;
        Ok(frame)
    }

    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[LogDerivation] {
        &self.rows
    }

    pub fn matrix(&self) -> PolyMatrix {
        self.rows.iter().map(|r| r.coeffs.clone()).collect()
    }

    pub fn alphas(&self) -> Vec<Poly> {
        self.rows.iter().map(|r| r.alpha.clone()).collect()
    }

    pub fn certificate(&self) -> &FreenessCertificate {
        &self.certificate
    }

    /// `c_ij^k` for `k = 0..n`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &PolyVec {
        &self.structure[i][j]
    }

    pub fn weyl_rows(&self) -> Vec<WeylOp> {
        self.rows.iter().map(LogDerivation::to_weyl).collect()
    }

    /// Coefficients `g` with `δ = Σ g_k δ_k`.
    pub fn express(&self, coeffs: &[Poly]) -> Result<PolyVec> {
        if coeffs.len() != self.n() {
            return Err(Error::Shape(format!("{} coefficients for a frame of size {}", coeffs.len(), self.n())));
        }
        self.lifter.lift(&coeffs.to_vec()).ok_or(Error::NotInSpan)
    }
}

pub fn express_in_basis(delta: &LogDerivation, frame: &LogFrame) -> Result<PolyVec> {
    frame.express(&delta.coeffs)
}

/// Looks for `n` generators forming a frame, trying at most `bound` subsets.
pub fn find_frame(d: &Divisor, gens: &[LogDerivation], bound: usize, mode: SaitoMode) -> Result<Option<LogFrame>> {
    let n = d.nvars();
    if gens.len() < n {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..n).collect();
    for _ in 0..bound {
        let rows: Vec<PolyVec> = idx.iter().map(|&i| gens[i].coeffs.clone()).collect();
        if let Freeness::Certified(_) = saito_test(&rows, d, mode)? {
            return LogFrame::new(d.clone(), rows, mode).map(Some);
        }
        // next n-subset in lexicographic order
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            if idx[k] < gens.len() - n + k {
                break;
            }
        }
        idx[k] += 1;
        for l in k + 1..n {
            idx[l] = idx[l - 1] + 1;
        }
    }
    Ok(None)
}

/// The symbols `Σ_j A_ij ξ_j` in `ℚ[x, ξ]`, with `ξ` after `x`.
pub fn symbols(rows: &[PolyVec]) -> Vec<Poly> {
    rows.iter().map(|r| WeylOp::from_derivation(r).symbol_of_order(1)).collect()
}

/// True iff the symbols of the rows form a regular sequence.
pub fn koszul_rows(rows: &[PolyVec]) -> Result<bool> {
    let n = rows.first().map(Vec::len).unwrap_or(0);
    let xi: Vec<usize> = (n..2 * n).collect();
    groebner::is_regular_sequence(&symbols(rows), &xi)
}

pub fn koszul_test(frame: &LogFrame) -> bool {
    koszul_rows(&frame.matrix()).expect("symbols of a frame are linear in ξ")
}

/// Right action `θ·δ = −L_δ θ` on `θ = (g/h^m) dx₁∧…∧dxₙ`, returned as the
/// numerator over `h^m`.
pub fn lie_derivative_topform(coeffs: &[Poly], g: &Poly, m: u32, h: &Poly) -> Result<Poly> {
    let div = divergence(coeffs);
    let dg = apply_derivation(coeffs, g);
    if m == 0 {
        return Ok(-&(&dg + &(g * &div)));
    }
    // −(δ(g)·h − m·g·δ(h) + g·h·div δ) / h^(m+1)
    let mq = Rational::from_integer(m.into());
    let top = &(&(&dg * h) - &(g * &apply_derivation(coeffs, h)).scale(&mq)) + &(&(g * h) * &div);
    top.div_exact(h).map(|q| -&q).ok_or(Error::DenominatorEscape { order: m + 1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use num_traits::Signed;

    fn r3() -> PolyRing {
        PolyRing::new(["x", "y", "z"])
    }

    fn row(r: &PolyRing, src: &[&str]) -> PolyVec {
        src.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn divisor_validation() {
        let r = r3();
        assert!(Divisor::new(r.parse("x*y*z").unwrap()).is_ok());
        assert!(matches!(Divisor::new(r.parse("x^2*y").unwrap()), Err(Error::InvalidDivisor(_))));
        assert!(matches!(Divisor::new(r.parse("3").unwrap()), Err(Error::InvalidDivisor(_))));
    }

    #[test]
    fn normal_crossing_generators_and_frame() {
        let r = r3();
        let d = Divisor::new(r.parse("x*y*z").unwrap()).unwrap();
        let gens = derivation_generators(&d).unwrap();
        let frame = find_frame(&d, &gens, 100, SaitoMode::Global).unwrap().unwrap();
        assert_eq!(frame.certificate().constant().map(|c| c.abs()), Some(Rational::from_integer(1.into())));
        for e in [["x", "0", "0"], ["0", "y", "0"], ["0", "0", "z"]] {
            assert!(frame.express(&row(&r, &e)).is_ok());
        }
        assert!(koszul_test(&frame));
    }

    #[test]
    fn smooth_generators() {
        let r = PolyRing::new(["x", "y"]);
        let d = Divisor::new(r.parse("x").unwrap()).unwrap();
        let gens = derivation_generators(&d).unwrap();
        let coeffs: Vec<PolyVec> = gens.into_iter().map(|g| g.coeffs).collect();
        assert_eq!(coeffs, vec![row(&r, &["x", "0"]), row(&r, &["0", "1"])]);
    }

    #[test]
    fn cusp_frame() {
        let r = PolyRing::new(["x", "y"]);
        let d = Divisor::new(r.parse("x^2-y^3").unwrap()).unwrap();
        let rows = vec![row(&r, &["3*x", "2*y"]), row(&r, &["-3*y^2", "-2*x"])];
        let frame = LogFrame::new(d, rows, SaitoMode::Global).unwrap();
        assert_eq!(frame.certificate().constant(), Some(Rational::from_integer((-6).into())));
        assert_eq!(frame.alphas(), vec![r.parse("6").unwrap(), r.parse("0").unwrap()]);
        assert!(koszul_test(&frame));
    }

    #[test]
    fn repeated_row_is_not_koszul() {
        let r = PolyRing::new(["x", "y"]);
        assert!(!koszul_rows(&[row(&r, &["3*x", "2*y"]), row(&r, &["3*x", "2*y"])]).unwrap());
    }

    #[test]
    fn saito_shape_and_local_mode() {
        let r = PolyRing::new(["x", "y"]);
        let d = Divisor::new(r.parse("x").unwrap()).unwrap();
        assert!(matches!(saito_test(&[row(&r, &["x", "0"])], &d, SaitoMode::Global), Err(Error::Shape(_))));
        let rows = vec![row(&r, &["x", "0"]), row(&r, &["0", "1+y"])];
        assert!(matches!(saito_test(&rows, &d, SaitoMode::Global).unwrap(), Freeness::Undetermined(_)));
        assert!(matches!(saito_test(&rows, &d, SaitoMode::Local).unwrap(), Freeness::Certified(_)));
    }

    #[test]
    fn euler_fields_commute() {
        let r = r3();
        assert!(bracket_coeffs(&row(&r, &["x", "0", "0"]), &row(&r, &["0", "y", "0"])).iter().all(Poly::is_zero));
    }

    #[test]
    fn top_form_action() {
        let r = r3();
        let one = Poly::one(3);
        let h = r.parse("x*y*z").unwrap();
        assert_eq!(lie_derivative_topform(&row(&r, &["x", "0", "0"]), &one, 0, &h).unwrap(), r.parse("-1").unwrap());
        assert!(lie_derivative_topform(&row(&r, &["1", "2", "0"]), &one, 0, &h).unwrap().is_zero());
        // for x∂x on dx∧dy∧dz/h the terms from δ(h) = h and div δ = 1 cancel
        assert_eq!(lie_derivative_topform(&row(&r, &["x", "0", "0"]), &one, 1, &h).unwrap(), r.parse("0").unwrap());
        assert!(matches!(
            lie_derivative_topform(&row(&r, &["1", "0", "0"]), &one, 1, &h),
            Err(Error::DenominatorEscape { order: 2 })
        ));
    }
}
