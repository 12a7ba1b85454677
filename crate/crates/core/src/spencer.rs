//! Logarithmic Spencer complexes over `U = D(log D)` as explicit matrices,
//! twisted by integrable logarithmic connections, their images over the Weyl
//! algebra, presentations of `O(mD)`, and the symbol obstruction certifying
//! `H⁻¹ ≠ 0` for `D_X ⊗ Sp•`.
//!
//! Free modules are written as row vectors and maps act on the right: the
//! image of `x` under `ε⁻ᵏ` is `x·M_k`. The basis of `Sp⁻ᵏ(E)` is
//! `e_S ⊗ f_a` for sorted `k`-subsets `S` (lexicographic) and `a < rank E`,
//! indexed `S·rank + a`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::envelope::{LieRinehart, UElement};
use crate::error::{Error, Result};
use crate::groebner::{self, Lifter};
use crate::logderiv::LogFrame;
use crate::poly::{ExpVec, Poly, PolyMatrix, PolyVec, Rational};
use crate::weyl::WeylOp;

pub type UMatrix = Vec<Vec<UElement>>;
pub type WeylMatrix = Vec<Vec<WeylOp>>;

/// Sorted `k`-subsets of `0..n` in lexicographic order.
pub fn wedge_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// An integrable logarithmic connection on a free module with basis
/// `f₁..f_r`: `∇(δᵢ) f_a = Σ_b gamma[i][b][a] f_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection {
    rank: usize,
    gamma: Vec<PolyMatrix>,
}

impl Connection {
    pub fn new(gamma: Vec<PolyMatrix>) -> Result<Self> {
        let rank = gamma.first().map(Vec::len).ok_or_else(|| Error::Shape("no connection matrices".into()))?;
        if gamma.iter().any(|g| g.len() != rank || g.iter().any(|row| row.len() != rank)) {
            return Err(Error::Shape(format!("connection matrices must be {rank}×{rank}")));
        }
        Ok(Connection { rank, gamma })
    }

    /// `O` with `∇ = 0`.
    pub fn trivial(lr: &LieRinehart) -> Self {
        Connection { rank: 1, gamma: vec![vec![vec![Poly::zero(lr.nvars())]]; lr.rank()] }
    }

    /// `O(mD)` on the basis `h^{-m}`: `δᵢ(h^{-m}) = −m αᵢ h^{-m}`.
    pub fn omd(alphas: &[Poly], m: i64) -> Self {
        let mq = Rational::from_integer((-m).into());
        Connection { rank: 1, gamma: alphas.iter().map(|a| vec![vec![a.scale(&mq)]]).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gamma(&self) -> &[PolyMatrix] {
        &self.gamma
    }

    /// `Γ* = −Γᵀ`.
    pub fn dual(&self) -> Self {
        let r = self.rank;
        let gamma = self.gamma.iter().map(|g| (0..r).map(|a| (0..r).map(|b| -&g[b][a]).collect()).collect()).collect();
        Connection { rank: r, gamma }
    }

    /// `Γ ⊗ I + I ⊗ Γ′` on the basis `f_a ⊗ f′_{a′}` indexed `a·r′ + a′`.
    pub fn tensor(&self, other: &Connection) -> Result<Self> {
        if self.gamma.len() != other.gamma.len() {
            return Err(Error::Shape("connections over different frames".into()));
        }
        let (r, s) = (self.rank, other.rank);
        let n = self.gamma[0][0][0].nvars();
        let gamma = self
            .gamma
            .iter()
            .zip(&other.gamma)
            .map(|(g, h)| {
                let mut out = vec![vec![Poly::zero(n); r * s]; r * s];
                for a in 0..r {
                    for a2 in 0..s {
                        for b in 0..r {
                            for b2 in 0..s {
                                let mut e = Poly::zero(n);
                                if a2 == b2 {
                                    e += &g[a][b];
                                }
                                if a == b {
                                    e += &h[a2][b2];
                                }
                                out[a * s + a2][b * s + b2] = e;
                            }
                        }
                    }
                }
                out
            })
            .collect();
        Ok(Connection { rank: r * s, gamma })
    }

    /// `Σ_k c_ij^k Γ_k = δᵢ(Γⱼ) − δⱼ(Γᵢ) + ΓᵢΓⱼ − ΓⱼΓᵢ` for all `i < j`.
    pub fn check_integrable(&self, lr: &LieRinehart) -> Result<()> {
        let t = lr.rank();
        if self.gamma.len() != t {
            return Err(Error::Shape(format!("{} connection matrices for a frame of size {t}", self.gamma.len())));
        }
        let r = self.rank;
        let n = lr.nvars();
        for i in 0..t {
            for j in i + 1..t {
                let c = lr.structure_constants(i, j);
                for a in 0..r {
                    for b in 0..r {
                        let mut lhs = Poly::zero(n);
                        for (ck, g) in c.iter().zip(&self.gamma) {
                            lhs += &(ck * &g[a][b]);
                        }
                        let mut rhs = &lr.derive(i, &self.gamma[j][a][b]) - &lr.derive(j, &self.gamma[i][a][b]);
                        for m in 0..r {
                            rhs += &(&self.gamma[i][a][m] * &self.gamma[j][m][b]);
                            rhs -= &(&self.gamma[j][a][m] * &self.gamma[i][m][b]);
                        }
                        if lhs != rhs {
                            return Err(Error::IntegrabilityViolation(format!(
                                "entry ({}, {}) of the curvature on (δ{}, δ{})",
                                a + 1,
                                b + 1,
                                i + 1,
                                j + 1
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Matrices `M_k` of `ε⁻ᵏ`, `k = 1..t`; `maps[k-1]` has `C(t,k)·r` rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexPresentation {
    pub frame_size: usize,
    pub rank: usize,
    pub maps: Vec<UMatrix>,
}

impl ComplexPresentation {
    /// Matrix of `ε⁻ᵏ`.
    pub fn differential(&self, k: usize) -> &UMatrix {
        &self.maps[k - 1]
    }

    /// Row labels of `Sp⁻ᵏ(E)`: `(S, a)`.
    pub fn labels(&self, k: usize) -> Vec<(Vec<usize>, usize)> {
        wedge_basis(self.frame_size, k).into_iter().flat_map(|s| (0..self.rank).map(move |a| (s.clone(), a))).collect()
    }
}

fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn twisted_differential(lr: &LieRinehart, conn: &Connection, k: usize) -> UMatrix {
    let t = lr.rank();
    let r = conn.rank;
    let cols = wedge_basis(t, k - 1);
    let col_index: HashMap<Vec<usize>, usize> = cols.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let mut out = Vec::new();
    for s in wedge_basis(t, k) {
        for a in 0..r {
            let mut row = vec![lr.zero(); cols.len() * r];
            for (i, &si) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&x| x != si).collect();
                let ci = col_index[&rest];
                let sg = sign(i);
                row[ci * r + a] = &row[ci * r + a] + &lr.generator(si).scale(&sg);
                for (b, gamma_row) in conn.gamma[si].iter().enumerate() {
                    let g = &gamma_row[a];
                    if !g.is_zero() {
                        row[ci * r + b] = &row[ci * r + b] - &lr.scalar(g.scale(&sg));
                    }
                }
            }
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    let sg = sign(i + j);
                    let rest: Vec<usize> = s.iter().copied().filter(|&x| x != s[i] && x != s[j]).collect();
                    for (kk, c) in lr.structure_constants(s[i], s[j]).iter().enumerate() {
                        if c.is_zero() || rest.contains(&kk) {
                            continue;
                        }
                        let pos = rest.iter().filter(|&&x| x < kk).count();
                        let mut target = rest.clone();
                        target.insert(pos, kk);
                        let ci = col_index[&target];
                        let coef = c.scale(&(&sg * &sign(pos)));
                        row[ci * r + a] = &row[ci * r + a] + &lr.scalar(coef);
                    }
                }
            }
            out.push(row);
        }
    }
    out
}

/// `Sp•(E)` for an integrable connection `E`.
pub fn spencer_complex_twisted(lr: &LieRinehart, conn: &Connection) -> Result<ComplexPresentation> {
    conn.check_integrable(lr)?;
    let maps = (1..=lr.rank()).map(|k| twisted_differential(lr, conn, k)).collect();
    Ok(ComplexPresentation { frame_size: lr.rank(), rank: conn.rank, maps })
}

/// The untwisted complex `Sp•`.
pub fn spencer_complex(lr: &LieRinehart) -> ComplexPresentation {
    spencer_complex_twisted(lr, &Connection::trivial(lr)).expect("the trivial connection is integrable")
}

/// `A·B` with entries multiplied in `U`.
pub fn compose(lr: &LieRinehart, a: &UMatrix, b: &UMatrix) -> UMatrix {
    let cols = b.first().map(Vec::len).unwrap_or(0);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).fold(lr.zero(), |acc, (x, brow)| {
                        if x.is_zero() || brow[j].is_zero() {
                            acc
                        } else {
                            &acc + &lr.mul(x, &brow[j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

/// `M_{k}·M_{k−1} = 0` for all `k`.
pub fn compositions_vanish(lr: &LieRinehart, cx: &ComplexPresentation) -> bool {
    cx.maps.windows(2).all(|w| compose(lr, &w[1], &w[0]).iter().flatten().all(UElement::is_zero))
}

/// The complex `D_X ⊗ Sp•(E)`, entrywise image in the Weyl algebra.
pub fn induce_to_weyl(lr: &LieRinehart, cx: &ComplexPresentation) -> Vec<WeylMatrix> {
    cx.maps.iter().map(|m| m.iter().map(|row| row.iter().map(|u| lr.to_weyl(u)).collect()).collect()).collect()
}

pub fn weyl_compose(a: &WeylMatrix, b: &WeylMatrix) -> WeylMatrix {
    let n = a.iter().flatten().chain(b.iter().flatten()).map(WeylOp::nvars).next().unwrap_or(0);
    let cols = b.first().map(Vec::len).unwrap_or(0);
    a.iter()
        .map(|row| (0..cols).map(|j| row.iter().zip(b).fold(WeylOp::zero(n), |acc, (x, br)| &acc + &x.mul(&br[j]))).collect())
        .collect()
}

pub fn weyl_compositions_vanish(maps: &[WeylMatrix]) -> bool {
    maps.windows(2).all(|w| weyl_compose(&w[1], &w[0]).iter().flatten().all(WeylOp::is_zero))
}

/// Generators `eᵢ + m αᵢ` of the left ideal presenting `O(mD)`.
pub fn presentation_omd(frame: &LogFrame, lr: &LieRinehart, m: i64) -> Vec<UElement> {
    let mq = Rational::from_integer(m.into());
    frame.alphas().iter().enumerate().map(|(i, a)| &lr.generator(i) + &lr.scalar(a.scale(&mq))).collect()
}

/// Each generator, mapped to the Weyl algebra, kills `h^{-m}`.
pub fn presentation_annihilates(frame: &LogFrame, lr: &LieRinehart, m: i64) -> Result<bool> {
    let h = frame.divisor().h();
    let n = h.nvars();
    for g in presentation_omd(frame, lr, m) {
        let op = lr.to_weyl(&g);
        let (num, _) = if m >= 0 {
            op.apply_to_fraction(&Poly::one(n), m as u32, h)?
        } else {
            op.apply_to_fraction(&h.pow((-m) as u32), 0, h)?
        };
        if !num.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An order-≤1 operator as the vector `(coefficients of ∂₁..∂ₙ, order-0 part)`.
fn first_order_vector(op: &WeylOp) -> Option<PolyVec> {
    let n = op.nvars();
    if op.order().is_some_and(|k| k > 1) {
        return None;
    }
    let mut v: PolyVec = (0..n).map(|i| op.coeff(&ExpVec::unit(n, i))).collect();
    v.push(op.coeff(&ExpVec::zero(n)));
    Some(v)
}

/// Outcome of the symbol obstruction on one column of `d⁻²`.
#[derive(Clone, Debug)]
pub struct ColumnCheck {
    pub column: usize,
    /// Nonzero entries of the column, generating the left ideal that must
    /// contain the corresponding component of any image of `d⁻²`.
    pub generators: Vec<WeylOp>,
    pub orders_ok: bool,
    pub symbols: Vec<Poly>,
    pub regular_sequence: bool,
    /// `[P_i, P_j] = Σ c_k P_k` over `O`, for `i < j`; `None` when outside the span.
    pub brackets: Vec<(usize, usize, Option<PolyVec>)>,
    pub hypotheses_hold: bool,
    /// Reduced basis of `(σ(P) : σ(Q_j))` in `ℚ[x, ξ]`, when computed.
    pub colon: Option<Vec<Poly>>,
    /// Generators of the contraction of the colon ideal to `ℚ[x]`.
    pub contraction: Option<Vec<Poly>>,
    pub vanishes_at_origin: bool,
    pub certified: bool,
}

impl ColumnCheck {
    /// The `O`-span of the generators is closed under commutators; only
    /// meaningful once the order check passed.
    pub fn brackets_closed(&self) -> bool {
        self.orders_ok && self.brackets.iter().all(|(_, _, c)| c.is_some())
    }
}

#[derive(Clone, Debug)]
pub struct CertificateReport {
    pub kernel: bool,
    pub columns: Vec<ColumnCheck>,
    /// First column whose obstruction certifies `Q ∉ im d⁻²` at the origin.
    pub certifying_column: Option<usize>,
}

impl CertificateReport {
    pub fn certified(&self) -> bool {
        self.kernel && self.certifying_column.is_some()
    }

    pub fn verdict(&self) -> &'static str {
        match (self.kernel, self.certified()) {
            (false, _) => "not a kernel member",
            (true, true) => "H⁻¹ ≠ 0 certified: D is not Spencer at 0",
            (true, false) => "kernel member; no obstruction",
        }
    }
}

fn check_column(column: usize, entries: Vec<WeylOp>, q: &WeylOp) -> Result<ColumnCheck> {
    let n = q.nvars();
    let mut generators: Vec<WeylOp> = Vec::new();
    for e in entries {
        if !e.is_zero() && !generators.contains(&e) && !generators.contains(&-&e) {
            generators.push(e);
        }
    }
    let mut check = ColumnCheck {
        column,
        generators: generators.clone(),
        orders_ok: false,
        symbols: Vec::new(),
        regular_sequence: false,
        brackets: Vec::new(),
        hypotheses_hold: false,
        colon: None,
        contraction: None,
        vanishes_at_origin: false,
        certified: false,
    };
    if generators.is_empty() {
        return Ok(check);
    }
    check.orders_ok = generators.iter().all(|g| g.order() == Some(1));
    if !check.orders_ok {
        return Ok(check);
    }
    check.symbols = generators.iter().map(|g| g.principal_symbol()).collect::<Result<_>>()?;
    let xi: Vec<usize> = (n..2 * n).collect();
    check.regular_sequence = groebner::is_regular_sequence(&check.symbols, &xi)?;
    let vectors: Vec<PolyVec> = generators.iter().map(|g| first_order_vector(g).unwrap()).collect();
    let lifter = Lifter::new(&vectors)?;
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            let br = generators[i].commutator(&generators[j]);
            let c = first_order_vector(&br).and_then(|v| lifter.lift(&v));
            check.brackets.push((i, j, c));
        }
    }
    check.hypotheses_hold = check.regular_sequence && check.brackets_closed();
    if !check.hypotheses_hold || q.is_zero() {
        return Ok(check);
    }
    let sq = q.principal_symbol()?;
    let colon = groebner::colon_ideal(&check.symbols, &sq)?;
    let contraction = groebner::eliminate(&colon.polys(), &xi)?;
    let origin = vec![Rational::zero(); 2 * n];
    check.vanishes_at_origin = contraction.iter().all(|p| p.eval(&origin).is_zero());
    check.certified = check.vanishes_at_origin;
    check.colon = Some(colon.polys());
    check.contraction = Some(contraction);
    Ok(check)
}

/// Certificate that `Q = Σ Qᵢ ⊗ δᵢ` is a cycle of `D_X ⊗ Sp•` in degree −1
/// that is not a boundary at the origin.
pub fn h1_certificate(frame: &LogFrame, q: &[WeylOp]) -> Result<CertificateReport> {
    let n = frame.n();
    if q.len() != n {
        return Err(Error::Shape(format!("{} operators for a frame of size {n}", q.len())));
    }
    if q.iter().any(|op| op.nvars() != frame.divisor().nvars()) {
        return Err(Error::AmbientMismatch { left: frame.divisor().nvars(), right: q[0].nvars() });
    }
    let lr = LieRinehart::from_frame(frame);
    let weyl = induce_to_weyl(&lr, &spencer_complex(&lr));
    let rows = frame.weyl_rows();
    let sum = q.iter().zip(&rows).fold(WeylOp::zero(frame.divisor().nvars()), |acc, (a, b)| &acc + &a.mul(b));
    let kernel = sum.is_zero();
    let mut columns = Vec::new();
    if n >= 2 {
        let d2 = &weyl[1];
        for (j, qj) in q.iter().enumerate() {
            let entries: Vec<WeylOp> = d2.iter().map(|row| row[j].clone()).collect();
            columns.push(check_column(j, entries, qj)?);
        }
    }
    let certifying_column = if kernel { columns.iter().find(|c| c.certified).map(|c| c.column) } else { None };
    Ok(CertificateReport { kernel, columns, certifying_column })
}

/// Looks for `Q` in the image of `d⁻²` among combinations `Σ A_S ⊗ e_S` with
/// `ord A_S ≤ order_bound` and coefficient degree `≤ degree_bound`, by exact
/// linear algebra over ℚ. Returns true when such a preimage exists.
pub fn bounded_image_search(frame: &LogFrame, q: &[WeylOp], order_bound: u32, degree_bound: u32) -> Result<bool> {
    let n = frame.n();
    if q.len() != n || n < 2 {
        return Err(Error::Shape("operator count must match the frame".into()));
    }
    let lr = LieRinehart::from_frame(frame);
    let weyl = induce_to_weyl(&lr, &spencer_complex(&lr));
    let d2 = &weyl[1];
    let nv = frame.divisor().nvars();
    let mut span = SparseSpan::default();
    for row in d2 {
        for beta in exponents_up_to(nv, order_bound) {
            for a in exponents_up_to(nv, degree_bound) {
                let m = WeylOp::monomial(Poly::monomial(a.clone(), Rational::one()), beta.clone());
                let image: Vec<WeylOp> = row.iter().map(|e| m.mul(e)).collect();
                span.insert(flatten(&image));
            }
        }
    }
    Ok(span.reduce(flatten(q)).is_empty())
}

fn exponents_up_to(n: usize, d: u32) -> Vec<ExpVec> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                let used: u32 = v.iter().sum();
                (0..=d - used).map(move |k| [v.clone(), vec![k]].concat())
            })
            .collect();
    }
    out.into_iter().map(ExpVec::new).collect()
}

type Key = (usize, ExpVec, ExpVec);
type SparseVec = BTreeMap<Key, Rational>;

fn flatten(ops: &[WeylOp]) -> SparseVec {
    let mut v = SparseVec::new();
    for (j, op) in ops.iter().enumerate() {
        for (beta, p) in op.terms() {
            for (a, c) in p.terms() {
                v.insert((j, beta.clone(), a.clone()), c.clone());
            }
        }
    }
    v
}

/// Row-echelon span of sparse rational vectors, pivoting on the largest key.
#[derive(Default)]
struct SparseSpan {
    pivots: BTreeMap<Key, SparseVec>,
}

impl SparseSpan {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        loop {
            let hit = v.iter().rev().find(|(k, _)| self.pivots.contains_key(*k)).map(|(k, c)| (k.clone(), c.clone()));
            let (key, c) = match hit {
                Some(h) => h,
                None => return v,
            };
            for (k, pc) in &self.pivots[&key] {
                let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                *e -= &c * pc;
                if e.is_zero() {
                    v.remove(k);
                }
            }
        }
    }

    fn insert(&mut self, v: SparseVec) {
        let v = self.reduce(v);
        if let Some((key, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            let inv = c.recip();
            let v: SparseVec = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
            self.pivots.insert(key, v);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::poly::PolyRing;

    #[test]
    fn wedge_bases() {
        assert_eq!(wedge_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(wedge_basis(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(wedge_basis(2, 3).len(), 0);
    }

    #[test]
    fn one_variable_complex() {
        let lr = LieRinehart::from_frame(&catalog::smooth(1));
        let cx = spencer_complex(&lr);
        assert_eq!(cx.maps.len(), 1);
        assert_eq!(cx.differential(1), &vec![vec![lr.generator(0)]]);
    }

    #[test]
    fn normal_crossings_complex() {
        let lr = LieRinehart::from_frame(&catalog::normal_crossings(3));
        let cx = spencer_complex(&lr);
        let d1: Vec<UElement> = cx.differential(1).iter().map(|r| r[0].clone()).collect();
        assert_eq!(d1, (0..3).map(|i| lr.generator(i)).collect::<Vec<_>>());
        // e_{12} ↦ −e₂ ⊗ e₁ + e₁ ⊗ e₂
        assert_eq!(cx.differential(2)[0], vec![-&lr.generator(1), lr.generator(0), lr.zero()]);
        assert!(compositions_vanish(&lr, &cx));
    }

    #[test]
    fn omd_twist_rows() {
        let frame = catalog::normal_crossings(3);
        let lr = LieRinehart::from_frame(&frame);
        let conn = Connection::omd(&frame.alphas(), 2);
        let cx = spencer_complex_twisted(&lr, &conn).unwrap();
        let two = lr.scalar(Poly::from_int(3, 2));
        for i in 0..3 {
            assert_eq!(cx.differential(1)[i][0], &lr.generator(i) + &two);
        }
        assert!(compositions_vanish(&lr, &cx));
        assert!(presentation_annihilates(&frame, &lr, 2).unwrap());
    }

    #[test]
    fn connection_algebra() {
        let frame = catalog::non_spencer();
        let a = frame.alphas();
        assert_eq!(Connection::omd(&a, 2).dual(), Connection::omd(&a, -2));
        assert_eq!(Connection::omd(&a, 1).tensor(&Connection::omd(&a, 2)).unwrap(), Connection::omd(&a, 3));
        let lr = LieRinehart::from_frame(&frame);
        assert_eq!(Connection::omd(&a, 1).tensor(&Connection::trivial(&lr)).unwrap(), Connection::omd(&a, 1));
    }

    #[test]
    fn curvature_is_detected() {
        let frame = catalog::normal_crossings(2);
        let lr = LieRinehart::from_frame(&frame);
        let r = PolyRing::standard(2);
        let p = |s: &str| r.parse(s).unwrap();
        let conn = Connection::new(vec![
            vec![vec![p("0"), p("1")], vec![p("0"), p("0")]],
            vec![vec![p("0"), p("0")], vec![p("1"), p("0")]],
        ])
        .unwrap();
        assert!(matches!(spencer_complex_twisted(&lr, &conn), Err(Error::IntegrabilityViolation(_))));
    }

    #[test]
    fn zero_operators_are_not_certified() {
        let frame = catalog::non_spencer();
        let q = vec![WeylOp::zero(3); 3];
        let report = h1_certificate(&frame, &q).unwrap();
        assert!(report.kernel);
        assert!(!report.certified());
        assert!(matches!(h1_certificate(&frame, &q[..2]), Err(Error::Shape(_))));
    }
}
