//! Buchberger engine for ideals of `ℚ[x]` and submodules of free modules
//! `ℚ[x]^r`, with the derived operations used elsewhere in the crate:
//! normal forms, syzygies, module lifting, colon ideals, elimination,
//! Krull dimension and the regular-sequence test.
//!
//! Ideals are handled as rank-one modules. Syzygies and liftings are read off
//! a position-over-term basis of the module generated by `(gᵢ, eᵢ)` in
//! `ℚ[x]^(r+m)`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{ExpVec, MonomialOrder, Poly, PolyVec, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModuleOrderKind {
    /// Compare components first, then monomials.
    #[default]
    PositionOverTerm,
    /// Compare monomials first, then components.
    TermOverPosition,
}

/// Order on the terms `x^a·eᵢ` of a free module.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub kind: ModuleOrderKind,
    /// `priority[i]` is the rank of component `i`; rank 0 is the largest.
    /// `None` means component 0 > component 1 > ….
    pub priority: Option<Vec<usize>>,
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder, kind: ModuleOrderKind) -> Self {
        ModuleOrder { monomial, kind, priority: None }
    }

    pub fn for_ideal(monomial: MonomialOrder) -> Self {
        ModuleOrder::new(monomial, ModuleOrderKind::PositionOverTerm)
    }

    fn rank_of(&self, c: usize) -> usize {
        match &self.priority {
            Some(p) => p[c],
            None => c,
        }
    }

    pub fn cmp(&self, a: (usize, &ExpVec), b: (usize, &ExpVec)) -> Ordering {
        let by_pos = self.rank_of(b.0).cmp(&self.rank_of(a.0));
        match self.kind {
            ModuleOrderKind::PositionOverTerm => by_pos.then_with(|| self.monomial.cmp(a.1, b.1)),
            ModuleOrderKind::TermOverPosition => self.monomial.cmp(a.1, b.1).then(by_pos),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Term {
    comp: usize,
    exp: ExpVec,
    coef: Rational,
}

/// Module element as a list of terms in ascending order; the leading term is last.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Elem {
    terms: Vec<Term>,
}

impl Elem {
    fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

struct Engine<'a> {
    order: &'a ModuleOrder,
    rank: usize,
    nvars: usize,
}

impl Engine<'_> {
    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        self.order.cmp((a.comp, &a.exp), (b.comp, &b.exp))
    }

    fn from_vec(&self, v: &[Poly]) -> Elem {
        let mut terms: Vec<Term> = v
            .iter()
            .enumerate()
            .flat_map(|(comp, p)| {
                p.terms().map(move |(e, c)| Term { comp, exp: e.clone(), coef: c.clone() })
            })
            .collect();
        terms.sort_by(|a, b| self.cmp(a, b));
        Elem { terms }
    }

    fn to_vec(&self, f: &Elem) -> PolyVec {
        let mut out = vec![Poly::zero(self.nvars); self.rank];
        for t in &f.terms {
            out[t.comp].add_term(t.exp.clone(), t.coef.clone());
        }
        out
    }

    /// `f - c·x^shift·g`, both ascending.
    fn sub_mul(&self, f: &[Term], c: &Rational, shift: &ExpVec, g: &[Term]) -> Vec<Term> {
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut shifted = g.iter().map(|t| Term { comp: t.comp, exp: t.exp.mul(shift), coef: -(&t.coef * c) });
        let mut fi = f.iter();
        let mut a = fi.next().cloned();
        let mut b = shifted.next();
        loop {
            match (a.take(), b.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x);
                    a = fi.next().cloned();
                }
                (None, Some(y)) => {
                    out.push(y);
                    b = shifted.next();
                }
                (Some(x), Some(y)) => match self.cmp(&x, &y) {
                    Ordering::Less => {
                        out.push(x);
                        a = fi.next().cloned();
                        b = Some(y);
                    }
                    Ordering::Greater => {
                        out.push(y);
                        b = shifted.next();
                        a = Some(x);
                    }
                    Ordering::Equal => {
                        let s = x.coef + y.coef;
                        if !s.is_zero() {
                            out.push(Term { comp: x.comp, exp: x.exp, coef: s });
                        }
                        a = fi.next().cloned();
                        b = shifted.next();
                    }
                },
            }
        }
        out
    }

    fn find_reducer<'b>(&self, t: &Term, basis: &'b [Elem]) -> Option<&'b Elem> {
        basis.iter().find(|g| {
            let l = g.lead().expect("basis elements are nonzero");
            l.comp == t.comp && l.exp.divides(&t.exp)
        })
    }

    /// Full reduction of `f` modulo `basis`.
    fn reduce(&self, f: Elem, basis: &[Elem]) -> Elem {
        let mut p = f.terms;
        let mut rem: Vec<Term> = Vec::new();
        while let Some(lead) = p.last() {
            match self.find_reducer(lead, basis) {
                Some(g) => {
                    let gl = g.lead().unwrap();
                    let shift = lead.exp.div(&gl.exp).unwrap();
                    let c = &lead.coef / &gl.coef;
                    p = self.sub_mul(&p, &c, &shift, &g.terms);
                }
                None => rem.push(p.pop().unwrap()),
            }
        }
        rem.reverse();
        Elem { terms: rem }
    }

    fn monic(&self, mut f: Elem) -> Elem {
        if let Some(l) = f.lead() {
            if !l.coef.is_one() {
                let inv = l.coef.recip();
                for t in &mut f.terms {
                    t.coef = &t.coef * &inv;
                }
            }
        }
        f
    }

    fn s_poly(&self, f: &Elem, g: &Elem) -> Option<Elem> {
        let (lf, lg) = (f.lead()?, g.lead()?);
        if lf.comp != lg.comp {
            return None;
        }
        let l = lf.exp.lcm(&lg.exp);
        let sf = l.div(&lf.exp).unwrap();
        let sg = l.div(&lg.exp).unwrap();
        let zero = ExpVec::zero(self.nvars);
        let a = self.sub_mul(&[], &-lf.coef.recip(), &sf, &f.terms);
        let terms = self.sub_mul(&a, &lg.coef.recip(), &sg, &g.terms);
        let _ = zero;
        Some(Elem { terms })
    }

    fn buchberger(&self, gens: Vec<Elem>) -> Vec<Elem> {
        let mut basis: Vec<Elem> = Vec::new();
        let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
        let mut pending: HashSet<(usize, usize)> = HashSet::new();

        let add = |basis: &mut Vec<Elem>,
                   queue: &mut BTreeSet<(u32, usize, usize)>,
                   pending: &mut HashSet<(usize, usize)>,
                   f: Elem| {
            let j = basis.len();
            let lj = f.lead().unwrap().clone();
            for (i, g) in basis.iter().enumerate() {
                let li = g.lead().unwrap();
                if li.comp == lj.comp {
                    queue.insert((li.exp.lcm(&lj.exp).degree(), j, i));
                    pending.insert((i, j));
                }
            }
            basis.push(f);
        };

        for f in gens {
            if !f.is_zero() {
                let f = self.monic(f);
                add(&mut basis, &mut queue, &mut pending, f);
            }
        }

        while let Some(key) = queue.iter().next().cloned() {
            queue.remove(&key);
            let (_, j, i) = key;
            pending.remove(&(i, j));
            let (li, lj) = (basis[i].lead().unwrap(), basis[j].lead().unwrap());
            if self.rank == 1 && li.exp.is_coprime(&lj.exp) {
                continue;
            }
            let l = li.exp.lcm(&lj.exp);
            let chain = (0..basis.len()).any(|k| {
                if k == i || k == j {
                    return false;
                }
                let lk = basis[k].lead().unwrap();
                lk.comp == li.comp
                    && lk.exp.divides(&l)
                    && !pending.contains(&(i.min(k), i.max(k)))
                    && !pending.contains(&(j.min(k), j.max(k)))
            });
            if chain {
                continue;
            }
            let s = match self.s_poly(&basis[i], &basis[j]) {
                Some(s) => s,
                None => continue,
            };
            let r = self.reduce(s, &basis);
            if !r.is_zero() {
                let r = self.monic(r);
                add(&mut basis, &mut queue, &mut pending, r);
            }
        }
        self.interreduce(basis)
    }

    fn interreduce(&self, basis: Vec<Elem>) -> Vec<Elem> {
        let mut minimal: Vec<Elem> = Vec::new();
        for (i, f) in basis.iter().enumerate() {
            let lf = f.lead().unwrap();
            let redundant = basis.iter().enumerate().any(|(j, g)| {
                let lg = g.lead().unwrap();
                j != i
                    && lg.comp == lf.comp
                    && lg.exp.divides(&lf.exp)
                    && (lg.exp != lf.exp || j < i)
            });
            if !redundant {
                minimal.push(f.clone());
            }
        }
        let mut out: Vec<Elem> = Vec::with_capacity(minimal.len());
        for i in 0..minimal.len() {
            let others: Vec<Elem> =
                minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let mut f = minimal[i].clone();
            let lead = f.terms.pop().unwrap();
            let mut tail = self.reduce(f, &others);
            tail.terms.push(lead);
            out.push(self.monic(tail));
        }
        out.sort_by(|a, b| self.cmp(b.lead().unwrap(), a.lead().unwrap()));
        out
    }
}

/// Gröbner basis of an ideal (`rank == 1`) or of a submodule of `ℚ[x]^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    rank: usize,
    order: ModuleOrder,
    elems: Vec<Elem>,
    reduced: bool,
}

impl GroebnerBasis {
    fn engine(&self) -> Engine<'_> {
        Engine { order: &self.order, rank: self.rank, nvars: self.nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Basis elements as vectors, sorted by descending leading term.
    pub fn generators(&self) -> Vec<PolyVec> {
        let eng = self.engine();
        self.elems.iter().map(|f| eng.to_vec(f)).collect()
    }

    /// Basis polynomials of an ideal.
    pub fn polys(&self) -> Vec<Poly> {
        assert_eq!(self.rank, 1, "polys() on a module basis");
        self.generators().into_iter().map(|mut v| v.remove(0)).collect()
    }

    /// Leading terms as `(component, exponent)`.
    pub fn leading_terms(&self) -> Vec<(usize, ExpVec)> {
        self.elems.iter().map(|f| f.lead().map(|t| (t.comp, t.exp.clone())).unwrap()).collect()
    }

    pub fn leading_monomials(&self) -> Vec<ExpVec> {
        self.leading_terms().into_iter().map(|(_, e)| e).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.rank == 1 && self.elems.iter().any(|f| f.lead().unwrap().exp.is_zero())
    }

    pub fn normal_form_vec(&self, f: &PolyVec) -> PolyVec {
        assert_eq!(f.len(), self.rank, "rank mismatch");
        let eng = self.engine();
        let r = eng.reduce(eng.from_vec(f), &self.elems);
        eng.to_vec(&r)
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        assert_eq!(self.rank, 1);
        self.normal_form_vec(&vec![f.clone()]).remove(0)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_vec(&self, f: &PolyVec) -> bool {
        self.normal_form_vec(f).iter().all(Poly::is_zero)
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let eng = self.engine();
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                if let Some(s) = eng.s_poly(&self.elems[i], &self.elems[j]) {
                    if !eng.reduce(s, &self.elems).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Reduced Gröbner basis of a submodule of `ℚ[x]^r` generated by `gens`.
pub fn module_groebner_basis(nvars: usize, rank: usize, gens: &[PolyVec], order: ModuleOrder) -> GroebnerBasis {
    let eng = Engine { order: &order, rank, nvars };
    let elems: Vec<Elem> = gens
        .iter()
        .map(|v| {
            assert_eq!(v.len(), rank, "generator has the wrong rank");
            assert!(v.iter().all(|p| p.nvars() == nvars), "ambient mismatch");
            eng.from_vec(v)
        })
        .collect();
    let elems = eng.buchberger(elems);
    GroebnerBasis { nvars, rank, order, elems, reduced: true }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(nvars: usize, gens: &[Poly], order: MonomialOrder) -> GroebnerBasis {
    let vecs: Vec<PolyVec> = gens.iter().map(|g| vec![g.clone()]).collect();
    module_groebner_basis(nvars, 1, &vecs, ModuleOrder::for_ideal(order))
}

fn ambient_of(gens: &[Poly]) -> Result<usize> {
    let n = gens.first().map(Poly::nvars).ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::AmbientMismatch { left: n, right: g.nvars() });
    }
    Ok(n)
}

/// Relations among a list of module elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyResult {
    pub generators: Vec<PolyVec>,
}

impl SyzygyResult {
    /// Checks `Σ sᵢ·gᵢ = 0` for every relation.
    pub fn annihilates(&self, gens: &[PolyVec]) -> bool {
        self.generators.iter().all(|s| {
            let rank = gens.first().map(Vec::len).unwrap_or(0);
            (0..rank).all(|c| {
                let mut acc = Poly::zero(s[0].nvars());
                for (si, g) in s.iter().zip(gens) {
                    acc += &(si * &g[c]);
                }
                acc.is_zero()
            })
        })
    }
}

/// Basis of the module generated by `(gᵢ, eᵢ)` in `ℚ[x]^(r+m)`, position over
/// term with the first `r` components dominating.
fn tracked_basis(nvars: usize, gens: &[PolyVec]) -> (usize, GroebnerBasis) {
    let rank = gens[0].len();
    let m = gens.len();
    let rows: Vec<PolyVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut v = g.clone();
            v.extend((0..m).map(|j| if i == j { Poly::one(nvars) } else { Poly::zero(nvars) }));
            v
        })
        .collect();
    let order = ModuleOrder::new(MonomialOrder::DegRevLex, ModuleOrderKind::PositionOverTerm);
    (rank, module_groebner_basis(nvars, rank + m, &rows, order))
}

/// Generators of the syzygy module of `gens ⊂ ℚ[x]^r`.
pub fn module_syzygies(gens: &[PolyVec]) -> Result<SyzygyResult> {
    let first = gens.first().ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
    let nvars = first.first().map(Poly::nvars).ok_or_else(|| Error::Shape("rank-zero generators".into()))?;
    if gens.iter().any(|g| g.len() != first.len()) {
        return Err(Error::Shape("generators of different ranks".into()));
    }
    let (rank, gb) = tracked_basis(nvars, gens);
    let generators = gb
        .generators()
        .into_iter()
        .filter(|v| v[..rank].iter().all(Poly::is_zero))
        .map(|v| v[rank..].to_vec())
        .collect();
    Ok(SyzygyResult { generators })
}

/// Generators of the syzygy module of a list of polynomials.
pub fn syzygies(gens: &[Poly]) -> Result<SyzygyResult> {
    ambient_of(gens)?;
    let vecs: Vec<PolyVec> = gens.iter().map(|g| vec![g.clone()]).collect();
    module_syzygies(&vecs)
}

/// Expresses vectors as `ℚ[x]`-combinations of fixed generators.
#[derive(Clone, Debug)]
pub struct Lifter {
    rank: usize,
    count: usize,
    nvars: usize,
    gb: GroebnerBasis,
}

impl Lifter {
    pub fn new(gens: &[PolyVec]) -> Result<Lifter> {
        let first = gens.first().ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
        let nvars = first.first().map(Poly::nvars).ok_or_else(|| Error::Shape("rank-zero generators".into()))?;
        if gens.iter().any(|g| g.len() != first.len()) {
            return Err(Error::Shape("generators of different ranks".into()));
        }
        let (rank, gb) = tracked_basis(nvars, gens);
        Ok(Lifter { rank, count: gens.len(), nvars, gb })
    }

    /// Coefficients `c` with `Σ cᵢ·gensᵢ = target`, if the target is in the span.
    pub fn lift(&self, target: &PolyVec) -> Option<PolyVec> {
        assert_eq!(target.len(), self.rank, "rank mismatch");
        let mut v = target.clone();
        v.extend((0..self.count).map(|_| Poly::zero(self.nvars)));
        let r = self.gb.normal_form_vec(&v);
        if r[..self.rank].iter().all(Poly::is_zero) {
            Some(r[self.rank..].iter().map(|p| -p).collect())
        } else {
            None
        }
    }
}

/// Polynomials among `gens`' ideal that avoid the variables in `elim`,
/// via a block order with the eliminated variables first.
pub fn eliminate(gens: &[Poly], elim: &[usize]) -> Result<Vec<Poly>> {
    let n = ambient_of(gens)?;
    let mut perm: Vec<usize> = elim.to_vec();
    perm.extend((0..n).filter(|v| !elim.contains(v)));
    // old variable perm[k] goes to slot k
    let mut map = vec![0; n];
    for (k, &v) in perm.iter().enumerate() {
        map[v] = k;
    }
    let moved: Vec<Poly> = gens.iter().map(|g| g.embed(n, &map)).collect();
    let gb = groebner_basis(n, &moved, MonomialOrder::Block { first: elim.len() });
    Ok(gb
        .polys()
        .into_iter()
        .filter(|p| (0..elim.len()).all(|k| p.degree_in(k) == 0))
        .map(|p| p.embed(n, &perm))
        .collect())
}

/// Generators of `I ∩ J` by elimination of a tag variable from `t·I + (1-t)·J`.
pub fn intersect(i: &[Poly], j: &[Poly]) -> Result<Vec<Poly>> {
    let n = ambient_of(&[i, j].concat())?;
    let map: Vec<usize> = (1..=n).collect();
    let t = Poly::var(n + 1, 0);
    let one_minus_t = &Poly::one(n + 1) - &t;
    let mut gens: Vec<Poly> = i.iter().map(|g| &t * &g.embed(n + 1, &map)).collect();
    gens.extend(j.iter().map(|g| &one_minus_t * &g.embed(n + 1, &map)));
    let gb = groebner_basis(n + 1, &gens, MonomialOrder::Block { first: 1 });
    Ok(gb
        .polys()
        .into_iter()
        .filter(|p| p.degree_in(0) == 0)
        .map(|p| p.restrict(&map).expect("tag variable eliminated"))
        .collect())
}

/// `(I : f) = {g : g·f ∈ I}` as a reduced degrevlex basis.
pub fn colon_ideal(ideal: &[Poly], f: &Poly) -> Result<GroebnerBasis> {
    if f.is_zero() {
        return Err(Error::InvalidArgument("colon by the zero polynomial".into()));
    }
    let n = f.nvars();
    if let Some(g) = ideal.iter().find(|g| g.nvars() != n) {
        return Err(Error::AmbientMismatch { left: n, right: g.nvars() });
    }
    let meet = intersect(ideal, std::slice::from_ref(f))?;
    let quotients: Vec<Poly> =
        meet.iter().map(|g| g.div_exact(f).expect("generators of I ∩ (f) are multiples of f")).collect();
    Ok(groebner_basis(n, &quotients, MonomialOrder::DegRevLex))
}

/// Greatest common divisor, normalized to leading coefficient one.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    let order = MonomialOrder::DegRevLex;
    if f.is_zero() {
        return g.monic(&order);
    }
    if g.is_zero() {
        return f.monic(&order);
    }
    if f.is_constant() || g.is_constant() {
        return Poly::one(f.nvars());
    }
    // The syzygy module of (f, g) is free on (g/d, -f/d).
    let syz = syzygies(&[f.clone(), g.clone()]).expect("two generators");
    let s = syz
        .generators
        .iter()
        .min_by_key(|s| s[0].total_degree())
        .expect("two nonzero polynomials always have a syzygy");
    g.div_exact(&s[0]).expect("syzygy component divides").monic(&order)
}

/// Size of a largest set of variables containing no leading monomial's support.
fn max_independent_set(supports: &[u64], nvars: usize) -> usize {
    fn go(v: usize, n: usize, mask: u64, size: usize, supports: &[u64], best: &mut usize) {
        if size + (n - v) <= *best {
            return;
        }
        if v == n {
            *best = size;
            return;
        }
        let with = mask | (1 << v);
        if supports.iter().all(|s| s & !with != 0) {
            go(v + 1, n, with, size + 1, supports, best);
        }
        go(v + 1, n, mask, size, supports, best);
    }
    let mut best = 0;
    go(0, nvars, 0, 0, supports, &mut best);
    best
}

/// Krull dimension of `ℚ[x]/I`, or `-1` for the unit ideal.
pub fn dimension(gb: &GroebnerBasis) -> i64 {
    assert_eq!(gb.rank(), 1, "dimension of a module basis");
    assert!(gb.nvars() <= 64, "at most 64 variables");
    if gb.is_unit() {
        return -1;
    }
    let supports: Vec<u64> =
        gb.leading_monomials().iter().map(|e| e.support().fold(0u64, |m, v| m | (1 << v))).collect();
    max_independent_set(&supports, gb.nvars()) as i64
}

/// Regular-sequence test by codimension: in the Cohen–Macaulay ring `ℚ[x, ξ]`
/// a sequence of ξ-homogeneous elements is regular iff the ideal it generates
/// has codimension equal to its length.
pub fn is_regular_sequence(elems: &[Poly], symbol_vars: &[usize]) -> Result<bool> {
    if elems.is_empty() {
        return Ok(true);
    }
    let n = ambient_of(elems)?;
    if let Some(p) = elems.iter().find(|p| !p.is_zero() && p.homogeneous_degree_in(symbol_vars).is_none()) {
        return Err(Error::InvalidArgument(format!(
            "element with {} terms is not homogeneous in the symbol variables",
            p.len()
        )));
    }
    let gb = groebner_basis(n, elems, MonomialOrder::DegRevLex);
    let dim = dimension(&gb);
    if dim < 0 {
        return Ok(false);
    }
    Ok(n as i64 - dim == elems.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ring(names: &[&str]) -> PolyRing {
        PolyRing::new(names.iter().copied())
    }

    fn parse_all(r: &PolyRing, src: &[&str]) -> Vec<Poly> {
        src.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn hand_buchberger_example() {
        // S(x²−y, x³) = x·(x²−y) − x³ = −xy; S(x²−y, xy) = y·(x²−y) − x·xy = −y²
        let r = ring(&["x", "y"]);
        let gb = groebner_basis(2, &parse_all(&r, &["x^2-y", "x^3"]), MonomialOrder::DegRevLex);
        assert_eq!(gb.polys(), parse_all(&r, &["x^2-y", "x*y", "y^2"]));
        assert!(gb.s_pairs_reduce_to_zero());
    }

    #[test]
    fn reduced_basis_of_variables() {
        let r = ring(&["x", "y"]);
        let gb = groebner_basis(2, &parse_all(&r, &["y", "x"]), MonomialOrder::DegRevLex);
        assert_eq!(gb.polys(), parse_all(&r, &["x", "y"]));
        assert!(gb.is_reduced());
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let gb = groebner_basis(2, &parse_all(&r, &["x"]), MonomialOrder::DegRevLex);
        assert!(gb.normal_form(&r.parse("x^2").unwrap()).is_zero());
        let f = r.parse("x*y + y^2 + 3").unwrap();
        let nf = gb.normal_form(&f);
        assert_eq!(nf, r.parse("y^2+3").unwrap());
        assert_eq!(gb.normal_form(&nf), nf);
    }

    #[test]
    fn koszul_syzygy() {
        let r = ring(&["x", "y"]);
        let syz = syzygies(&parse_all(&r, &["x", "y"])).unwrap();
        assert_eq!(syz.generators.len(), 1);
        let s = &syz.generators[0];
        // a multiple of (−y, x)
        assert_eq!(&(&s[0] * &r.parse("x").unwrap()) + &(&s[1] * &r.parse("y").unwrap()), Poly::zero(2));
        assert_eq!(s[0].total_degree(), Some(1));
        assert!(syzygies(&parse_all(&r, &["x^2+y"])).unwrap().generators.is_empty());
    }

    #[test]
    fn syzygies_of_normal_crossings_gradient() {
        let r = ring(&["x", "y", "z"]);
        let gens = parse_all(&r, &["y*z", "x*z", "x*y", "x*y*z"]);
        let syz = syzygies(&gens).unwrap();
        let vecs: Vec<PolyVec> = gens.iter().map(|g| vec![g.clone()]).collect();
        assert!(syz.annihilates(&vecs));
        // x∂x, y∂y, z∂z appear as (x,0,0,−1), (0,y,0,−1), (0,0,z,−1) in the span
        let lifter = Lifter::new(&syz.generators).unwrap();
        for t in [["x", "0", "0", "-1"], ["0", "y", "0", "-1"], ["0", "0", "z", "-1"]] {
            assert!(lifter.lift(&parse_all(&r, &t)).is_some());
        }
    }

    #[test]
    fn colon_examples() {
        let r = ring(&["x", "y"]);
        let c = colon_ideal(&parse_all(&r, &["x"]), &r.parse("x").unwrap()).unwrap();
        assert!(c.is_unit());
        let c = colon_ideal(&parse_all(&r, &["x^2*y"]), &r.parse("y").unwrap()).unwrap();
        assert_eq!(c.polys(), parse_all(&r, &["x^2"]));
        assert!(matches!(colon_ideal(&parse_all(&r, &["x"]), &Poly::zero(2)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn dimensions() {
        let r = ring(&["x", "y", "z"]);
        let gb = groebner_basis(3, &parse_all(&r, &["x", "y"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&gb), 1);
        let gb = groebner_basis(3, &parse_all(&r, &["1"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&gb), -1);
        let s = ring(&["x", "y", "z", "a", "b", "c"]);
        let gb = groebner_basis(6, &parse_all(&s, &["x*a", "y*b", "z*c"]), MonomialOrder::DegRevLex);
        assert_eq!(dimension(&gb), 3);
    }

    #[test]
    fn regular_sequences() {
        let s = ring(&["x", "y", "z", "a", "b", "c"]);
        let xi = [3, 4, 5];
        assert!(is_regular_sequence(&parse_all(&s, &["x*a", "y*b", "z*c"]), &xi).unwrap());
        assert!(!is_regular_sequence(&parse_all(&s, &["a", "a"]), &xi).unwrap());
        assert!(matches!(is_regular_sequence(&parse_all(&s, &["a + b^2"]), &xi), Err(Error::InvalidArgument(_))));
        let c = ring(&["x", "y", "a", "b"]);
        assert!(is_regular_sequence(&parse_all(&c, &["3*x*a+2*y*b", "-3*y^2*a-2*x*b"]), &[2, 3]).unwrap());
    }

    #[test]
    fn gcds() {
        let r = ring(&["x", "y"]);
        let f = r.parse("(x-y)^2*(x+1)").unwrap();
        let g = r.parse("(x-y)*(y+2)").unwrap();
        assert_eq!(gcd(&f, &g), r.parse("x-y").unwrap());
        assert_eq!(gcd(&r.parse("x").unwrap(), &r.parse("y").unwrap()), Poly::one(2));
    }

    #[test]
    fn lifting_recovers_coefficients() {
        let r = ring(&["x", "y"]);
        let gens = vec![parse_all(&r, &["x", "y"]), parse_all(&r, &["0", "x^2"])];
        let target = parse_all(&r, &["x*y", "y^2 + 3*x^3"]);
        let c = Lifter::new(&gens).unwrap().lift(&target).unwrap();
        for k in 0..2 {
            let mut acc = Poly::zero(2);
            for (ci, g) in c.iter().zip(&gens) {
                acc += &(ci * &g[k]);
            }
            assert_eq!(acc, target[k]);
        }
        assert!(Lifter::new(&gens).unwrap().lift(&parse_all(&r, &["1", "0"])).is_none());
    }

    #[test]
    fn module_orders() {
        let x = ExpVec::new(vec![1, 0]);
        let one = ExpVec::new(vec![0, 0]);
        let pot = ModuleOrder::new(MonomialOrder::DegRevLex, ModuleOrderKind::PositionOverTerm);
        let top = ModuleOrder::new(MonomialOrder::DegRevLex, ModuleOrderKind::TermOverPosition);
        assert_eq!(pot.cmp((0, &one), (1, &x)), Ordering::Greater);
        assert_eq!(top.cmp((0, &one), (1, &x)), Ordering::Less);
        let swapped = ModuleOrder { priority: Some(vec![1, 0]), ..pot };
        assert_eq!(swapped.cmp((0, &one), (1, &one)), Ordering::Less);
    }
}
