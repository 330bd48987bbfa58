//! Evaluation of Sweedler-notation expressions.
//!
//! A [`Sw`] holds a sparse tensor whose legs carry handles. Tensor factors
//! are appended with [`Sw::put`], legs are split by the coproduct, and
//! legs are fused by evaluating words such as `S(x¹X²)αx²`. Every leg is
//! consumed by exactly one word, functional or pairing, mirroring how each
//! Sweedler component appears exactly once in a formula. Summation happens
//! as soon as legs are fused, which keeps intermediate tensors small.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::exactnum::Field;
use crate::multilinear::{Functional, LinearOperator, TensorElement};

use super::QhaPresentation;

/// Handle of one tensor leg inside an [`Sw`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Leg(u32);

/// Linear maps that may wrap a subword.
#[derive(Clone, Debug)]
pub enum Op<F> {
    S,
    SInv,
    /// `S^k`, negative powers use `S⁻¹`.
    Pow(i32),
    Custom(Arc<LinearOperator<F>>),
}

/// One factor of a word.
#[derive(Clone, Debug)]
pub enum Atom<F> {
    Leg(Leg),
    Elem(TensorElement<F>),
    Map(Op<F>, Vec<Atom<F>>),
}

impl<F> From<Leg> for Atom<F> {
    fn from(l: Leg) -> Atom<F> {
        Atom::Leg(l)
    }
}

impl<F: Clone> From<&TensorElement<F>> for Atom<F> {
    fn from(t: &TensorElement<F>) -> Atom<F> {
        Atom::Elem(t.clone())
    }
}

/// Builds a word from legs, elements and wrapped subwords.
#[macro_export]
macro_rules! w {
    ($($x:expr),* $(,)?) => { vec![$($crate::qha::sweedler::Atom::from($x)),*] };
}

pub fn s<F>(word: Vec<Atom<F>>) -> Atom<F> {
    Atom::Map(Op::S, word)
}

pub fn si<F>(word: Vec<Atom<F>>) -> Atom<F> {
    Atom::Map(Op::SInv, word)
}

pub fn sp<F>(k: i32, word: Vec<Atom<F>>) -> Atom<F> {
    Atom::Map(Op::Pow(k), word)
}

pub fn apply<F>(op: &Arc<LinearOperator<F>>, word: Vec<Atom<F>>) -> Atom<F> {
    Atom::Map(Op::Custom(op.clone()), word)
}

type Sparse<F> = Vec<(usize, F)>;

/// Per-algebra tables used by the evaluator.
pub(crate) struct SwTables<F> {
    dim: usize,
    mult: Vec<Sparse<F>>,
    coproduct: Vec<Vec<(usize, usize, F)>>,
    dual_coproduct: Vec<Vec<(usize, usize, F)>>,
    antipode: Vec<Sparse<F>>,
    antipode_inv: Option<Vec<Sparse<F>>>,
    unit: Sparse<F>,
}

fn op_columns<F: Field>(op: &LinearOperator<F>) -> Vec<Sparse<F>> {
    op.columns().iter().map(|c| c.iter().map(|(i, v)| (i[0], v.clone())).collect()).collect()
}

impl<F: Field> SwTables<F> {
    pub(crate) fn new(h: &QhaPresentation<F>) -> SwTables<F> {
        let n = h.dim();
        let mult = (0..n * n).map(|ij| h.mult().product(ij / n, ij % n).to_vec()).collect();
        let coproduct = h
            .coproduct()
            .columns()
            .iter()
            .map(|c| c.iter().map(|(ix, v)| (ix[0], ix[1], v.clone())).collect())
            .collect();
        let mut dual_coproduct = vec![Vec::new(); n];
        for (a, b, k, c) in h.mult().entries() {
            dual_coproduct[k].push((a, b, c.clone()));
        }
        SwTables {
            dim: n,
            mult,
            coproduct,
            dual_coproduct,
            antipode: op_columns(h.antipode()),
            antipode_inv: h.antipode_inverse().ok().map(|s| op_columns(&s)),
            unit: h.unit().iter().map(|(i, v)| (i[0], v.clone())).collect(),
        }
    }

    fn right_mul(&self, acc: &[(usize, F)], rhs: &[(usize, F)]) -> Sparse<F> {
        let mut dense: Vec<Option<F>> = vec![None; self.dim];
        for (a, va) in acc {
            for (b, vb) in rhs {
                let ab = va.times(vb);
                for (k, m) in &self.mult[a * self.dim + b] {
                    let c = ab.times(m);
                    match &mut dense[*k] {
                        Some(x) => *x += &c,
                        slot => *slot = Some(c),
                    }
                }
            }
        }
        compress(dense)
    }

    fn apply(&self, op: &Op<F>, v: &[(usize, F)]) -> Sparse<F> {
        match op {
            Op::S => self.apply_cols(&self.antipode, v),
            Op::SInv => self.apply_cols(self.sinv(), v),
            Op::Pow(k) => {
                let cols = if *k >= 0 { &self.antipode } else { self.sinv() };
                let mut out = v.to_vec();
                for _ in 0..k.unsigned_abs() {
                    out = self.apply_cols(cols, &out);
                }
                out
            }
            Op::Custom(m) => {
                let mut dense: Vec<Option<F>> = vec![None; self.dim];
                for (a, va) in v {
                    for (ix, c) in m.column(*a).iter() {
                        let x = va.times(c);
                        match &mut dense[ix[0]] {
                            Some(y) => *y += &x,
                            slot => *slot = Some(x),
                        }
                    }
                }
                compress(dense)
            }
        }
    }

    fn sinv(&self) -> &Vec<Sparse<F>> {
        self.antipode_inv.as_ref().expect("antipode is not invertible")
    }

    fn apply_cols(&self, cols: &[Sparse<F>], v: &[(usize, F)]) -> Sparse<F> {
        let mut dense: Vec<Option<F>> = vec![None; self.dim];
        for (a, va) in v {
            for (k, c) in &cols[*a] {
                let x = va.times(c);
                match &mut dense[*k] {
                    Some(y) => *y += &x,
                    slot => *slot = Some(x),
                }
            }
        }
        compress(dense)
    }

    fn eval(&self, word: &[Atom<F>], digit: &dyn Fn(Leg) -> usize) -> Sparse<F> {
        let mut acc: Option<Sparse<F>> = None;
        for atom in word {
            let v: Sparse<F> = match atom {
                Atom::Leg(l) => vec![(digit(*l), F::one())],
                Atom::Elem(t) => t.iter().map(|(i, c)| (i[0], c.clone())).collect(),
                Atom::Map(op, inner) => {
                    let x = self.eval(inner, digit);
                    self.apply(op, &x)
                }
            };
            acc = Some(match acc {
                None => v,
                Some(a) => self.right_mul(&a, &v),
            });
            if acc.as_ref().is_some_and(|a| a.is_empty()) {
                return Vec::new();
            }
        }
        acc.unwrap_or_else(|| self.unit.clone())
    }
}

fn compress<F: Field>(dense: Vec<Option<F>>) -> Sparse<F> {
    dense.into_iter().enumerate().filter_map(|(k, c)| c.filter(|c| !c.is_zero()).map(|c| (k, c))).collect()
}

fn collect_legs<F>(word: &[Atom<F>], out: &mut Vec<Leg>) {
    for atom in word {
        match atom {
            Atom::Leg(l) => out.push(*l),
            Atom::Elem(_) => {}
            Atom::Map(_, inner) => collect_legs(inner, out),
        }
    }
}

/// A Sweedler-notation expression under evaluation.
pub struct Sw<'a, F: Field> {
    tables: &'a SwTables<F>,
    legs: Vec<Leg>,
    terms: FxHashMap<u128, F>,
    next: u32,
}

impl<'a, F: Field> Sw<'a, F> {
    /// The scalar `1` with no legs.
    pub fn new(h: &'a QhaPresentation<F>) -> Sw<'a, F> {
        let tables = h.sw_tables();
        let mut terms = FxHashMap::default();
        terms.insert(0, F::one());
        Sw { tables, legs: Vec::new(), terms, next: 0 }
    }

    fn fresh(&mut self) -> Leg {
        self.next += 1;
        Leg(self.next)
    }

    fn base(&self) -> u128 {
        self.tables.dim as u128
    }

    fn decode(&self, mut key: u128, out: &mut Vec<usize>) {
        out.clear();
        out.resize(self.legs.len(), 0);
        let b = self.base();
        for slot in out.iter_mut().rev() {
            *slot = (key % b) as usize;
            key /= b;
        }
    }

    fn encode(&self, digits: impl Iterator<Item = usize>) -> u128 {
        let b = self.base();
        digits.fold(0u128, |acc, d| acc * b + d as u128)
    }

    fn check_width(&self, legs: usize) {
        let ok = (self.tables.dim as u128).checked_pow(legs as u32).is_some();
        assert!(ok, "too many legs for packed evaluation");
    }

    fn position(&self, l: Leg) -> usize {
        self.legs.iter().position(|&x| x == l).expect("leg is not live")
    }

    /// Number of stored terms, useful for tuning evaluation order.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&mut self, c: &F) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for v in self.terms.values_mut() {
            *v = v.times(c);
        }
    }

    /// Appends the legs of `t`.
    pub fn put(&mut self, t: &TensorElement<F>) -> Vec<Leg> {
        let k = t.rank();
        self.check_width(self.legs.len() + k);
        let shift = self.base().pow(k as u32);
        let factor: Vec<(u128, &F)> = t.iter().map(|(ix, c)| (self.encode(ix.into_iter()), c)).collect();
        let mut terms = FxHashMap::default();
        for (key, c) in &self.terms {
            for (kt, ct) in &factor {
                terms.insert(key * shift + kt, c.times(ct));
            }
        }
        self.terms = terms;
        let new: Vec<Leg> = (0..k).map(|_| self.fresh()).collect();
        self.legs.extend(&new);
        new
    }

    pub fn put1(&mut self, t: &TensorElement<F>) -> Leg {
        assert_eq!(t.rank(), 1);
        self.put(t)[0]
    }

    pub fn put2(&mut self, t: &TensorElement<F>) -> (Leg, Leg) {
        assert_eq!(t.rank(), 2);
        let l = self.put(t);
        (l[0], l[1])
    }

    pub fn put3(&mut self, t: &TensorElement<F>) -> (Leg, Leg, Leg) {
        assert_eq!(t.rank(), 3);
        let l = self.put(t);
        (l[0], l[1], l[2])
    }

    /// Appends `Σ_i e_i ⊗ e_i`: a label leg that records the basis index
    /// and a working leg carrying `e_i`.
    pub fn label(&mut self) -> (Leg, Leg) {
        let n = self.tables.dim;
        let diag = TensorElement::from_entries(2, n, (0..n).map(|i| (vec![i, i], F::one())));
        self.put2(&diag)
    }

    fn rewrite(&mut self, mut f: impl FnMut(&[usize], &F, &mut dyn FnMut(Vec<usize>, F))) {
        let mut terms: FxHashMap<u128, F> = FxHashMap::default();
        let mut digits = Vec::new();
        let old = std::mem::take(&mut self.terms);
        let b = self.base();
        for (key, c) in &old {
            self.decode(*key, &mut digits);
            f(&digits, c, &mut |nd: Vec<usize>, v: F| {
                let k = nd.iter().fold(0u128, |acc, &d| acc * b + d as u128);
                match terms.entry(k) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += &v;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(v);
                    }
                }
            });
        }
        terms.retain(|_, v| !v.is_zero());
        self.terms = terms;
    }

    /// Replaces `l` by the two legs of its coproduct, in place.
    pub fn split(&mut self, l: Leg) -> (Leg, Leg) {
        self.split_with(l, false)
    }

    /// Splits a leg that holds a dual basis index `e^i` by the coproduct of
    /// `H*` dual to the multiplication: `φ(ab) = φ₁(a)φ₂(b)`.
    pub fn split_dual(&mut self, l: Leg) -> (Leg, Leg) {
        self.split_with(l, true)
    }

    fn split_with(&mut self, l: Leg, dual: bool) -> (Leg, Leg) {
        self.check_width(self.legs.len() + 1);
        let p = self.position(l);
        let tables = self.tables;
        let table = if dual { &tables.dual_coproduct } else { &tables.coproduct };
        self.rewrite(|d, c, emit| {
            for (a, b, v) in &table[d[p]] {
                let mut nd = Vec::with_capacity(d.len() + 1);
                nd.extend_from_slice(&d[..p]);
                nd.push(*a);
                nd.push(*b);
                nd.extend_from_slice(&d[p + 1..]);
                emit(nd, c.times(v));
            }
        });
        let (a, b) = (self.fresh(), self.fresh());
        self.legs.splice(p..p + 1, [a, b]);
        (a, b)
    }

    /// Consumes the legs of `word` and appends one leg holding its value.
    pub fn word(&mut self, word: Vec<Atom<F>>) -> Leg {
        self.consume(word, Sink::Leg);
        let l = self.fresh();
        self.legs.push(l);
        l
    }

    /// Consumes the legs of `word` into the coefficient `f(word)`.
    pub fn scalar(&mut self, f: &Functional<F>, word: Vec<Atom<F>>) {
        self.consume(word, Sink::Functional(f));
    }

    /// Consumes a dual-index leg `l` and the legs of `word` into the
    /// coefficient `e^l(word)`.
    pub fn pair(&mut self, l: Leg, word: Vec<Atom<F>>) {
        self.consume(word, Sink::Pair(self.position(l)));
    }

    /// Shorthand for `S` on one leg.
    pub fn map(&mut self, l: Leg, op: Op<F>) -> Leg {
        self.word(vec![Atom::Map(op, vec![Atom::Leg(l)])])
    }

    fn consume(&mut self, word: Vec<Atom<F>>, sink: Sink<'_, F>) {
        let mut used = Vec::new();
        collect_legs(&word, &mut used);
        let positions: Vec<usize> = used.iter().map(|&l| self.position(l)).collect();
        for (i, p) in positions.iter().enumerate() {
            assert!(!positions[..i].contains(p), "leg used twice in one word");
        }
        if let Sink::Pair(p) = sink {
            assert!(!positions.contains(&p), "pairing leg inside its own word");
        }
        let mut drop: Vec<usize> = positions.clone();
        if let Sink::Pair(p) = sink {
            drop.push(p);
        }
        let keep: Vec<usize> = (0..self.legs.len()).filter(|i| !drop.contains(i)).collect();
        let tables = self.tables;
        let mut cache: FxHashMap<Vec<usize>, Sparse<F>> = FxHashMap::default();
        let legs = self.legs.clone();
        let pos_of = |l: Leg| legs.iter().position(|&x| x == l).expect("live leg");
        if matches!(sink, Sink::Leg) {
            self.check_width(keep.len() + 1);
        }
        self.rewrite(|d, c, emit| {
            let sub: Vec<usize> = positions.iter().map(|&p| d[p]).collect();
            let value = cache.entry(sub).or_insert_with(|| tables.eval(&word, &|l| d[pos_of(l)]));
            let rest = keep.iter().map(|&i| d[i]);
            match sink {
                Sink::Leg => {
                    for (k, v) in value.iter() {
                        let mut nd: Vec<usize> = rest.clone().collect();
                        nd.push(*k);
                        emit(nd, c.times(v));
                    }
                }
                Sink::Functional(f) => {
                    let mut acc = F::zero();
                    for (k, v) in value.iter() {
                        let w = &f.coords()[*k];
                        if !w.is_zero() {
                            acc += &v.times(w);
                        }
                    }
                    if !acc.is_zero() {
                        emit(rest.collect(), c.times(&acc));
                    }
                }
                Sink::Pair(p) => {
                    if let Some((_, v)) = value.iter().find(|(k, _)| *k == d[p]) {
                        emit(rest.collect(), c.times(v));
                    }
                }
            }
        });
        self.legs = keep.iter().map(|&i| self.legs[i]).collect();
    }

    /// Ends evaluation, returning the tensor with legs in the given order.
    pub fn finish(self, order: &[Leg]) -> TensorElement<F> {
        assert_eq!(order.len(), self.legs.len(), "every live leg must be placed");
        let perm: Vec<usize> = order.iter().map(|&l| self.position(l)).collect();
        let mut out = TensorElement::zero(order.len(), self.tables.dim);
        let mut digits = Vec::new();
        for (key, c) in &self.terms {
            self.decode(*key, &mut digits);
            let ix: Vec<usize> = perm.iter().map(|&p| digits[p]).collect();
            out.add_at(&ix, c.clone());
        }
        out
    }

    /// Ends evaluation of an expression without free legs.
    pub fn finish_scalar(self) -> F {
        assert!(self.legs.is_empty(), "free legs remain");
        self.terms.get(&0).cloned().unwrap_or_else(F::zero)
    }
}

#[derive(Clone, Copy)]
enum Sink<'f, F> {
    Leg,
    Functional(&'f Functional<F>),
    Pair(usize),
}
