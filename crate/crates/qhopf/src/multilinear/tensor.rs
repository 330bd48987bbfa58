use std::collections::BTreeMap;
use std::fmt;

use crate::exactnum::Field;

use super::{Functional, LinearOperator, MultilinearError, StructureConstants};

/// A sparse element of `H^{⊗k}` in a fixed basis of `H`.
///
/// Multi-indices are packed big-endian in leg order: leg 0 is the most
/// significant digit in base `dim`. Stored coefficients are never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement<F> {
    rank: usize,
    dim: usize,
    entries: BTreeMap<u64, F>,
}

pub(crate) fn check_packable(rank: usize, dim: usize) {
    let ok = (dim as u128).checked_pow(rank as u32).is_some_and(|v| v <= u64::MAX as u128 + 1);
    assert!(ok, "{dim}^{rank} does not fit a packed u64 index");
}

impl<F: Field> TensorElement<F> {
    pub fn zero(rank: usize, dim: usize) -> TensorElement<F> {
        assert!(rank >= 1, "tensor rank must be at least 1");
        assert!(dim >= 1, "dimension must be at least 1");
        check_packable(rank, dim);
        TensorElement { rank, dim, entries: BTreeMap::new() }
    }

    /// The basis tensor `e_{i_0} ⊗ … ⊗ e_{i_{k-1}}`.
    pub fn basis(dim: usize, index: &[usize]) -> TensorElement<F> {
        let mut t = TensorElement::zero(index.len(), dim);
        t.add_at(index, F::one());
        t
    }

    pub fn from_entries<I>(rank: usize, dim: usize, entries: I) -> TensorElement<F>
    where
        I: IntoIterator<Item = (Vec<usize>, F)>,
    {
        let mut t = TensorElement::zero(rank, dim);
        for (index, c) in entries {
            t.add_at(&index, c);
        }
        t
    }

    /// A rank-1 tensor from dense coordinates.
    pub fn from_coords(coords: &[F]) -> TensorElement<F> {
        let mut t = TensorElement::zero(1, coords.len());
        for (i, c) in coords.iter().enumerate() {
            t.add_packed(i as u64, c.clone());
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn pack(&self, index: &[usize]) -> u64 {
        assert_eq!(index.len(), self.rank, "index length");
        index.iter().fold(0u64, |acc, &i| {
            assert!(i < self.dim, "basis index {i} out of range");
            acc * self.dim as u64 + i as u64
        })
    }

    pub fn unpack(&self, mut key: u64) -> Vec<usize> {
        let mut out = vec![0; self.rank];
        for slot in out.iter_mut().rev() {
            *slot = (key % self.dim as u64) as usize;
            key /= self.dim as u64;
        }
        out
    }

    pub fn get(&self, index: &[usize]) -> F {
        self.entries.get(&self.pack(index)).cloned().unwrap_or_else(F::zero)
    }

    /// Coordinate of a rank-1 tensor.
    pub fn coord(&self, i: usize) -> F {
        debug_assert_eq!(self.rank, 1);
        self.entries.get(&(i as u64)).cloned().unwrap_or_else(F::zero)
    }

    pub fn coords(&self) -> Vec<F> {
        assert_eq!(self.rank, 1, "coords of a rank-1 tensor");
        (0..self.dim).map(|i| self.coord(i)).collect()
    }

    pub fn add_at(&mut self, index: &[usize], c: F) {
        let key = self.pack(index);
        self.add_packed(key, c);
    }

    pub(crate) fn add_packed(&mut self, key: u64, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Entries in packed order with unpacked multi-indices.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &F)> + '_ {
        self.entries.iter().map(move |(&k, c)| (self.unpack(k), c))
    }

    pub(crate) fn packed(&self) -> impl Iterator<Item = (u64, &F)> + '_ {
        self.entries.iter().map(|(&k, c)| (k, c))
    }

    fn same_shape(&self, other: &TensorElement<F>) -> Result<(), MultilinearError> {
        if self.dim != other.dim {
            return Err(MultilinearError::DimMismatch { left: self.dim, right: other.dim });
        }
        if self.rank != other.rank {
            return Err(MultilinearError::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn add(&self, other: &TensorElement<F>) -> Result<TensorElement<F>, MultilinearError> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (k, c) in other.packed() {
            out.add_packed(k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement<F>) -> Result<TensorElement<F>, MultilinearError> {
        self.add(&other.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> TensorElement<F> {
        let mut out = TensorElement::zero(self.rank, self.dim);
        if !c.is_zero() {
            for (k, v) in self.packed() {
                out.entries.insert(k, v.times(c));
            }
        }
        out
    }

    pub fn tensor_product(&self, other: &TensorElement<F>) -> Result<TensorElement<F>, MultilinearError> {
        if self.dim != other.dim {
            return Err(MultilinearError::DimMismatch { left: self.dim, right: other.dim });
        }
        let mut out = TensorElement::zero(self.rank + other.rank, self.dim);
        let shift = (self.dim as u64).pow(other.rank as u32);
        for (ka, a) in self.packed() {
            for (kb, b) in other.packed() {
                out.entries.insert(ka * shift + kb, a.times(b));
            }
        }
        Ok(out)
    }

    /// Reorders legs: leg `l` of the result is leg `order[l]` of `self`.
    pub fn permute_legs(&self, order: &[usize]) -> TensorElement<F> {
        assert_eq!(order.len(), self.rank, "permutation length");
        let mut seen = vec![false; self.rank];
        for &o in order {
            assert!(o < self.rank && !seen[o], "not a permutation");
            seen[o] = true;
        }
        let mut out = TensorElement::zero(self.rank, self.dim);
        for (index, c) in self.iter() {
            let permuted: Vec<usize> = order.iter().map(|&o| index[o]).collect();
            out.add_at(&permuted, c.clone());
        }
        out
    }

    /// Applies a rank-1 source operator on one leg; the leg is replaced by
    /// `op.dst_rank()` legs at the same position.
    pub fn apply_on_leg(&self, op: &LinearOperator<F>, leg: usize) -> Result<TensorElement<F>, MultilinearError> {
        if leg >= self.rank {
            return Err(MultilinearError::LegOutOfRange { leg, rank: self.rank });
        }
        if op.src_rank() != 1 {
            return Err(MultilinearError::RankMismatch { left: op.src_rank(), right: 1 });
        }
        if op.dim() != self.dim {
            return Err(MultilinearError::DimMismatch { left: op.dim(), right: self.dim });
        }
        let new_rank = self.rank - 1 + op.dst_rank();
        let mut out = TensorElement::zero(new_rank, self.dim);
        for (index, c) in self.iter() {
            for (img, v) in op.column(index[leg]).iter() {
                let mut target = Vec::with_capacity(new_rank);
                target.extend_from_slice(&index[..leg]);
                target.extend_from_slice(&img);
                target.extend_from_slice(&index[leg + 1..]);
                out.add_at(&target, c.times(v));
            }
        }
        Ok(out)
    }

    /// Evaluates `f` on one leg. Rank-1 inputs go through
    /// [`TensorElement::contract_to_scalar`] instead.
    pub fn contract(&self, f: &Functional<F>, leg: usize) -> Result<TensorElement<F>, MultilinearError> {
        if leg >= self.rank {
            return Err(MultilinearError::LegOutOfRange { leg, rank: self.rank });
        }
        if f.dim() != self.dim {
            return Err(MultilinearError::DimMismatch { left: f.dim(), right: self.dim });
        }
        if self.rank == 1 {
            return Err(MultilinearError::RankMismatch { left: 1, right: 2 });
        }
        let mut out = TensorElement::zero(self.rank - 1, self.dim);
        for (mut index, c) in self.iter() {
            let w = f.at(index.remove(leg));
            if !w.is_zero() {
                out.add_at(&index, c.times(&w));
            }
        }
        Ok(out)
    }

    pub fn contract_to_scalar(&self, f: &Functional<F>) -> Result<F, MultilinearError> {
        if self.rank != 1 {
            return Err(MultilinearError::RankMismatch { left: self.rank, right: 1 });
        }
        Ok(f.eval(self))
    }

    /// Leg-wise product in `H^{⊗k}` using the algebra's structure constants.
    pub fn mult_pointwise(
        &self,
        mult: &StructureConstants<F>,
        other: &TensorElement<F>,
    ) -> Result<TensorElement<F>, MultilinearError> {
        self.same_shape(other)?;
        if mult.dim() != self.dim {
            return Err(MultilinearError::DimMismatch { left: mult.dim(), right: self.dim });
        }
        let mut out = TensorElement::zero(self.rank, self.dim);
        for (ia, a) in self.iter() {
            for (ib, b) in other.iter() {
                let ab = a.times(b);
                let factors: Vec<&[(usize, F)]> =
                    ia.iter().zip(&ib).map(|(&i, &j)| mult.product(i, j)).collect();
                if factors.iter().any(|f| f.is_empty()) {
                    continue;
                }
                expand_product(&factors, &ab, &mut out);
            }
        }
        Ok(out)
    }

    /// Image under `op` applied to every leg (e.g. `S ⊗ S`).
    pub fn map_all_legs(&self, op: &LinearOperator<F>) -> TensorElement<F> {
        let mut t = self.clone();
        for leg in 0..self.rank {
            t = t.apply_on_leg(op, leg).expect("shape checked");
        }
        t
    }
}

/// Adds `scale * (v_0 ⊗ v_1 ⊗ …)` into `out` for sparse vectors `v_l`.
pub(crate) fn expand_product<F: Field>(factors: &[&[(usize, F)]], scale: &F, out: &mut TensorElement<F>) {
    let k = factors.len();
    let mut pos = vec![0usize; k];
    loop {
        let mut c = scale.clone();
        let mut key = 0u64;
        for l in 0..k {
            let (idx, v) = &factors[l][pos[l]];
            c = c * v;
            key = key * out.dim as u64 + *idx as u64;
        }
        out.add_packed(key, c);
        let mut l = k;
        loop {
            if l == 0 {
                return;
            }
            l -= 1;
            pos[l] += 1;
            if pos[l] < factors[l].len() {
                break;
            }
            pos[l] = 0;
        }
    }
}

impl<F: fmt::Debug> fmt::Debug for TensorElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}[", self.rank)?;
        for (n, (key, c)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            let mut index = vec![0; self.rank];
            let mut rest = *key;
            for slot in index.iter_mut().rev() {
                *slot = (rest % self.dim as u64) as usize;
                rest /= self.dim as u64;
            }
            write!(f, "{index:?}:{c:?}")?;
        }
        write!(f, "]")
    }
}
