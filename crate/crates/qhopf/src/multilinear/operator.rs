use crate::exactnum::Field;

use super::{kernel, MultilinearError, TensorElement};

/// A covector on `H`, stored densely.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Functional<F> {
    coords: Vec<F>,
}

impl<F: Field> Functional<F> {
    pub fn new(coords: Vec<F>) -> Functional<F> {
        assert!(!coords.is_empty(), "functional on a zero-dimensional space");
        Functional { coords }
    }

    pub fn zero(dim: usize) -> Functional<F> {
        Functional::new(vec![F::zero(); dim])
    }

    /// The dual basis vector `e^i`.
    pub fn dual_basis(dim: usize, i: usize) -> Functional<F> {
        let mut f = Functional::zero(dim);
        f.coords[i] = F::one();
        f
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn at(&self, i: usize) -> F {
        self.coords[i].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, v: &TensorElement<F>) -> F {
        assert_eq!(v.rank(), 1, "functional evaluated on rank-1 tensors");
        assert_eq!(v.dim(), self.dim(), "dimension");
        let mut acc = F::zero();
        for (k, c) in v.packed() {
            let w = &self.coords[k as usize];
            if !w.is_zero() {
                acc += &c.times(w);
            }
        }
        acc
    }

    pub fn scale(&self, c: &F) -> Functional<F> {
        Functional::new(self.coords.iter().map(|v| v.times(c)).collect())
    }

    pub fn add(&self, other: &Functional<F>) -> Functional<F> {
        assert_eq!(self.dim(), other.dim());
        Functional::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b).collect())
    }

    pub fn sub(&self, other: &Functional<F>) -> Functional<F> {
        self.add(&other.scale(&-F::one()))
    }

    /// `self ∘ op` for an operator `H → H`.
    pub fn compose(&self, op: &LinearOperator<F>) -> Functional<F> {
        assert_eq!(op.src_rank(), 1);
        assert_eq!(op.dst_rank(), 1);
        Functional::new((0..self.dim()).map(|i| self.eval(op.column(i))).collect())
    }

    pub fn as_tensor(&self) -> TensorElement<F> {
        TensorElement::from_coords(&self.coords)
    }
}

/// A linear map `H^{⊗src} → H^{⊗dst}` given by its images of basis tensors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOperator<F> {
    src_rank: usize,
    dst_rank: usize,
    dim: usize,
    columns: Vec<TensorElement<F>>,
}

impl<F: Field> LinearOperator<F> {
    pub fn new(src_rank: usize, dst_rank: usize, dim: usize, columns: Vec<TensorElement<F>>) -> Result<Self, MultilinearError> {
        let expected = dim.pow(src_rank as u32);
        if columns.len() != expected {
            return Err(MultilinearError::ColumnCount { expected, found: columns.len() });
        }
        for c in &columns {
            if c.rank() != dst_rank {
                return Err(MultilinearError::RankMismatch { left: c.rank(), right: dst_rank });
            }
            if c.dim() != dim {
                return Err(MultilinearError::DimMismatch { left: c.dim(), right: dim });
            }
        }
        Ok(LinearOperator { src_rank, dst_rank, dim, columns })
    }

    pub fn identity(dim: usize) -> LinearOperator<F> {
        let columns = (0..dim).map(|i| TensorElement::basis(dim, &[i])).collect();
        LinearOperator { src_rank: 1, dst_rank: 1, dim, columns }
    }

    /// Builds an endomorphism of `H` from a row-major dense matrix
    /// (`matrix[row][col]`, columns are images).
    pub fn from_matrix(matrix: &[Vec<F>]) -> LinearOperator<F> {
        let dim = matrix.len();
        let columns = (0..dim)
            .map(|j| TensorElement::from_coords(&(0..dim).map(|i| matrix[i][j].clone()).collect::<Vec<_>>()))
            .collect();
        LinearOperator { src_rank: 1, dst_rank: 1, dim, columns }
    }

    pub fn src_rank(&self) -> usize {
        self.src_rank
    }

    pub fn dst_rank(&self) -> usize {
        self.dst_rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, i: usize) -> &TensorElement<F> {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[TensorElement<F>] {
        &self.columns
    }

    pub fn apply(&self, v: &TensorElement<F>) -> TensorElement<F> {
        assert_eq!(v.rank(), self.src_rank, "operator source rank");
        let mut out = TensorElement::zero(self.dst_rank, self.dim);
        for (k, c) in v.packed() {
            for (kk, w) in self.columns[k as usize].packed() {
                out.add_packed(kk, c.times(w));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearOperator<F>) -> LinearOperator<F> {
        assert_eq!(other.dst_rank, self.src_rank);
        let columns = other.columns.iter().map(|c| self.apply(c)).collect();
        LinearOperator { src_rank: other.src_rank, dst_rank: self.dst_rank, dim: self.dim, columns }
    }

    /// Row-major dense matrix of an endomorphism of `H`.
    pub fn matrix(&self) -> Vec<Vec<F>> {
        assert!(self.src_rank == 1 && self.dst_rank == 1, "matrix of H → H");
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.columns[j].coord(i)).collect()).collect()
    }

    pub fn inverse(&self) -> Option<LinearOperator<F>> {
        kernel::invert(&self.matrix()).map(|m| LinearOperator::from_matrix(&m))
    }

    pub fn pow(&self, k: u32) -> LinearOperator<F> {
        (0..k).fold(LinearOperator::identity(self.dim), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.src_rank == 1
            && self.dst_rank == 1
            && self.columns.iter().enumerate().all(|(i, c)| *c == TensorElement::basis(self.dim, &[i]))
    }
}
