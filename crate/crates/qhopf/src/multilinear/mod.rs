//! Sparse exact tensors over a finite basis, operators between tensor
//! powers, and exact nullspaces.

pub mod kernel;
mod operator;
mod tensor;

use thiserror::Error;

use crate::exactnum::Field;

pub use kernel::kernel_basis;
pub use operator::{Functional, LinearOperator};
pub use tensor::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultilinearError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("leg {leg} out of range for rank {rank}")]
    LegOutOfRange { leg: usize, rank: usize },
    #[error("operator needs {expected} columns, found {found}")]
    ColumnCount { expected: usize, found: usize },
}

/// Multiplication table: `product(i, j)` is `e_i e_j` as a sparse vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants<F> {
    dim: usize,
    table: Vec<Vec<(usize, F)>>,
}

impl<F: Field> StructureConstants<F> {
    /// From `(i, j, k, c)` quadruples meaning `e_i e_j ∋ c e_k`.
    pub fn from_entries<I>(dim: usize, entries: I) -> StructureConstants<F>
    where
        I: IntoIterator<Item = (usize, usize, usize, F)>,
    {
        let mut dense: Vec<Vec<F>> = vec![vec![F::zero(); dim]; dim * dim];
        for (i, j, k, c) in entries {
            assert!(i < dim && j < dim && k < dim, "structure constant index out of range");
            dense[i * dim + j][k] += &c;
        }
        let table = dense
            .into_iter()
            .map(|row| row.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
            .collect();
        StructureConstants { dim, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim + j]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &F)> + '_ {
        self.table.iter().enumerate().flat_map(move |(ij, row)| {
            row.iter().map(move |(k, c)| (ij / self.dim, ij % self.dim, *k, c))
        })
    }

    /// Product of two rank-1 tensors.
    pub fn mul(&self, a: &TensorElement<F>, b: &TensorElement<F>) -> TensorElement<F> {
        a.mult_pointwise(self, b).expect("rank-1 operands of matching dimension")
    }

    /// Left multiplication by `e_i` as a row-major matrix.
    pub fn left_matrix(&self, i: usize) -> Vec<Vec<F>> {
        let mut m = vec![vec![F::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            for (k, c) in self.product(i, j) {
                m[*k][j] = c.clone();
            }
        }
        m
    }

    pub fn right_matrix(&self, i: usize) -> Vec<Vec<F>> {
        let mut m = vec![vec![F::zero(); self.dim]; self.dim];
        for j in 0..self.dim {
            for (k, c) in self.product(j, i) {
                m[*k][j] = c.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{Gaussian, Rational};

    type T = TensorElement<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    // group algebra of Z/2 on {1, g}
    fn z2() -> StructureConstants<Rational> {
        StructureConstants::from_entries(
            2,
            [(0, 0, 0, q(1, 1)), (0, 1, 1, q(1, 1)), (1, 0, 1, q(1, 1)), (1, 1, 0, q(1, 1))],
        )
    }

    fn one_plus_g() -> T {
        T::from_coords(&[q(1, 1), q(1, 1)])
    }

    #[test]
    fn tensor_product_expands() {
        let t = one_plus_g().tensor_product(&one_plus_g()).unwrap();
        assert_eq!(t.len(), 4);
        for idx in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            assert_eq!(t.get(&idx), q(1, 1));
        }
        assert!(one_plus_g().tensor_product(&T::zero(1, 2)).unwrap().is_zero());
    }

    #[test]
    fn packing_is_big_endian() {
        let t = T::basis(3, &[1, 2]);
        assert_eq!(t.packed().next().unwrap().0, 5);
        assert_eq!(t.unpack(5), vec![1, 2]);
    }

    #[test]
    fn pointwise_product_with_minus_projection() {
        // p- = (1-g)/2 is idempotent, so p-^{⊗3} squares to itself
        let pm = T::from_coords(&[q(1, 2), q(-1, 2)]);
        let p3 = pm.tensor_product(&pm).unwrap().tensor_product(&pm).unwrap();
        assert_eq!(p3.mult_pointwise(&z2(), &p3).unwrap(), p3);
        // Φ = 1 − 2 p-^{⊗3} is an involution
        let one3 = T::basis(2, &[0, 0, 0]);
        let phi = one3.sub(&p3.scale(&q(2, 1))).unwrap();
        assert_eq!(phi.mult_pointwise(&z2(), &phi).unwrap(), one3);
    }

    #[test]
    fn contraction_is_bilinear_probe() {
        let a = T::from_coords(&[q(3, 1), q(-1, 2)]);
        let b = T::from_coords(&[q(1, 5), q(2, 1)]);
        let f = Functional::new(vec![q(2, 1), q(7, 1)]);
        let lhs = a.tensor_product(&b).unwrap().contract(&f, 0).unwrap();
        assert_eq!(lhs, b.scale(&f.eval(&a)));
    }

    #[test]
    fn leg_errors() {
        let t = T::basis(2, &[0, 1]);
        let id = LinearOperator::identity(2);
        assert_eq!(t.apply_on_leg(&id, 0).unwrap(), t);
        assert!(matches!(t.apply_on_leg(&id, 2), Err(MultilinearError::LegOutOfRange { .. })));
        assert!(matches!(t.contract(&Functional::zero(2), 5), Err(MultilinearError::LegOutOfRange { .. })));
        assert!(matches!(t.tensor_product(&T::basis(3, &[0])), Err(MultilinearError::DimMismatch { .. })));
    }

    #[test]
    fn permutation_and_operator_composition() {
        let t = T::basis(3, &[0, 1, 2]);
        assert_eq!(t.permute_legs(&[2, 0, 1]), T::basis(3, &[2, 0, 1]));
        let m = vec![vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(0, 1)]];
        let swap = LinearOperator::from_matrix(&m);
        assert!(swap.compose(&swap).is_identity());
        assert_eq!(swap.inverse().unwrap(), swap);
    }

    #[test]
    fn works_over_gaussians() {
        let i = Gaussian::i();
        let t = TensorElement::<Gaussian>::from_coords(&[i.clone(), Gaussian::from(1)]);
        let f = Functional::new(vec![i.clone(), Gaussian::from(0)]);
        assert_eq!(f.eval(&t), Gaussian::from(-1));
    }
}
