//! Exact linear solving.
//!
//! Forward elimination is fraction-free in the Bareiss style: every update
//! is `(p·a − b·c) / p_prev`, which divides exactly. Back-substitution then
//! normalizes pivots to one.

use crate::exactnum::Field;

struct Echelon<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

fn bareiss<F: Field>(rows: &[Vec<F>], ncols: usize) -> Echelon<F> {
    let mut m: Vec<Vec<F>> = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .map(|r| {
            assert_eq!(r.len(), ncols, "row length");
            r.clone()
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = F::one();
    let mut top = 0;
    for col in 0..ncols {
        if top == m.len() {
            break;
        }
        let Some(p) = (top..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(top, p);
        let (head, tail) = m.split_at_mut(top + 1);
        let pivot_row = &head[top];
        let pivot = pivot_row[col].clone();
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for row in tail.iter_mut() {
            let lead = std::mem::replace(&mut row[col], F::zero());
            if lead.is_zero() {
                if !prev_inv.is_one() {
                    for c in &mut row[col + 1..ncols] {
                        *c = c.times(&pivot).times(&prev_inv);
                    }
                }
                continue;
            }
            for j in col + 1..ncols {
                let v = pivot.times(&row[j]) - lead.times(&pivot_row[j]);
                row[j] = v.times(&prev_inv);
            }
        }
        prev = pivot;
        pivots.push(col);
        top += 1;
    }
    m.truncate(top);
    Echelon { rows: m, pivots }
}

fn reduce<F: Field>(ech: &mut Echelon<F>) {
    for k in (0..ech.pivots.len()).rev() {
        let col = ech.pivots[k];
        let inv = ech.rows[k][col].inv().expect("pivot is nonzero");
        for v in ech.rows[k].iter_mut() {
            *v = v.times(&inv);
        }
        for r in 0..k {
            let factor = ech.rows[r][col].clone();
            if factor.is_zero() {
                continue;
            }
            for j in col..ech.rows[r].len() {
                let delta = factor.times(&ech.rows[k][j]);
                ech.rows[r][j] = ech.rows[r][j].clone() - &delta;
            }
        }
    }
}

/// Basis of `{x : row·x = 0 for every row}` over `ncols` unknowns.
///
/// One vector per free column, with a one in that column, in increasing
/// column order.
pub fn kernel_basis<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut ech = bareiss(rows, ncols);
    reduce(&mut ech);
    let mut is_pivot = vec![false; ncols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (k, &p) in ech.pivots.iter().enumerate() {
                v[p] = -ech.rows[k][free].clone();
            }
            v
        })
        .collect()
}

pub fn rank<F: Field>(rows: &[Vec<F>], ncols: usize) -> usize {
    bareiss(rows, ncols).pivots.len()
}

/// Reduced row echelon form of the row space, without zero rows.
pub fn row_echelon<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut ech = bareiss(rows, ncols);
    reduce(&mut ech);
    ech.rows
}

/// Inverse of a square row-major matrix, `None` when singular.
pub fn invert<F: Field>(matrix: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = matrix.len();
    let augmented: Vec<Vec<F>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            r
        })
        .collect();
    let mut ech = bareiss(&augmented, 2 * n);
    if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
        return None;
    }
    reduce(&mut ech);
    Some(ech.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Scales `v` so its first nonzero coordinate is one.
pub fn normalize_leading<F: Field>(v: &[F]) -> Vec<F> {
    match v.iter().find(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero");
            v.iter().map(|c| c.times(&inv)).collect()
        }
    }
}

/// Whether two vectors span the same line (both nonzero).
pub fn same_line<F: Field>(a: &[F], b: &[F]) -> bool {
    a.len() == b.len()
        && a.iter().any(|c| !c.is_zero())
        && b.iter().any(|c| !c.is_zero())
        && normalize_leading(a) == normalize_leading(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn residual_is_zero(rows: &[Vec<Rational>], v: &[Rational]) -> bool {
        rows.iter().all(|r| r.iter().zip(v).fold(Rational::from_integer(0), |acc, (a, b)| acc + &(a * b)) == q(0))
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let rows = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]];
        assert!(kernel_basis(&rows, 3).is_empty());
    }

    #[test]
    fn zero_row_gives_full_kernel() {
        assert_eq!(kernel_basis(&[vec![q(0), q(0)]], 2).len(), 2);
    }

    #[test]
    fn kernel_vectors_satisfy_rows() {
        let rows = vec![
            vec![q(2), q(4), q(-2), q(0)],
            vec![q(1), q(2), q(-1), q(3)],
            vec![q(3), q(6), q(-3), q(3)],
        ];
        let k = kernel_basis(&rows, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(residual_is_zero(&rows, v));
        }
        assert_eq!(rank(&rows, 4), 2);
    }

    #[test]
    fn random_systems_against_residual_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let nrows = rng.gen_range(1..7);
            let ncols = rng.gen_range(1..7);
            let rows: Vec<Vec<Rational>> = (0..nrows)
                .map(|_| (0..ncols).map(|_| Rational::new(rng.gen_range(-3..4), rng.gen_range(1..4))).collect())
                .collect();
            let k = kernel_basis(&rows, ncols);
            assert_eq!(k.len() + rank(&rows, ncols), ncols);
            for v in &k {
                assert!(residual_is_zero(&rows, v));
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![q(2), q(1)], vec![q(7), q(4)]];
        let inv = invert(&m).unwrap();
        assert_eq!(inv, vec![vec![q(4), q(-1)], vec![q(-7), q(2)]]);
        assert!(invert(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }

    #[test]
    fn lines() {
        assert!(same_line(&[q(0), q(2), q(4)], &[q(0), q(-1), q(-2)]));
        assert!(!same_line(&[q(0), q(2), q(4)], &[q(0), q(1), q(1)]));
        assert!(!same_line(&[q(0), q(0)], &[q(0), q(0)]));
    }
}
