//! Exact rational linear algebra.
//!
//! Dense row-major matrices over [`Scalar`] with the four primitives the rest
//! of the crate is built on: reduced row echelon form (unique, usable as a
//! canonical form for subspaces), fraction-free determinants, right null
//! spaces, and span membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

/// Result of a row reduction: the unique RREF, its rank, and pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
        }
        Ok(Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and fixtures: integer entries, row-major.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&n| crate::scalar::int(n)).collect())
            .collect();
        Self::from_rows(data).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Reduced row echelon form via Gauss–Jordan elimination with pivot
    /// normalization. The result is the unique RREF of the row space.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut pivot_row = 0;

        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if src != pivot_row {
                for c in 0..m.cols {
                    let a = m.entries[src * m.cols + c].clone();
                    let b = m.entries[pivot_row * m.cols + c].clone();
                    m.entries[src * m.cols + c] = b;
                    m.entries[pivot_row * m.cols + c] = a;
                }
            }
            let pivot = m.get(pivot_row, col).clone();
            for c in col..m.cols {
                let v = m.get(pivot_row, c).clone();
                *m.get_mut(pivot_row, c) = v / pivot.clone();
            }
            for r in 0..m.rows {
                if r == pivot_row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for c in col..m.cols {
                    let sub = factor.clone() * m.get(pivot_row, c).clone();
                    let v = m.get(r, c).clone();
                    *m.get_mut(r, c) = v - sub;
                }
            }
            pivot_columns.push(col);
            pivot_row += 1;
        }

        Rref {
            reduced: m,
            rank: pivot_row,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. Denominators
    /// are cleared per row first, so the elimination itself runs over integers
    /// and intermediate entries stay of minor size.
    pub fn det(&self) -> Result<Scalar, Error> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Scalar::one());
        }

        let mut denom = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let mut lcm = BigInt::one();
            for c in 0..n {
                lcm = lcm.lcm(self.get(r, c).denom());
            }
            denom *= &lcm;
            a.push(
                (0..n)
                    .map(|c| {
                        let s = self.get(r, c);
                        s.numer() * (&lcm / s.denom())
                    })
                    .collect(),
            );
        }

        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(src) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return Ok(Scalar::zero());
                };
                a.swap(k, src);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev; // exact division, Bareiss invariant
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }

        let det_int = a[n - 1][n - 1].clone() * BigInt::from(sign);
        Ok(Scalar::new(det_int, denom))
    }

    /// Basis of the right null space `{x : M x = 0}` from the RREF, one vector
    /// per free column, in free-column order. Empty iff full column rank.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let pivot_of_col: std::collections::HashMap<usize, usize> = pivot_columns
            .iter()
            .enumerate()
            .map(|(row, &col)| (col, row))
            .collect();

        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col.contains_key(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (&col, &row) in &pivot_of_col {
                v[col] = -reduced.get(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }
}

/// True iff `v` is a rational linear combination of `vectors`.
pub fn in_span(vectors: &[Vec<Scalar>], v: &[Scalar]) -> Result<bool, Error> {
    for w in vectors {
        if w.len() != v.len() {
            return Err(Error::DimensionMismatch {
                expected: v.len(),
                got: w.len(),
            });
        }
    }
    let base = Matrix::from_rows(vectors.to_vec())?;
    let rref = base.rref();
    Ok(reduce_against_rref(&rref, v).iter().all(Scalar::is_zero))
}

/// Reduces `v` against the pivot rows of an RREF; the remainder is zero iff
/// `v` lies in the row space.
pub(crate) fn reduce_against_rref(rref: &Rref, v: &[Scalar]) -> Vec<Scalar> {
    let mut rem = v.to_vec();
    for (row, &col) in rref.pivot_columns.iter().enumerate() {
        if rem[col].is_zero() {
            continue;
        }
        let factor = rem[col].clone();
        for c in col..rref.reduced.cols() {
            let sub = factor.clone() * rref.reduced.get(row, c).clone();
            rem[c] = rem[c].clone() - sub;
        }
    }
    rem
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn rref_proportional_rows() {
        let m = Matrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(3);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivot_columns, vec![0, 1, 2]);
        assert_eq!(r.reduced, Matrix::identity(3));
    }

    #[test]
    fn rref_grassmann_matrix_full_rank() {
        let m = Matrix::from_i64_rows(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.rref().rank, 2);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64_rows(&[&[2, 4, 1], &[1, 2, 0], &[0, 0, 3]]);
        let first = m.rref().reduced;
        assert_eq!(first.rref().reduced, first);
    }

    #[test]
    fn det_grassmann_decomposition_matrix() {
        let m = Matrix::from_i64_rows(&[&[1, 1], &[1, -1]]);
        assert_eq!(m.det().unwrap(), int(-2));
    }

    #[test]
    fn det_equal_columns_is_zero() {
        let m = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(m.det().unwrap(), int(0));
    }

    #[test]
    fn det_one_by_one() {
        let m = Matrix::from_i64_rows(&[&[5]]);
        assert_eq!(m.det().unwrap(), int(5));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3]]);
        assert!(matches!(m.det(), Err(Error::NonSquare { .. })));
    }

    #[test]
    fn det_with_rational_entries() {
        use crate::scalar::ratio;
        let m = Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 4), ratio(1, 5)],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), ratio(1, 60));
    }

    #[test]
    fn kernel_of_rank_one_square() {
        let m = Matrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        // proportional to (1, -1)
        assert_eq!(k[0][0].clone() + k[0][1].clone(), int(0));
        assert!(m.apply(&k[0]).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_single_row() {
        let m = Matrix::from_i64_rows(&[&[1, 2, 3]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).unwrap().iter().all(Scalar::is_zero));
        }
        // independent: rank of the two kernel vectors is 2
        assert_eq!(Matrix::from_rows(k).unwrap().rank(), 2);
    }

    #[test]
    fn span_membership() {
        let e1 = vec![int(1), int(0)];
        assert!(in_span(&[e1.clone()], &[int(2), int(0)]).unwrap());
        assert!(!in_span(&[e1], &[int(0), int(1)]).unwrap());
        let v1 = vec![int(1), int(1)];
        let v2 = vec![int(1), int(-1)];
        assert!(in_span(&[v1, v2], &[int(3), int(7)]).unwrap());
    }

    #[test]
    fn span_dimension_mismatch() {
        let v = vec![int(1)];
        assert!(matches!(
            in_span(&[v], &[int(1), int(2)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
