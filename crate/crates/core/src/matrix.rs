//! Dense square matrices with exact entries.
//!
//! Determinant and rank over a [`Field`] by Gaussian elimination on a working
//! copy; characteristic polynomials over the integers by Berkowitz's
//! division-free algorithm.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::MatrixError;
use crate::field::{Field, FieldElem};

/// Largest dimension accepted by [`char_poly`]; entries of the Berkowitz
/// intermediates grow roughly like `dim!` times the entry size.
pub const CHAR_POLY_MAX_DIM: usize = 50;

/// Row updates below this many entries stay on the calling thread.
#[cfg(feature = "parallel")]
const PAR_MIN_ENTRIES: usize = 4096;

/// Square matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn new(dim: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if entries.len() != dim * dim {
            return Err(MatrixError::NotSquare { dim, entries: entries.len() });
        }
        Ok(Matrix { dim, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(MatrixError::NotSquare { dim, entries: row.len() * dim });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.dim).map(|i| self.row(i).to_vec()).collect()
    }

    /// Simultaneous row and column permutation: entry `(i, j)` of the result
    /// is entry `(perm[i], perm[j])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        Matrix::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]).clone())
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }
}

impl Matrix<FieldElem> {
    pub fn identity(field: &Field, dim: usize) -> Self {
        Matrix::from_fn(dim, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, entries: vec![FieldElem::ZERO; dim * dim] }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

/// How elimination distributes the row updates below each pivot.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is enabled; otherwise identical
    /// to `Sequential`.
    #[default]
    Parallel,
}

struct Echelon {
    rank: usize,
    /// Signed product of pivots; meaningful only at full rank.
    pivot_product: FieldElem,
}

fn check_entries(field: &Field, m: &Matrix<FieldElem>) -> Result<(), MatrixError> {
    match m.entries.iter().position(|&x| !field.contains(x)) {
        Some(idx) => Err(MatrixError::ForeignEntry { row: idx / m.dim, col: idx % m.dim }),
        None => Ok(()),
    }
}

fn eliminate_rows(field: &Field, pivot_row: &[FieldElem], rows: &mut [FieldElem], col: usize, dim: usize, pivot_inv: FieldElem) {
    let update = |row: &mut [FieldElem]| {
        let lead = row[col];
        if lead.is_zero() {
            return;
        }
        let factor = field.mul(lead, pivot_inv);
        row[col] = FieldElem::ZERO;
        for j in col + 1..dim {
            let pj = pivot_row[j];
            if !pj.is_zero() {
                row[j] = field.sub(row[j], field.mul(factor, pj));
            }
        }
    };
    rows.chunks_mut(dim).for_each(update);
}

#[cfg(feature = "parallel")]
fn eliminate_rows_par(field: &Field, pivot_row: &[FieldElem], rows: &mut [FieldElem], col: usize, dim: usize, pivot_inv: FieldElem) {
    use rayon::prelude::*;
    if rows.len() < PAR_MIN_ENTRIES {
        return eliminate_rows(field, pivot_row, rows, col, dim, pivot_inv);
    }
    rows.par_chunks_mut(dim).for_each(|row| {
        eliminate_rows(field, pivot_row, row, col, dim, pivot_inv);
    });
}

fn echelon(field: &Field, m: &Matrix<FieldElem>, exec: Exec) -> Result<Echelon, MatrixError> {
    check_entries(field, m)?;
    let dim = m.dim;
    let mut a = m.entries.clone();
    let mut rank = 0;
    let mut negate = false;
    let mut product = field.one();
    for col in 0..dim {
        if rank == dim {
            break;
        }
        let Some(pivot) = (rank..dim).find(|&r| !a[r * dim + col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in 0..dim {
                a.swap(pivot * dim + j, rank * dim + j);
            }
            negate = !negate;
        }
        let pv = a[rank * dim + col];
        product = field.mul(product, pv);
        let inv = field.inv(pv).expect("pivot is nonzero");
        let (top, below) = a.split_at_mut((rank + 1) * dim);
        let pivot_row = &top[rank * dim..];
        match exec {
            #[cfg(feature = "parallel")]
            Exec::Parallel => eliminate_rows_par(field, pivot_row, below, col, dim, inv),
            _ => eliminate_rows(field, pivot_row, below, col, dim, inv),
        }
        rank += 1;
    }
    let pivot_product = if negate { field.neg(product) } else { product };
    Ok(Echelon { rank, pivot_product })
}

/// Determinant by Gaussian elimination. The input is left untouched.
pub fn determinant(field: &Field, m: &Matrix<FieldElem>) -> Result<FieldElem, MatrixError> {
    determinant_with(field, m, Exec::default())
}

pub fn determinant_with(field: &Field, m: &Matrix<FieldElem>, exec: Exec) -> Result<FieldElem, MatrixError> {
    let e = echelon(field, m, exec)?;
    Ok(if e.rank == m.dim { e.pivot_product } else { field.zero() })
}

/// Row-echelon rank.
pub fn rank(field: &Field, m: &Matrix<FieldElem>) -> Result<usize, MatrixError> {
    rank_with(field, m, Exec::default())
}

pub fn rank_with(field: &Field, m: &Matrix<FieldElem>, exec: Exec) -> Result<usize, MatrixError> {
    Ok(echelon(field, m, exec)?.rank)
}

/// Determinant and rank from a single elimination.
pub fn determinant_and_rank(field: &Field, m: &Matrix<FieldElem>, exec: Exec) -> Result<(FieldElem, usize), MatrixError> {
    let e = echelon(field, m, exec)?;
    let det = if e.rank == m.dim { e.pivot_product } else { field.zero() };
    Ok((det, e.rank))
}

/// Coefficients of `det(tI - M)` in ascending degree (the last entry is the
/// leading coefficient 1), by Berkowitz's algorithm.
///
/// For each leading principal block `A_r` with next row segment `R`, column
/// segment `C` and diagonal entry `a`, the Toeplitz column
/// `(1, -a, -RC, -RA_rC, ..., -RA_r^{r-1}C)` multiplies the running vector.
pub fn char_poly(m: &Matrix<BigInt>) -> Result<Vec<BigInt>, MatrixError> {
    let n = m.dim;
    if n > CHAR_POLY_MAX_DIM {
        return Err(MatrixError::TooLarge { dim: n, max: CHAR_POLY_MAX_DIM });
    }
    // descending coefficients of the char poly of the leading r x r block
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let mut column = Vec::with_capacity(r + 2);
        column.push(BigInt::one());
        column.push(-m.get(r, r).clone());
        // w = A_r^k C, starting from C
        let mut w: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let rc: BigInt = (0..r).map(|j| m.get(r, j) * &w[j]).sum();
            column.push(-rc);
            if k + 1 < r {
                w = (0..r)
                    .map(|i| (0..r).map(|j| m.get(i, j) * &w[j]).sum())
                    .collect();
            }
        }
        // lower-triangular Toeplitz (r+2) x (r+1) times v
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .map(|j| &column[i - j] * &v[j])
                    .sum()
            })
            .collect();
        v = next;
    }
    v.reverse();
    Ok(v)
}

/// Evaluates an integer polynomial (ascending coefficients) at a square matrix.
pub fn poly_at_matrix(coeffs: &[BigInt], m: &Matrix<BigInt>) -> Matrix<BigInt> {
    let n = m.dim;
    let mut acc = Matrix::from_fn(n, |_, _| BigInt::zero());
    // Horner: acc = acc * M + c
    for c in coeffs.iter().rev() {
        let prod = Matrix::from_fn(n, |i, j| (0..n).map(|k| acc.get(i, k) * m.get(k, j)).sum::<BigInt>());
        acc = Matrix::from_fn(n, |i, j| {
            let mut v: BigInt = prod.get(i, j).clone();
            if i == j {
                v += c;
            }
            v
        });
    }
    acc
}

/// Circulant matrix with `M[i][j] = row[(j - i) mod m]`.
pub fn circulant<T: Clone>(row: &[T]) -> Result<Matrix<T>, MatrixError> {
    let m = row.len();
    if m == 0 {
        return Err(MatrixError::EmptyRow);
    }
    Ok(Matrix::from_fn(m, |i, j| row[(j + m - i) % m].clone()))
}

/// `prod_{i<j} (x_j - x_i)(1/x_j - 1/x_i)` for distinct nonzero `xs`.
pub fn vandermonde_pair_product(field: &Field, xs: &[FieldElem]) -> Result<FieldElem, MatrixError> {
    if xs.iter().any(|x| x.is_zero()) {
        return Err(MatrixError::ZeroEntry);
    }
    let mut seen = std::collections::HashSet::with_capacity(xs.len());
    if !xs.iter().all(|x| seen.insert(*x)) {
        return Err(MatrixError::RepeatedEntry);
    }
    let invs: Vec<FieldElem> = xs
        .iter()
        .map(|&x| field.inv(x).expect("nonzero"))
        .collect();
    let mut acc = field.one();
    for j in 0..xs.len() {
        for i in 0..j {
            let a = field.sub(xs[j], xs[i]);
            let b = field.sub(invs[j], invs[i]);
            acc = field.mul(acc, field.mul(a, b));
        }
    }
    Ok(acc)
}
