//! Exact rational linear algebra: scalars, dense matrices, row reduction,
//! linear solving and kernel bases.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating-point path anywhere. Pivoting is deterministic (leftmost non-zero
//! pivot, first qualifying row) so results are reproducible bit for bit.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::ops::{Index, IndexMut};

/// Exact rational scalar. Stored in lowest terms with positive denominator
/// (maintained by `num-rational`).
pub type Scalar = num_rational::BigRational;

/// Integer scalar.
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

/// Rational scalar `n/d`.
pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`. The sign must sit on the numerator.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Input(format!("malformed rational {s:?}")))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::Input(format!("malformed rational {s:?}")))?,
        None => BigInt::one(),
    };
    if !den.is_positive() {
        return Err(Error::Input(format!(
            "denominator must be positive in {s:?}"
        )));
    }
    Ok(Scalar::new(num, den))
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Dense matrix of exact rationals, row-major. Dimensions are fixed at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Input("ragged rows in matrix".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let v = &out[(i, j)] + a * b;
                        out[(i, j)] = v;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    /// Reduced row echelon form with the pivot column indices. Pivot choice is
    /// the leftmost non-zero column, first qualifying row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.entries.swap(r * m.cols + j, p * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Exact rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, or `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

/// Solves `m x = rhs`. Returns `None` when the system is inconsistent. When
/// the solution space is positive-dimensional, free variables are set to zero
/// under reduced-row-echelon pivoting.
pub fn solve_linear(m: &Matrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if m.rows() != rhs.len() {
        return Err(Error::Input(format!(
            "system has {} rows but rhs has {} entries",
            m.rows(),
            rhs.len()
        )));
    }
    let mut aug = Matrix::zero(m.rows(), m.cols() + 1);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, m.cols())] = rhs[i].clone();
    }
    let (red, pivots) = aug.rref();
    if pivots.contains(&m.cols()) {
        return Ok(None); // a row reduced to 0 = 1
    }
    let mut x = vec![Scalar::zero(); m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[(r, m.cols())].clone();
    }
    Ok(Some(x))
}

/// Exact basis of the null space, by the standard free-variable construction
/// from RREF, ordered by free-column index. Empty iff `m` has full column rank.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    let (red, pivots) = m.rref();
    let mut basis = Vec::new();
    for free in 0..m.cols() {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![Scalar::zero(); m.cols()];
        v[free] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red[(r, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// Canonical basis of the row space of the given vectors: the non-zero rows
/// of the RREF.
pub fn row_space_basis(rows: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = Matrix::from_rows(rows.to_vec()).expect("ragged rows");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|i| red.row(i).to_vec()).collect()
}

/// True iff `v` lies in the span of `basis` (rows).
pub fn in_span(basis: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    if v.iter().all(Scalar::is_zero) {
        return true;
    }
    let before = row_space_basis(basis).len();
    let mut rows = basis.to_vec();
    rows.push(v.to_vec());
    row_space_basis(&rows).len() == before
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn solve_identity() {
        let sol = solve_linear(&Matrix::identity(2), &[int(3), frac(5, 2)])
            .unwrap()
            .unwrap();
        assert_eq!(sol, vec![int(3), frac(5, 2)]);
    }

    #[test]
    fn solve_inconsistent() {
        let sys = m(&[&[1, 1], &[2, 2]]);
        assert!(solve_linear(&sys, &[int(1), int(3)]).unwrap().is_none());
    }

    #[test]
    fn solve_diagonal_matches_back_substitution() {
        // Independent oracle: back-substitute the diagonal system by hand.
        let sys = m(&[&[2, 0], &[0, 4]]);
        let rhs = [int(1), int(1)];
        let expect = vec![frac(1, 2), frac(1, 4)];
        let sol = solve_linear(&sys, &rhs).unwrap().unwrap();
        assert_eq!(sol, expect);
        // substitution reproduces rhs exactly
        assert_eq!(sys.mul_vec(&sol), rhs.to_vec());
    }

    #[test]
    fn solve_dimension_mismatch_is_input_error() {
        assert!(matches!(
            solve_linear(&Matrix::identity(2), &[int(1)]),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn kernel_full_rank_and_zero() {
        assert!(kernel_basis(&Matrix::identity(3)).is_empty());
        let z = Matrix::zero(2, 2);
        let k = kernel_basis(&z);
        assert_eq!(k, vec![vec![int(1), int(0)], vec![int(0), int(1)]]);
    }

    #[test]
    fn kernel_vector_annihilates() {
        let sys = m(&[&[1, 2]]);
        let k = kernel_basis(&sys);
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
        for v in &k {
            assert!(sys.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(4).rank(), 4);
        assert_eq!(Matrix::zero(3, 5).rank(), 0);
        // oracle: second row is twice the first, so rank 1
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rank_nullity() {
        let cases = [
            m(&[&[1, 2], &[2, 4]]),
            m(&[&[1, 0, 3], &[0, 1, -2]]),
            Matrix::zero(2, 4),
            Matrix::identity(5),
        ];
        for c in cases {
            assert_eq!(c.rank() + kernel_basis(&c).len(), c.cols());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn scalar_parse_format() {
        assert_eq!(parse_scalar("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_scalar("-7").unwrap(), int(-7));
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(5)), "5");
        assert!(parse_scalar("1/-2").is_err());
        assert!(parse_scalar("a").is_err());
    }
}
