//! Dense square matrices and the signed-cycle matrices `B_β` and `A_β`.
//!
//! The structural matrices are built over `i64` so identities such as
//! `B_β B_β' = I` are checked exactly; [`SquareMatrix::to_f64`] converts at
//! the eigensolver boundary.

use std::fmt::Debug;

use num_traits::{Num, Signed};

use crate::cycle::{SignedCycle, VertexSet};
use crate::{Error, Result};

/// Componentwise tolerance for floating-point orthogonality checks.
pub const ORTHOGONALITY_TOL: f64 = 1e-12;

/// Entry type for [`SquareMatrix`].
pub trait Entry: Copy + Debug + PartialOrd + Num + Signed + Send + Sync {
    /// Equality used by structural checks: exact for integers.
    fn close_to(self, other: Self) -> bool;
    fn to_f64(self) -> f64;
}

impl Entry for i64 {
    fn close_to(self, other: Self) -> bool {
        self == other
    }

    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Entry for f64 {
    fn close_to(self, other: Self) -> bool {
        (self - other).abs() <= ORTHOGONALITY_TOL
    }

    fn to_f64(self) -> f64 {
        self
    }
}

/// Row-major dense `n × n` matrix. Indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T = i64> {
    n: usize,
    data: Vec<T>,
}

impl<T: Entry> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare(n));
        }
        Ok(SquareMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut t = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(SquareMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: T) -> Self {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|&a| a * factor).collect(),
        }
    }

    /// `M^k` by repeated multiplication; `M^0 = I`.
    pub fn power(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n), |acc, _| {
            acc.multiply(self).expect("same dimension")
        })
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)])
    }

    /// Sum of every entry.
    pub fn entry_sum(&self) -> T {
        self.data.iter().fold(T::zero(), |acc, &a| acc + a)
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (i + 1..n).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Whether `M M' = I` (exactly for `i64`, within [`ORTHOGONALITY_TOL`] for `f64`).
    pub fn is_orthogonal(&self) -> bool {
        let p = self.multiply(&self.transpose()).expect("same dimension");
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let target = if i == j { T::one() } else { T::zero() };
                p[(i, j)].close_to(target)
            })
        })
    }

    /// Largest absolute row sum (`‖M‖_∞` as an operator norm).
    pub fn max_abs_row_sum(&self) -> T {
        self.rows()
            .map(|r| r.iter().fold(T::zero(), |acc, &a| acc + a.abs()))
            .fold(T::zero(), |m, v| if v > m { v } else { m })
    }

    /// Largest absolute column sum.
    pub fn max_abs_col_sum(&self) -> T {
        self.transpose().max_abs_row_sum()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch(self.n, x.len()));
        }
        Ok(self
            .rows()
            .map(|r| r.iter().zip(x).map(|(&a, &b)| a.to_f64() * b).sum())
            .collect())
    }

    pub fn to_f64(&self) -> SquareMatrix<f64> {
        SquareMatrix {
            n: self.n,
            data: self.data.iter().map(|a| a.to_f64()).collect(),
        }
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        Ok(())
    }
}

impl SquareMatrix<i64> {
    /// `n` lines of `n` comma-separated integers.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }
}

impl<T> std::ops::Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

/// The signed cyclic shift `B_β`: the base circulant with column `j`
/// multiplied by `σ_j`.
///
/// In 1-based labels, `B_β[i, i+1] = σ_{i+1}` and `B_β[n, 1] = σ_1`.
pub fn build_b(c: &SignedCycle) -> SquareMatrix<i64> {
    let n = c.n();
    let mut b = SquareMatrix::zeros(n);
    for (col, s) in c.signs().iter().enumerate() {
        let row = (col + n - 1) % n;
        b[(row, col)] = s.value();
    }
    b
}

/// Signed adjacency matrix `A_β = B_β + B_β'`.
pub fn build_a(c: &SignedCycle) -> SquareMatrix<i64> {
    let b = build_b(c);
    b.add(&b.transpose()).expect("same dimension")
}

/// Diagonal `D` with `−1` at each vertex of `w` and `+1` elsewhere.
pub fn switch_diagonal(w: &VertexSet, n: usize) -> Result<SquareMatrix<i64>> {
    if let Some(v) = w.iter().find(|&v| v == 0 || v > n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let d: Vec<i64> = (1..=n)
        .map(|v| if w.contains(v) { -1 } else { 1 })
        .collect();
    Ok(SquareMatrix::diagonal(&d))
}

/// `B_β^k` in closed form: `B^k · D` where `D[j, j]` is the product of the
/// `k` signs ending at column `j`, `σ_{j−k+1}···σ_j` (subscripts mod `n`).
///
/// The entry in row `i` is `B_β[i, i+1] · … · B_β[i+k−1, i+k] = σ_{i+1}···σ_{i+k}`.
pub fn b_power_closed_form(c: &SignedCycle, k: usize) -> SquareMatrix<i64> {
    let n = c.n();
    let base = build_b(&SignedCycle::all_positive(n).expect("n >= 3")).power(k as u32);
    let diag: Vec<i64> = (1..=n)
        .map(|j| {
            (0..k)
                .map(|t| c.sign(j + n * (k + 1) - t).value())
                .product()
        })
        .collect();
    base.multiply(&SquareMatrix::diagonal(&diag))
        .expect("same dimension")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SignedCycle {
        s.parse().unwrap()
    }

    #[test]
    fn b_matrix_examples() {
        let b = build_b(&c("+++"));
        assert_eq!(
            b.to_rows(),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]
        );
        let b = build_b(&c("-++"));
        assert_eq!(
            b.to_rows(),
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![-1, 0, 0]]
        );
    }

    #[test]
    fn a_matrix_examples() {
        let a = build_a(&c("++++"));
        assert_eq!(
            a.to_rows(),
            vec![
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![1, 0, 1, 0]
            ]
        );
        let a = build_a(&c("-++"));
        assert_eq!(
            a.to_rows(),
            vec![vec![0, 1, -1], vec![1, 0, 1], vec![-1, 1, 0]]
        );
        assert!(a.is_symmetric());
        assert_eq!(a.trace(), 0);
    }

    #[test]
    fn power_examples() {
        let b = build_b(&c("+-+"));
        assert_eq!(b.power(0), SquareMatrix::identity(3));
        // direct product of B·B, computed by hand:
        // B = [[0,-1,0],[0,0,1],[1,0,0]] so B^2 = [[0,0,-1],[1,0,0],[0,-1,0]]
        assert_eq!(
            b.power(2).to_rows(),
            vec![vec![0, 0, -1], vec![1, 0, 0], vec![0, -1, 0]]
        );
        assert_eq!(b.power(2), b_power_closed_form(&c("+-+"), 2));
        // the column-start form diag(σ_1σ_2, σ_2σ_3, σ_3σ_1) puts +1 at (1, 3)
        assert_eq!(b.power(2)[(0, 2)], -1);
        assert_eq!(b.power(3), SquareMatrix::identity(3).scale(-1));
    }

    #[test]
    fn switch_diagonal_examples() {
        assert_eq!(
            switch_diagonal(&VertexSet::empty(), 4).unwrap(),
            SquareMatrix::identity(4)
        );
        let d = switch_diagonal(&VertexSet::new(4, [2, 3]).unwrap(), 4).unwrap();
        assert_eq!(d.multiply(&d).unwrap(), SquareMatrix::identity(4));
    }

    #[test]
    fn misc_ops() {
        assert!(build_b(&c("+--+-")).is_orthogonal());
        assert_eq!(build_a(&c("+++++")).entry_sum(), 10);
        assert_eq!(build_a(&c("-+++")).entry_sum(), 4);
        let a = build_a(&c("-+-+"));
        assert_eq!(a.max_abs_row_sum(), 2);
        assert_eq!(a.max_abs_col_sum(), 2);
        assert_eq!(
            a.multiply(&SquareMatrix::identity(3)),
            Err(Error::DimensionMismatch(4, 3))
        );
        assert!(SquareMatrix::<i64>::from_rows(vec![vec![1, 2], vec![3]]).is_err());
        let f = a.to_f64();
        assert!(!f.is_orthogonal());
        assert!(build_b(&c("-+-+")).to_f64().is_orthogonal());
        assert_eq!(build_a(&c("+++")).to_csv(), "0,1,1\n1,0,1\n1,1,0\n");
    }
}
