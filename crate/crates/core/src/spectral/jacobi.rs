//! Cyclic Jacobi diagonalization of dense symmetric matrices.

use crate::matrix::{Entry, SquareMatrix};
use crate::{Error, Result};

/// Off-diagonal Frobenius norm at which iteration stops.
pub const JACOBI_OFF_TOL: f64 = 1e-12;
pub const JACOBI_MAX_SWEEPS: usize = 50;

const SYMMETRY_TOL: f64 = 1e-12;

/// Eigenvalues (descending) and matching eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct JacobiEigen {
    pub values: Vec<f64>,
    pub vectors: SquareMatrix<f64>,
    pub sweeps: usize,
}

impl JacobiEigen {
    pub fn vector(&self, idx: usize) -> Vec<f64> {
        (0..self.vectors.n())
            .map(|i| self.vectors[(i, idx)])
            .collect()
    }
}

fn off_norm(a: &SquareMatrix<f64>) -> f64 {
    let n = a.n();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

pub fn jacobi_eigen<T: Entry>(m: &SquareMatrix<T>) -> Result<JacobiEigen> {
    let mut a = m.to_f64();
    let n = a.n();
    for i in 0..n {
        for j in i + 1..n {
            let (x, y) = (a[(i, j)], a[(j, i)]);
            if (x - y).abs() > SYMMETRY_TOL * x.abs().max(y.abs()).max(1.0) {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let mut v = SquareMatrix::<f64>::identity(n);
    let mut sweeps = 0;
    while off_norm(&a) >= JACOBI_OFF_TOL {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence(sweeps));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                rotate(&mut a, &mut v, p, q, c, s);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].total_cmp(&a[(i, i)]).then(i.cmp(&j)));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let mut vectors = SquareMatrix::<f64>::zeros(n);
    for (col, &src) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, col)] = v[(row, src)];
        }
    }
    Ok(JacobiEigen {
        values,
        vectors,
        sweeps,
    })
}

// A <- J' A J, V <- V J with J the (p, q) plane rotation [c s; -s c].
fn rotate(
    a: &mut SquareMatrix<f64>,
    v: &mut SquareMatrix<f64>,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
) {
    let n = a.n();
    for k in 0..n {
        let (akp, akq) = (a[(k, p)], a[(k, q)]);
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let (apk, aqk) = (a[(p, k)], a[(q, k)]);
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    for k in 0..n {
        let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

/// Eigenvalues of a symmetric matrix, sorted descending.
pub fn oracle_eigenvalues<T: Entry>(m: &SquareMatrix<T>) -> Result<Vec<f64>> {
    Ok(jacobi_eigen(m)?.values)
}
