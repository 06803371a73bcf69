//! Characteristic polynomials, listed from the leading coefficient down:
//! `[1, c_1, …, c_n]` stands for `λ^n + c_1 λ^{n−1} + … + c_n`.

use super::closed_form_eigenvalues;
use crate::matrix::SquareMatrix;
use crate::{Error, Result};

/// Largest allowed distance between a root-expanded coefficient and its
/// nearest integer.
pub const CHAR_POLY_RESIDUAL_TOL: f64 = 1e-6;

/// Coefficients of `∏ (λ − root)` in floating point.
pub fn expand_roots(roots: &[f64]) -> Vec<f64> {
    let mut coeffs = vec![1.0];
    for &r in roots {
        let mut next = coeffs.clone();
        next.push(0.0);
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] -= r * c;
        }
        coeffs = next;
    }
    coeffs
}

/// Integer coefficients of `P_s(λ) = ∏_j (λ − 2cos((2j+s)π/n))`.
pub fn char_poly_coefficients(n: usize, s: u8) -> Result<Vec<i64>> {
    let roots = closed_form_eigenvalues(n, s)?.values();
    let coeffs = expand_roots(&roots);
    let residual = coeffs
        .iter()
        .map(|c| (c - c.round()).abs())
        .fold(0.0, f64::max);
    if residual >= CHAR_POLY_RESIDUAL_TOL {
        return Err(Error::RoundingResidual(residual));
    }
    Ok(coeffs.iter().map(|c| c.round() as i64).collect())
}

/// `det(λI − M)` by the Faddeev–LeVerrier recurrence in exact integer
/// arithmetic.
pub fn char_poly_exact(m: &SquareMatrix<i64>) -> Vec<i64> {
    let n = m.n();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(1i64);
    // M_1 = I; M_{k+1} = A M_k + c_k I; c_k = −tr(A M_k) / k
    let mut mk = SquareMatrix::<i64>::identity(n);
    for k in 1..=n {
        let amk = m.multiply(&mk).expect("same dimension");
        let tr = amk.trace();
        debug_assert_eq!(tr % k as i64, 0);
        let ck = -tr / k as i64;
        coeffs.push(ck);
        mk = amk
            .add(&SquareMatrix::identity(n).scale(ck))
            .expect("same dimension");
    }
    coeffs
}
