//! Closed-form spectra and eigenvectors of signed cycles.
//!
//! For a signing with cycle sign `σ = (−1)^s` the shift matrix `B_β` has
//! eigenvalues `ν_j = e^{iπ(2j+s)/n}` with eigenvectors
//! `z_{jk} = σ_1···σ_k · e^{iπ(2j+s)k/n}`, and `A_β = B_β + B_β^{-1}` has
//! eigenvalues `μ_j = 2cos((2j+s)π/n)`. Real eigenvectors of `A_β` are the
//! real and imaginary parts of `z_j`.
//!
//! All trigonometry goes through [`cos_pi_frac`]/[`sin_pi_frac`], which
//! reduce the integer angle first so paired eigenvalues are bitwise equal
//! and the zeros at quarter turns are exact.
//!
//! An independent check is available through [`oracle_eigenvalues`], a
//! cyclic Jacobi diagonalization that knows nothing about cycles.

mod charpoly;
mod jacobi;

use num_complex::Complex64;
use serde::Serialize;

use crate::cycle::SignedCycle;
use crate::matrix::{Entry, SquareMatrix};
use crate::{Error, Result};

pub use charpoly::{char_poly_coefficients, char_poly_exact, expand_roots, CHAR_POLY_RESIDUAL_TOL};
pub use jacobi::{
    jacobi_eigen, oracle_eigenvalues, JacobiEigen, JACOBI_MAX_SWEEPS, JACOBI_OFF_TOL,
};

/// Tolerance for comparing eigenvalues and eigen-residuals.
pub const EIGEN_TOL: f64 = 1e-9;

/// `cos(aπ/n)` with the angle reduced modulo `2π` and exact values at
/// multiples of `π/2`.
pub fn cos_pi_frac(a: i64, n: i64) -> f64 {
    let two_n = 2 * n;
    let mut a = a.rem_euclid(two_n);
    if a > n {
        a = two_n - a;
    }
    if a == 0 {
        1.0
    } else if a == n {
        -1.0
    } else if 2 * a == n {
        0.0
    } else if 2 * a > n {
        -(((n - a) as f64) * std::f64::consts::PI / n as f64).cos()
    } else {
        ((a as f64) * std::f64::consts::PI / n as f64).cos()
    }
}

/// `sin(aπ/n)`, reduced like [`cos_pi_frac`].
pub fn sin_pi_frac(a: i64, n: i64) -> f64 {
    let two_n = 2 * n;
    let a = a.rem_euclid(two_n);
    let (a, sign) = if a > n { (two_n - a, -1.0) } else { (a, 1.0) };
    let a = if 2 * a > n { n - a } else { a };
    if a == 0 {
        0.0
    } else if 2 * a == n {
        sign
    } else {
        sign * ((a as f64) * std::f64::consts::PI / n as f64).sin()
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    Ok(())
}

/// One eigenvalue `μ_j` tagged with its index.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralEntry {
    pub j: usize,
    pub value: f64,
}

/// The eigenvalue multiset of `A_β`, which depends only on `(n, s)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub n: usize,
    pub s: u8,
    /// Sorted by value descending, ties by `j`.
    pub entries: Vec<SpectralEntry>,
}

impl Spectrum {
    pub fn values(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.value).collect()
    }

    /// `μ_j = 2cos((2j+s)π/n)`.
    pub fn eigenvalue(&self, j: usize) -> f64 {
        mu(self.n, self.s, j)
    }

    /// Index `n − j − s (mod n)` carrying the same eigenvalue as `j`.
    pub fn partner(&self, j: usize) -> usize {
        (2 * self.n - j - self.s as usize) % self.n
    }

    /// Distinct eigenvalues, descending, with multiplicities.
    pub fn distinct(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for e in &self.entries {
            match out.last_mut() {
                // paired values are bitwise equal by construction
                Some((v, m)) if *v == e.value => *m += 1,
                _ => out.push((e.value, 1)),
            }
        }
        out
    }

    pub fn contains(&self, value: f64) -> bool {
        self.entries
            .iter()
            .any(|e| (e.value - value).abs() < EIGEN_TOL)
    }

    pub fn largest(&self) -> f64 {
        self.entries[0].value
    }

    /// `max_j |μ_j|`, the spectral norm of `A_β`.
    pub fn spectral_radius(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value.abs())
            .fold(0.0, f64::max)
    }
}

fn mu(n: usize, s: u8, j: usize) -> f64 {
    2.0 * cos_pi_frac((2 * j + s as usize) as i64, n as i64)
}

/// `{2cos((2j+s)π/n) : j = 0..n−1}` sorted descending.
pub fn closed_form_eigenvalues(n: usize, s: u8) -> Result<Spectrum> {
    check_n(n)?;
    if s > 1 {
        return Err(Error::Input(format!("s must be 0 or 1, got {s}")));
    }
    let mut entries: Vec<SpectralEntry> = (0..n)
        .map(|j| SpectralEntry {
            j,
            value: mu(n, s, j),
        })
        .collect();
    entries.sort_by(|a, b| b.value.total_cmp(&a.value).then(a.j.cmp(&b.j)));
    Ok(Spectrum { n, s, entries })
}

/// Closed-form spectrum of `A(c)`.
pub fn spectrum_of(c: &SignedCycle) -> Spectrum {
    closed_form_eigenvalues(c.n(), c.invariants().s).expect("valid cycle")
}

fn max_real_index(c: &SignedCycle) -> usize {
    (c.n() - c.invariants().s as usize) / 2
}

fn check_real_index(c: &SignedCycle, j: usize) -> Result<()> {
    let max = max_real_index(c);
    if j > max {
        return Err(Error::IndexOutOfRange { index: j, max });
    }
    Ok(())
}

/// Eigenvector of `B_β` for `ν_j`, normalized so `z_n = 1`.
pub fn complex_eigenvector(c: &SignedCycle, j: usize) -> Result<Vec<Complex64>> {
    let n = c.n();
    if j >= n {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: n - 1,
        });
    }
    let a = (2 * j + c.invariants().s as usize) as i64;
    Ok(c.prefix_products()
        .iter()
        .zip(1..)
        .map(|(p, k)| {
            let ak = a * k;
            Complex64::new(cos_pi_frac(ak, n as i64), sin_pi_frac(ak, n as i64)) * p.as_f64()
        })
        .collect())
}

/// `ν_j = e^{iπ(2j+s)/n}`.
pub fn b_eigenvalue(c: &SignedCycle, j: usize) -> Complex64 {
    let a = (2 * j + c.invariants().s as usize) as i64;
    let n = c.n() as i64;
    Complex64::new(cos_pi_frac(a, n), sin_pi_frac(a, n))
}

/// `x_{jk} = σ_1···σ_k · cos((2j+s)kπ/n)` for `0 ≤ j ≤ ⌊(n−s)/2⌋`.
pub fn cosine_eigenvector(c: &SignedCycle, j: usize) -> Result<Vec<f64>> {
    check_real_index(c, j)?;
    Ok(trig_vector(c, j, cos_pi_frac))
}

/// `y_{jk} = σ_1···σ_k · sin((2j+s)kπ/n)`, or `None` when it vanishes
/// identically (`2j + s ∈ {0, n}`).
pub fn sine_eigenvector(c: &SignedCycle, j: usize) -> Result<Option<Vec<f64>>> {
    check_real_index(c, j)?;
    if is_exceptional(c, j) {
        return Ok(None);
    }
    Ok(Some(trig_vector(c, j, sin_pi_frac)))
}

fn is_exceptional(c: &SignedCycle, j: usize) -> bool {
    let a = 2 * j + c.invariants().s as usize;
    a == 0 || a == c.n()
}

fn trig_vector(c: &SignedCycle, j: usize, f: fn(i64, i64) -> f64) -> Vec<f64> {
    let n = c.n() as i64;
    let a = (2 * j + c.invariants().s as usize) as i64;
    c.prefix_products()
        .iter()
        .zip(1..)
        .map(|(p, k)| p.as_f64() * f(a * k, n))
        .collect()
}

/// The simple eigenvalues `±2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ExtremeEigenvalue {
    #[serde(rename = "+2")]
    PlusTwo,
    #[serde(rename = "-2")]
    MinusTwo,
}

impl ExtremeEigenvalue {
    pub fn value(self) -> f64 {
        match self {
            ExtremeEigenvalue::PlusTwo => 2.0,
            ExtremeEigenvalue::MinusTwo => -2.0,
        }
    }

    /// Whether the eigenvalue occurs for a cycle of length `n` and parity `s`:
    /// `+2` iff `s = 0`, `−2` iff `n − s` is even.
    pub fn occurs(self, n: usize, s: u8) -> bool {
        match self {
            ExtremeEigenvalue::PlusTwo => s == 0,
            ExtremeEigenvalue::MinusTwo => (n - s as usize).is_multiple_of(2),
        }
    }
}

impl std::str::FromStr for ExtremeEigenvalue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+2" | "2" => Ok(ExtremeEigenvalue::PlusTwo),
            "-2" => Ok(ExtremeEigenvalue::MinusTwo),
            other => Err(Error::Input(format!("expected +2 or -2, got {other:?}"))),
        }
    }
}

/// Spanning vector of the one-dimensional `±2` eigenspace:
/// `x_k = σ_1···σ_k` for `+2`, `x_k = (−1)^k σ_1···σ_k` for `−2`.
pub fn exceptional_eigenvector(c: &SignedCycle, target: ExtremeEigenvalue) -> Result<Vec<f64>> {
    if !target.occurs(c.n(), c.invariants().s) {
        return Err(Error::EigenvalueNotInSpectrum(target.value() as i8));
    }
    Ok(c.prefix_products()
        .iter()
        .zip(1..)
        .map(|(p, k): (_, usize)| {
            let alt = match target {
                ExtremeEigenvalue::PlusTwo => 1.0,
                ExtremeEigenvalue::MinusTwo if k % 2 == 1 => -1.0,
                ExtremeEigenvalue::MinusTwo => 1.0,
            };
            alt * p.as_f64()
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenPair {
    pub j: usize,
    pub eigenvalue: f64,
    pub x: Vec<f64>,
    pub y: Option<Vec<f64>>,
    pub exceptional: bool,
}

impl EigenPair {
    pub fn dimension(&self) -> usize {
        1 + usize::from(self.y.is_some())
    }
}

/// Real eigenvectors of `A_β` for `j = 0..=⌊(n−s)/2⌋`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Eigenbasis {
    pub n: usize,
    pub s: u8,
    pub pairs: Vec<EigenPair>,
}

impl Eigenbasis {
    pub fn vector_count(&self) -> usize {
        self.pairs.iter().map(EigenPair::dimension).sum()
    }

    pub fn vectors(&self) -> impl Iterator<Item = (f64, &[f64])> {
        self.pairs.iter().flat_map(|p| {
            std::iter::once((p.eigenvalue, p.x.as_slice()))
                .chain(p.y.as_deref().map(|y| (p.eigenvalue, y)))
        })
    }
}

pub fn full_eigenbasis(c: &SignedCycle) -> Eigenbasis {
    let n = c.n();
    let s = c.invariants().s;
    let pairs = (0..=max_real_index(c))
        .map(|j| {
            let eigenvalue = mu(n, s, j);
            if is_exceptional(c, j) {
                let target = if j == 0 && s == 0 {
                    ExtremeEigenvalue::PlusTwo
                } else {
                    ExtremeEigenvalue::MinusTwo
                };
                EigenPair {
                    j,
                    eigenvalue,
                    x: exceptional_eigenvector(c, target).expect("eigenvalue present"),
                    y: None,
                    exceptional: true,
                }
            } else {
                EigenPair {
                    j,
                    eigenvalue,
                    x: trig_vector(c, j, cos_pi_frac),
                    y: Some(trig_vector(c, j, sin_pi_frac)),
                    exceptional: false,
                }
            }
        })
        .collect();
    Eigenbasis { n, s, pairs }
}

/// `‖Mx − μx‖_∞ / ‖x‖_∞`.
pub fn eigen_residual<T: Entry>(m: &SquareMatrix<T>, mu: f64, x: &[f64]) -> Result<f64> {
    let mx = m.mul_vec(x)?;
    let scale = inf_norm(x);
    if scale == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num = mx
        .iter()
        .zip(x)
        .map(|(a, b)| (a - mu * b).abs())
        .fold(0.0, f64::max);
    Ok(num / scale)
}

pub(crate) fn inf_norm(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).fold(0.0, f64::max)
}
