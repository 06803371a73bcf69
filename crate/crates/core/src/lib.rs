//! Spectral toolkit for signed cycle graphs.
//!
//! A signed cycle `(C_n, σ)` is a cycle on `n` vertices whose edges
//! `e_1, …, e_n` carry signs `σ_i ∈ {+1, −1}`. Edge `e_k` joins `v_{k−1}`
//! and `v_k` (with `v_0 = v_n`), so vertex `v_k` is incident to `e_k` and
//! `e_{k+1}`.
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`cycle`] | sign sequences, invariants, switching, rotation and isomorphism |
//! | [`matrix`] | the signed shift matrix `B_β`, adjacency `A_β`, small dense arithmetic |
//! | [`spectral`] | closed-form spectra and eigenvectors plus a Jacobi oracle |
//! | [`recovery`] | reading edge signs back out of eigenvectors |
//! | [`descriptors`] | Wiener-type sum, energy, norms, spectrum fingerprint |
//! | [`classify`] | exhaustive enumeration of signings and partition statistics |
//! | [`cli`] | the `sigcycle` command-line front end |
//!
//! ```
//! use sigcycle::{cycle::SignedCycle, spectral, recovery};
//!
//! let c: SignedCycle = "+-+".parse().unwrap();
//! let x = spectral::cosine_eigenvector(&c, 0).unwrap();
//! let y = spectral::sine_eigenvector(&c, 0).unwrap();
//! let got = recovery::recover_from_pair(&x, y.as_deref()).unwrap();
//! assert_eq!(got.sign_string(), "+-+");
//! ```

pub mod classify;
pub mod cli;
pub mod cycle;
pub mod descriptors;
mod error;
pub mod json;
pub mod matrix;
pub mod recovery;
pub mod spectral;

pub use error::{Error, Result};
