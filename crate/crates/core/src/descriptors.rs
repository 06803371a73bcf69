//! Single-number descriptors of a signed cycle.

use serde::Serialize;

use crate::cycle::SignedCycle;
use crate::matrix::build_a;
use crate::spectral::{spectrum_of, Spectrum};

/// Decimal places kept in [`spectrum_fingerprint`] keys.
pub const FINGERPRINT_DECIMALS: usize = 9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DescriptorReport {
    pub n: usize,
    pub sign_string: String,
    pub r: usize,
    pub s: u8,
    pub wiener_sum: i64,
    pub energy: f64,
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
    pub spectrum_key: String,
}

/// Sum of all entries of `A_β`: every edge contributes `2σ_k`, so `2(n − 2r)`.
pub fn wiener_sum(c: &SignedCycle) -> i64 {
    build_a(c).entry_sum()
}

/// `Σ_j |μ_j|` over the closed-form spectrum.
pub fn energy(c: &SignedCycle) -> f64 {
    energy_of(&spectrum_of(c))
}

fn energy_of(spectrum: &Spectrum) -> f64 {
    spectrum.entries.iter().map(|e| e.value.abs()).sum()
}

/// `(N_1, N_2, N_3)`: max absolute row sum, max absolute column sum, and
/// the spectral norm `max_j |μ_j|` (`A_β` is symmetric, so `A A' = A²`).
pub fn norms(c: &SignedCycle) -> (f64, f64, f64) {
    let a = build_a(c);
    (
        a.max_abs_row_sum() as f64,
        a.max_abs_col_sum() as f64,
        spectrum_of(c).spectral_radius(),
    )
}

/// Sorted eigenvalues rounded to [`FINGERPRINT_DECIMALS`] places, comma-joined.
pub fn spectrum_fingerprint(c: &SignedCycle) -> String {
    fingerprint_of(&spectrum_of(c))
}

fn fingerprint_of(spectrum: &Spectrum) -> String {
    spectrum
        .entries
        .iter()
        .map(|e| {
            let s = format!("{:.*}", FINGERPRINT_DECIMALS, e.value);
            // never emit "-0.000000000"
            if s.trim_start_matches('-')
                .bytes()
                .all(|b| b == b'0' || b == b'.')
            {
                s.trim_start_matches('-').to_owned()
            } else {
                s
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

pub fn describe(c: &SignedCycle) -> DescriptorReport {
    let inv = c.invariants();
    let spectrum = spectrum_of(c);
    let (n1, n2, _) = norms(c);
    DescriptorReport {
        n: c.n(),
        sign_string: c.sign_string(),
        r: inv.r,
        s: inv.s,
        wiener_sum: wiener_sum(c),
        energy: energy_of(&spectrum),
        n1,
        n2,
        n3: spectrum.spectral_radius(),
        spectrum_key: fingerprint_of(&spectrum),
    }
}
