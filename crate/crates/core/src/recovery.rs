//! Reading edge signs back from eigenvectors of `A_β`.
//!
//! Inputs are expected in the normalization produced by
//! [`spectral`](crate::spectral): `x_{jk} = σ_1···σ_k · Re(e^{iπ(2j+s)k/n})`
//! and likewise for the sine part. Positive rescalings are harmless; the
//! cosine rules read `σ_1` straight off the sign of `x_1`, so a negative
//! rescaling flips that one edge.

use serde::Serialize;

use crate::cycle::Sign;
use crate::spectral::{cos_pi_frac, inf_norm, ExtremeEigenvalue, EIGEN_TOL};
use crate::{Error, Result};

/// Relative magnitude below which a component counts as zero.
pub const ZERO_TOL: f64 = 1e-9;

/// Which rule produced a recovered sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `σ_1 = sgn x_1`.
    Sigma01,
    /// `σ_k = sgn(x_k / x_{k−1})`.
    Ratio,
    /// `σ_m = −sgn(x_m / x_{m−1})` at the sign change of the cosine, `n = 2m − 1`.
    ExceptionalMidpoint,
    /// `σ_k = ±x_k / x_{k−1}` on a `±2` eigenvector, `x_0 = x_n`.
    Plusminus2Ratio,
    /// `σ_k = sgn(y_k / y_{k−1})` on the sine vector.
    SineRatio,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecoveryResult {
    /// `signs[k−1]` is `σ_k`, or `None` if the input does not determine it.
    pub signs: Vec<Option<Sign>>,
    pub rules: Vec<Option<Rule>>,
    pub inferred_s: Option<u8>,
}

impl RecoveryResult {
    fn empty(n: usize, inferred_s: Option<u8>) -> Self {
        RecoveryResult {
            signs: vec![None; n],
            rules: vec![None; n],
            inferred_s,
        }
    }

    fn set(&mut self, k: usize, sign: Sign, rule: Rule) {
        self.signs[k - 1] = Some(sign);
        self.rules[k - 1] = Some(rule);
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    /// 1-based labels of the edges left undetermined.
    pub fn undetermined(&self) -> Vec<usize> {
        (1..=self.n())
            .filter(|&k| self.signs[k - 1].is_none())
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.signs.iter().all(Option::is_some)
    }

    /// Sign string with `?` for undetermined edges.
    pub fn sign_string(&self) -> String {
        self.signs
            .iter()
            .map(|s| s.map_or('?', Sign::as_char))
            .collect()
    }

    pub fn known_signs(&self) -> Option<Vec<Sign>> {
        self.signs.iter().copied().collect()
    }
}

/// Cycle sign from the largest eigenvalue `μ = 2cos(sπ/n)`: `+1` iff `μ = 2`.
pub fn sign_from_largest_eigenvalue(mu: f64, n: usize) -> Result<Sign> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    let low = 2.0 * cos_pi_frac(1, n as i64);
    if mu > 2.0 + EIGEN_TOL || mu < low - EIGEN_TOL || !mu.is_finite() {
        return Err(Error::InvalidLargestEigenvalue(mu, n));
    }
    Ok(if (mu - 2.0).abs() < EIGEN_TOL {
        Sign::Plus
    } else {
        Sign::Minus
    })
}

/// Classifies components as zero relative to the largest one.
fn zero_mask(v: &[f64]) -> Result<Vec<bool>> {
    if v.len() < 3 {
        return Err(Error::CycleTooShort(v.len()));
    }
    if v.iter().any(|c| !c.is_finite()) {
        return Err(Error::Input("non-finite vector component".into()));
    }
    let scale = inf_norm(v);
    Ok(v.iter()
        .map(|c| c.abs() < ZERO_TOL * scale || scale == 0.0)
        .collect())
}

fn ratio_sign(num: f64, den: f64) -> Sign {
    Sign::of_real(num / den).expect("nonzero components")
}

/// Recovers every sign from the eigenvector of the simple eigenvalue `±2`.
pub fn recover_from_pm2_vector(x: &[f64], eigen: ExtremeEigenvalue) -> Result<RecoveryResult> {
    let zero = zero_mask(x)?;
    if let Some(k) = zero.iter().position(|&z| z) {
        return Err(Error::DegenerateEigenvector(k + 1));
    }
    let n = x.len();
    let s = match eigen {
        ExtremeEigenvalue::PlusTwo => 0,
        ExtremeEigenvalue::MinusTwo => (n % 2) as u8,
    };
    let mut out = RecoveryResult::empty(n, Some(s));
    for k in 1..=n {
        let prev = if k == 1 { x[n - 1] } else { x[k - 2] };
        let ratio = ratio_sign(x[k - 1], prev);
        let sign = match eigen {
            ExtremeEigenvalue::PlusTwo => ratio,
            ExtremeEigenvalue::MinusTwo => -ratio,
        };
        out.set(k, sign, Rule::Plusminus2Ratio);
    }
    Ok(out)
}

/// Recovers signs from the `j = 0` cosine eigenvector.
///
/// `s` is read from `|x_1| / ‖x‖_∞`, which is `1` exactly when `s = 0`.
/// For `s = 1` and `n = 2m` the component `x_m` vanishes and `σ_m`, `σ_{m+1}`
/// stay undetermined.
pub fn recover_from_cosine(x: &[f64]) -> Result<RecoveryResult> {
    let zero = zero_mask(x)?;
    if zero[0] {
        return Err(Error::ZeroLeadingComponent);
    }
    let n = x.len();
    let lead = x[0].abs() / inf_norm(x);
    let s: u8 = if (lead - 1.0).abs() < EIGEN_TOL { 0 } else { 1 };
    let mut out = RecoveryResult::empty(n, Some(s));
    out.set(1, Sign::of_real(x[0]).expect("nonzero"), Rule::Sigma01);
    // the cosine factor turns negative between k−1 and k only at k = (n+1)/2, n odd
    let midpoint = (s == 1 && n % 2 == 1).then_some(n.div_ceil(2));
    for k in 2..=n {
        if zero[k - 1] || zero[k - 2] {
            continue;
        }
        let ratio = ratio_sign(x[k - 1], x[k - 2]);
        if Some(k) == midpoint {
            out.set(k, -ratio, Rule::ExceptionalMidpoint);
        } else {
            out.set(k, ratio, Rule::Ratio);
        }
    }
    Ok(out)
}

/// Recovers `σ_2, …, σ_{n−1}` from the `j = 0` sine eigenvector (`s = 1`).
pub fn recover_from_sine(y: &[f64]) -> Result<RecoveryResult> {
    let zero = zero_mask(y)?;
    if zero.iter().all(|&z| z) {
        return Err(Error::SineVanishes);
    }
    let n = y.len();
    let mut out = RecoveryResult::empty(n, Some(1));
    for k in 2..n {
        if zero[k - 1] || zero[k - 2] {
            continue;
        }
        out.set(k, ratio_sign(y[k - 1], y[k - 2]), Rule::SineRatio);
    }
    Ok(out)
}

/// Combines the cosine and (when `s = 1`) sine eigenvectors.
///
/// A vanishing or absent `y` is accepted when `x` indicates `s = 0`.
pub fn recover_from_pair(x: &[f64], y: Option<&[f64]>) -> Result<RecoveryResult> {
    let mut out = recover_from_cosine(x)?;
    let Some(y) = y else {
        return Ok(out);
    };
    if y.len() != x.len() {
        return Err(Error::LengthMismatch {
            expected: x.len(),
            actual: y.len(),
        });
    }
    let sine = match recover_from_sine(y) {
        Ok(r) => r,
        Err(Error::SineVanishes) if out.inferred_s == Some(0) => return Ok(out),
        Err(e) => return Err(e),
    };
    if out.inferred_s == Some(0) {
        // the j = 0 sine vector is identically zero when s = 0
        return Err(Error::Input(
            "nonzero sine vector paired with an s = 0 cosine vector".into(),
        ));
    }
    for k in 1..=out.n() {
        match (out.signs[k - 1], sine.signs[k - 1]) {
            (Some(a), Some(b)) if a != b => return Err(Error::InconsistentPair(k)),
            (None, Some(b)) => out.set(k, b, Rule::SineRatio),
            _ => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycle::SignedCycle;
    use crate::spectral::{cosine_eigenvector, exceptional_eigenvector, sine_eigenvector};
    use ExtremeEigenvalue::*;

    fn c(s: &str) -> SignedCycle {
        s.parse().unwrap()
    }

    #[test]
    fn largest_eigenvalue_rule() {
        assert_eq!(sign_from_largest_eigenvalue(2.0, 5).unwrap(), Sign::Plus);
        let mu = 2.0 * (std::f64::consts::PI / 5.0).cos();
        assert_eq!(sign_from_largest_eigenvalue(mu, 5).unwrap(), Sign::Minus);
        assert_eq!(sign_from_largest_eigenvalue(1.0, 3).unwrap(), Sign::Minus);
        assert!(sign_from_largest_eigenvalue(2.1, 5).is_err());
        assert!(sign_from_largest_eigenvalue(0.5, 3).is_err());
    }

    #[test]
    fn pm2_examples() {
        let r = recover_from_pm2_vector(&[1.0, 1.0, 1.0], PlusTwo).unwrap();
        assert_eq!(r.sign_string(), "+++");
        let r = recover_from_pm2_vector(&[-1.0, 1.0, -1.0, 1.0], MinusTwo).unwrap();
        assert_eq!(r.sign_string(), "++++");
        assert_eq!(r.inferred_s, Some(0));
        assert_eq!(
            recover_from_pm2_vector(&[1.0, 0.0, 1.0], PlusTwo),
            Err(Error::DegenerateEigenvector(2))
        );
        let x = exceptional_eigenvector(&c("-+-+-"), MinusTwo).unwrap();
        assert_eq!(
            recover_from_pm2_vector(&x, MinusTwo).unwrap().sign_string(),
            "-+-+-"
        );
    }

    #[test]
    fn cosine_examples() {
        let r = recover_from_cosine(&[1.0; 6]).unwrap();
        assert_eq!(r.sign_string(), "++++++");
        assert_eq!(r.inferred_s, Some(0));

        let r = recover_from_cosine(&[0.5, 0.5, 1.0]).unwrap();
        assert_eq!(r.sign_string(), "+-+");
        assert_eq!(r.inferred_s, Some(1));
        assert_eq!(r.rules[1], Some(Rule::ExceptionalMidpoint));
        assert_eq!(r.rules[0], Some(Rule::Sigma01));

        let x = cosine_eigenvector(&c("+-++"), 0).unwrap();
        let r = recover_from_cosine(&x).unwrap();
        assert_eq!(r.undetermined(), vec![2, 3]);
        assert_eq!(r.sign_string(), "+??+");

        assert_eq!(
            recover_from_cosine(&[0.0, 1.0, 1.0]),
            Err(Error::ZeroLeadingComponent)
        );
    }

    #[test]
    fn sine_examples() {
        let y = sine_eigenvector(&c("+-+"), 0).unwrap().unwrap();
        let r = recover_from_sine(&y).unwrap();
        assert_eq!(r.sign_string(), "?-?");
        assert_eq!(r.undetermined(), vec![1, 3]);
        assert_eq!(recover_from_sine(&[0.0; 4]), Err(Error::SineVanishes));
    }

    #[test]
    fn pair_examples() {
        let sc = c("+-+");
        let x = cosine_eigenvector(&sc, 0).unwrap();
        let y = sine_eigenvector(&sc, 0).unwrap();
        let r = recover_from_pair(&x, y.as_deref()).unwrap();
        assert_eq!(r.sign_string(), "+-+");
        assert!(r.undetermined().is_empty());

        let sc = c("+-++");
        let x = cosine_eigenvector(&sc, 0).unwrap();
        let y = sine_eigenvector(&sc, 0).unwrap();
        let r = recover_from_pair(&x, y.as_deref()).unwrap();
        assert_eq!(r.sign_string(), "+-++");
        assert_eq!(r.rules[1], Some(Rule::SineRatio));

        let sc = c("-+-+");
        let x = cosine_eigenvector(&sc, 0).unwrap();
        assert_eq!(
            recover_from_pair(&x, None).unwrap(),
            recover_from_cosine(&x).unwrap()
        );
        assert_eq!(
            recover_from_pair(&x, Some(&[0.0; 4])).unwrap(),
            recover_from_cosine(&x).unwrap()
        );
    }

    #[test]
    fn pair_inconsistency() {
        let sc = c("+--+-");
        let x = cosine_eigenvector(&sc, 0).unwrap();
        let other = sine_eigenvector(&c("+-+--"), 0).unwrap().unwrap();
        assert!(matches!(
            recover_from_pair(&x, Some(&other)),
            Err(Error::InconsistentPair(_))
        ));
    }

    #[test]
    fn scaling() {
        let sc = c("+--+-+-");
        let x = cosine_eigenvector(&sc, 0).unwrap();
        let base = recover_from_cosine(&x).unwrap();
        let up: Vec<f64> = x.iter().map(|v| v * 3.5).collect();
        assert_eq!(recover_from_cosine(&up).unwrap(), base);
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        let flipped = recover_from_cosine(&neg).unwrap();
        assert_eq!(flipped.signs[0], base.signs[0].map(|s| -s));
        assert_eq!(flipped.signs[1..], base.signs[1..]);
    }
}
