//! Signed cycles and their combinatorics.
//!
//! Signs are stored 0-based internally; every public function that takes a
//! vertex or edge index uses the 1-based labels `1..=n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// Sign of a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    // Declaration order gives `Plus < Minus`, the canonicalization order.
    Plus,
    Minus,
}

impl Sign {
    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn from_char(ch: char) -> Result<Self> {
        match ch {
            '+' => Ok(Sign::Plus),
            '-' => Ok(Sign::Minus),
            other => Err(Error::InvalidSignChar(other)),
        }
    }

    /// Sign of a nonzero real, `None` for zero or NaN.
    pub fn of_real(x: f64) -> Option<Self> {
        if x > 0.0 {
            Some(Sign::Plus)
        } else if x < 0.0 {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i64(self.value())
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A cycle `C_n` with edge signs `σ_1, …, σ_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycle {
    signs: Vec<Sign>,
}

/// `r` (number of negative edges), the cycle sign `σ = (−1)^r`, and `s = r mod 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CycleInvariants {
    pub r: usize,
    pub sigma: i64,
    pub s: u8,
}

impl SignedCycle {
    /// Validates `n ≥ 3`, `signs.len() == n` and every value in `{+1, −1}`.
    pub fn new(n: usize, signs: &[i64]) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        if signs.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: signs.len(),
            });
        }
        let signs = signs
            .iter()
            .map(|&v| Sign::from_value(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(SignedCycle { signs })
    }

    pub fn from_signs(signs: Vec<Sign>) -> Result<Self> {
        if signs.len() < 3 {
            return Err(Error::CycleTooShort(signs.len()));
        }
        Ok(SignedCycle { signs })
    }

    pub fn all_positive(n: usize) -> Result<Self> {
        Self::from_signs(vec![Sign::Plus; n])
    }

    /// Bit `i` set means `σ_{i+1} = −1`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        Self::from_signs(
            (0..n)
                .map(|i| {
                    if mask >> i & 1 == 1 {
                        Sign::Minus
                    } else {
                        Sign::Plus
                    }
                })
                .collect(),
        )
    }

    pub fn mask(&self) -> u64 {
        self.signs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn n(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// `σ_k` for a 1-based edge label; labels wrap modulo `n` (so `sign(0) = σ_n`).
    pub fn sign(&self, k: usize) -> Sign {
        let n = self.n();
        self.signs[(k + n - 1) % n]
    }

    /// `[σ_1, σ_1σ_2, …, σ_1···σ_n]`.
    pub fn prefix_products(&self) -> Vec<Sign> {
        self.signs
            .iter()
            .scan(Sign::Plus, |acc, &s| {
                *acc = *acc * s;
                Some(*acc)
            })
            .collect()
    }

    pub fn invariants(&self) -> CycleInvariants {
        let r = self.signs.iter().filter(|s| s.is_negative()).count();
        let s = (r % 2) as u8;
        CycleInvariants {
            r,
            sigma: if s == 0 { 1 } else { -1 },
            s,
        }
    }

    pub fn sign_string(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    /// Negates both edges incident to each vertex of `w`.
    pub fn switch(&self, w: &VertexSet) -> Result<SignedCycle> {
        let n = self.n();
        if let Some(&v) = w.members.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut signs = self.signs.clone();
        for &v in &w.members {
            // v_k touches e_k and e_{k+1}
            signs[v - 1] = -signs[v - 1];
            signs[v % n] = -signs[v % n];
        }
        Ok(SignedCycle { signs })
    }

    /// Reduces to the switching-class representative: all positive when
    /// `σ = +1`, otherwise all positive except `σ_n = −1`.
    ///
    /// Returns the representative and the set `W` with `switch(self, W)` equal to it.
    pub fn switching_reduce(&self) -> (SignedCycle, VertexSet) {
        let n = self.n();
        let mut signs = self.signs.clone();
        let mut w = BTreeSet::new();
        for k in 1..n {
            if signs[k - 1].is_negative() {
                signs[k - 1] = -signs[k - 1];
                signs[k] = -signs[k];
                w.insert(k);
            }
        }
        (SignedCycle { signs }, VertexSet { members: w })
    }

    /// A vertex set switching `self` into `other`, if one exists.
    pub fn switching_equivalent(&self, other: &SignedCycle) -> Result<Option<VertexSet>> {
        self.check_same_len(other)?;
        let (k1, w1) = self.switching_reduce();
        let (k2, w2) = other.switching_reduce();
        if k1 != k2 {
            return Ok(None);
        }
        Ok(Some(w1.symmetric_difference(&w2)))
    }

    /// Cyclic shift: the result's `σ_i` is `self`'s `σ_{i+k}`.
    pub fn rotate(&self, k: i64) -> SignedCycle {
        let n = self.n();
        let mut signs = self.signs.clone();
        signs.rotate_left(k.rem_euclid(n as i64) as usize);
        SignedCycle { signs }
    }

    /// Reads the sign sequence backwards.
    pub fn reverse(&self) -> SignedCycle {
        let mut signs = self.signs.clone();
        signs.reverse();
        SignedCycle { signs }
    }

    /// Smallest `k` with `rotate(self, k) == other`.
    pub fn iso_oriented(&self, other: &SignedCycle) -> Result<Option<usize>> {
        self.check_same_len(other)?;
        Ok(first_rotation_match(&self.signs, &other.signs))
    }

    /// Like [`iso_oriented`](Self::iso_oriented) but also tries the reversal.
    /// Returns `(reversed, shift)` for the first match, preferring unreversed.
    pub fn iso_unoriented_match(&self, other: &SignedCycle) -> Result<Option<(bool, usize)>> {
        if let Some(k) = self.iso_oriented(other)? {
            return Ok(Some((false, k)));
        }
        Ok(first_rotation_match(&self.reverse().signs, &other.signs).map(|k| (true, k)))
    }

    pub fn iso_unoriented(&self, other: &SignedCycle) -> Result<bool> {
        Ok(self.iso_unoriented_match(other)?.is_some())
    }

    /// Lexicographically least rotation, ordering `+` before `−`.
    pub fn canonical_rotation(&self) -> SignedCycle {
        (0..self.n() as i64)
            .map(|k| self.rotate(k))
            .min()
            .expect("n >= 3")
    }

    /// Least sequence over all rotations of `self` and of its reversal.
    pub fn canonical_unoriented(&self) -> SignedCycle {
        self.canonical_rotation()
            .min(self.reverse().canonical_rotation())
    }

    fn check_same_len(&self, other: &SignedCycle) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                actual: other.n(),
            });
        }
        Ok(())
    }
}

fn first_rotation_match(a: &[Sign], b: &[Sign]) -> Option<usize> {
    let n = a.len();
    (0..n).find(|&k| (0..n).all(|i| a[(i + k) % n] == b[i]))
}

impl FromStr for SignedCycle {
    type Err = Error;

    /// Parses a sign string such as `"++-+"` (position `i` is `σ_i`).
    fn from_str(s: &str) -> Result<Self> {
        let signs = s.chars().map(Sign::from_char).collect::<Result<Vec<_>>>()?;
        Self::from_signs(signs)
    }
}

impl fmt::Display for SignedCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.sign_string())
    }
}

/// A set of 1-based vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a set after checking every label lies in `1..=n`.
    pub fn new(n: usize, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&v) = members.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        Ok(VertexSet { members })
    }

    pub fn all(n: usize) -> Self {
        VertexSet {
            members: (1..=n).collect(),
        }
    }

    /// Bit `v−1` set means `v ∈ W`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        VertexSet {
            members: (1..=n).filter(|v| mask >> (v - 1) & 1 == 1).collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self
                .members
                .symmetric_difference(&other.members)
                .copied()
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> SignedCycle {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_errors() {
        let c3 = SignedCycle::new(3, &[1, 1, 1]).unwrap();
        assert_eq!(c3.sign_string(), "+++");
        assert_eq!(
            SignedCycle::new(4, &[1, -1, 1, -1]).unwrap().invariants().r,
            2
        );
        assert_eq!(SignedCycle::new(2, &[1, 1]), Err(Error::CycleTooShort(2)));
        assert_eq!(
            SignedCycle::new(3, &[1, 1]),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        );
        assert_eq!(SignedCycle::new(3, &[1, 0, 1]), Err(Error::InvalidSign(0)));
        assert_eq!(
            "+x+".parse::<SignedCycle>(),
            Err(Error::InvalidSignChar('x'))
        );
        assert_eq!("++".parse::<SignedCycle>(), Err(Error::CycleTooShort(2)));
    }

    #[test]
    fn invariants_examples() {
        let inv = c("+++").invariants();
        assert_eq!((inv.r, inv.sigma, inv.s), (0, 1, 0));
        let inv = c("+-+-").invariants();
        assert_eq!((inv.r, inv.sigma, inv.s), (2, 1, 0));
        let inv = c("---++").invariants();
        assert_eq!((inv.r, inv.sigma, inv.s), (3, -1, 1));
    }

    #[test]
    fn switch_examples() {
        let w = VertexSet::new(4, [1]).unwrap();
        assert_eq!(c("++++").switch(&w).unwrap(), c("--++"));
        assert_eq!(c("+-++").switch(&VertexSet::empty()).unwrap(), c("+-++"));
        // v_n touches e_n and e_1
        let w = VertexSet::new(4, [4]).unwrap();
        assert_eq!(c("++++").switch(&w).unwrap(), c("-++-"));
        assert!(matches!(
            VertexSet::new(4, [5]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
        assert_eq!(c("+-+-").switch(&VertexSet::all(4)).unwrap(), c("+-+-"));
    }

    #[test]
    fn switching_reduce_examples() {
        let (k, w) = c("++++").switching_reduce();
        assert_eq!(k, c("++++"));
        assert!(w.is_empty());

        let start = c("-++");
        let (k, w) = start.switching_reduce();
        assert_eq!(k, c("++-"));
        assert_eq!(start.switch(&w).unwrap(), k);
    }

    #[test]
    fn switching_reduce_exhaustive_n6() {
        for mask in 0..64 {
            let s = SignedCycle::from_mask(6, mask).unwrap();
            let (k, w) = s.switching_reduce();
            assert_eq!(s.switch(&w).unwrap(), k);
            let expected = if s.invariants().s == 0 {
                "++++++"
            } else {
                "+++++-"
            };
            assert_eq!(k.sign_string(), expected);
        }
    }

    #[test]
    fn switching_equivalent_examples() {
        let a = c("++++");
        let b = c("--++");
        let w = a.switching_equivalent(&b).unwrap().unwrap();
        assert_eq!(a.switch(&w).unwrap(), b);
        assert_eq!(c("+++").switching_equivalent(&c("-++")).unwrap(), None);
        let w = b.switching_equivalent(&b).unwrap().unwrap();
        assert_eq!(b.switch(&w).unwrap(), b);
        assert!(c("+++").switching_equivalent(&c("++++")).is_err());
    }

    #[test]
    fn rotation_and_reflection() {
        assert_eq!(c("+-++").rotate(1), c("-+++"));
        assert_eq!(c("+-++").rotate(4), c("+-++"));
        assert_eq!(c("+-++").rotate(-1), c("++-+"));
        assert_eq!(c("+--+-").reverse().reverse(), c("+--+-"));
        assert_eq!(c("+--+-").reverse(), c("-+--+"));
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(c("+-++").iso_oriented(&c("-+++")).unwrap(), Some(1));
        let (a, b) = (c("+--+"), c("++--"));
        assert_eq!(a.iso_oriented(&b).unwrap(), Some(3));
        assert!(a.iso_unoriented(&b).unwrap());
        let (a, b) = (c("+--+-"), c("+-+--"));
        assert_eq!(a.iso_oriented(&b).unwrap(), Some(3));
        assert_eq!(c("+-++").iso_oriented(&c("+-++")).unwrap(), Some(0));
        // chiral pair: only the reversal matches
        let (a, b) = (c("++-+---"), c("+---+-+"));
        assert_eq!(a.iso_oriented(&b).unwrap(), None);
        assert_eq!(a.iso_unoriented_match(&b).unwrap(), Some((true, 6)));
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(c("-++").canonical_rotation(), c("++-"));
        assert_eq!(c("+++++").canonical_rotation(), c("+++++"));
        let k = c("-+-++").canonical_rotation();
        assert_eq!(k.canonical_rotation(), k);
    }

    #[test]
    fn prefix_products_and_mask() {
        let s = c("+-+-");
        let p: String = s.prefix_products().iter().map(|x| x.as_char()).collect();
        assert_eq!(p, "+--+");
        assert_eq!(s.mask(), 0b1010);
        assert_eq!(SignedCycle::from_mask(4, 0b1010).unwrap(), s);
        assert_eq!(s.sign(0), Sign::Minus);
        assert_eq!(s.sign(5), Sign::Plus);
    }
}
