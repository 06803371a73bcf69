//! Exhaustive enumeration of the `2^n` signings of `C_n` and how finely each
//! descriptor separates them.
//!
//! Per-signing work runs on rayon; results are collected in bitmask order
//! so every report is identical regardless of thread count.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cycle::SignedCycle;
use crate::descriptors::{self, DescriptorReport};
use crate::recovery::recover_from_pair;
use crate::spectral::{cosine_eigenvector, sine_eigenvector};
use crate::{Error, Result};

/// Largest `n` accepted by the enumeration entry points.
pub const ENUMERATION_CAP: usize = 20;

/// Real-valued descriptor values closer than this fall in the same class.
pub const CLASS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Descriptor {
    WienerSum,
    Energy,
    N1,
    N2,
    N3,
    SpectrumKey,
    EigenvectorPair,
}

impl Descriptor {
    pub const ALL: [Descriptor; 7] = [
        Descriptor::WienerSum,
        Descriptor::Energy,
        Descriptor::N1,
        Descriptor::N2,
        Descriptor::N3,
        Descriptor::SpectrumKey,
        Descriptor::EigenvectorPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Descriptor::WienerSum => "wiener_sum",
            Descriptor::Energy => "energy",
            Descriptor::N1 => "n1",
            Descriptor::N2 => "n2",
            Descriptor::N3 => "n3",
            Descriptor::SpectrumKey => "spectrum_key",
            Descriptor::EigenvectorPair => "eigenvector_pair",
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Descriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Descriptor::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| Error::UnknownDescriptor(s.to_owned()))
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if n > ENUMERATION_CAP {
        return Err(Error::AboveCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(())
}

/// All signings in binary-counting order: bit `i` of the index set means `σ_{i+1} = −1`.
pub fn enumerate_signings(n: usize) -> Result<impl Iterator<Item = SignedCycle>> {
    check_n(n)?;
    Ok((0..1u64 << n).map(move |mask| SignedCycle::from_mask(n, mask).expect("n >= 3")))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartitionReport {
    pub n: usize,
    pub descriptor_name: String,
    pub class_count: usize,
    /// Descending.
    pub class_sizes: Vec<usize>,
    pub fully_discriminating: bool,
    pub collision_rate: f64,
}

#[derive(Debug, Clone, PartialEq)]
enum Key {
    Int(i64),
    Real(f64),
    Text(String),
}

fn key_of(d: Descriptor, c: &SignedCycle) -> Key {
    match d {
        Descriptor::WienerSum => Key::Int(descriptors::wiener_sum(c)),
        Descriptor::Energy => Key::Real(descriptors::energy(c)),
        Descriptor::N1 => Key::Real(descriptors::norms(c).0),
        Descriptor::N2 => Key::Real(descriptors::norms(c).1),
        Descriptor::N3 => Key::Real(descriptors::norms(c).2),
        Descriptor::SpectrumKey => Key::Text(descriptors::spectrum_fingerprint(c)),
        Descriptor::EigenvectorPair => Key::Text(recovered_signs(c)),
    }
}

/// Signs read back from the `j = 0` cosine and sine eigenvectors.
pub fn recovered_signs(c: &SignedCycle) -> String {
    let x = cosine_eigenvector(c, 0).expect("j = 0 always valid");
    let y = sine_eigenvector(c, 0).expect("j = 0 always valid");
    recover_from_pair(&x, y.as_deref())
        .expect("constructed eigenvectors are consistent")
        .sign_string()
}

/// Class sizes, descending, of the signing-to-value map.
fn group(keys: Vec<Key>) -> Vec<usize> {
    let mut ints: BTreeMap<i64, usize> = BTreeMap::new();
    let mut texts: BTreeMap<String, usize> = BTreeMap::new();
    let mut reals: Vec<f64> = Vec::new();
    for k in keys {
        match k {
            Key::Int(v) => *ints.entry(v).or_default() += 1,
            Key::Text(v) => *texts.entry(v).or_default() += 1,
            Key::Real(v) => reals.push(v),
        }
    }
    let mut sizes: Vec<usize> = ints.into_values().chain(texts.into_values()).collect();
    reals.sort_by(f64::total_cmp);
    let mut i = 0;
    while i < reals.len() {
        // cluster by chaining neighbours within tolerance
        let mut j = i + 1;
        while j < reals.len() && reals[j] - reals[j - 1] < CLASS_TOL {
            j += 1;
        }
        sizes.push(j - i);
        i = j;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

pub fn partition_by(descriptor: Descriptor, n: usize) -> Result<PartitionReport> {
    check_n(n)?;
    let keys: Vec<Key> = (0..1u64 << n)
        .into_par_iter()
        .map(|mask| {
            key_of(
                descriptor,
                &SignedCycle::from_mask(n, mask).expect("n >= 3"),
            )
        })
        .collect();
    let total = keys.len();
    let class_sizes = group(keys);
    let class_count = class_sizes.len();
    Ok(PartitionReport {
        n,
        descriptor_name: descriptor.name().to_owned(),
        class_count,
        class_sizes,
        fully_discriminating: class_count == total,
        collision_rate: 1.0 - class_count as f64 / total as f64,
    })
}

/// Same as [`partition_by`], looking the descriptor up by name.
pub fn partition_by_name(name: &str, n: usize) -> Result<PartitionReport> {
    partition_by(name.parse()?, n)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EfficacyReport {
    pub n: usize,
    /// Ordered by class count descending, ties in [`Descriptor::ALL`] order.
    pub rows: Vec<PartitionReport>,
    /// The only descriptor separating every signing, if exactly one does.
    pub unique_full_discriminator: Option<String>,
}

impl EfficacyReport {
    pub fn class_count(&self, d: Descriptor) -> Option<usize> {
        self.rows
            .iter()
            .find(|r| r.descriptor_name == d.name())
            .map(|r| r.class_count)
    }

    /// Plain-text comparison table.
    pub fn table(&self) -> String {
        let total = 1u64 << self.n;
        let mut out = format!(
            "{:<18} {:>8} {:>10} {:>6}\n",
            "descriptor", "classes", "collision", "full"
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{:<18} {:>8} {:>10.6} {:>6}\n",
                r.descriptor_name, r.class_count, r.collision_rate, r.fully_discriminating
            ));
        }
        out.push_str(&format!("({total} signings of C_{})\n", self.n));
        out
    }
}

pub fn efficacy_report(n: usize) -> Result<EfficacyReport> {
    let mut rows = Descriptor::ALL
        .into_iter()
        .map(|d| partition_by(d, n))
        .collect::<Result<Vec<_>>>()?;
    // stable sort keeps ALL order for ties
    rows.sort_by_key(|r| std::cmp::Reverse(r.class_count));
    let full: Vec<&PartitionReport> = rows.iter().filter(|r| r.fully_discriminating).collect();
    let unique_full_discriminator = match full.as_slice() {
        [only] => Some(only.descriptor_name.clone()),
        _ => None,
    };
    Ok(EfficacyReport {
        n,
        rows,
        unique_full_discriminator,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SwitchingClass {
    pub size: usize,
    /// Smallest bitmask in the class.
    pub representative: String,
    pub spectrum_key: String,
    /// Every member has the class's spectrum key.
    pub spectrum_constant: bool,
    /// Every member has even `r`.
    pub all_even: bool,
    pub all_odd: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub class_count: usize,
    pub classes: Vec<SwitchingClass>,
    /// No two classes share a spectrum key.
    pub spectra_distinct: bool,
}

/// Switching classes as connected components under single-vertex switches.
pub fn switching_class_census(n: usize) -> Result<CensusReport> {
    check_n(n)?;
    let total = 1usize << n;
    // switching v_k flips e_k and e_{k+1}
    let flips: Vec<usize> = (0..n).map(|v| 1 << v | 1 << ((v + 1) % n)).collect();
    let mut label = vec![usize::MAX; total];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for start in 0..total {
        if label[start] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut class = Vec::new();
        let mut queue = VecDeque::from([start]);
        label[start] = id;
        while let Some(m) = queue.pop_front() {
            class.push(m);
            for &f in &flips {
                let next = m ^ f;
                if label[next] == usize::MAX {
                    label[next] = id;
                    queue.push_back(next);
                }
            }
        }
        members.push(class);
    }
    let classes: Vec<SwitchingClass> = members
        .iter()
        .map(|class| {
            let rep = SignedCycle::from_mask(n, class[0] as u64).expect("n >= 3");
            let key = descriptors::spectrum_fingerprint(&rep);
            let spectrum_constant = class.par_iter().all(|&m| {
                descriptors::spectrum_fingerprint(
                    &SignedCycle::from_mask(n, m as u64).expect("n >= 3"),
                ) == key
            });
            SwitchingClass {
                size: class.len(),
                representative: rep.sign_string(),
                spectrum_key: key,
                spectrum_constant,
                all_even: class.iter().all(|m| m.count_ones() % 2 == 0),
                all_odd: class.iter().all(|m| m.count_ones() % 2 == 1),
            }
        })
        .collect();
    let mut keys: Vec<&str> = classes.iter().map(|c| c.spectrum_key.as_str()).collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(CensusReport {
        n,
        class_count: classes.len(),
        spectra_distinct: keys.len() == classes.len(),
        classes,
    })
}

/// One [`DescriptorReport`] per signing, in bitmask order.
pub fn descriptor_rows(n: usize) -> Result<Vec<DescriptorReport>> {
    check_n(n)?;
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|mask| descriptors::describe(&SignedCycle::from_mask(n, mask).expect("n >= 3")))
        .collect())
}
