use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::CompleteUnionShape;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntSpectrumEntry {
    #[serde(with = "crate::arith::bigint_serde")]
    pub value: BigInt,
    pub multiplicity: u64,
}

/// An exact integer spectrum: distinct values ascending, no zero multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntSpectrum {
    entries: Vec<IntSpectrumEntry>,
}

impl IntSpectrum {
    /// Merges equal values and drops zero multiplicities.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (BigInt, u64)>) -> IntSpectrum {
        let mut entries: Vec<IntSpectrumEntry> = Vec::new();
        for (value, multiplicity) in pairs {
            if multiplicity == 0 {
                continue;
            }
            match entries.iter_mut().find(|e| e.value == value) {
                Some(e) => e.multiplicity += multiplicity,
                None => entries.push(IntSpectrumEntry { value, multiplicity }),
            }
        }
        entries.sort_by(|a, b| a.value.cmp(&b.value));
        IntSpectrum { entries }
    }

    pub fn entries(&self) -> &[IntSpectrumEntry] {
        &self.entries
    }

    pub fn size(&self) -> u64 {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn energy(&self) -> BigInt {
        self.entries.iter().map(|e| e.value.abs() * e.multiplicity).sum()
    }

    pub fn trace(&self) -> BigInt {
        self.entries.iter().map(|e| &e.value * e.multiplicity).sum()
    }
}

impl fmt::Display for IntSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if e.value.is_negative() {
                write!(f, "({})^{}", e.value, e.multiplicity)?;
            } else {
                write!(f, "{}^{}", e.value, e.multiplicity)?;
            }
        }
        f.write_str("}")
    }
}

/// Each part `l K_m` contributes `−(m−2)` with multiplicity `l(m−1)` and
/// `(m−1)(m−2)` with multiplicity `l`.
pub fn complete_union_spectrum(shape: &CompleteUnionShape) -> IntSpectrum {
    IntSpectrum::from_pairs(shape.parts().iter().flat_map(|p| {
        let m = BigInt::from(p.size);
        [
            (BigInt::from(2) - &m, p.copies * (p.size - 1)),
            ((&m - 1) * (&m - 2), p.copies),
        ]
    }))
}

/// `Σ 2l(m−1)(m−2)` over the parts.
pub fn complete_union_energy(shape: &CompleteUnionShape) -> BigInt {
    shape
        .parts()
        .iter()
        .map(|p| BigInt::from(p.copies) * 2 * kn_factor(p.size))
        .sum()
}

/// `E_CN(K_n) = 2(n−1)(n−2)`; graphs on at most two vertices have energy 0.
pub fn complete_graph_energy(n: u64) -> BigInt {
    kn_factor(n) * 2
}

fn kn_factor(m: u64) -> BigInt {
    if m <= 2 {
        BigInt::zero()
    } else {
        BigInt::from(m - 1) * BigInt::from(m - 2)
    }
}
