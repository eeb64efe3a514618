use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::exact::{complete_graph_energy, IntSpectrum};

/// Eigenvalues whose gap is at most `CLUSTER_TOLERANCE · max(1, |v|)` are one value.
pub const CLUSTER_TOLERANCE: f64 = 1e-6;
/// `λ` is integral when `|λ − round(λ)| ≤ INTEGRALITY_TOLERANCE · max(1, |λ|)`.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;
/// `|gap| ≤ BORDER_TOLERANCE` counts as borderenergetic.
pub const BORDER_TOLERANCE: f64 = 1e-6;

pub fn is_integral_value(v: f64) -> bool {
    (v - v.round()).abs() <= INTEGRALITY_TOLERANCE * v.abs().max(1.0)
}

/// One distinct eigenvalue with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumEntry {
    pub value: f64,
    pub multiplicity: usize,
}

/// A numeric spectrum: distinct values ascending, multiplicities merged.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// Sorts and clusters raw eigenvalues; each cluster is represented by its mean.
    pub fn from_eigenvalues(values: &[f64]) -> Spectrum {
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let mut clusters: Vec<(f64, usize, f64)> = Vec::new(); // (sum, count, last)
        for v in sorted {
            match clusters.last_mut() {
                Some((sum, count, last)) if v - *last <= CLUSTER_TOLERANCE * v.abs().max(1.0) => {
                    *sum += v;
                    *count += 1;
                    *last = v;
                }
                _ => clusters.push((v, 1, v)),
            }
        }
        let entries = clusters
            .into_iter()
            .map(|(sum, count, _)| SpectrumEntry { value: sum / count as f64, multiplicity: count })
            .collect();
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    /// `Σ α_i λ_i`.
    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    /// `Σ α_i λ_i²`.
    pub fn second_moment(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.value * e.multiplicity as f64).sum()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| is_integral_value(e.value))
    }

    /// The spectrum with every value rounded, or `None` if some value is not integral.
    pub fn rounded(&self) -> Option<IntSpectrum> {
        if !self.is_integral() {
            return None;
        }
        Some(IntSpectrum::from_pairs(
            self.entries
                .iter()
                .map(|e| (BigInt::from(e.value.round() as i64), e.multiplicity as u64)),
        ))
    }
}

/// `12` significant digits, with negative zero folded into zero.
fn twelve_digits(v: f64) -> f64 {
    let r: f64 = format!("{v:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    value: f64,
    multiplicity: usize,
    rounded: Option<i64>,
}

impl Serialize for Spectrum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let reprs: Vec<EntryRepr> = self
            .entries
            .iter()
            .map(|e| EntryRepr {
                value: twelve_digits(e.value),
                multiplicity: e.multiplicity,
                rounded: is_integral_value(e.value).then(|| e.value.round() as i64),
            })
            .collect();
        reprs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spectrum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let reprs = Vec::<EntryRepr>::deserialize(d)?;
        Ok(Spectrum {
            entries: reprs
                .into_iter()
                .map(|r| SpectrumEntry { value: r.value, multiplicity: r.multiplicity })
                .collect(),
        })
    }
}

impl fmt::Display for Spectrum {
    /// `{(-1)^2, 0^1, 2^1}`; non-integral values print with six decimals.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let text = if is_integral_value(e.value) {
                format!("{}", e.value.round() as i64)
            } else {
                format!("{:.6}", e.value)
            };
            if e.value < 0.0 && text != "0" {
                write!(f, "({text})^{}", e.multiplicity)?;
            } else {
                write!(f, "{}^{}", text.trim_start_matches('-'), e.multiplicity)?;
            }
        }
        f.write_str("}")
    }
}

/// `E_CN = Σ α_i |λ_i|`.
pub fn cn_energy(s: &Spectrum) -> f64 {
    s.entries.iter().map(|e| e.value.abs() * e.multiplicity as f64).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Hyperenergetic,
    Borderenergetic,
    Subenergetic,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Hyperenergetic => "Hyperenergetic",
            Classification::Borderenergetic => "Borderenergetic",
            Classification::Subenergetic => "Subenergetic",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnergyReport {
    pub energy: f64,
    pub vertex_count: usize,
    #[serde(with = "crate::arith::bigint_serde")]
    pub complete_graph_energy: BigInt,
    /// `E_CN(K_n) − E_CN(G)`.
    pub gap: f64,
    pub classification: Classification,
    pub integral: bool,
    pub rounded_spectrum: Option<IntSpectrum>,
}

pub fn classify(s: &Spectrum, vertex_count: usize) -> EnergyReport {
    debug_assert_eq!(s.size(), vertex_count);
    let energy = cn_energy(s);
    let kn = complete_graph_energy(vertex_count as u64);
    let kn_f: f64 = kn.to_string().parse().expect("integer parses as f64");
    let gap = kn_f - energy;
    let classification = if gap.abs() <= BORDER_TOLERANCE {
        Classification::Borderenergetic
    } else if gap < 0.0 {
        Classification::Hyperenergetic
    } else {
        Classification::Subenergetic
    };
    EnergyReport {
        energy,
        vertex_count,
        complete_graph_energy: kn,
        gap,
        classification,
        integral: s.is_integral(),
        rounded_spectrum: s.rounded(),
    }
}
