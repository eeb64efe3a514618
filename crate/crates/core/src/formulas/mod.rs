//! Closed forms: predicted graph structure, CN-spectrum, CN-energy and
//! hyperenergetic gap for every theorem, in exact arithmetic.
//!
//! Each predictor first produces a [`CompleteUnionShape`] and derives the
//! spectrum and energy from it, so a prediction is internally consistent by
//! construction. [`stated_energy`] evaluates the energy polynomials exactly
//! as the theorems print them, and [`gap_expression`] the printed gap forms;
//! tests hold both against the shape-derived values.

mod gap;
mod predict;
mod stated;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub use gap::gap_expression;
pub use predict::{
    predict, predict_d2n, predict_gpmn, predict_pgroup_center_pn2, predict_pgroup_center_pn3,
    predict_pgroup_p4, predict_quotient_d2n, predict_quotient_p3, predict_quotient_pp,
    predict_sd8n, predict_t4n, predict_u6n, predict_unm, predict_v8n,
};
pub use stated::stated_energy;

use crate::error::{Error, Result};
use crate::graph::CompleteUnionShape;
use crate::group::FamilyInstance;
use crate::spectral::{complete_graph_energy, IntSpectrum};

/// A theorem, addressed on the command line by its number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// 3.1: `D_2n`.
    Dihedral,
    /// 3.2: `T_4n`.
    Dicyclic,
    /// 3.3: `U_(n,m)`.
    Unm,
    /// The `U_6n` corollary of 3.3.
    U6n,
    /// 3.4: `V_8n`.
    V8n,
    /// 3.5: `SD_8n`.
    Semidihedral,
    /// 3.6: `G(p,m,n)`.
    Gpmn,
    /// 3.7: `G/Z ≅ Z_p × Z_p`.
    QuotientPP,
    /// 3.8: `|G| = p^n`, `|Z| = p^(n−2)`.
    PGroupCenterPn2,
    /// 3.9: `|G/Z| = p^3`.
    QuotientP3,
    /// 3.10: `|G| = p^n`, `|Z| = p^(n−3)`.
    PGroupCenterPn3,
    /// 3.11: `|G| = p^4`.
    PGroupP4,
    /// `G/Z ≅ D_2n`.
    QuotientD2n,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Dihedral,
        TheoremId::Dicyclic,
        TheoremId::Unm,
        TheoremId::U6n,
        TheoremId::V8n,
        TheoremId::Semidihedral,
        TheoremId::Gpmn,
        TheoremId::QuotientPP,
        TheoremId::PGroupCenterPn2,
        TheoremId::QuotientP3,
        TheoremId::PGroupCenterPn3,
        TheoremId::PGroupP4,
        TheoremId::QuotientD2n,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::Dihedral => "3.1",
            TheoremId::Dicyclic => "3.2",
            TheoremId::Unm => "3.3",
            TheoremId::U6n => "u6n",
            TheoremId::V8n => "3.4",
            TheoremId::Semidihedral => "3.5",
            TheoremId::Gpmn => "3.6",
            TheoremId::QuotientPP => "3.7",
            TheoremId::PGroupCenterPn2 => "3.8",
            TheoremId::QuotientP3 => "3.9",
            TheoremId::PGroupCenterPn3 => "3.10",
            TheoremId::PGroupP4 => "3.11",
            TheoremId::QuotientD2n => "d2n-quotient",
        }
    }

    /// Parameters the predictor reads, in the order sweeps enumerate them.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            TheoremId::Dihedral
            | TheoremId::Dicyclic
            | TheoremId::U6n
            | TheoremId::V8n
            | TheoremId::Semidihedral => &["n"],
            TheoremId::Unm => &["n", "m"],
            TheoremId::Gpmn => &["p", "m", "n"],
            TheoremId::QuotientPP => &["p", "z"],
            TheoremId::PGroupCenterPn2 => &["p", "n"],
            TheoremId::QuotientP3 => &["p", "z", "k"],
            TheoremId::PGroupCenterPn3 => &["p", "n", "k"],
            TheoremId::PGroupP4 => &["p", "e"],
            TheoremId::QuotientD2n => &["n", "z"],
        }
    }

    /// True for the theorems about a named family (3.1 to 3.6 and `U_6n`).
    pub fn is_structure_theorem(self) -> bool {
        matches!(
            self,
            TheoremId::Dihedral
                | TheoremId::Dicyclic
                | TheoremId::Unm
                | TheoremId::U6n
                | TheoremId::V8n
                | TheoremId::Semidihedral
                | TheoremId::Gpmn
        )
    }

    /// The family a structure theorem is about.
    pub fn family_instance(self, params: &TheoremParams) -> Result<Option<FamilyInstance>> {
        Ok(Some(match self {
            TheoremId::Dihedral => FamilyInstance::Dihedral2n { n: params.need("n")? },
            TheoremId::Dicyclic => FamilyInstance::Dicyclic4n { n: params.need("n")? },
            TheoremId::Unm => FamilyInstance::Unm { n: params.need("n")?, m: params.need("m")? },
            TheoremId::U6n => FamilyInstance::U6n { n: params.need("n")? },
            TheoremId::V8n => FamilyInstance::V8n { n: params.need("n")? },
            TheoremId::Semidihedral => FamilyInstance::Semidihedral8n { n: params.need("n")? },
            TheoremId::Gpmn => FamilyInstance::Gpmn {
                p: params.need("p")?,
                m: params.need("m")?,
                n: params.need("n")?,
            },
            _ => return Ok(None),
        }))
    }

    /// The theorem about a family's structure.
    pub fn for_family(spec: &FamilyInstance) -> (TheoremId, TheoremParams) {
        let mut params = TheoremParams::default();
        for (name, value) in spec.params() {
            params.set(name, value);
        }
        let id = match spec {
            FamilyInstance::Dihedral2n { .. } => TheoremId::Dihedral,
            FamilyInstance::Dicyclic4n { .. } => TheoremId::Dicyclic,
            FamilyInstance::Semidihedral8n { .. } => TheoremId::Semidihedral,
            FamilyInstance::Unm { .. } => TheoremId::Unm,
            FamilyInstance::U6n { .. } => TheoremId::U6n,
            FamilyInstance::V8n { .. } => TheoremId::V8n,
            FamilyInstance::Gpmn { .. } => TheoremId::Gpmn,
        };
        (id, params)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let found = TheoremId::ALL.into_iter().find(|t| t.id() == key);
        found
            .or(match key.as_str() {
                "dihedral" | "d2n" => Some(TheoremId::Dihedral),
                "dicyclic" | "t4n" => Some(TheoremId::Dicyclic),
                "unm" => Some(TheoremId::Unm),
                "3.3-cor" | "u6n-cor" => Some(TheoremId::U6n),
                "v8n" => Some(TheoremId::V8n),
                "semidihedral" | "sd8n" => Some(TheoremId::Semidihedral),
                "gpmn" => Some(TheoremId::Gpmn),
                "zpxzp" => Some(TheoremId::QuotientPP),
                "p3" => Some(TheoremId::QuotientP3),
                "p4" => Some(TheoremId::PGroupP4),
                "d2n-spec-energy" | "quotient-d2n" => Some(TheoremId::QuotientD2n),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

impl<'de> Deserialize<'de> for TheoremId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Case labels of the order-`p^3` central quotient theorem.
///
/// `A*` cases have an abelian quotient, `B*` cases a non-abelian one; the
/// digit follows the order in which the theorem lists the structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Case {
    A1,
    A2,
    B1,
    B2,
    B3,
    B4,
    B5,
}

impl Case {
    pub const ALL: [Case; 7] = [Case::A1, Case::A2, Case::B1, Case::B2, Case::B3, Case::B4, Case::B5];

    pub fn needs_k(self) -> bool {
        matches!(self, Case::B1 | Case::B2)
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_uppercase();
        Case::ALL
            .into_iter()
            .find(|c| c.to_string() == key)
            .ok_or_else(|| Error::InvalidParams(format!("unknown case '{s}' (expected A1, A2, B1..B5)")))
    }
}

/// Parameters for the order-`p^3` central quotient theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralQuotientParams {
    pub p: u64,
    /// `|Z(G)|`.
    pub z: u64,
    pub n_dihedral: Option<u64>,
    pub case: Option<Case>,
    pub k: Option<u64>,
}

/// Named theorem parameters; which ones matter depends on the theorem.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TheoremParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<Case>,
    /// For the order-`p^4` theorem: `|Z| = p^center_exponent`, 1 or 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_exponent: Option<u32>,
}

impl TheoremParams {
    pub fn get(&self, name: &str) -> Option<u64> {
        match name {
            "n" => self.n,
            "m" => self.m,
            "p" => self.p,
            "z" => self.z,
            "k" => self.k,
            "e" => self.center_exponent.map(u64::from),
            _ => None,
        }
    }

    pub fn set(&mut self, name: &str, value: u64) {
        match name {
            "n" => self.n = Some(value),
            "m" => self.m = Some(value),
            "p" => self.p = Some(value),
            "z" => self.z = Some(value),
            "k" => self.k = Some(value),
            "e" => self.center_exponent = u32::try_from(value).ok(),
            _ => panic!("unknown parameter '{name}'"),
        }
    }

    pub fn with(mut self, name: &str, value: u64) -> Self {
        self.set(name, value);
        self
    }

    pub fn with_case(mut self, case: Case) -> Self {
        self.case = Some(case);
        self
    }

    pub fn need(&self, name: &'static str) -> Result<u64> {
        self.get(name)
            .ok_or_else(|| Error::InvalidParams(format!("missing parameter '{name}'")))
    }
}

impl fmt::Display for TheoremParams {
    /// `p=2, z=4, case=B2, k=1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut item = |f: &mut fmt::Formatter<'_>, name: &str, v: &dyn fmt::Display| {
            let sep = if first { "" } else { ", " };
            first = false;
            write!(f, "{sep}{name}={v}")
        };
        for name in ["p", "n", "m", "z", "k"] {
            if let Some(v) = self.get(name) {
                item(f, name, &v)?;
            }
        }
        if let Some(c) = self.case {
            item(f, "case", &c)?;
        }
        if let Some(e) = self.center_exponent {
            item(f, "e", &e)?;
        }
        Ok(())
    }
}

/// A theorem's conclusion for one parameter point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremPrediction {
    pub theorem_id: TheoremId,
    pub params: TheoremParams,
    pub shape: CompleteUnionShape,
    pub spectrum: IntSpectrum,
    #[serde(with = "crate::arith::bigint_serde")]
    pub energy: BigInt,
}

impl TheoremPrediction {
    pub fn vertex_count(&self) -> u64 {
        self.shape.vertex_count()
    }

    /// `E_CN(K_|V|) − E_CN(Γ)` derived from the shape.
    pub fn gap(&self) -> BigInt {
        complete_graph_energy(self.vertex_count()) - &self.energy
    }
}
