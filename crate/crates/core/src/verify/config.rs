use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::formulas::{Case, TheoremId, TheoremParams};
use crate::group::FamilyKind;
use crate::spectral::{BORDER_TOLERANCE, INTEGRALITY_TOLERANCE};

pub const DEFAULT_CAP: u64 = 4000;

/// An inclusive integer interval; `[lo, hi]` in JSON, `lo..hi` on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "(u64, u64)", into = "(u64, u64)")]
pub struct ParamRange {
    pub lo: u64,
    pub hi: u64,
}

impl ParamRange {
    pub fn new(lo: u64, hi: u64) -> ParamRange {
        ParamRange { lo, hi }
    }

    pub fn single(v: u64) -> ParamRange {
        ParamRange { lo: v, hi: v }
    }

    pub fn values(self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }
}

impl From<(u64, u64)> for ParamRange {
    fn from((lo, hi): (u64, u64)) -> Self {
        ParamRange { lo, hi }
    }
}

impl From<ParamRange> for (u64, u64) {
    fn from(r: ParamRange) -> Self {
        (r.lo, r.hi)
    }
}

impl FromStr for ParamRange {
    type Err = Error;

    /// `3..20`, `3..=20` (both inclusive) or a single `7`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad range '{s}' (expected A..B)"));
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
        match s.split_once("..") {
            Some((lo, hi)) => Ok(ParamRange::new(num(lo)?, num(hi.trim_start_matches('='))?)),
            None => Ok(ParamRange::single(num(s)?)),
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// Relative distance to the nearest integer (and to predicted eigenvalues).
    pub integrality: f64,
    /// Relative distance between observed and predicted energy.
    pub energy: f64,
    /// Absolute `|gap|` counted as zero.
    pub border: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { integrality: INTEGRALITY_TOLERANCE, energy: 1e-6, border: BORDER_TOLERANCE }
    }
}

impl Tolerances {
    pub fn is_integral(&self, v: f64) -> bool {
        (v - v.round()).abs() <= self.integrality * v.abs().max(1.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepTarget {
    Family(FamilyKind),
    Theorem(TheoremId),
    /// A registry entry by name, or `all`.
    Witness(String),
}

impl fmt::Display for SweepTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepTarget::Family(k) => write!(f, "family {k}"),
            SweepTarget::Theorem(t) => write!(f, "theorem {t}"),
            SweepTarget::Witness(w) => write!(f, "witness {w}"),
        }
    }
}

/// One sweep: a target, inclusive ranges per parameter, an order cap.
///
/// In JSON exactly one of `family`, `theorem` or `witness` is set:
/// `{"family": "dihedral", "ranges": {"n": [3, 20]}, "cap": 4000}`.
/// Parameters named `p` only take prime values. For the order-`p^3`
/// theorems `cases` defaults to all seven and `k` to `1..p`; for the order
/// `p^4` theorem `e` defaults to `1..2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSweepConfig", into = "RawSweepConfig")]
pub struct SweepConfig {
    pub target: SweepTarget,
    pub ranges: BTreeMap<String, ParamRange>,
    pub cases: Vec<Case>,
    pub cap: u64,
    pub tolerances: Tolerances,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweepConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    theorem: Option<TheoremId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(default)]
    ranges: BTreeMap<String, ParamRange>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    cases: Vec<Case>,
    #[serde(default = "default_cap")]
    cap: u64,
    #[serde(default)]
    tolerances: Tolerances,
}

fn default_cap() -> u64 {
    DEFAULT_CAP
}

impl TryFrom<RawSweepConfig> for SweepConfig {
    type Error = Error;

    fn try_from(raw: RawSweepConfig) -> Result<Self> {
        let target = match (raw.family, raw.theorem, raw.witness) {
            (Some(f), None, None) => SweepTarget::Family(
                FamilyKind::parse(&f).map_err(|_| Error::Config(format!("unknown family '{f}'")))?,
            ),
            (None, Some(t), None) => SweepTarget::Theorem(t),
            (None, None, Some(w)) => SweepTarget::Witness(w),
            _ => return Err(Error::Config("a sweep names exactly one of family, theorem, witness".to_string())),
        };
        let config = SweepConfig { target, ranges: raw.ranges, cases: raw.cases, cap: raw.cap, tolerances: raw.tolerances };
        config.validate()?;
        Ok(config)
    }
}

impl From<SweepConfig> for RawSweepConfig {
    fn from(c: SweepConfig) -> Self {
        let (family, theorem, witness) = match c.target {
            SweepTarget::Family(k) => (Some(k.name().to_string()), None, None),
            SweepTarget::Theorem(t) => (None, Some(t), None),
            SweepTarget::Witness(w) => (None, None, Some(w)),
        };
        RawSweepConfig { family, theorem, witness, ranges: c.ranges, cases: c.cases, cap: c.cap, tolerances: c.tolerances }
    }
}

fn family_theorem(kind: FamilyKind) -> TheoremId {
    match kind {
        FamilyKind::Dihedral2n => TheoremId::Dihedral,
        FamilyKind::Dicyclic4n => TheoremId::Dicyclic,
        FamilyKind::Semidihedral8n => TheoremId::Semidihedral,
        FamilyKind::Unm => TheoremId::Unm,
        FamilyKind::U6n => TheoremId::U6n,
        FamilyKind::V8n => TheoremId::V8n,
        FamilyKind::Gpmn => TheoremId::Gpmn,
    }
}

impl SweepConfig {
    fn with_target(target: SweepTarget, ranges: impl IntoIterator<Item = (&'static str, ParamRange)>) -> SweepConfig {
        SweepConfig {
            target,
            ranges: ranges.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            cases: Vec::new(),
            cap: DEFAULT_CAP,
            tolerances: Tolerances::default(),
        }
    }

    pub fn family(kind: FamilyKind, ranges: impl IntoIterator<Item = (&'static str, ParamRange)>) -> SweepConfig {
        SweepConfig::with_target(SweepTarget::Family(kind), ranges)
    }

    pub fn theorem(theorem: TheoremId, ranges: impl IntoIterator<Item = (&'static str, ParamRange)>) -> SweepConfig {
        SweepConfig::with_target(SweepTarget::Theorem(theorem), ranges)
    }

    pub fn witness(name: &str) -> SweepConfig {
        SweepConfig::with_target(SweepTarget::Witness(name.to_string()), [])
    }

    pub fn with_cap(mut self, cap: u64) -> SweepConfig {
        self.cap = cap;
        self
    }

    pub fn with_cases(mut self, cases: impl IntoIterator<Item = Case>) -> SweepConfig {
        self.cases = cases.into_iter().collect();
        self
    }

    /// The theorem whose prediction each point is compared with.
    pub fn theorem_id(&self) -> Option<TheoremId> {
        match &self.target {
            SweepTarget::Family(k) => Some(family_theorem(*k)),
            SweepTarget::Theorem(t) => Some(*t),
            SweepTarget::Witness(_) => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.cap == 0 {
            return fail("cap must be positive".to_string());
        }
        for (name, r) in &self.ranges {
            if r.lo > r.hi {
                return fail(format!("range for {name} is empty ({r})"));
            }
        }
        let Some(theorem) = self.theorem_id() else {
            return if self.ranges.is_empty() && self.cases.is_empty() {
                Ok(())
            } else {
                fail("witness sweeps take no ranges or cases".to_string())
            };
        };
        let names = theorem.param_names();
        if let Some(extra) = self.ranges.keys().find(|k| !names.contains(&k.as_str())) {
            return fail(format!("{} has no parameter '{extra}' (expects {})", self.target, names.join(", ")));
        }
        if let Some(missing) = names.iter().find(|n| !optional(theorem, n) && !self.ranges.contains_key(**n)) {
            return fail(format!("{} needs a range for '{missing}'", self.target));
        }
        if !self.cases.is_empty() && !takes_case(theorem) {
            return fail(format!("{} takes no case labels", self.target));
        }
        Ok(())
    }

    /// Every parameter point in canonical order: parameters in the order the
    /// theorem lists them, then case, then `k`.
    pub fn points(&self) -> Result<Vec<(TheoremId, TheoremParams)>> {
        self.validate()?;
        let Some(theorem) = self.theorem_id() else {
            return Ok(Vec::new());
        };
        let axes: Vec<(&'static str, Vec<u64>)> = theorem
            .param_names()
            .iter()
            .filter(|n| **n != "k")
            .map(|&name| {
                let range = match (self.ranges.get(name), name) {
                    (Some(r), _) => *r,
                    (None, "e") => ParamRange::new(1, 2),
                    (None, _) => unreachable!("validate checked required ranges"),
                };
                let values = range.values().filter(|v| name != "p" || is_prime(*v)).collect();
                (name, values)
            })
            .collect();

        let mut combos = vec![TheoremParams::default()];
        for (name, values) in &axes {
            combos = combos
                .iter()
                .flat_map(|base| values.iter().map(move |v| base.clone().with(name, *v)))
                .collect();
        }
        if !takes_case(theorem) {
            return Ok(combos.into_iter().map(|p| (theorem, p)).collect());
        }

        let cases = if self.cases.is_empty() { Case::ALL.to_vec() } else { self.cases.clone() };
        let mut points = Vec::new();
        for base in combos {
            for &case in &cases {
                let with_case = base.clone().with_case(case);
                if !case.needs_k() {
                    points.push((theorem, with_case));
                    continue;
                }
                let p = base.p.expect("order-p^3 theorems sweep p");
                let k_range = self.ranges.get("k").copied().unwrap_or(ParamRange::new(1, p));
                for k in k_range.values() {
                    points.push((theorem, with_case.clone().with("k", k)));
                }
            }
        }
        Ok(points)
    }
}

fn takes_case(theorem: TheoremId) -> bool {
    matches!(theorem, TheoremId::QuotientP3 | TheoremId::PGroupCenterPn3)
}

fn optional(theorem: TheoremId, name: &str) -> bool {
    name == "e" || (name == "k" && takes_case(theorem))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let text = r#"{"theorem":"3.10","ranges":{"n":[4,6],"p":[2,3]},"cases":["B1","B3"],"cap":500,"tolerances":{"integrality":1e-6,"energy":1e-6,"border":1e-6}}"#;
        let config: SweepConfig = serde_json::from_str(text).unwrap();
        assert_eq!(config.target, SweepTarget::Theorem(TheoremId::PGroupCenterPn3));
        assert_eq!(serde_json::to_string(&config).unwrap(), text);
    }

    #[test]
    fn unknown_family_is_a_config_error() {
        let err = serde_json::from_str::<SweepConfig>(r#"{"family":"mathieu","ranges":{"n":[1,2]}}"#).unwrap_err();
        assert!(err.to_string().contains("unknown family"), "{err}");
    }

    #[test]
    fn missing_and_extra_ranges_are_rejected() {
        assert!(SweepConfig::family(FamilyKind::Unm, [("n", ParamRange::new(2, 3))]).validate().is_err());
        assert!(SweepConfig::family(FamilyKind::Dihedral2n, [("q", ParamRange::new(2, 3))]).validate().is_err());
        assert!(SweepConfig::family(FamilyKind::Dihedral2n, [("n", ParamRange::new(5, 3))]).validate().is_err());
        assert!(SweepConfig::family(FamilyKind::Dihedral2n, [("n", ParamRange::new(3, 5))]).with_cap(0).validate().is_err());
    }

    #[test]
    fn points_enumerate_primes_cases_and_k() {
        let config = SweepConfig::theorem(
            TheoremId::QuotientP3,
            [("p", ParamRange::new(2, 4)), ("z", ParamRange::single(6))],
        )
        .with_cases([Case::A1, Case::B1]);
        let labels: Vec<String> = config.points().unwrap().iter().map(|(_, p)| p.to_string()).collect();
        assert_eq!(
            labels,
            [
                "p=2, z=6, case=A1",
                "p=2, z=6, k=1, case=B1",
                "p=2, z=6, k=2, case=B1",
                "p=3, z=6, case=A1",
                "p=3, z=6, k=1, case=B1",
                "p=3, z=6, k=2, case=B1",
                "p=3, z=6, k=3, case=B1",
            ]
        );
    }

    #[test]
    fn range_parsing() {
        assert_eq!("2..8".parse::<ParamRange>().unwrap(), ParamRange::new(2, 8));
        assert_eq!("2..=8".parse::<ParamRange>().unwrap(), ParamRange::new(2, 8));
        assert_eq!("5".parse::<ParamRange>().unwrap(), ParamRange::single(5));
        assert!("x..3".parse::<ParamRange>().is_err());
    }
}
