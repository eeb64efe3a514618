use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use super::config::{ParamRange, SweepConfig};
use super::{
    run_sweep, verify_hyperenergetic, verify_integrality, HyperenergeticSummary, IntegralitySummary, Skip,
    SweepResult, VerificationRecord, Verdict,
};
use crate::error::{Error, Result};
use crate::formulas::TheoremId;
use crate::group::FamilyKind;

/// `{"suites": [ <SweepConfig>, ... ]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub suites: Vec<SweepConfig>,
}

pub fn parse_suite_config(text: &str) -> Result<SuiteConfig> {
    serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
}

pub fn load_suite_config(path: impl AsRef<Path>) -> Result<SuiteConfig> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_suite_config(&text)
}

/// Every family up to order 400 (`G(p,m,n)` up to 4000), the quotient
/// theorems through their witness constructions, and the witness registry.
pub fn default_desk_suite() -> SuiteConfig {
    let r = ParamRange::new;
    let family = |kind, ranges: Vec<(&'static str, ParamRange)>, cap| SweepConfig::family(kind, ranges).with_cap(cap);
    let theorem = |id, ranges: Vec<(&'static str, ParamRange)>| SweepConfig::theorem(id, ranges);
    SuiteConfig {
        suites: vec![
            family(FamilyKind::Dihedral2n, vec![("n", r(3, 200))], 400),
            family(FamilyKind::Dicyclic4n, vec![("n", r(2, 100))], 400),
            family(FamilyKind::Semidihedral8n, vec![("n", r(2, 50))], 400),
            // 2nm <= 400 is nm <= 200.
            family(FamilyKind::Unm, vec![("n", r(2, 100)), ("m", r(3, 100))], 400),
            family(FamilyKind::U6n, vec![("n", r(2, 66))], 400),
            family(FamilyKind::V8n, vec![("n", r(2, 50))], 400),
            family(FamilyKind::Gpmn, vec![("p", r(2, 15)), ("m", r(1, 10)), ("n", r(1, 10))], 4000),
            theorem(TheoremId::QuotientPP, vec![("p", r(2, 7)), ("z", r(1, 40))]),
            theorem(TheoremId::PGroupCenterPn2, vec![("p", r(2, 7)), ("n", r(3, 8))]),
            theorem(TheoremId::QuotientP3, vec![("p", r(2, 3)), ("z", r(1, 32))]),
            theorem(TheoremId::PGroupCenterPn3, vec![("p", r(2, 5)), ("n", r(4, 9))]),
            theorem(TheoremId::PGroupP4, vec![("p", r(2, 7))]),
            theorem(TheoremId::QuotientD2n, vec![("n", r(3, 20)), ("z", r(1, 10))]).with_cap(400),
            SweepConfig::witness("all"),
        ],
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub matches: usize,
    pub mismatches: usize,
    pub over_cap: u64,
    pub skips: Vec<Skip>,
    pub records: Vec<VerificationRecord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SuiteTotals {
    pub records: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub skips: usize,
    pub over_cap: u64,
}

/// Everything in a report that varies between identical runs.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Timestamp {
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
    pub total_ms: f64,
    /// Per sweep, per record, in report order.
    pub record_ms: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub totals: SuiteTotals,
    pub integrality: IntegralitySummary,
    pub hyperenergetic: HyperenergeticSummary,
    pub suites: Vec<SweepReport>,
    pub timestamp: Timestamp,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    sweep: usize,
    label: &'a str,
    theorem: &'a str,
    params: String,
    group_order: u64,
    predicted_shape: String,
    observed_shape: String,
    predicted_spectrum: String,
    observed_spectrum: String,
    predicted_energy: String,
    observed_energy: f64,
    gap: f64,
    classification: String,
    integral: bool,
    verdict: String,
}

impl SuiteReport {
    pub fn all_match(&self) -> bool {
        self.totals.mismatches == 0
    }

    pub fn records(&self) -> impl Iterator<Item = &VerificationRecord> {
        self.suites.iter().flat_map(|s| s.records.iter())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// The report with its timestamp zeroed; identical configs give identical text.
    pub fn to_json_without_timestamp(&self) -> String {
        SuiteReport { timestamp: Timestamp::default(), ..self.clone() }.to_json()
    }

    /// One row per record.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for (i, sweep) in self.suites.iter().enumerate() {
            for r in &sweep.records {
                let row = CsvRow {
                    sweep: i,
                    label: &r.label,
                    theorem: r.predicted.theorem_id.id(),
                    params: r.predicted.params.to_string(),
                    group_order: r.group_order,
                    predicted_shape: r.predicted.shape.to_string(),
                    observed_shape: r.observed.shape.as_ref().map(ToString::to_string).unwrap_or_default(),
                    predicted_spectrum: r.predicted.spectrum.to_string(),
                    observed_spectrum: r.observed.spectrum.to_string(),
                    predicted_energy: r.predicted.energy.to_string(),
                    observed_energy: r.observed.energy,
                    gap: r.observed.gap,
                    classification: r.observed.classification.to_string(),
                    integral: r.observed.integral,
                    verdict: format!("{:?}", r.verdict),
                };
                w.serialize(row).expect("rows serialize");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
    }
}

impl SweepReport {
    pub fn new(config: SweepConfig, result: SweepResult) -> SweepReport {
        let matches = result.records.iter().filter(|r| r.verdict == Verdict::Match).count();
        SweepReport {
            config,
            matches,
            mismatches: result.records.len() - matches,
            over_cap: result.over_cap,
            skips: result.skips,
            records: result.records,
        }
    }
}

impl SuiteReport {
    /// Aggregates finished sweeps; `started` times the whole report.
    pub fn from_sweeps(suites: Vec<SweepReport>, started: Instant) -> SuiteReport {
        let mut totals = SuiteTotals::default();
        for s in &suites {
            totals.records += s.records.len();
            totals.matches += s.matches;
            totals.mismatches += s.mismatches;
            totals.skips += s.skips.len();
            totals.over_cap += s.over_cap;
        }
        let record_ms = suites.iter().map(|s| s.records.iter().map(|r| r.timing_ms).collect()).collect();
        let all: Vec<VerificationRecord> = suites.iter().flat_map(|s| s.records.iter().cloned()).collect();
        let generated_at = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        SuiteReport {
            totals,
            integrality: verify_integrality(&all),
            hyperenergetic: verify_hyperenergetic(&all),
            suites,
            timestamp: Timestamp { generated_at, total_ms: started.elapsed().as_secs_f64() * 1e3, record_ms },
        }
    }
}

/// Runs every sweep in order and aggregates.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let started = Instant::now();
    for sweep in &config.suites {
        sweep.validate()?;
    }
    let mut suites = Vec::with_capacity(config.suites.len());
    for sweep in &config.suites {
        suites.push(SweepReport::new(sweep.clone(), run_sweep(sweep)?));
    }
    Ok(SuiteReport::from_sweeps(suites, started))
}
