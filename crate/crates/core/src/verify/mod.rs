//! Brute force against closed forms.
//!
//! The observed side of every record comes from [`crate::group`],
//! [`crate::graph`] and [`crate::spectral`] alone; the predicted side comes
//! from [`crate::formulas`] alone. A [`Verdict::Match`] is therefore two
//! independent computations agreeing.

mod config;
mod suite;
pub mod witness;

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{as_prime_power, is_prime};
use crate::error::{Error, Result};
use crate::formulas::{gap_expression, predict, TheoremId, TheoremParams, TheoremPrediction};
use crate::graph::{ccc_graph, recognize_complete_union, CompleteUnionShape, SimpleGraph};
use crate::group::{build_family_group, detect_central_quotient, FiniteGroup, QuotientShape};
use crate::spectral::{
    cn_energy, cn_matrix, complete_graph_energy, eigenvalues_symmetric, Classification, IntSpectrum,
    Spectrum,
};

pub use config::{ParamRange, SweepConfig, SweepTarget, Tolerances, DEFAULT_CAP};
pub use suite::{
    default_desk_suite, load_suite_config, parse_suite_config, run_suite, SuiteConfig, SuiteReport, SuiteTotals,
    SweepReport, Timestamp,
};
pub use witness::{jordan_semidirect, named_witness, registry, witness_recipe, NamedWitness, WitnessRecipe};

/// `|Σ α_i λ_i| ≤ TRACE_TOLERANCE · ‖M‖_F`.
pub const TRACE_TOLERANCE: f64 = 1e-8;
/// `|Σ α_i λ_i² − 2 Σ_{i<j} M_ij²| ≤ MOMENT_TOLERANCE · max(1, 2 Σ_{i<j} M_ij²)`.
pub const MOMENT_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    Match,
    ShapeMismatch,
    SpectrumMismatch,
    EnergyMismatch,
    GapSignViolation,
}

/// Trace and second-moment identities of the computed spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hygiene {
    pub trace: f64,
    pub frobenius_norm: f64,
    pub second_moment: f64,
    /// `2 Σ_{i<j} M_ij²`, exact.
    pub expected_second_moment: f64,
}

impl Hygiene {
    pub fn trace_ok(&self) -> bool {
        self.trace.abs() <= TRACE_TOLERANCE * self.frobenius_norm
    }

    pub fn second_moment_ok(&self) -> bool {
        (self.second_moment - self.expected_second_moment).abs()
            <= MOMENT_TOLERANCE * self.expected_second_moment.max(1.0)
    }

    pub fn ok(&self) -> bool {
        self.trace_ok() && self.second_moment_ok()
    }
}

/// The brute-force side of a record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Observation {
    /// `None` when the graph is not a disjoint union of complete graphs.
    pub shape: Option<CompleteUnionShape>,
    pub vertex_count: usize,
    pub spectrum: Spectrum,
    pub energy: f64,
    pub gap: f64,
    pub classification: Classification,
    pub integral: bool,
    pub hygiene: Hygiene,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Observation {
    fn failed(error: &Error) -> Observation {
        Observation {
            shape: None,
            vertex_count: 0,
            spectrum: Spectrum::default(),
            energy: 0.0,
            gap: 0.0,
            classification: Classification::Subenergetic,
            integral: false,
            hygiene: Hygiene { trace: 0.0, frobenius_norm: 0.0, second_moment: 0.0, expected_second_moment: 0.0 },
            error: Some(error.to_string()),
        }
    }
}

/// Shape, numeric spectrum, energy and gap of any simple graph.
pub fn observe_graph(graph: &SimpleGraph, tol: &Tolerances) -> Observation {
    let shape = recognize_complete_union(graph).ok();
    let cn = cn_matrix(graph);
    let eigenvalues = match eigenvalues_symmetric(&cn) {
        Ok(v) => v,
        Err(e) => {
            return Observation { shape, vertex_count: graph.vertex_count(), ..Observation::failed(&e) };
        }
    };
    let spectrum = Spectrum::from_eigenvalues(&eigenvalues);
    let energy = cn_energy(&spectrum);
    let kn = complete_graph_energy(graph.vertex_count() as u64).to_f64().unwrap_or(f64::INFINITY);
    let gap = kn - energy;
    let classification = if gap.abs() <= tol.border {
        Classification::Borderenergetic
    } else if gap < 0.0 {
        Classification::Hyperenergetic
    } else {
        Classification::Subenergetic
    };
    let integral = spectrum.entries().iter().all(|e| tol.is_integral(e.value));
    let hygiene = Hygiene {
        trace: eigenvalues.iter().sum(),
        frobenius_norm: cn.frobenius_norm(),
        second_moment: eigenvalues.iter().map(|v| v * v).sum(),
        expected_second_moment: 2.0 * cn.upper_square_sum() as f64,
    };
    Observation {
        shape,
        vertex_count: graph.vertex_count(),
        spectrum,
        energy,
        gap,
        classification,
        integral,
        hygiene,
        error: None,
    }
}

/// [`observe_graph`] on `Γ(G)`.
pub fn observe_group(group: &FiniteGroup, tol: &Tolerances) -> Observation {
    match ccc_graph(group) {
        Ok(g) => observe_graph(&g.graph, tol),
        Err(e) => Observation::failed(&e),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub label: String,
    pub group_order: u64,
    pub predicted: TheoremPrediction,
    pub observed: Observation,
    pub verdict: Verdict,
    /// Wall-clock time for this record. Reports keep it under their timestamp
    /// so that everything else stays reproducible.
    #[serde(skip)]
    pub timing_ms: f64,
}

impl VerificationRecord {
    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

fn spectra_agree(observed: &Spectrum, predicted: &IntSpectrum, tol: &Tolerances) -> bool {
    observed.entries().len() == predicted.entries().len()
        && observed.entries().iter().zip(predicted.entries()).all(|(o, p)| {
            let v = p.value.to_f64().unwrap_or(f64::INFINITY);
            o.multiplicity as u64 == p.multiplicity && (o.value - v).abs() <= tol.integrality * v.abs().max(1.0)
        })
}

/// The first disagreement in the order shape, spectrum, energy, gap sign.
pub fn judge(predicted: &TheoremPrediction, observed: &Observation, tol: &Tolerances) -> Verdict {
    let predicted_energy = predicted.energy.to_f64().unwrap_or(f64::INFINITY);
    if observed.shape.as_ref() != Some(&predicted.shape) {
        Verdict::ShapeMismatch
    } else if !spectra_agree(&observed.spectrum, &predicted.spectrum, tol) {
        Verdict::SpectrumMismatch
    } else if !((observed.energy - predicted_energy).abs() <= tol.energy * predicted_energy.abs().max(1.0)) {
        Verdict::EnergyMismatch
    } else if observed.gap < -tol.border {
        Verdict::GapSignViolation
    } else {
        Verdict::Match
    }
}

fn record(label: String, group: &FiniteGroup, predicted: TheoremPrediction, tol: &Tolerances, start: Instant) -> VerificationRecord {
    let observed = observe_group(group, tol);
    let verdict = judge(&predicted, &observed, tol);
    VerificationRecord {
        label,
        group_order: group.order() as u64,
        predicted,
        observed,
        verdict,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn mismatch(msg: String) -> Error {
    Error::HypothesisMismatch(msg)
}

/// Fills `name` with the value read off the group, refusing a conflicting input.
fn derive(params: &mut TheoremParams, name: &'static str, value: u64) -> Result<()> {
    match params.get(name) {
        Some(given) if given != value => Err(mismatch(format!(
            "the group has {name} = {value} but {name} = {given} was given"
        ))),
        _ => {
            params.set(name, value);
            Ok(())
        }
    }
}

/// Checks `group` against the hypothesis of `theorem`, derives the theorem's
/// parameters from the group, and compares brute force with the prediction.
///
/// Parameters that the group determines (`p`, `z`, `n`, `e`) may be omitted;
/// the case label and `k` of the order-`p^3` theorems must be given.
pub fn verify_witness(group: &FiniteGroup, theorem: TheoremId, params: &TheoremParams) -> Result<VerificationRecord> {
    verify_witness_with(group, theorem, params, &Tolerances::default())
}

pub fn verify_witness_with(
    group: &FiniteGroup,
    theorem: TheoremId,
    params: &TheoremParams,
    tol: &Tolerances,
) -> Result<VerificationRecord> {
    let start = Instant::now();
    let order = group.order() as u64;
    let mut derived = params.clone();

    if let Some(instance) = theorem.family_instance(params)? {
        if instance.theoretical_order() != Some(order) {
            return Err(mismatch(format!("{} has order {order}, not that of {instance}", group.label())));
        }
    } else {
        let q = detect_central_quotient(group);
        let z = q.center_order as u64;
        let prime_power = |n: u64| as_prime_power(n).filter(|&(p, _)| is_prime(p));
        match theorem {
            TheoremId::QuotientPP | TheoremId::PGroupCenterPn2 => {
                let QuotientShape::ZpXZp { p } = q.shape else {
                    return Err(mismatch(format!("G/Z of {} is not Z_p x Z_p", group.label())));
                };
                derive(&mut derived, "p", p)?;
                if theorem == TheoremId::QuotientPP {
                    derive(&mut derived, "z", z)?;
                } else {
                    match prime_power(order) {
                        Some((base, e)) if base == p => derive(&mut derived, "n", e as u64)?,
                        _ => return Err(mismatch(format!("|G| = {order} is not a power of {p}"))),
                    }
                }
            }
            TheoremId::QuotientP3 | TheoremId::PGroupCenterPn3 => {
                let Some((p, 3)) = prime_power(q.quotient_order as u64) else {
                    return Err(mismatch(format!("|G/Z| = {} is not a prime cube", q.quotient_order)));
                };
                derive(&mut derived, "p", p)?;
                if theorem == TheoremId::QuotientP3 {
                    derive(&mut derived, "z", z)?;
                } else {
                    match prime_power(order) {
                        Some((base, e)) if base == p => derive(&mut derived, "n", e as u64)?,
                        _ => return Err(mismatch(format!("|G| = {order} is not a power of {p}"))),
                    }
                }
            }
            TheoremId::PGroupP4 => {
                let Some((p, 4)) = prime_power(order) else {
                    return Err(mismatch(format!("|G| = {order} is not p^4")));
                };
                derive(&mut derived, "p", p)?;
                let e = match prime_power(z) {
                    Some((base, e)) if base == p && (e == 1 || e == 2) => e as u64,
                    _ => return Err(mismatch(format!("|Z(G)| = {z} is neither p nor p^2"))),
                };
                if let Some(given) = derived.z {
                    // `z` is accepted as an alternative to `e`.
                    if given != z {
                        return Err(mismatch(format!("the group has |Z| = {z} but z = {given} was given")));
                    }
                }
                derive(&mut derived, "e", e)?;
            }
            TheoremId::QuotientD2n => {
                let QuotientShape::Dihedral { n } = q.shape else {
                    return Err(mismatch(format!("G/Z of {} is not dihedral", group.label())));
                };
                derive(&mut derived, "n", n)?;
                derive(&mut derived, "z", z)?;
            }
            _ => unreachable!("structure theorems name a family"),
        }
    }

    let predicted = predict(theorem, &derived)?;
    Ok(record(group.label().to_string(), group, predicted, tol, start))
}

/// A parameter point that produced no record, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub params: String,
    pub reason: String,
}

/// Records and skips of one sweep, in canonical parameter order.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct SweepResult {
    pub records: Vec<VerificationRecord>,
    pub skips: Vec<Skip>,
    /// Points whose group order exceeds the cap (counted, not listed).
    pub over_cap: u64,
}

enum Outcome {
    Record(Box<VerificationRecord>),
    Skip(Skip),
    OverCap,
}

fn run_point(theorem: TheoremId, params: &TheoremParams, config: &SweepConfig) -> Outcome {
    let start = Instant::now();
    let skip = |reason: String| Outcome::Skip(Skip { params: params.to_string(), reason });
    let tol = &config.tolerances;

    let predicted = match predict(theorem, params) {
        Ok(p) => p,
        Err(e) => return skip(e.to_string()),
    };
    let recipe = match witness::witness_recipe(theorem, params) {
        Ok(Some(r)) => r,
        Ok(None) => return skip(format!("no witness group on file for theorem {theorem} at these parameters")),
        Err(e) => return skip(e.to_string()),
    };
    match recipe.order() {
        Some(order) if order <= config.cap => {}
        _ => return Outcome::OverCap,
    }
    let group = match recipe.build() {
        Ok(g) => g,
        Err(e) => return skip(e.to_string()),
    };
    if theorem.family_instance(params).ok().flatten().is_some() {
        return Outcome::Record(Box::new(record(recipe.to_string(), &group, predicted, tol, start)));
    }
    match verify_witness_with(&group, theorem, params, tol) {
        Ok(r) => Outcome::Record(Box::new(VerificationRecord { timing_ms: start.elapsed().as_secs_f64() * 1e3, ..r })),
        Err(e) => skip(format!("witness {recipe} rejected: {e}")),
    }
}

/// Runs every parameter point of `config` concurrently; results come back in
/// canonical order. Only configuration problems are errors.
pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    let mut result = SweepResult::default();
    if let SweepTarget::Witness(name) = &config.target {
        let witnesses = match name.as_str() {
            "all" | "registry" => registry(),
            _ => vec![named_witness(name).ok_or_else(|| Error::Config(format!("unknown witness '{name}'")))?],
        };
        let jobs: Vec<(NamedWitness, TheoremId, TheoremParams)> = witnesses
            .iter()
            .flat_map(|w| w.checks.iter().map(move |(t, p)| (w.clone(), *t, p.clone())))
            .collect();
        let outcomes: Vec<Outcome> = jobs
            .par_iter()
            .map(|(w, theorem, params)| {
                let start = Instant::now();
                let skip = |reason: String| Outcome::Skip(Skip { params: format!("{} vs {theorem}", w.name), reason });
                if w.recipe.order().is_none_or(|o| o > config.cap) {
                    return Outcome::OverCap;
                }
                match w.build().and_then(|g| verify_witness_with(&g, *theorem, params, &config.tolerances)) {
                    Ok(r) => Outcome::Record(Box::new(VerificationRecord { timing_ms: start.elapsed().as_secs_f64() * 1e3, ..r })),
                    Err(e) => skip(e.to_string()),
                }
            })
            .collect();
        collect(&mut result, outcomes);
        return Ok(result);
    }

    let points = config.points()?;
    let outcomes: Vec<Outcome> = points.par_iter().map(|(t, p)| run_point(*t, p, config)).collect();
    collect(&mut result, outcomes);
    Ok(result)
}

fn collect(result: &mut SweepResult, outcomes: Vec<Outcome>) {
    for o in outcomes {
        match o {
            Outcome::Record(r) => result.records.push(*r),
            Outcome::Skip(s) => result.skips.push(s),
            Outcome::OverCap => result.over_cap += 1,
        }
    }
}

/// One record per family parameter point within the cap.
///
/// Points the family does not admit (`p` not prime, `m < n`, ...) are dropped;
/// use [`run_sweep`] to see them as skips.
pub fn verify_family(config: &SweepConfig) -> Result<Vec<VerificationRecord>> {
    match config.target {
        SweepTarget::Family(_) => Ok(run_sweep(config)?.records),
        SweepTarget::Theorem(t) if t.is_structure_theorem() => Ok(run_sweep(config)?.records),
        _ => Err(Error::Config("verify_family needs a family or a structure theorem".to_string())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralitySummary {
    pub checked: usize,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Every observed spectrum must be integral.
pub fn verify_integrality(records: &[VerificationRecord]) -> IntegralitySummary {
    let violations: Vec<String> = records
        .iter()
        .filter(|r| !r.observed.integral)
        .map(|r| format!("{}: {}", r.label, r.observed.spectrum))
        .collect();
    IntegralitySummary { checked: records.len(), passed: violations.is_empty(), violations }
}

/// Per-theorem count of closed-form gap cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct GapChecks {
    pub checked: usize,
    pub agreed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimumGap {
    pub label: String,
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HyperenergeticSummary {
    pub checked: usize,
    pub negative_gaps: Vec<String>,
    /// Zero gaps on groups other than `D_6`.
    pub unexpected_zero_gaps: Vec<String>,
    pub borderenergetic: Vec<String>,
    pub gap_checks: BTreeMap<TheoremId, GapChecks>,
    /// Observed gap differs from the theorem's printed gap form.
    pub gap_mismatches: Vec<String>,
    /// Smallest gap outside `D_6`, to support the search for a hyperenergetic graph.
    pub minimum_gap: Option<MinimumGap>,
    pub passed: bool,
}

/// Gaps are non-negative, zero only for `D_6` (the only non-abelian group of
/// order 6), and equal to the printed gap form wherever one exists.
pub fn verify_hyperenergetic(records: &[VerificationRecord]) -> HyperenergeticSummary {
    let tol = Tolerances::default();
    let mut s = HyperenergeticSummary {
        checked: records.len(),
        negative_gaps: Vec::new(),
        unexpected_zero_gaps: Vec::new(),
        borderenergetic: Vec::new(),
        gap_checks: BTreeMap::new(),
        gap_mismatches: Vec::new(),
        minimum_gap: None,
        passed: false,
    };
    for r in records {
        if let Some(e) = &r.observed.error {
            s.negative_gaps.push(format!("{}: no spectrum ({e})", r.label));
            continue;
        }
        let gap = r.observed.gap;
        let is_d6 = r.group_order == 6;
        if gap < -tol.border {
            s.negative_gaps.push(format!("{}: {gap}", r.label));
        } else if gap.abs() <= tol.border {
            s.borderenergetic.push(r.label.clone());
            if !is_d6 {
                s.unexpected_zero_gaps.push(r.label.clone());
            }
        }
        if !is_d6 && s.minimum_gap.as_ref().is_none_or(|m| gap < m.gap) {
            s.minimum_gap = Some(MinimumGap { label: r.label.clone(), gap });
        }
        let theorem = r.predicted.theorem_id;
        if let Ok(expected) = gap_expression(theorem, &r.predicted.params) {
            let expected = expected.to_f64().unwrap_or(f64::INFINITY);
            let entry = s.gap_checks.entry(theorem).or_default();
            entry.checked += 1;
            if (gap - expected).abs() <= tol.energy * expected.abs().max(1.0) {
                entry.agreed += 1;
            } else {
                s.gap_mismatches.push(format!("{}: observed {gap}, printed form {expected}", r.label));
            }
        }
    }
    s.passed = s.negative_gaps.is_empty() && s.unexpected_zero_gaps.is_empty() && s.gap_mismatches.is_empty();
    s
}

/// Brute force on a family member, without a prediction.
pub fn observe_family(instance: &crate::group::FamilyInstance) -> Result<Observation> {
    Ok(observe_group(&build_family_group(instance)?, &Tolerances::default()))
}
