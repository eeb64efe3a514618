//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Runs on a single rayon worker so the timing budgets are single-core figures.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cccspec::formulas::{gap_expression, TheoremId, TheoremParams};
use cccspec::graph::{CompleteUnionShape, SimpleGraph};
use cccspec::group::{build_family_group, FamilyInstance, FamilyKind};
use cccspec::spectral::{complete_union_spectrum, Classification};
use cccspec::verify::{
    default_desk_suite, named_witness, observe_graph, run_suite, run_sweep, verify_witness, Observation, ParamRange,
    SweepConfig, Tolerances, VerificationRecord, Verdict,
};

const SHAPE_SEED: u64 = 0x00c0_ffee;
const SHAPE_COUNT: usize = 200;
const MAX_SHAPE_VERTICES: u64 = 60;
const SHAPE_BUDGET: Duration = Duration::from_secs(30);
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
/// Observed gaps against printed gap forms.
const GAP_TOLERANCE: f64 = 1e-6;
const SHOWN_DETAILS: usize = 8;

struct Outcome {
    pass: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: String, details: Vec<String>) -> Outcome {
        Outcome { pass, summary, details }
    }
}

fn random_shape(rng: &mut ChaCha8Rng) -> CompleteUnionShape {
    let total = rng.gen_range(1..=MAX_SHAPE_VERTICES);
    let mut left = total;
    let mut sizes = Vec::new();
    while left > 0 {
        let size = rng.gen_range(1..=left.min(20));
        sizes.push(size);
        left -= size;
    }
    CompleteUnionShape::from_component_sizes(sizes)
}

fn criterion_1(observations: &mut Vec<Observation>) -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SHAPE_SEED);
    let tol = Tolerances::default();
    let mut failures = Vec::new();
    for _ in 0..SHAPE_COUNT {
        let shape = random_shape(&mut rng);
        let observed = observe_graph(&SimpleGraph::from_shape(&shape), &tol);
        let expected = complete_union_spectrum(&shape);
        if observed.spectrum.rounded().as_ref() != Some(&expected) {
            failures.push(format!("{shape}: closed form {expected}, numeric {}", observed.spectrum));
        }
        observations.push(observed);
    }
    let elapsed = started.elapsed();
    Outcome::new(
        failures.is_empty() && elapsed < SHAPE_BUDGET,
        format!("{SHAPE_COUNT} random shapes, {} disagree, {:.2} s (budget 30 s)", failures.len(), elapsed.as_secs_f64()),
        failures,
    )
}

fn family(kind: FamilyKind, ranges: &[(&'static str, u64, u64)]) -> SweepConfig {
    SweepConfig::family(kind, ranges.iter().map(|&(name, lo, hi)| (name, ParamRange::new(lo, hi))))
}

fn family_sweeps() -> Vec<SweepConfig> {
    vec![
        family(FamilyKind::Dihedral2n, &[("n", 3, 100)]),
        family(FamilyKind::Dicyclic4n, &[("n", 2, 50)]),
        family(FamilyKind::Semidihedral8n, &[("n", 2, 30)]),
        family(FamilyKind::Unm, &[("n", 2, 10), ("m", 3, 10)]),
        family(FamilyKind::V8n, &[("n", 2, 30)]),
        // Non-prime p are skipped as invalid; the cap enforces p^(m+n+1) <= 4000.
        family(FamilyKind::Gpmn, &[("p", 2, 15), ("m", 1, 10), ("n", 1, 10)]).with_cap(4000),
    ]
}

fn mismatch_line(r: &VerificationRecord) -> String {
    let observed = r.observed.shape.as_ref().map(ToString::to_string).unwrap_or_else(|| "no shape".to_string());
    format!(
        "{:?} {}: predicted {} (energy {}), observed {} (energy {})",
        r.verdict, r.label, r.predicted.shape, r.predicted.energy, observed, r.observed.energy
    )
}

fn criterion_2(records: &mut Vec<VerificationRecord>) -> Outcome {
    let started = Instant::now();
    let mut details = Vec::new();
    let mut count = 0;
    for config in family_sweeps() {
        match run_sweep(&config) {
            Ok(result) => {
                count += result.records.len();
                details.extend(result.records.iter().filter(|r| !r.is_match()).map(mismatch_line));
                records.extend(result.records);
            }
            Err(e) => details.push(format!("{}: {e}", config.target)),
        }
    }
    let elapsed = started.elapsed();
    Outcome::new(
        details.is_empty() && elapsed < SWEEP_BUDGET,
        format!("{count} family instances, {} not Match, {:.1} s (budget 300 s)", details.len(), elapsed.as_secs_f64()),
        details,
    )
}

fn observe(kind: FamilyKind, params: &[u64]) -> Result<Observation, String> {
    let instance = FamilyInstance::from_params(kind, params).map_err(|e| e.to_string())?;
    let group = build_family_group(&instance).map_err(|e| e.to_string())?;
    Ok(cccspec::verify::observe_group(&group, &Tolerances::default()))
}

fn criterion_3() -> Outcome {
    let spots: [(&str, FamilyKind, &[u64], i64, Option<&str>); 5] = [
        ("D_14", FamilyKind::Dihedral2n, &[7], 4, None),
        ("SD_24", FamilyKind::Semidihedral8n, &[3], 24, Some("{(-2)^6, 6^2}")),
        ("U_18", FamilyKind::U6n, &[3], 8, None),
        ("V_24", FamilyKind::V8n, &[3], 24, None),
        ("G(2,2,2)", FamilyKind::Gpmn, &[2, 2, 2], 24, None),
    ];
    let mut details = Vec::new();
    for (name, kind, params, energy, spectrum) in spots {
        match observe(kind, params) {
            Ok(o) => {
                let exact = o.spectrum.rounded();
                let exact_energy = exact.as_ref().map(|s| s.energy());
                if exact_energy.and_then(|e| e.to_i64()) != Some(energy) {
                    details.push(format!("{name}: energy {} ({}), expected {energy}", o.energy, o.spectrum));
                }
                if let Some(text) = spectrum {
                    if exact.map(|s| s.to_string()).as_deref() != Some(text) {
                        details.push(format!("{name}: spectrum {}, expected {text}", o.spectrum));
                    }
                }
            }
            Err(e) => details.push(format!("{name}: {e}")),
        }
    }
    Outcome::new(details.is_empty(), format!("{} of 5 spot values reproduced", 5 - details.len()), details)
}

fn criterion_4(records: &[VerificationRecord]) -> Outcome {
    let tol = Tolerances::default();
    let details: Vec<String> = records
        .iter()
        .filter(|r| r.observed.error.is_some() || r.observed.spectrum.entries().iter().any(|e| !tol.is_integral(e.value)))
        .map(|r| format!("{}: {}", r.label, r.observed.spectrum))
        .collect();
    Outcome::new(
        details.is_empty(),
        format!("{} spectra, {} with a non-integral eigenvalue", records.len(), details.len()),
        details,
    )
}

fn criterion_5(family_records: &[VerificationRecord], quotient_records: &mut Vec<VerificationRecord>) -> Outcome {
    let mut details = Vec::new();
    match run_sweep(
        &SweepConfig::theorem(TheoremId::QuotientD2n, [("n", ParamRange::new(3, 20)), ("z", ParamRange::new(1, 10))])
            .with_cap(400),
    ) {
        Ok(result) => quotient_records.extend(result.records),
        Err(e) => details.push(format!("d2n-quotient sweep: {e}")),
    }
    let gap_theorems = [TheoremId::Semidihedral, TheoremId::Unm, TheoremId::V8n, TheoremId::QuotientD2n];
    let mut checked = 0;
    for r in family_records.iter().chain(quotient_records.iter()) {
        let theorem = r.predicted.theorem_id;
        if !gap_theorems.contains(&theorem) {
            continue;
        }
        checked += 1;
        if r.observed.error.is_some() || r.observed.gap < -GAP_TOLERANCE {
            details.push(format!("{}: negative or missing gap {}", r.label, r.observed.gap));
            continue;
        }
        match gap_expression(theorem, &r.predicted.params) {
            Ok(form) => {
                let form = form.to_f64().unwrap_or(f64::NAN);
                if (r.observed.gap - form).abs() > GAP_TOLERANCE {
                    details.push(format!("{}: observed gap {}, printed form {form}", r.label, r.observed.gap));
                }
            }
            Err(e) => details.push(format!("{}: {e}", r.label)),
        }
    }
    Outcome::new(
        details.is_empty(),
        format!("{checked} gaps against the printed forms, {} disagree", details.len()),
        details,
    )
}

fn witness_records() -> (Vec<VerificationRecord>, Vec<String>) {
    let p = |pairs: &[(&str, u64)]| pairs.iter().fold(TheoremParams::default(), |t, &(k, v)| t.with(k, v));
    let checks: Vec<(&str, TheoremId, TheoremParams, i64)> = vec![
        ("Q8", TheoremId::QuotientPP, p(&[("p", 2), ("z", 2)]), 0),
        ("Z3xD8", TheoremId::QuotientPP, p(&[("p", 2), ("z", 6)]), 12),
        ("D16", TheoremId::PGroupP4, p(&[("p", 2), ("e", 1)]), 4),
        ("Q16", TheoremId::Dicyclic, p(&[("n", 4)]), 4),
        ("Q16", TheoremId::QuotientD2n, p(&[("n", 4), ("z", 2)]), 4),
        ("G(3,1,1)", TheoremId::QuotientPP, p(&[("p", 3), ("z", 3)]), 0),
    ];
    let mut records = Vec::new();
    let mut details = Vec::new();
    for (name, theorem, params, energy) in checks {
        let group = match named_witness(name).map(|w| w.build()) {
            Some(Ok(g)) => g,
            Some(Err(e)) => {
                details.push(format!("{name}: {e}"));
                continue;
            }
            None => {
                details.push(format!("{name}: not in the registry"));
                continue;
            }
        };
        match verify_witness(&group, theorem, &params) {
            Ok(r) => {
                if !r.is_match() {
                    details.push(mismatch_line(&r));
                }
                if r.predicted.energy.to_i64() != Some(energy) || (r.observed.energy - energy as f64).abs() > GAP_TOLERANCE {
                    details.push(format!("{name} vs {theorem}: energy {} / {}, expected {energy}", r.predicted.energy, r.observed.energy));
                }
                records.push(r);
            }
            Err(e) => details.push(format!("{name} vs {theorem}: {e}")),
        }
    }
    (records, details)
}

fn criterion_7(records: &mut Vec<VerificationRecord>) -> Outcome {
    let (witnessed, details) = witness_records();
    let summary = format!("{} witness checks, {} problems", witnessed.len(), details.len());
    records.extend(witnessed);
    Outcome::new(details.is_empty(), summary, details)
}

fn criterion_6(records: &[VerificationRecord]) -> Outcome {
    let mut details = Vec::new();
    let mut d6_seen = 0;
    for r in records {
        if r.observed.error.is_some() {
            details.push(format!("{}: no spectrum", r.label));
        } else if r.group_order == 6 {
            d6_seen += 1;
            if r.observed.gap.abs() > GAP_TOLERANCE || r.observed.classification != Classification::Borderenergetic {
                details.push(format!("{}: gap {}, {}", r.label, r.observed.gap, r.observed.classification));
            }
        } else if r.observed.classification != Classification::Subenergetic {
            details.push(format!("{}: gap {}, {}", r.label, r.observed.gap, r.observed.classification));
        }
    }
    if d6_seen == 0 {
        details.push("D_6 never swept".to_string());
    }
    Outcome::new(
        details.is_empty(),
        format!("{} instances, {d6_seen} of them D_6, {} misclassified", records.len(), details.len()),
        details,
    )
}

fn criterion_8(records: &[VerificationRecord], graphs: &[Observation]) -> Outcome {
    let observations = records.iter().map(|r| (r.label.as_str(), &r.observed)).chain(graphs.iter().map(|o| ("random shape", o)));
    let mut details = Vec::new();
    let mut count = 0;
    for (label, o) in observations {
        count += 1;
        if o.error.is_some() || !o.hygiene.ok() {
            details.push(format!(
                "{label}: trace {} (norm {}), second moment {} vs {}",
                o.hygiene.trace, o.hygiene.frobenius_norm, o.hygiene.second_moment, o.hygiene.expected_second_moment
            ));
        }
    }
    Outcome::new(details.is_empty(), format!("{count} spectra, {} fail an identity", details.len()), details)
}

fn criterion_9() -> Outcome {
    let config = default_desk_suite();
    let started = Instant::now();
    let runs: Vec<_> = (0..2).map(|_| run_suite(&config)).collect();
    let elapsed = started.elapsed().as_secs_f64();
    match (&runs[0], &runs[1]) {
        (Ok(a), Ok(b)) => {
            let (a, b) = (a.to_json_without_timestamp(), b.to_json_without_timestamp());
            Outcome::new(
                a == b,
                format!("two default-suite runs, {} bytes each, identical: {}, {elapsed:.1} s", a.len(), a == b),
                Vec::new(),
            )
        }
        (Err(e), _) | (_, Err(e)) => Outcome::new(false, format!("default suite failed: {e}"), Vec::new()),
    }
}

fn main() -> ExitCode {
    rayon::ThreadPoolBuilder::new().num_threads(1).build_global().expect("first pool in the process");

    let mut graphs = Vec::new();
    let mut families = Vec::new();
    let mut quotients = Vec::new();
    let mut witnesses = Vec::new();

    let mut outcomes = vec![
        (1, "closed-form vs numeric spectra of complete unions", criterion_1(&mut graphs)),
        (2, "family sweeps all Match", criterion_2(&mut families)),
        (3, "spot values", criterion_3()),
        (4, "CN-integrality", criterion_4(&families)),
    ];
    outcomes.push((5, "non-hyperenergetic gaps", criterion_5(&families, &mut quotients)));
    let witness_outcome = criterion_7(&mut witnesses);
    let mut swept: Vec<VerificationRecord> = families.clone();
    swept.extend(quotients.iter().cloned());
    swept.extend(witnesses.iter().cloned());
    outcomes.push((6, "borderenergetic only at D_6", criterion_6(&swept)));
    outcomes.push((7, "witness groups", witness_outcome));
    outcomes.push((8, "numeric hygiene", criterion_8(&swept, &graphs)));
    outcomes.push((9, "determinism", criterion_9()));

    let mut all = true;
    for (n, title, o) in &outcomes {
        all &= o.pass;
        println!("criterion {n} {}: {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.summary);
        for d in o.details.iter().take(SHOWN_DETAILS) {
            println!("    {d}");
        }
        if o.details.len() > SHOWN_DETAILS {
            println!("    ... and {} more", o.details.len() - SHOWN_DETAILS);
        }
    }
    let verdicts = swept.iter().filter(|r| r.verdict != Verdict::Match).count();
    println!("{} of 9 criteria pass; {verdicts} swept records are not Match", outcomes.iter().filter(|(_, _, o)| o.pass).count());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
