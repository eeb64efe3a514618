use std::collections::BTreeMap;
use std::fmt::Write;
use std::time::Instant;

use serde::Serialize;
use serde_json::json;

use cccspec::formulas::{gap_expression, predict, stated_energy, TheoremId, TheoremParams, TheoremPrediction};
use cccspec::graph::{ccc_graph, recognize_complete_union, to_dot, CccGraph, CompleteUnionShape};
use cccspec::group::{detect_central_quotient, FiniteGroup};
use cccspec::spectral::{classify, is_integral_value, spectrum as cn_spectrum, Classification, Spectrum};
use cccspec::verify::{SuiteReport, SweepConfig, SweepReport, SweepResult};

use crate::{Failure, Format};

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize")
}

/// Integers print bare, anything else with six decimals.
fn number(v: f64) -> String {
    if is_integral_value(v) {
        format!("{}", v.round() as i64)
    } else {
        format!("{v:.6}")
    }
}

fn class_census(g: &FiniteGroup) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for c in g.conjugacy_classes() {
        *census.entry(c.size()).or_insert(0) += 1;
    }
    census
}

pub fn group(g: &FiniteGroup, format: Format) -> String {
    let census = class_census(g);
    let classes: usize = census.values().sum();
    let center = g.center().len();
    let quotient = detect_central_quotient(g);
    match format {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "order": g.order(),
            "center_order": center,
            "class_count": classes,
            "noncentral_class_count": classes - center,
            "class_sizes": census.iter().map(|(size, count)| json!({"size": size, "count": count})).collect::<Vec<_>>(),
            "central_quotient": quotient,
        })),
        Format::Csv => {
            let mut s = String::from("size,count\n");
            for (size, count) in &census {
                writeln!(s, "{size},{count}").unwrap();
            }
            s
        }
        _ => {
            let sizes: Vec<String> = census.iter().map(|(size, count)| format!("{size}^{count}")).collect();
            format!(
                "group: {}\norder: {}\ncenter: {center}\nclasses: {classes} ({} non-central)\nclass sizes: {}\ncentral quotient: {:?} of order {}\n",
                g.label(),
                g.order(),
                classes - center,
                sizes.join(", "),
                quotient.shape,
                quotient.quotient_order,
            )
        }
    }
}

fn edges(g: &CccGraph) -> Vec<(usize, usize)> {
    (0..g.vertex_count())
        .flat_map(|u| g.graph.neighbours(u).filter(move |&v| u < v).map(move |v| (u, v)))
        .collect()
}

fn shape_text(shape: Option<&CompleteUnionShape>) -> String {
    shape.map(ToString::to_string).unwrap_or_else(|| "not a union of complete graphs".to_string())
}

pub fn graph(g: &FiniteGroup, format: Format) -> Result<String, Failure> {
    let gamma = ccc_graph(g)?;
    let shape = recognize_complete_union(&gamma.graph).ok();
    Ok(match format {
        Format::Dot => to_dot(&gamma),
        Format::Json => pretty(&json!({
            "group": gamma.group_label,
            "vertices": gamma.vertices.iter().zip(&gamma.labels).enumerate()
                .map(|(i, (c, label))| json!({"index": i, "representative": label, "size": c.size()}))
                .collect::<Vec<_>>(),
            "edges": edges(&gamma),
            "shape": shape,
        })),
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in edges(&gamma) {
                writeln!(s, "{u},{v}").unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "graph: {}\nvertices: {}\nedges: {}\nshape: {}\n",
                gamma.group_label,
                gamma.vertex_count(),
                gamma.graph.edge_count(),
                shape_text(shape.as_ref()),
            );
            for (i, (c, label)) in gamma.vertices.iter().zip(&gamma.labels).enumerate() {
                writeln!(s, "  v{i}: {label} ({})", c.size()).unwrap();
            }
            s
        }
    })
}

/// The lines `spectrum` and `predict` share in text mode, so the two can be diffed.
fn comparable_text(shape: &str, spectrum: &str, energy: &str, gap: &str, class: Classification, integral: bool) -> String {
    format!("shape: {shape}\nspectrum: {spectrum}\nenergy: {energy}\ngap: {gap}\nclassification: {class}\nintegral: {integral}\n")
}

fn spectrum_csv(pairs: impl Iterator<Item = (String, u64)>) -> String {
    let mut s = String::from("value,multiplicity\n");
    for (v, m) in pairs {
        writeln!(s, "{v},{m}").unwrap();
    }
    s
}

pub fn spectrum(g: &FiniteGroup, format: Format) -> Result<String, Failure> {
    let gamma = ccc_graph(g)?;
    let shape = recognize_complete_union(&gamma.graph).ok();
    let spectrum: Spectrum = cn_spectrum(&gamma.graph)?;
    let report = classify(&spectrum, gamma.vertex_count());
    Ok(match format {
        Format::Json => pretty(&json!({
            "group": g.label(),
            "order": g.order(),
            "vertex_count": report.vertex_count,
            "shape": shape,
            "spectrum": spectrum,
            "energy": report.energy,
            "complete_graph_energy": report.complete_graph_energy.to_string(),
            "gap": report.gap,
            "classification": report.classification,
            "integral": report.integral,
        })),
        Format::Csv => spectrum_csv(spectrum.entries().iter().map(|e| (number(e.value), e.multiplicity as u64))),
        _ => comparable_text(
            &shape_text(shape.as_ref()),
            &spectrum.to_string(),
            &number(report.energy),
            &number(report.gap),
            report.classification,
            report.integral,
        ),
    })
}

fn predicted_class(p: &TheoremPrediction) -> Classification {
    match p.gap().sign() {
        num_bigint::Sign::NoSign => Classification::Borderenergetic,
        num_bigint::Sign::Minus => Classification::Hyperenergetic,
        num_bigint::Sign::Plus => Classification::Subenergetic,
    }
}

pub fn prediction(theorem: TheoremId, params: &TheoremParams, format: Format) -> Result<String, Failure> {
    let p = predict(theorem, params)?;
    Ok(match format {
        Format::Json => pretty(&json!({
            "theorem": p.theorem_id,
            "params": p.params,
            "shape": p.shape,
            "vertex_count": p.vertex_count(),
            "spectrum": p.spectrum,
            "energy": p.energy.to_string().parse::<i64>().map(|v| json!(v)).unwrap_or_else(|_| json!(p.energy.to_string())),
            "stated_energy": stated_energy(theorem, &p.params)?.to_string(),
            "gap": p.gap().to_string(),
            "gap_expression": gap_expression(theorem, &p.params).ok().map(|g| g.to_string()),
            "classification": predicted_class(&p),
        })),
        Format::Csv => spectrum_csv(p.spectrum.entries().iter().map(|e| (e.value.to_string(), e.multiplicity))),
        _ => comparable_text(
            &p.shape.to_string(),
            &p.spectrum.to_string(),
            &p.energy.to_string(),
            &p.gap().to_string(),
            predicted_class(&p),
            true,
        ),
    })
}

pub fn sweep(config: &SweepConfig, result: &SweepResult, format: Format) -> String {
    let report = SuiteReport::from_sweeps(vec![SweepReport::new(config.clone(), result.clone())], Instant::now());
    match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        _ => {
            let mut s = String::new();
            for r in &result.records {
                writeln!(
                    s,
                    "{:<28} {:<16} predicted {} = {}  observed {} = {}  gap {}",
                    r.label,
                    format!("{:?}", r.verdict),
                    r.predicted.shape,
                    r.predicted.energy,
                    shape_text(r.observed.shape.as_ref()),
                    number(r.observed.energy),
                    number(r.observed.gap),
                )
                .unwrap();
            }
            for skip in &result.skips {
                writeln!(s, "skipped {}: {}", skip.params, skip.reason).unwrap();
            }
            s.push_str(&totals_line(&report));
            s
        }
    }
}

fn totals_line(report: &SuiteReport) -> String {
    let t = report.totals;
    format!(
        "{} records: {} match, {} mismatch; {} skipped, {} over the order cap\n",
        t.records, t.matches, t.mismatches, t.skips, t.over_cap
    )
}

pub fn suite_text(report: &SuiteReport) -> String {
    let mut s = String::new();
    for sweep in &report.suites {
        writeln!(
            s,
            "{:<24} {:>5} records  {:>5} match  {:>4} mismatch  {:>4} skipped  {:>6} over cap",
            sweep.config.target.to_string(),
            sweep.records.len(),
            sweep.matches,
            sweep.mismatches,
            sweep.skips.len(),
            sweep.over_cap
        )
        .unwrap();
        for r in sweep.records.iter().filter(|r| !r.is_match()) {
            writeln!(
                s,
                "    {:?}: {} ({}): predicted {}, observed {}",
                r.verdict,
                r.label,
                r.predicted.params,
                r.predicted.shape,
                shape_text(r.observed.shape.as_ref())
            )
            .unwrap();
        }
    }
    s.push_str(&totals_line(report));
    let i = &report.integrality;
    writeln!(s, "integrality: {} spectra, {} violations", i.checked, i.violations.len()).unwrap();
    let h = &report.hyperenergetic;
    writeln!(
        s,
        "gaps: {} negative, {} zero outside D_6, {} differ from the printed gap form",
        h.negative_gaps.len(),
        h.unexpected_zero_gaps.len(),
        h.gap_mismatches.len()
    )
    .unwrap();
    if let Some(m) = &h.minimum_gap {
        writeln!(s, "smallest gap outside D_6: {} at {}", number(m.gap), m.label).unwrap();
    }
    s
}
