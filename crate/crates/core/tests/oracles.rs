//! Paper and brute-force values checked end to end: group, graph, spectrum.

use cccspec::graph::{ccc_graph, recognize_complete_union, CompleteUnionShape};
use cccspec::group::{build_family_group, FamilyInstance, FamilyKind};
use cccspec::spectral::{classify, spectrum, Classification};
use cccspec::verify::{verify_family, ParamRange, SweepConfig, Verdict};

fn pipeline(kind: FamilyKind, params: &[u64]) -> (CompleteUnionShape, String, f64, Classification) {
    let group = build_family_group(&FamilyInstance::from_params(kind, params).unwrap()).unwrap();
    let gamma = ccc_graph(&group).unwrap();
    let shape = recognize_complete_union(&gamma.graph).unwrap();
    let s = spectrum(&gamma.graph).unwrap();
    let report = classify(&s, gamma.vertex_count());
    (shape, s.rounded().unwrap().to_string(), report.energy, report.classification)
}

#[test]
fn dihedral_values() {
    let (shape, spec, energy, class) = pipeline(FamilyKind::Dihedral2n, &[7]);
    assert_eq!(shape, CompleteUnionShape::from_component_sizes([3, 1]));
    assert_eq!(spec, "{(-1)^2, 0^1, 2^1}");
    assert_eq!(energy, 4.0);
    assert_eq!(class, Classification::Subenergetic);

    let (_, spec, energy, _) = pipeline(FamilyKind::Dihedral2n, &[8]);
    assert_eq!((spec.as_str(), energy), ("{(-1)^2, 0^2, 2^1}", 4.0));

    let (shape, _, energy, class) = pipeline(FamilyKind::Dihedral2n, &[3]);
    assert_eq!(shape, CompleteUnionShape::from_parts([(2, 1)]));
    assert_eq!((energy, class), (0.0, Classification::Borderenergetic));
}

#[test]
fn dicyclic_and_semidihedral_values() {
    assert_eq!(pipeline(FamilyKind::Dicyclic4n, &[2]).1, "{0^3}");
    assert_eq!(pipeline(FamilyKind::Dicyclic4n, &[5]).2, 12.0);
    let (shape, spec, energy, _) = pipeline(FamilyKind::Semidihedral8n, &[3]);
    assert_eq!(shape, CompleteUnionShape::from_parts([(2, 4)]));
    assert_eq!((spec.as_str(), energy), ("{(-2)^6, 6^2}", 24.0));
    assert_eq!(pipeline(FamilyKind::Semidihedral8n, &[5]).2, 96.0);
}

#[test]
fn unm_u6n_and_v8n_values() {
    assert_eq!(pipeline(FamilyKind::Unm, &[3, 4]).1, "{(-1)^6, 2^3}");
    assert_eq!(pipeline(FamilyKind::Unm, &[2, 3]).1, "{0^4}");
    assert_eq!(pipeline(FamilyKind::Unm, &[4, 3]).2, 24.0);
    assert_eq!(pipeline(FamilyKind::U6n, &[3]).1, "{(-1)^4, 2^2}");
    assert_eq!(pipeline(FamilyKind::U6n, &[5]).2, 48.0);
    assert_eq!(pipeline(FamilyKind::V8n, &[2]).0, CompleteUnionShape::from_parts([(3, 2)]));
    assert_eq!(pipeline(FamilyKind::V8n, &[3]).1, "{(-3)^4, 0^2, 12^1}");
    assert_eq!(pipeline(FamilyKind::V8n, &[4]).1, "{(-4)^5, 0^4, 20^1}");
}

#[test]
fn gpmn_values() {
    assert_eq!(pipeline(FamilyKind::Gpmn, &[2, 1, 1]).1, "{0^3}");
    assert_eq!(pipeline(FamilyKind::Gpmn, &[3, 1, 1]).1, "{0^8}");
    // The printed structure for G(2,2,2) is 2K_4 ∪ 2K_2 with energy 24; the
    // group itself has twelve non-central classes forming 3K_4.
    let (shape, spec, energy, _) = pipeline(FamilyKind::Gpmn, &[2, 2, 2]);
    assert_eq!(shape, CompleteUnionShape::from_parts([(3, 4)]));
    assert_eq!((spec.as_str(), energy), ("{(-2)^9, 6^3}", 36.0));
}

#[test]
fn gpmn_sweep_disagrees_only_where_n_exceeds_one() {
    let config = SweepConfig::family(
        FamilyKind::Gpmn,
        [("p", ParamRange::single(2)), ("m", ParamRange::new(1, 3)), ("n", ParamRange::new(1, 2))],
    );
    for r in verify_family(&config).unwrap() {
        let n = r.predicted.params.get("n").unwrap();
        let m = r.predicted.params.get("m").unwrap();
        let expected = if n == 1 { Verdict::Match } else { Verdict::ShapeMismatch };
        assert_eq!(r.verdict, expected, "{}", r.label);
        assert!(m >= n);
    }
}
