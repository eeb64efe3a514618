use num_rational::BigRational;

use super::{Case, CentralQuotientParams, TheoremId, TheoremParams, TheoremPrediction};
use crate::arith::{checked_pow, is_prime, rat, to_positive};
use crate::error::{Error, Result};
use crate::graph::{predicted_structure, CompleteUnionShape};
use crate::group::FamilyInstance;
use crate::spectral::{complete_union_energy, complete_union_spectrum};

fn from_shape(theorem_id: TheoremId, params: TheoremParams, shape: CompleteUnionShape) -> TheoremPrediction {
    TheoremPrediction {
        theorem_id,
        params,
        spectrum: complete_union_spectrum(&shape),
        energy: complete_union_energy(&shape),
        shape,
    }
}

fn family(spec: FamilyInstance) -> Result<TheoremPrediction> {
    let (id, params) = TheoremId::for_family(&spec);
    Ok(from_shape(id, params, predicted_structure(&spec)?))
}

pub fn predict_d2n(n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::Dihedral2n { n })
}

pub fn predict_t4n(n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::Dicyclic4n { n })
}

pub fn predict_sd8n(n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::Semidihedral8n { n })
}

pub fn predict_unm(n: u64, m: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::Unm { n, m })
}

pub fn predict_u6n(n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::U6n { n })
}

pub fn predict_v8n(n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::V8n { n })
}

pub fn predict_gpmn(p: u64, m: u64, n: u64) -> Result<TheoremPrediction> {
    family(FamilyInstance::Gpmn { p, m, n })
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("p = {p} is not prime")))
    }
}

fn prime_power(p: u64, e: u64) -> Result<u64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| checked_pow(p, e))
        .ok_or_else(|| Error::InvalidParams(format!("{p}^{e} overflows")))
}

/// `|Z|` scaled by `num/den`, required to be a positive integer.
fn scaled(name: &'static str, z: u64, num: u64, den: u64) -> Result<u64> {
    to_positive(name, &(rat(z as i64) * BigRational::new(num.into(), den.into())))
}

fn pp_shape(p: u64, z: u64) -> Result<CompleteUnionShape> {
    require_prime(p)?;
    let n = scaled("n", z, p - 1, p)?;
    Ok(CompleteUnionShape::from_parts([(p + 1, n)]))
}

/// `G/Z ≅ Z_p × Z_p`: `(p+1) K_n` with `n = (p−1)|Z|/p`.
pub fn predict_quotient_pp(p: u64, z: u64) -> Result<TheoremPrediction> {
    let params = TheoremParams::default().with("p", p).with("z", z);
    Ok(from_shape(TheoremId::QuotientPP, params, pp_shape(p, z)?))
}

/// `|G| = p^n`, `|Z| = p^(n−2)`.
pub fn predict_pgroup_center_pn2(p: u64, n: u64) -> Result<TheoremPrediction> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("needs n >= 3, got {n}")));
    }
    require_prime(p)?;
    let z = prime_power(p, n - 2)?;
    let params = TheoremParams::default().with("p", p).with("n", n);
    Ok(from_shape(TheoremId::PGroupCenterPn2, params, pp_shape(p, z)?))
}

fn p3_shape(p: u64, z: u64, case: Option<Case>, k: Option<u64>) -> Result<CompleteUnionShape> {
    require_prime(p)?;
    let case = case.ok_or_else(|| Error::MissingCase(TheoremId::QuotientP3.to_string()))?;
    let m = || scaled("m", z, p * p - 1, p);
    let n1 = || scaled("n1", z, p - 1, p * p);
    let n2 = || scaled("n2", z, p - 1, p);
    let k = || -> Result<u64> {
        let k = k.ok_or_else(|| Error::InvalidParams(format!("case {case} needs k")))?;
        if (1..=p).contains(&k) {
            Ok(k)
        } else {
            Err(Error::KOutOfRange { k, p })
        }
    };
    let parts: Vec<(u64, u64)> = match case {
        Case::A1 => vec![(1, m()?), (p * p, n1()?)],
        Case::A2 | Case::B4 => vec![(p * p + p + 1, n1()?)],
        Case::B1 => {
            let k = k()?;
            vec![(1, m()?), (k * p, n1()?), (p - k, n2()?)]
        }
        Case::B2 => {
            let k = k()?;
            vec![(k * p + 1, n1()?), (p + 1 - k, n2()?)]
        }
        Case::B3 => vec![(1, m()?), (p, n2()?)],
        Case::B5 => vec![(1, n1()?), (p + 1, n2()?)],
    };
    Ok(CompleteUnionShape::from_parts(parts))
}

/// `|G/Z| = p^3`, in the structure case chosen by the caller.
pub fn predict_quotient_p3(params: &CentralQuotientParams) -> Result<TheoremPrediction> {
    let shape = p3_shape(params.p, params.z, params.case, params.k)?;
    let mut tp = TheoremParams::default().with("p", params.p).with("z", params.z);
    tp.case = params.case;
    if params.case.is_some_and(Case::needs_k) {
        tp.k = params.k;
    }
    Ok(from_shape(TheoremId::QuotientP3, tp, shape))
}

/// `|G| = p^n`, `|Z| = p^(n−3)`.
pub fn predict_pgroup_center_pn3(p: u64, n: u64, case: Case, k: Option<u64>) -> Result<TheoremPrediction> {
    if n < 4 {
        return Err(Error::InvalidParams(format!("needs n >= 4, got {n}")));
    }
    require_prime(p)?;
    let z = prime_power(p, n - 3)?;
    let shape = p3_shape(p, z, Some(case), k)?;
    let mut tp = TheoremParams::default().with("p", p).with("n", n).with_case(case);
    if case.needs_k() {
        tp.k = k;
    }
    Ok(from_shape(TheoremId::PGroupCenterPn3, tp, shape))
}

/// `|G| = p^4` with `|Z| = p^center_exponent`.
pub fn predict_pgroup_p4(p: u64, center_exponent: u32) -> Result<TheoremPrediction> {
    require_prime(p)?;
    let parts = match center_exponent {
        2 => vec![(p + 1, p * (p - 1))],
        1 => vec![(1, p * p - 1), (p, p - 1)],
        e => {
            return Err(Error::InvalidParams(format!(
                "a non-abelian group of order p^4 has |Z| = p or p^2, got p^{e}"
            )))
        }
    };
    let params = TheoremParams { p: Some(p), center_exponent: Some(center_exponent), ..Default::default() };
    Ok(from_shape(TheoremId::PGroupP4, params, CompleteUnionShape::from_parts(parts)))
}

/// `G/Z ≅ D_2n` with `|Z| = z`.
pub fn predict_quotient_d2n(n: u64, z: u64) -> Result<TheoremPrediction> {
    if n < 3 || z < 1 {
        return Err(Error::InvalidParams(format!("needs n >= 3 and z >= 1, got n = {n}, z = {z}")));
    }
    let big = scaled("(n-1)z/2", z, n - 1, 2)?;
    let parts = if n % 2 == 0 {
        vec![(1, big), (2, scaled("z/2", z, 1, 2)?)]
    } else {
        vec![(1, big), (1, z)]
    };
    let params = TheoremParams::default().with("n", n).with("z", z);
    Ok(from_shape(TheoremId::QuotientD2n, params, CompleteUnionShape::from_parts(parts)))
}

/// Dispatches on the theorem id.
pub fn predict(theorem: TheoremId, params: &TheoremParams) -> Result<TheoremPrediction> {
    if let Some(spec) = theorem.family_instance(params)? {
        return family(spec);
    }
    match theorem {
        TheoremId::QuotientPP => predict_quotient_pp(params.need("p")?, params.need("z")?),
        TheoremId::PGroupCenterPn2 => predict_pgroup_center_pn2(params.need("p")?, params.need("n")?),
        TheoremId::QuotientP3 => predict_quotient_p3(&CentralQuotientParams {
            p: params.need("p")?,
            z: params.need("z")?,
            n_dihedral: None,
            case: params.case,
            k: params.k,
        }),
        TheoremId::PGroupCenterPn3 => {
            let case = params
                .case
                .ok_or_else(|| Error::MissingCase(TheoremId::PGroupCenterPn3.to_string()))?;
            predict_pgroup_center_pn3(params.need("p")?, params.need("n")?, case, params.k)
        }
        TheoremId::PGroupP4 => {
            let p = params.need("p")?;
            let e = match (params.center_exponent, params.z) {
                (Some(e), _) => e,
                (None, Some(z)) if z == p => 1,
                (None, Some(z)) if Some(z) == p.checked_mul(p) => 2,
                _ => {
                    return Err(Error::InvalidParams(
                        "order p^4 needs the center size: e = 1 or 2, or z = p or p^2".to_string(),
                    ))
                }
            };
            predict_pgroup_p4(p, e)
        }
        TheoremId::QuotientD2n => predict_quotient_d2n(params.need("n")?, params.need("z")?),
        _ => unreachable!("family theorems are handled above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn check(p: Result<TheoremPrediction>, spectrum: &str, energy: i64) {
        let p = p.unwrap();
        assert_eq!(p.spectrum.to_string(), spectrum, "{:?} {}", p.theorem_id, p.params);
        assert_eq!(p.energy, BigInt::from(energy), "{:?} {}", p.theorem_id, p.params);
        assert_eq!(p.spectrum.size(), p.shape.vertex_count());
    }

    #[test]
    fn dihedral() {
        check(predict_d2n(7), "{(-1)^2, 0^1, 2^1}", 4);
        check(predict_d2n(8), "{(-1)^2, 0^2, 2^1}", 4);
        check(predict_d2n(3), "{0^2}", 0);
    }

    #[test]
    fn dicyclic() {
        check(predict_t4n(4), "{(-1)^2, 0^2, 2^1}", 4);
        check(predict_t4n(2), "{0^3}", 0);
        check(predict_t4n(5), "{(-2)^3, 0^2, 6^1}", 12);
    }

    #[test]
    fn semidihedral() {
        check(predict_sd8n(2), "{(-1)^2, 0^2, 2^1}", 4);
        check(predict_sd8n(3), "{(-2)^6, 6^2}", 24);
        check(predict_sd8n(5), "{(-6)^7, (-2)^3, 6^1, 42^1}", 96);
    }

    #[test]
    fn unm() {
        check(predict_unm(3, 4), "{(-1)^6, 2^3}", 12);
        // Two K_2 components: four zero eigenvalues (the example listing {0^3} miscounts).
        check(predict_unm(2, 3), "{0^4}", 0);
        check(predict_unm(4, 3), "{(-2)^6, 6^2}", 24);
    }

    #[test]
    fn u6n() {
        check(predict_u6n(2), "{0^4}", 0);
        check(predict_u6n(3), "{(-1)^4, 2^2}", 8);
        check(predict_u6n(5), "{(-3)^8, 12^2}", 48);
    }

    #[test]
    fn v8n() {
        check(predict_v8n(2), "{0^6}", 0);
        check(predict_v8n(3), "{(-3)^4, 0^2, 12^1}", 24);
        check(predict_v8n(4), "{(-4)^5, 0^4, 20^1}", 40);
    }

    #[test]
    fn gpmn() {
        check(predict_gpmn(2, 1, 1), "{0^3}", 0);
        check(predict_gpmn(2, 2, 2), "{(-2)^6, 0^4, 6^2}", 24);
        check(predict_gpmn(3, 1, 1), "{0^8}", 0);
    }

    #[test]
    fn quotient_pp() {
        check(predict_quotient_pp(2, 2), "{0^3}", 0);
        check(predict_quotient_pp(2, 6), "{(-1)^6, 2^3}", 12);
        check(predict_quotient_pp(3, 3), "{0^8}", 0);
        assert!(matches!(predict_quotient_pp(3, 2), Err(Error::NonIntegralParameter { .. })));
        assert!(matches!(predict_quotient_pp(4, 4), Err(Error::InvalidParams(_))));
    }

    #[test]
    fn pgroup_center_pn2() {
        check(predict_pgroup_center_pn2(2, 3), "{0^3}", 0);
        let p = predict_pgroup_center_pn2(2, 4).unwrap();
        assert_eq!(p.shape.to_string(), "3K_2");
        assert_eq!(p.energy, BigInt::from(0));
        let p = predict_pgroup_center_pn2(2, 5).unwrap();
        assert_eq!(p.shape.to_string(), "3K_4");
        assert_eq!(p.energy, BigInt::from(36));
        assert!(predict_pgroup_center_pn2(2, 2).is_err());
    }

    fn p3(p: u64, z: u64, case: Case, k: Option<u64>) -> Result<TheoremPrediction> {
        predict_quotient_p3(&CentralQuotientParams { p, z, n_dihedral: None, case: Some(case), k })
    }

    #[test]
    fn quotient_p3() {
        let b3 = p3(2, 2, Case::B3, None).unwrap();
        assert_eq!(b3.shape.to_string(), "K_3 ∪ 2K_1");
        check(Ok(b3), "{(-1)^2, 0^2, 2^1}", 4);
        check(p3(2, 4, Case::A2, None), "{0^7}", 0);
        let b2 = p3(2, 4, Case::B2, Some(1)).unwrap();
        assert_eq!(b2.shape.to_string(), "2K_2 ∪ 3K_1");
        check(Ok(b2), "{0^7}", 0);
    }

    #[test]
    fn quotient_p3_errors() {
        let none = CentralQuotientParams { p: 2, z: 4, n_dihedral: None, case: None, k: None };
        assert!(matches!(predict_quotient_p3(&none), Err(Error::MissingCase(_))));
        assert!(matches!(p3(2, 4, Case::B1, Some(3)), Err(Error::KOutOfRange { k: 3, p: 2 })));
        assert!(matches!(p3(2, 4, Case::B1, Some(0)), Err(Error::KOutOfRange { .. })));
        assert!(matches!(p3(2, 2, Case::A1, None), Err(Error::NonIntegralParameter { name: "n1", .. })));
        assert!(p3(2, 4, Case::B2, None).is_err());
    }

    #[test]
    fn pgroup_p4() {
        let a = predict_pgroup_p4(2, 2).unwrap();
        assert_eq!(a.shape.to_string(), "3K_2");
        assert_eq!(a.energy, BigInt::from(0));
        let b = predict_pgroup_p4(2, 1).unwrap();
        assert_eq!(b.shape.to_string(), "K_3 ∪ 2K_1");
        assert_eq!(b.energy, BigInt::from(4));
        let b3 = predict_pgroup_p4(3, 1).unwrap();
        assert_eq!(b3.shape.to_string(), "K_8 ∪ 3K_2");
        assert_eq!(b3.energy, BigInt::from(84));
        assert!(predict_pgroup_p4(2, 3).is_err());
    }

    #[test]
    fn quotient_d2n() {
        let d6 = predict_quotient_d2n(3, 1).unwrap();
        assert_eq!(d6.shape.to_string(), "2K_1");
        assert_eq!(d6.energy, BigInt::from(0));
        let t16 = predict_quotient_d2n(4, 2).unwrap();
        assert_eq!(t16.shape.to_string(), "K_3 ∪ 2K_1");
        assert_eq!(t16.energy, BigInt::from(4));
        assert_eq!(predict_quotient_d2n(3, 2).unwrap().shape.to_string(), "2K_2");
        assert!(predict_quotient_d2n(4, 1).is_err());
        assert!(predict_quotient_d2n(2, 2).is_err());
    }

    #[test]
    fn coherence_between_theorems() {
        for n in 2..40 {
            assert_eq!(predict_u6n(n).unwrap().shape, predict_unm(n, 3).unwrap().shape);
        }
        // T_4n / Z ≅ D_2n with |Z| = 2; for n = 2 the quotient is Z_2 × Z_2 instead.
        assert_eq!(predict_t4n(2).unwrap().shape, predict_quotient_pp(2, 2).unwrap().shape);
        for n in 3..40 {
            assert_eq!(predict_t4n(n).unwrap().shape, predict_quotient_d2n(n, 2).unwrap().shape);
        }
        for n in (3..41).step_by(2) {
            assert_eq!(predict_d2n(n).unwrap().shape, predict_quotient_d2n(n, 1).unwrap().shape);
        }
    }

    #[test]
    fn dispatcher_matches_direct_calls() {
        let params = TheoremParams::default().with("p", 3).with("e", 1);
        assert_eq!(predict(TheoremId::PGroupP4, &params).unwrap(), predict_pgroup_p4(3, 1).unwrap());
        let params = TheoremParams::default().with("p", 3).with("z", 9);
        assert_eq!(predict(TheoremId::PGroupP4, &params).unwrap(), predict_pgroup_p4(3, 2).unwrap());
        let params = TheoremParams::default().with("n", 5).with("m", 4);
        assert_eq!(predict(TheoremId::Unm, &params).unwrap(), predict_unm(5, 4).unwrap());
        let params = TheoremParams::default().with("p", 2).with("n", 6).with_case(Case::B1).with("k", 2);
        assert_eq!(
            predict(TheoremId::PGroupCenterPn3, &params).unwrap(),
            predict_pgroup_center_pn3(2, 6, Case::B1, Some(2)).unwrap()
        );
        assert!(matches!(
            predict(TheoremId::PGroupCenterPn3, &TheoremParams::default().with("p", 2).with("n", 6)),
            Err(Error::MissingCase(_))
        ));
    }
}
