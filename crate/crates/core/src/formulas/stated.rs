use num_rational::BigRational;

use super::{predict, Case, TheoremId, TheoremParams};
use crate::arith::{rat, rat_pow};
use crate::error::Result;

fn r(v: u64) -> BigRational {
    rat(v as i64)
}

/// `2(x−1)(x−2)` for each of `copies` complete graphs of size `x`.
fn kn(copies: &BigRational, x: &BigRational) -> BigRational {
    rat(2) * copies * (x - rat(1)) * (x - rat(2))
}

/// The CN-energy polynomial exactly as each theorem prints it.
///
/// Parameters are validated by running the predictor first, so this accepts
/// exactly the points [`predict`] accepts.
pub fn stated_energy(theorem: TheoremId, params: &TheoremParams) -> Result<BigRational> {
    let prediction = predict(theorem, params)?;
    let half = BigRational::new(1.into(), 2.into());
    let one = rat(1);
    let get = |name: &'static str| params.need(name).map(r);

    Ok(match theorem {
        TheoremId::Dihedral => {
            let n = get("n")?;
            if params.need("n")? % 2 == 1 {
                &half * (&n - rat(3)) * (&n - rat(5))
            } else {
                &half * (&n - rat(4)) * (&n - rat(6))
            }
        }
        TheoremId::Dicyclic => {
            let n = get("n")?;
            rat(2) * (&n - rat(2)) * (&n - rat(3))
        }
        TheoremId::Semidihedral => {
            let n = get("n")?;
            if params.need("n")? % 2 == 0 {
                rat(2) * (rat(2) * &n - rat(2)) * (rat(2) * &n - rat(3))
            } else {
                rat(2) * (rat(2) * &n - rat(3)) * (rat(2) * &n - rat(4)) + rat(12)
            }
        }
        TheoremId::Unm => {
            let (n, m) = (get("n")?, get("m")?);
            let base = &n * &n - rat(3) * &n + rat(2);
            if params.need("m")? % 2 == 0 {
                let t = &m * &n - rat(2) * &n;
                rat(4) * base + &half * (&t - rat(2)) * (&t - rat(4))
            } else {
                let t = &m * &n - &n;
                rat(2) * base + &half * (&t - rat(2)) * (&t - rat(4))
            }
        }
        TheoremId::U6n => {
            let n = get("n")?;
            rat(4) * (&n - rat(1)) * (&n - rat(2))
        }
        TheoremId::V8n => {
            let n = get("n")?;
            if params.need("n")? % 2 == 0 {
                rat(2) * (rat(2) * &n - rat(3)) * (rat(2) * &n - rat(4))
            } else {
                rat(2) * (rat(2) * &n - rat(2)) * (rat(2) * &n - rat(3))
            }
        }
        TheoremId::Gpmn => {
            let (p, m, n) = (params.need("p")?, params.need("m")? as i64, params.need("n")? as i64);
            let a = rat_pow(p, m + n - 1) - rat_pow(p, m + n - 2);
            let dn = rat_pow(p, n) - rat_pow(p, n - 1);
            let b = rat_pow(p, m) - rat_pow(p, m - 1);
            rat(4) * (&a - rat(1)) * (&a - rat(2)) + rat(2) * dn * (&b - rat(1)) * (&b - rat(2))
        }
        TheoremId::QuotientPP => {
            let (p, z) = (get("p")?, get("z")?);
            let n = (&p - rat(1)) * z / &p;
            rat(2) * (&p + rat(1)) * (&n - rat(1)) * (&n - rat(2))
        }
        TheoremId::PGroupCenterPn2 => {
            let (p, n) = (params.need("p")?, params.need("n")? as i64);
            let x = rat_pow(p, n - 2) - rat_pow(p, n - 3);
            rat(2) * (r(p) + rat(1)) * (&x - rat(1)) * (&x - rat(2))
        }
        TheoremId::QuotientP3 | TheoremId::PGroupCenterPn3 => {
            let p = params.need("p")?;
            let z = match theorem {
                TheoremId::QuotientP3 => get("z")?,
                _ => rat_pow(p, params.need("n")? as i64 - 3),
            };
            let pr = r(p);
            let m = (&pr * &pr - rat(1)) * &z / &pr;
            let n1 = (&pr - rat(1)) * &z / (&pr * &pr);
            let n2 = (&pr - rat(1)) * &z / &pr;
            let k = params.k.map(r).unwrap_or_else(|| rat(0));
            let pp1 = &pr * &pr + &pr + rat(1);
            match params.case.expect("predict checked the case") {
                Case::A1 => kn(&one, &m) + kn(&(&pr * &pr), &n1),
                Case::A2 | Case::B4 => kn(&pp1, &n1),
                Case::B1 => kn(&one, &m) + kn(&(&k * &pr), &n1) + kn(&(&pr - &k), &n2),
                Case::B2 => kn(&(&k * &pr + rat(1)), &n1) + kn(&(&pr + rat(1) - &k), &n2),
                Case::B3 => kn(&one, &m) + kn(&pr, &n2),
                Case::B5 => kn(&one, &n1) + kn(&(&pr + rat(1)), &n2),
            }
        }
        TheoremId::PGroupP4 => {
            let p = r(params.p.expect("checked"));
            let p2 = &p * &p;
            if prediction.params.center_exponent == Some(2) {
                rat(2) * (&p + rat(1)) * (&p2 - &p - rat(1)) * (&p2 - &p - rat(2))
            } else {
                rat(2) * (&p2 - rat(2)) * (&p2 - rat(3)) + rat(2) * &p * (&p - rat(2)) * (&p - rat(3))
            }
        }
        TheoremId::QuotientD2n => {
            let (n, z) = (get("n")?, get("z")?);
            let common = &half * &n * &n * &z * &z - &n * &z * &z - rat(3) * &n * &z - rat(3) * &z;
            if params.need("n")? % 2 == 0 {
                common + BigRational::new(3.into(), 2.into()) * &z * &z + rat(12)
            } else {
                common + BigRational::new(5.into(), 2.into()) * &z * &z + rat(8)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::TheoremPrediction;

    fn agree(theorem: TheoremId, params: TheoremParams) {
        let Ok(prediction) = predict(theorem, &params) else { return };
        let TheoremPrediction { energy, .. } = prediction;
        let stated = stated_energy(theorem, &params).unwrap();
        assert_eq!(stated, BigRational::from_integer(energy), "{theorem} {params}");
    }

    #[test]
    fn family_polynomials_match_shapes() {
        for n in 2..60 {
            let p = TheoremParams::default().with("n", n);
            for t in [TheoremId::Dihedral, TheoremId::Dicyclic, TheoremId::Semidihedral, TheoremId::U6n, TheoremId::V8n] {
                agree(t, p.clone());
            }
            for m in 3..20 {
                agree(TheoremId::Unm, p.clone().with("m", m));
            }
        }
        for p in [2, 3, 5, 7] {
            for m in 1..5 {
                for n in 1..=m {
                    agree(TheoremId::Gpmn, TheoremParams::default().with("p", p).with("m", m).with("n", n));
                }
            }
        }
    }

    #[test]
    fn quotient_polynomials_match_shapes() {
        for p in [2u64, 3, 5, 7] {
            for z in 1..80 {
                agree(TheoremId::QuotientPP, TheoremParams::default().with("p", p).with("z", z));
                for case in Case::ALL {
                    for k in 1..=p {
                        let params = TheoremParams::default().with("p", p).with("z", z).with_case(case).with("k", k);
                        agree(TheoremId::QuotientP3, params);
                    }
                }
            }
            for n in 3..9 {
                agree(TheoremId::PGroupCenterPn2, TheoremParams::default().with("p", p).with("n", n));
                for case in Case::ALL {
                    for k in 1..=p {
                        let params = TheoremParams::default().with("p", p).with("n", n).with_case(case).with("k", k);
                        agree(TheoremId::PGroupCenterPn3, params);
                    }
                }
            }
            for e in [1, 2] {
                agree(TheoremId::PGroupP4, TheoremParams::default().with("p", p).with("e", e));
            }
        }
        for n in 3..40 {
            for z in 1..30 {
                agree(TheoremId::QuotientD2n, TheoremParams::default().with("n", n).with("z", z));
            }
        }
    }
}
