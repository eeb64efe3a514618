//! Concrete groups satisfying the central-quotient hypotheses.

use std::fmt;

use serde::Serialize;

use crate::arith::{as_prime_power, checked_pow, is_prime};
use crate::error::{Error, Result};
use crate::formulas::{Case, TheoremId, TheoremParams};
use crate::group::{build_family_group, cyclic_group, direct_product, FamilyInstance, FiniteGroup};

/// `Z_p^3 ⋊ Z_p` for an odd prime `p`, the generator acting by a unipotent
/// Jordan block `J`.
///
/// `(v, k)(w, l) = (v + J^k w, k + l)`. The center is `{(v0, 0, 0, 0)}` of
/// order `p` and `G/Z` is non-abelian of order `p^3`. Element `(v0, v1, v2, k)`
/// has index `((v0·p + v1)·p + v2)·p + k`.
pub fn jordan_semidirect(p: u64) -> FiniteGroup {
    assert!(p % 2 == 1 && is_prime(p), "jordan_semidirect needs an odd prime, got {p}");
    let q = p as usize;
    let decode = |i: usize| [i / (q * q * q), (i / (q * q)) % q, (i / q) % q, i % q];
    let encode = |v: [usize; 4]| ((v[0] * q + v[1]) * q + v[2]) * q + v[3];
    FiniteGroup::from_fn(format!("Z_{p}^3 x| Z_{p}"), q.pow(4), 0, move |a, b| {
        let [v0, v1, v2, k] = decode(a);
        let [w0, w1, w2, l] = decode(b);
        let choose2 = k * k.saturating_sub(1) / 2 % q;
        let jw0 = w0 + k * w1 + choose2 * w2;
        let jw1 = w1 + k * w2;
        encode([(v0 + jw0) % q, (v1 + jw1) % q, (v2 + w2) % q, (k + l) % q])
    })
}

/// How to build a witness group; knows its order before building it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum WitnessRecipe {
    Family { instance: FamilyInstance },
    Jordan { p: u64 },
    /// `Z_k × base`.
    Product { cyclic: u64, base: Box<WitnessRecipe> },
}

impl WitnessRecipe {
    fn family(instance: FamilyInstance) -> WitnessRecipe {
        WitnessRecipe::Family { instance }
    }

    /// `Z_k × base`, collapsing `k = 1`.
    fn times(k: u64, base: WitnessRecipe) -> WitnessRecipe {
        if k == 1 {
            base
        } else {
            WitnessRecipe::Product { cyclic: k, base: Box::new(base) }
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            WitnessRecipe::Family { instance } => instance.theoretical_order(),
            WitnessRecipe::Jordan { p } => checked_pow(*p, 4),
            WitnessRecipe::Product { cyclic, base } => base.order()?.checked_mul(*cyclic),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            WitnessRecipe::Family { instance } => build_family_group(instance),
            WitnessRecipe::Jordan { p } => Ok(jordan_semidirect(*p)),
            WitnessRecipe::Product { cyclic, base } => {
                let base = base.build()?;
                Ok(direct_product(&cyclic_group(*cyclic as usize), &base).with_label(self.to_string()))
            }
        }
    }
}

impl fmt::Display for WitnessRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessRecipe::Family { instance } => write!(f, "{}", instance.label()),
            WitnessRecipe::Jordan { p } => write!(f, "Z_{p}^3 x| Z_{p}"),
            WitnessRecipe::Product { cyclic, base } => write!(f, "Z_{cyclic} x {base}"),
        }
    }
}

fn dihedral(n: u64) -> WitnessRecipe {
    WitnessRecipe::family(FamilyInstance::Dihedral2n { n })
}

fn gpmn(p: u64, m: u64, n: u64) -> WitnessRecipe {
    WitnessRecipe::family(FamilyInstance::Gpmn { p, m, n })
}

/// A group satisfying the hypothesis of `theorem` at `params`, when one is known.
///
/// `Ok(None)` means the parameters are fine but no construction is on file
/// (the order-`p^3` cases other than `B3`, for instance).
pub fn witness_recipe(theorem: TheoremId, params: &TheoremParams) -> Result<Option<WitnessRecipe>> {
    if let Some(instance) = theorem.family_instance(params)? {
        instance.validate()?;
        return Ok(Some(WitnessRecipe::family(instance)));
    }
    let recipe = match theorem {
        TheoremId::QuotientPP => {
            // |Z(G(p,1,1))| = p, so the cyclic factor makes up the rest of z.
            let (p, z) = (params.need("p")?, params.need("z")?);
            (z % p == 0).then(|| WitnessRecipe::times(z / p, gpmn(p, 1, 1)))
        }
        TheoremId::PGroupCenterPn2 => {
            let (p, n) = (params.need("p")?, params.need("n")?);
            (n >= 3).then(|| gpmn(p, n - 2, 1))
        }
        TheoremId::QuotientP3 => {
            let (p, z) = (params.need("p")?, params.need("z")?);
            (p == 2 && params.case == Some(Case::B3) && z % 2 == 0)
                .then(|| WitnessRecipe::times(z / 2, dihedral(8)))
        }
        TheoremId::PGroupCenterPn3 => {
            let (p, n) = (params.need("p")?, params.need("n")?);
            (p == 2 && params.case == Some(Case::B3) && n >= 4)
                .then(|| WitnessRecipe::times(1 << (n - 4), dihedral(8)))
        }
        TheoremId::PGroupP4 => {
            let p = params.need("p")?;
            match params.center_exponent {
                Some(2) => Some(gpmn(p, 2, 1)),
                Some(1) if p == 2 => Some(dihedral(8)),
                Some(1) => Some(WitnessRecipe::Jordan { p }),
                _ => None,
            }
        }
        TheoremId::QuotientD2n => {
            let (n, z) = (params.need("n")?, params.need("z")?);
            if n % 2 == 1 {
                Some(WitnessRecipe::times(z, dihedral(n)))
            } else {
                (z % 2 == 0).then(|| WitnessRecipe::times(z / 2, dihedral(2 * n)))
            }
        }
        _ => unreachable!("structure theorems are handled above"),
    };
    if theorem == TheoremId::PGroupP4 || theorem == TheoremId::PGroupCenterPn2 {
        let p = params.need("p")?;
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("p = {p} is not prime")));
        }
    }
    Ok(recipe)
}

/// A named group from the registry with the theorems it is checked against.
#[derive(Debug, Clone)]
pub struct NamedWitness {
    pub name: &'static str,
    pub recipe: WitnessRecipe,
    pub checks: Vec<(TheoremId, TheoremParams)>,
}

impl NamedWitness {
    pub fn build(&self) -> Result<FiniteGroup> {
        Ok(self.recipe.build()?.with_label(self.name))
    }
}

/// D₈, Q₈, D₁₆, SD₁₆, Q₁₆, Z₃ × D₈, G(3,1,1) and U₁₂.
pub fn registry() -> Vec<NamedWitness> {
    let tp = TheoremParams::default;
    let d2n_quotient = |n, z| (TheoremId::QuotientD2n, tp().with("n", n).with("z", z));
    let order_16 = || {
        vec![
            d2n_quotient(4, 2),
            (TheoremId::PGroupP4, tp().with("p", 2).with("e", 1)),
            (TheoremId::PGroupCenterPn3, tp().with("p", 2).with("n", 4).with_case(Case::B3)),
            (TheoremId::QuotientP3, tp().with("p", 2).with("z", 2).with_case(Case::B3)),
        ]
    };
    let klein = |p: u64, z: u64| {
        let n = as_prime_power(p * p * z).map(|(_, e)| e as u64).unwrap_or(0);
        vec![
            (TheoremId::QuotientPP, tp().with("p", p).with("z", z)),
            (TheoremId::PGroupCenterPn2, tp().with("p", p).with("n", n)),
        ]
    };

    let with = |mut head: Vec<(TheoremId, TheoremParams)>, tail: Vec<(TheoremId, TheoremParams)>| {
        head.extend(tail);
        head
    };
    vec![
        NamedWitness {
            name: "D8",
            recipe: dihedral(4),
            checks: with(vec![(TheoremId::Dihedral, tp().with("n", 4))], klein(2, 2)),
        },
        NamedWitness {
            name: "Q8",
            recipe: WitnessRecipe::family(FamilyInstance::Dicyclic4n { n: 2 }),
            checks: with(vec![(TheoremId::Dicyclic, tp().with("n", 2))], klein(2, 2)),
        },
        NamedWitness {
            name: "D16",
            recipe: dihedral(8),
            checks: with(vec![(TheoremId::Dihedral, tp().with("n", 8))], order_16()),
        },
        NamedWitness {
            name: "SD16",
            recipe: WitnessRecipe::family(FamilyInstance::Semidihedral8n { n: 2 }),
            checks: with(vec![(TheoremId::Semidihedral, tp().with("n", 2))], order_16()),
        },
        NamedWitness {
            name: "Q16",
            recipe: WitnessRecipe::family(FamilyInstance::Dicyclic4n { n: 4 }),
            checks: with(vec![(TheoremId::Dicyclic, tp().with("n", 4))], order_16()),
        },
        NamedWitness {
            name: "Z3xD8",
            recipe: WitnessRecipe::times(3, dihedral(4)),
            checks: vec![(TheoremId::QuotientPP, tp().with("p", 2).with("z", 6))],
        },
        NamedWitness {
            name: "G(3,1,1)",
            recipe: gpmn(3, 1, 1),
            checks: with(vec![(TheoremId::Gpmn, tp().with("p", 3).with("m", 1).with("n", 1))], klein(3, 3)),
        },
        NamedWitness {
            name: "U12",
            recipe: WitnessRecipe::family(FamilyInstance::U6n { n: 2 }),
            checks: vec![
                (TheoremId::U6n, tp().with("n", 2)),
                (TheoremId::Unm, tp().with("n", 2).with("m", 3)),
                d2n_quotient(3, 2),
            ],
        },
    ]
}

/// Looks a registry entry up by name, ignoring case and `×`/`x` spelling.
pub fn named_witness(name: &str) -> Option<NamedWitness> {
    let key = |s: &str| s.to_ascii_lowercase().replace('×', "x").replace([' ', '_'], "");
    registry().into_iter().find(|w| key(w.name) == key(name))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{detect_central_quotient, QuotientShape};

    #[test]
    fn jordan_group_is_a_group() {
        let g = jordan_semidirect(3);
        assert_eq!(g.order(), 81);
        assert!(g.check_axioms().is_ok());
        assert_eq!(g.center().len(), 3);
    }

    #[test]
    fn recipes_know_their_orders() {
        for w in registry() {
            let g = w.build().unwrap();
            assert_eq!(w.recipe.order(), Some(g.order() as u64), "{}", w.name);
        }
    }

    #[test]
    fn parameterized_witnesses_meet_hypotheses() {
        let tp = TheoremParams::default;
        let cases = [
            (TheoremId::QuotientPP, tp().with("p", 3).with("z", 6), 6, QuotientShape::ZpXZp { p: 3 }),
            (TheoremId::PGroupCenterPn2, tp().with("p", 2).with("n", 5), 8, QuotientShape::ZpXZp { p: 2 }),
            (TheoremId::PGroupP4, tp().with("p", 3).with("e", 2), 9, QuotientShape::ZpXZp { p: 3 }),
            (TheoremId::PGroupP4, tp().with("p", 3).with("e", 1), 3, QuotientShape::OrderPCubed { p: 3 }),
            (TheoremId::QuotientD2n, tp().with("n", 5).with("z", 3), 3, QuotientShape::Dihedral { n: 5 }),
            (TheoremId::QuotientD2n, tp().with("n", 6).with("z", 4), 4, QuotientShape::Dihedral { n: 6 }),
            (
                TheoremId::PGroupCenterPn3,
                tp().with("p", 2).with("n", 6).with_case(Case::B3),
                8,
                QuotientShape::Dihedral { n: 4 },
            ),
        ];
        for (theorem, params, center, shape) in cases {
            let g = witness_recipe(theorem, &params).unwrap().unwrap().build().unwrap();
            let q = detect_central_quotient(&g);
            assert_eq!((q.center_order, q.shape), (center, shape), "{theorem} {params}");
        }
    }

    #[test]
    fn missing_constructions_are_none() {
        let params = TheoremParams::default().with("p", 3).with("z", 3).with_case(Case::A2);
        assert!(witness_recipe(TheoremId::QuotientP3, &params).unwrap().is_none());
        let params = TheoremParams::default().with("n", 4).with("z", 3);
        assert!(witness_recipe(TheoremId::QuotientD2n, &params).unwrap().is_none());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(named_witness("z3xd8").unwrap().name, "Z3xD8");
        assert_eq!(named_witness("Z3×D8").unwrap().name, "Z3xD8");
        assert!(named_witness("A5").is_none());
    }
}
