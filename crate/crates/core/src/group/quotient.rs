use serde::{Deserialize, Serialize};

use super::FiniteGroup;
use crate::arith::as_prime_power;

/// Isomorphism type of `G/Z(G)`, as far as the quotient theorems care.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum QuotientShape {
    /// Elementary abelian of order `p^2`.
    ZpXZp { p: u64 },
    /// Dihedral of order `2n`, `n >= 3`.
    Dihedral { n: u64 },
    /// Any group of order `p^3` that is neither of the above.
    OrderPCubed { p: u64 },
    Other,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CentralQuotient {
    pub center_order: usize,
    pub quotient_order: usize,
    pub quotient_abelian: bool,
    pub shape: QuotientShape,
}

/// Builds `G/Z(G)` explicitly and recognizes `Z_p × Z_p`, `D_2n` and order `p^3`.
pub fn detect_central_quotient(group: &FiniteGroup) -> CentralQuotient {
    let center = group.center();
    let quotient = quotient_by(group, &center);
    let q = quotient.order();
    let abelian = quotient.is_abelian();

    let shape = match as_prime_power(q as u64) {
        Some((p, 2)) if abelian && (0..q).all(|a| quotient.element_order(a) as u64 <= p) => {
            QuotientShape::ZpXZp { p }
        }
        _ => match dihedral_degree(&quotient) {
            Some(n) => QuotientShape::Dihedral { n },
            None => match as_prime_power(q as u64) {
                Some((p, 3)) => QuotientShape::OrderPCubed { p },
                _ => QuotientShape::Other,
            },
        },
    };

    CentralQuotient {
        center_order: center.len(),
        quotient_order: q,
        quotient_abelian: abelian,
        shape,
    }
}

/// `G/N` for a normal subgroup `N` given as sorted indices.
fn quotient_by(group: &FiniteGroup, normal: &[usize]) -> FiniteGroup {
    let n = group.order();
    let mut coset = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for g in 0..n {
        if coset[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        for &z in normal {
            coset[group.multiply(g, z)] = id;
        }
        reps.push(g);
    }
    let identity = coset[group.identity()];
    FiniteGroup::from_fn(
        format!("{}/Z", group.label()),
        reps.len(),
        identity,
        |a, b| coset[group.multiply(reps[a], reps[b])],
    )
}

/// `Some(n)` when the group is dihedral of order `2n` with `n >= 3`.
fn dihedral_degree(group: &FiniteGroup) -> Option<u64> {
    let q = group.order();
    if q < 6 || q % 2 != 0 {
        return None;
    }
    let n = q / 2;
    let rotation = (0..q).find(|&r| group.element_order(r) == n)?;
    // In D_2n with n >= 3 every element of order n is a rotation.
    let in_rotations = {
        let mut inside = vec![false; q];
        let mut x = group.identity();
        for _ in 0..n {
            inside[x] = true;
            x = group.multiply(x, rotation);
        }
        inside
    };
    let r_inv = group.inverse(rotation);
    (0..q)
        .find(|&s| {
            !in_rotations[s]
                && group.multiply(s, s) == group.identity()
                && group.conjugate(rotation, s) == r_inv
        })
        .map(|_| n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_family_group, cyclic_group, direct_product, FamilyInstance};

    fn family(spec: FamilyInstance) -> FiniteGroup {
        build_family_group(&spec).unwrap()
    }

    #[test]
    fn quaternion_quotient_is_klein() {
        let q = detect_central_quotient(&family(FamilyInstance::Dicyclic4n { n: 2 }));
        assert_eq!(q.shape, QuotientShape::ZpXZp { p: 2 });
        assert_eq!(q.center_order, 2);
    }

    #[test]
    fn dicyclic_quotient_is_dihedral() {
        for n in 3..8 {
            let q = detect_central_quotient(&family(FamilyInstance::Dicyclic4n { n }));
            assert_eq!(q.shape, QuotientShape::Dihedral { n }, "T_{}", 4 * n);
            assert_eq!(q.quotient_order as u64, 2 * n);
        }
    }

    #[test]
    fn z3_times_d8() {
        let g = direct_product(&cyclic_group(3), &family(FamilyInstance::Dihedral2n { n: 4 }));
        let q = detect_central_quotient(&g);
        assert_eq!(q.center_order, 6);
        assert_eq!(q.shape, QuotientShape::ZpXZp { p: 2 });
    }

    #[test]
    fn dihedral_quotients() {
        let d16 = detect_central_quotient(&family(FamilyInstance::Dihedral2n { n: 8 }));
        assert_eq!(d16.shape, QuotientShape::Dihedral { n: 4 });
        let d14 = detect_central_quotient(&family(FamilyInstance::Dihedral2n { n: 7 }));
        assert_eq!(d14.shape, QuotientShape::Dihedral { n: 7 });
        let u6n = detect_central_quotient(&family(FamilyInstance::U6n { n: 4 }));
        assert_eq!(u6n.shape, QuotientShape::Dihedral { n: 3 });
        assert_eq!(u6n.center_order, 4);
    }

    #[test]
    fn order_p_cubed_quotient() {
        // Z_3^3 ⋊ Z_3 via a unipotent Jordan block: |Z| = 3, G/Z non-abelian of order 27.
        let g = crate::verify::witness::jordan_semidirect(3);
        let q = detect_central_quotient(&g);
        assert_eq!(q.center_order, 3);
        assert_eq!(q.shape, QuotientShape::OrderPCubed { p: 3 });
        assert!(!q.quotient_abelian);
    }

    #[test]
    fn abelian_group_has_trivial_quotient() {
        let q = detect_central_quotient(&cyclic_group(5));
        assert_eq!(q.quotient_order, 1);
        assert_eq!(q.shape, QuotientShape::Other);
    }
}
