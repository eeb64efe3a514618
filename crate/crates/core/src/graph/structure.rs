use super::CompleteUnionShape;
use crate::error::Result;
use crate::group::FamilyInstance;

/// The clique-union structure of `Γ(G)` as the literature states it for each family.
///
/// The structures are reproduced as stated. Brute force disagrees with them
/// for `U_(n,m)` with `m ≡ 2 (mod 4)` and for `G(p,m,n)` with `n ≥ 2`; the
/// verifier reports those points rather than this function papering over them.
pub fn predicted_structure(spec: &FamilyInstance) -> Result<CompleteUnionShape> {
    spec.validate()?;
    let parts: Vec<(u64, u64)> = match *spec {
        FamilyInstance::Dihedral2n { n } => {
            if n % 2 == 1 {
                vec![(1, (n - 1) / 2), (1, 1)]
            } else if (n / 2) % 2 == 0 {
                vec![(1, n / 2 - 1), (2, 1)]
            } else {
                vec![(1, n / 2 - 1), (1, 2)]
            }
        }
        FamilyInstance::Dicyclic4n { n } => {
            if n % 2 == 0 {
                vec![(1, n - 1), (2, 1)]
            } else {
                vec![(1, n - 1), (1, 2)]
            }
        }
        FamilyInstance::Semidihedral8n { n } => {
            if n % 2 == 0 {
                vec![(1, 2 * n - 1), (2, 1)]
            } else {
                vec![(1, 2 * n - 2), (1, 4)]
            }
        }
        FamilyInstance::Unm { n, m } => unm_parts(n, m),
        FamilyInstance::U6n { n } => unm_parts(n, 3),
        FamilyInstance::V8n { n } => {
            if n % 2 == 0 {
                vec![(1, 2 * n - 2), (2, 2)]
            } else {
                vec![(1, 2 * n - 1), (2, 1)]
            }
        }
        FamilyInstance::Gpmn { p, m, n } => {
            // validate() guarantees p^(m+n+1) fits in a u64.
            let pow = |e: u64| p.pow(e as u32);
            let dn = pow(n) - pow(n - 1);
            let dm = pow(m) - pow(m - 1);
            vec![(1, pow(m - 1) * dn), (1, pow(n - 1) * dm), (dn, pow(m - n) * dn)]
        }
    };
    Ok(CompleteUnionShape::from_parts(parts))
}

fn unm_parts(n: u64, m: u64) -> Vec<(u64, u64)> {
    if m % 2 == 0 {
        vec![(2, n), (1, n * (m / 2 - 1))]
    } else {
        vec![(1, n), (1, n * (m - 1) / 2)]
    }
}
