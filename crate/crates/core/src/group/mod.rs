//! Finite groups as indexed element sets with a total multiplication.
//!
//! A [`FiniteGroup`] never stores more than it has to: family groups
//! multiply through their normal-form rule, direct products delegate to
//! their factors, and only groups read from a Cayley table (or built from a
//! closure) keep an `N × N` table.

mod cayley;
mod family;
mod quotient;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use cayley::{load_cayley_table, parse_cayley_table, CayleyOptions, DEFAULT_TABLE_CAP};
pub use family::{FamilyInstance, FamilyKind, NormalForm};
pub use quotient::{detect_central_quotient, CentralQuotient, QuotientShape};

use crate::error::Result;

/// An element in the form its group writes it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupElement {
    Family(NormalForm),
    /// Index into a Cayley table.
    Generic(usize),
    Pair(Box<GroupElement>, Box<GroupElement>),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Family(nf) => nf.fmt(f),
            GroupElement::Generic(i) => write!(f, "g{i}"),
            GroupElement::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}

#[derive(Clone)]
enum Law {
    Family { instance: FamilyInstance, radices: [u64; 3] },
    Table(Arc<Vec<u32>>),
    Product(Arc<FiniteGroup>, Arc<FiniteGroup>),
}

/// A finite group on the indices `0..order`.
///
/// Immutable after construction; clones share the underlying data.
#[derive(Clone)]
pub struct FiniteGroup {
    label: String,
    order: usize,
    identity: usize,
    inverse: Arc<Vec<usize>>,
    law: Law,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

/// A conjugacy class `a^G`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConjClass {
    /// Smallest member index.
    pub representative: usize,
    /// Sorted member indices.
    pub members: Vec<usize>,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }
}

/// Builds the group of a family instance.
pub fn build_family_group(spec: &FamilyInstance) -> Result<FiniteGroup> {
    spec.validate()?;
    let radices = spec.radices();
    let order = radices.iter().product::<u64>() as usize;
    let law = Law::Family { instance: *spec, radices };
    Ok(FiniteGroup::assemble(spec.label(), order, 0, law))
}

/// `G × H` with componentwise multiplication; `(g, h)` has index `g·|H| + h`.
pub fn direct_product(left: &FiniteGroup, right: &FiniteGroup) -> FiniteGroup {
    let order = left.order * right.order;
    let identity = left.identity * right.order + right.identity;
    let label = format!("{} x {}", left.label, right.label);
    let law = Law::Product(Arc::new(left.clone()), Arc::new(right.clone()));
    FiniteGroup::assemble(label, order, identity, law)
}

/// The cyclic group `Z_k` (additive, index = residue).
pub fn cyclic_group(k: usize) -> FiniteGroup {
    assert!(k >= 1, "cyclic group needs k >= 1");
    FiniteGroup::from_fn(format!("Z_{k}"), k, 0, |a, b| (a + b) % k)
}

impl FiniteGroup {
    /// Tabulates a group from a multiplication closure.
    ///
    /// The closure is trusted; use [`parse_cayley_table`] for untrusted input.
    pub fn from_fn(
        label: impl Into<String>,
        order: usize,
        identity: usize,
        mul: impl Fn(usize, usize) -> usize + Sync,
    ) -> FiniteGroup {
        use rayon::prelude::*;
        let table: Vec<u32> = (0..order * order)
            .into_par_iter()
            .map(|k| mul(k / order, k % order) as u32)
            .collect();
        FiniteGroup::assemble(label.into(), order, identity, Law::Table(Arc::new(table)))
    }

    pub(crate) fn from_table(label: String, order: usize, table: Vec<u32>) -> FiniteGroup {
        FiniteGroup::assemble(label, order, 0, Law::Table(Arc::new(table)))
    }

    fn assemble(label: String, order: usize, identity: usize, law: Law) -> FiniteGroup {
        let mut group = FiniteGroup {
            label,
            order,
            identity,
            inverse: Arc::new(Vec::new()),
            law,
        };
        let inverse = match &group.law {
            Law::Product(l, r) => (0..order)
                .map(|i| l.inverse(i / r.order) * r.order + r.inverse(i % r.order))
                .collect(),
            _ => {
                use rayon::prelude::*;
                (0..order)
                    .into_par_iter()
                    .map(|a| {
                        (0..order)
                            .find(|&b| group.multiply(a, b) == identity)
                            .expect("every element of a group has an inverse")
                    })
                    .collect()
            }
        };
        group.inverse = Arc::new(inverse);
        group
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> FiniteGroup {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn family(&self) -> Option<&FamilyInstance> {
        match &self.law {
            Law::Family { instance, .. } => Some(instance),
            _ => None,
        }
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.law {
            Law::Family { instance, radices } => {
                let u = decode(a, radices);
                let v = decode(b, radices);
                encode(&instance.multiply(radices, &u, &v), radices)
            }
            Law::Table(t) => t[a * self.order + b] as usize,
            Law::Product(l, r) => {
                let (a1, a2) = (a / r.order, a % r.order);
                let (b1, b2) = (b / r.order, b % r.order);
                l.multiply(a1, b1) * r.order + r.multiply(a2, b2)
            }
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g a g^-1`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.multiply(self.multiply(g, a), self.inverse(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.multiply(a, b) == self.multiply(b, a)
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut base = a;
        let mut acc = self.identity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.multiply(acc, base);
            }
            base = self.multiply(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.multiply(x, a);
            k += 1;
        }
        k
    }

    pub fn element(&self, i: usize) -> GroupElement {
        match &self.law {
            Law::Family { instance, radices } => GroupElement::Family(NormalForm {
                family: instance.kind(),
                exponents: decode(i, radices),
            }),
            Law::Table(_) => GroupElement::Generic(i),
            Law::Product(l, r) => GroupElement::Pair(
                Box::new(l.element(i / r.order)),
                Box::new(r.element(i % r.order)),
            ),
        }
    }

    /// Index of a family element given its exponents (reduced modulo the radices).
    pub fn index_of_exponents(&self, exponents: [u64; 3]) -> Option<usize> {
        match &self.law {
            Law::Family { radices, .. } => {
                let reduced = [
                    exponents[0] % radices[0],
                    exponents[1] % radices[1],
                    exponents[2] % radices[2],
                ];
                Some(encode(&reduced, radices))
            }
            _ => None,
        }
    }

    /// The generators `x` and `y` of a family group.
    pub fn family_generators(&self) -> Option<(usize, usize)> {
        let (x, y) = self.family()?.generator_digits();
        Some((self.index_of_exponents(x)?, self.index_of_exponents(y)?))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Elements commuting with every element, ascending.
    pub fn center(&self) -> Vec<usize> {
        use rayon::prelude::*;
        (0..self.order)
            .into_par_iter()
            .filter(|&a| (0..self.order).all(|g| self.commute(a, g)))
            .collect()
    }

    /// All conjugacy classes, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjClass> {
        let mut assigned = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if assigned[a] {
                continue;
            }
            let mut members: Vec<usize> = (0..self.order).map(|g| self.conjugate(a, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                assigned[m] = true;
            }
            classes.push(ConjClass { representative: a, members });
        }
        classes
    }

    /// Conjugacy classes of non-central elements (size > 1), ordered by smallest member.
    pub fn noncentral_classes(&self) -> Vec<ConjClass> {
        self.conjugacy_classes().into_iter().filter(|c| c.size() > 1).collect()
    }

    /// Checks associativity, identity and inverses exhaustively.
    pub fn check_axioms(&self) -> std::result::Result<(), crate::error::AxiomViolation> {
        use crate::error::AxiomViolation;
        use rayon::prelude::*;
        let n = self.order;
        for a in 0..n {
            if self.multiply(self.identity, a) != a || self.multiply(a, self.identity) != a {
                return Err(AxiomViolation::Identity { a });
            }
            if self.multiply(a, self.inverse(a)) != self.identity {
                return Err(AxiomViolation::Inverse { a });
            }
        }
        let bad = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = self.multiply(a, b);
                for c in 0..n {
                    if self.multiply(ab, c) != self.multiply(a, self.multiply(b, c)) {
                        return Some(AxiomViolation::Associativity { a, b, c });
                    }
                }
            }
            None
        });
        bad.map_or(Ok(()), Err)
    }
}

fn decode(i: usize, radices: &[u64; 3]) -> [u64; 3] {
    let i = i as u64;
    let c = i % radices[2];
    let rest = i / radices[2];
    [rest / radices[1], rest % radices[1], c]
}

fn encode(d: &[u64; 3], radices: &[u64; 3]) -> usize {
    ((d[0] * radices[1] + d[1]) * radices[2] + d[2]) as usize
}
