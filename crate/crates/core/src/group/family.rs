//! The two-generator families and their normal forms.
//!
//! Every element of a family group is written `x^a y^b` (plus a central
//! `z^c` for [`FamilyInstance::Gpmn`]) with each exponent reduced modulo a
//! fixed radix. Elements are indexed by the mixed-radix value of their
//! exponent tuple, so index order is lexicographic normal-form order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Dihedral2n,
    Dicyclic4n,
    Semidihedral8n,
    Unm,
    U6n,
    V8n,
    Gpmn,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Dihedral2n,
        FamilyKind::Dicyclic4n,
        FamilyKind::Semidihedral8n,
        FamilyKind::Unm,
        FamilyKind::U6n,
        FamilyKind::V8n,
        FamilyKind::Gpmn,
    ];

    /// Accepts the CLI names (`dihedral`, `dicyclic`, ...) and a few aliases.
    pub fn parse(name: &str) -> Result<Self> {
        let kind = match name.to_ascii_lowercase().as_str() {
            "dihedral" | "d2n" | "dihedral2n" => FamilyKind::Dihedral2n,
            "dicyclic" | "t4n" | "dicyclic4n" | "quaternion" => FamilyKind::Dicyclic4n,
            "semidihedral" | "sd8n" | "semidihedral8n" => FamilyKind::Semidihedral8n,
            "unm" | "u" => FamilyKind::Unm,
            "u6n" => FamilyKind::U6n,
            "v8n" | "v" => FamilyKind::V8n,
            "gpmn" | "g" => FamilyKind::Gpmn,
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        Ok(kind)
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Dihedral2n => "dihedral",
            FamilyKind::Dicyclic4n => "dicyclic",
            FamilyKind::Semidihedral8n => "semidihedral",
            FamilyKind::Unm => "unm",
            FamilyKind::U6n => "u6n",
            FamilyKind::V8n => "v8n",
            FamilyKind::Gpmn => "gpmn",
        }
    }

    /// Parameter names in the order [`FamilyInstance::from_params`] expects.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            FamilyKind::Unm => &["n", "m"],
            FamilyKind::Gpmn => &["p", "m", "n"],
            _ => &["n"],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A member of one of the constructible families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyInstance {
    /// `D_2n = <x, y : x^n = y^2 = 1, y x y^-1 = x^-1>`, order `2n`.
    Dihedral2n { n: u64 },
    /// `T_4n = <x, y : x^2n = 1, x^n = y^2, y^-1 x y = x^-1>`, order `4n`.
    Dicyclic4n { n: u64 },
    /// `SD_8n = <x, y : x^4n = y^2 = 1, y x y = x^(2n-1)>`, order `8n`.
    Semidihedral8n { n: u64 },
    /// `U_(n,m) = <x, y : x^2n = y^m = 1, x^-1 y x = y^-1>`, order `2nm`.
    Unm { n: u64, m: u64 },
    /// `U_6n = U_(n,3)`.
    U6n { n: u64 },
    /// `V_8n = <x, y : x^2n = y^4 = 1, y x = x^-1 y^-1, y^-1 x = x^-1 y>`, order `8n`.
    V8n { n: u64 },
    /// `G(p,m,n) = <x, y : x^(p^m) = y^(p^n) = [x,y]^p = 1, [x,y] central>`,
    /// order `p^(m+n+1)`.
    Gpmn { p: u64, m: u64, n: u64 },
}

impl FamilyInstance {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyInstance::Dihedral2n { .. } => FamilyKind::Dihedral2n,
            FamilyInstance::Dicyclic4n { .. } => FamilyKind::Dicyclic4n,
            FamilyInstance::Semidihedral8n { .. } => FamilyKind::Semidihedral8n,
            FamilyInstance::Unm { .. } => FamilyKind::Unm,
            FamilyInstance::U6n { .. } => FamilyKind::U6n,
            FamilyInstance::V8n { .. } => FamilyKind::V8n,
            FamilyInstance::Gpmn { .. } => FamilyKind::Gpmn,
        }
    }

    /// Builds an instance from positional parameters (see [`FamilyKind::param_names`]).
    pub fn from_params(kind: FamilyKind, params: &[u64]) -> Result<Self> {
        let want = kind.param_names().len();
        if params.len() != want {
            return Err(Error::InvalidParams(format!(
                "{kind} takes {want} parameter(s), got {}",
                params.len()
            )));
        }
        let inst = match kind {
            FamilyKind::Dihedral2n => FamilyInstance::Dihedral2n { n: params[0] },
            FamilyKind::Dicyclic4n => FamilyInstance::Dicyclic4n { n: params[0] },
            FamilyKind::Semidihedral8n => FamilyInstance::Semidihedral8n { n: params[0] },
            FamilyKind::Unm => FamilyInstance::Unm { n: params[0], m: params[1] },
            FamilyKind::U6n => FamilyInstance::U6n { n: params[0] },
            FamilyKind::V8n => FamilyInstance::V8n { n: params[0] },
            FamilyKind::Gpmn => FamilyInstance::Gpmn { p: params[0], m: params[1], n: params[2] },
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            FamilyInstance::Dihedral2n { n }
            | FamilyInstance::Dicyclic4n { n }
            | FamilyInstance::Semidihedral8n { n }
            | FamilyInstance::U6n { n }
            | FamilyInstance::V8n { n } => vec![("n", n)],
            FamilyInstance::Unm { n, m } => vec![("n", n), ("m", m)],
            FamilyInstance::Gpmn { p, m, n } => vec![("p", p), ("m", m), ("n", n)],
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            FamilyInstance::Dihedral2n { n } if n < 3 => fail(format!("D_2n needs n >= 3, got {n}")),
            FamilyInstance::Dicyclic4n { n } if n < 2 => fail(format!("T_4n needs n >= 2, got {n}")),
            FamilyInstance::Semidihedral8n { n } if n < 2 => {
                fail(format!("SD_8n needs n >= 2, got {n}"))
            }
            FamilyInstance::Unm { n, m } if n < 2 || m < 3 => {
                fail(format!("U_(n,m) needs n >= 2 and m >= 3, got n = {n}, m = {m}"))
            }
            FamilyInstance::U6n { n } if n < 2 => fail(format!("U_6n needs n >= 2, got {n}")),
            FamilyInstance::V8n { n } if n < 2 => fail(format!("V_8n needs n >= 2, got {n}")),
            FamilyInstance::Gpmn { p, m, n } => {
                if !is_prime(p) {
                    fail(format!("G(p,m,n) needs p prime, got {p}"))
                } else if n < 1 || m < n {
                    fail(format!("G(p,m,n) needs m >= n >= 1, got m = {m}, n = {n}"))
                } else if self.theoretical_order().is_none() {
                    fail(format!("G({p},{m},{n}) is too large to enumerate"))
                } else {
                    Ok(())
                }
            }
            _ => match self.theoretical_order() {
                Some(_) => Ok(()),
                None => fail(format!("{self} is too large to enumerate")),
            },
        }
    }

    /// `2n, 4n, 8n, 2nm, 6n, 8n, p^(m+n+1)`; `None` on overflow.
    pub fn theoretical_order(&self) -> Option<u64> {
        match *self {
            FamilyInstance::Dihedral2n { n } => n.checked_mul(2),
            FamilyInstance::Dicyclic4n { n } => n.checked_mul(4),
            FamilyInstance::Semidihedral8n { n } | FamilyInstance::V8n { n } => n.checked_mul(8),
            FamilyInstance::Unm { n, m } => n.checked_mul(m)?.checked_mul(2),
            FamilyInstance::U6n { n } => n.checked_mul(6),
            FamilyInstance::Gpmn { p, m, n } => {
                let e = u32::try_from(m.checked_add(n)?.checked_add(1)?).ok()?;
                p.checked_pow(e)
            }
        }
    }

    /// Exponent radices of the normal form, most significant first.
    /// Unused trailing radices are 1.
    pub(crate) fn radices(&self) -> [u64; 3] {
        match *self {
            FamilyInstance::Dihedral2n { n } => [n, 2, 1],
            FamilyInstance::Dicyclic4n { n } => [2 * n, 2, 1],
            FamilyInstance::Semidihedral8n { n } => [4 * n, 2, 1],
            FamilyInstance::Unm { n, m } => [2 * n, m, 1],
            FamilyInstance::U6n { n } => [2 * n, 3, 1],
            FamilyInstance::V8n { n } => [2 * n, 4, 1],
            FamilyInstance::Gpmn { p, m, n } => [p.pow(m as u32), p.pow(n as u32), p],
        }
    }

    /// Normal form of `u · v`.
    pub(crate) fn multiply(&self, radices: &[u64; 3], u: &[u64; 3], v: &[u64; 3]) -> [u64; 3] {
        let (a, b) = (u[0], u[1]);
        let (a2, b2) = (v[0], v[1]);
        match *self {
            FamilyInstance::Dihedral2n { n } => {
                // y x^a' = x^-a' y
                let a2 = if b == 1 { n - a2 } else { a2 };
                [(a + a2) % n, (b + b2) % 2, 0]
            }
            FamilyInstance::Dicyclic4n { n } => {
                // y x^a' = x^-a' y and y^2 = x^n
                let r = 2 * n;
                let a2 = if b == 1 { r - a2 } else { a2 };
                let carry = if b == 1 && b2 == 1 { n } else { 0 };
                [(a + a2 + carry) % r, (b + b2) % 2, 0]
            }
            FamilyInstance::Semidihedral8n { n } => {
                // y x^a' y = x^((2n-1)a')
                let r = 4 * n;
                let a2 = if b == 1 { ((2 * n - 1) * a2) % r } else { a2 };
                [(a + a2) % r, (b + b2) % 2, 0]
            }
            FamilyInstance::Unm { n, m } => unm_multiply(n, u, v, m),
            FamilyInstance::U6n { n } => unm_multiply(n, u, v, 3),
            FamilyInstance::V8n { n } => {
                // y x^a = x^-a y^(2a+1), and y^2 is central
                let r = 2 * n;
                let odd = b % 2 == 1;
                let a_next = if odd { (a + r - a2) % r } else { (a + a2) % r };
                let shift = if odd { (2 * a2) % 4 } else { 0 };
                [a_next, (b + b2 + shift) % 4, 0]
            }
            FamilyInstance::Gpmn { p, .. } => {
                // z = x^-1 y^-1 x y is central, so y^b x^a' = x^a' y^b z^(-b a')
                let c = u[2];
                let c2 = v[2];
                let cross = ((b % p) * (a2 % p)) % p;
                [
                    (a + a2) % radices[0],
                    (b + b2) % radices[1],
                    (c + c2 + p - cross) % p,
                ]
            }
        }
    }

    /// Exponent tuples of the generators `x` and `y`.
    pub(crate) fn generator_digits(&self) -> ([u64; 3], [u64; 3]) {
        ([1, 0, 0], [0, 1, 0])
    }

    pub fn label(&self) -> String {
        match *self {
            FamilyInstance::Dihedral2n { n } => format!("D_{}", 2 * n),
            FamilyInstance::Dicyclic4n { n } => format!("T_{}", 4 * n),
            FamilyInstance::Semidihedral8n { n } => format!("SD_{}", 8 * n),
            FamilyInstance::Unm { n, m } => format!("U_({n},{m})"),
            FamilyInstance::U6n { n } => format!("U_{}", 6 * n),
            FamilyInstance::V8n { n } => format!("V_{}", 8 * n),
            FamilyInstance::Gpmn { p, m, n } => format!("G({p},{m},{n})"),
        }
    }
}

fn unm_multiply(n: u64, u: &[u64; 3], v: &[u64; 3], m: u64) -> [u64; 3] {
    // y^b x^a' = x^a' y^((-1)^a' b)
    let (a, b) = (u[0], u[1]);
    let (a2, b2) = (v[0], v[1]);
    let b = if a2 % 2 == 1 { (m - b) % m } else { b };
    [(a + a2) % (2 * n), (b + b2) % m, 0]
}

impl fmt::Display for FamilyInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A family element in normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    pub family: FamilyKind,
    /// Exponents of `x`, `y` and (for `G(p,m,n)`) `z = [x, y]`.
    pub exponents: [u64; 3],
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.exponents;
        let mut parts = Vec::new();
        for (sym, e) in [("x", a), ("y", b), ("z", c)] {
            match e {
                0 => {}
                1 => parts.push(sym.to_string()),
                _ => parts.push(format!("{sym}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}
