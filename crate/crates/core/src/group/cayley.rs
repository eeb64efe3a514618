//! Plain-text Cayley tables.
//!
//! ```text
//! # S_3
//! 6
//! 0 1 2 3 4 5
//! ...
//! ```
//!
//! The first non-comment line is `N`; the next `N` lines hold row `g` as the
//! products `g·h` for `h = 0..N`. Index 0 must be the identity. Anything
//! after a `#` is ignored.

use std::path::Path;

use super::FiniteGroup;
use crate::error::{AxiomViolation, Error, Result};

pub const DEFAULT_TABLE_CAP: usize = 2048;

#[derive(Debug, Clone)]
pub struct CayleyOptions {
    /// Tables with more rows than this are rejected before validation.
    pub max_order: usize,
    pub label: String,
}

impl Default for CayleyOptions {
    fn default() -> Self {
        CayleyOptions { max_order: DEFAULT_TABLE_CAP, label: "cayley".to_string() }
    }
}

pub fn load_cayley_table(path: impl AsRef<Path>, options: &CayleyOptions) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path.as_ref())?;
    parse_cayley_table(&text, options)
}

pub fn parse_cayley_table(text: &str, options: &CayleyOptions) -> Result<FiniteGroup> {
    let mut lines = text.lines().enumerate().filter_map(|(no, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((no + 1, body))
    });

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing order line".to_string(),
    })?;
    let order: usize = header.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected the table order, found '{header}'"),
    })?;
    if order == 0 {
        return Err(Error::Parse { line, message: "order must be positive".to_string() });
    }
    if order > options.max_order {
        return Err(Error::TableTooLarge { order, cap: options.max_order });
    }

    let mut table = Vec::with_capacity(order * order);
    for row in 0..order {
        let (line, body) = lines.next().ok_or(Error::Parse {
            line: line + row + 1,
            message: format!("expected {order} rows, found {row}"),
        })?;
        let before = table.len();
        for token in body.split_whitespace() {
            let v: usize = token.parse().map_err(|_| Error::Parse {
                line,
                message: format!("'{token}' is not an index"),
            })?;
            if v >= order {
                return Err(Error::Parse {
                    line,
                    message: format!("index {v} out of range for order {order}"),
                });
            }
            table.push(v as u32);
        }
        let got = table.len() - before;
        if got != order {
            return Err(Error::Parse {
                line,
                message: format!("row {row} has {got} entries, expected {order}"),
            });
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::Parse { line, message: "trailing data after the table".to_string() });
    }

    validate_table(&table, order)?;
    Ok(FiniteGroup::from_table(options.label.clone(), order, table))
}

/// Exhaustive axiom check on a raw table, run before any inverse lookup.
fn validate_table(table: &[u32], n: usize) -> Result<()> {
    use rayon::prelude::*;
    let at = |a: usize, b: usize| table[a * n + b] as usize;
    for a in 0..n {
        if at(0, a) != a || at(a, 0) != a {
            return Err(Error::NotAGroup(AxiomViolation::Identity { a }));
        }
        if !(0..n).any(|b| at(a, b) == 0) {
            return Err(Error::NotAGroup(AxiomViolation::Inverse { a }));
        }
    }
    let bad = (0..n).into_par_iter().find_map_first(|a| {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Some(AxiomViolation::Associativity { a, b, c });
                }
            }
        }
        None
    });
    match bad {
        Some(v) => Err(Error::NotAGroup(v)),
        None => Ok(()),
    }
}
