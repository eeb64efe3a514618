use std::fmt;

use serde::{Deserialize, Serialize};

/// `copies` disjoint copies of the complete graph on `size` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShapePart {
    pub copies: u64,
    pub size: u64,
}

/// A disjoint union `l_1 K_{m_1} ∪ l_2 K_{m_2} ∪ ...` in canonical form:
/// sizes strictly descending, no empty parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<ShapePart>", into = "Vec<ShapePart>")]
pub struct CompleteUnionShape {
    parts: Vec<ShapePart>,
}

impl CompleteUnionShape {
    /// Canonicalizes `(copies, size)` pairs: drops empty parts and merges equal sizes.
    pub fn from_parts(parts: impl IntoIterator<Item = (u64, u64)>) -> CompleteUnionShape {
        let mut merged: Vec<ShapePart> = Vec::new();
        for (copies, size) in parts {
            if copies == 0 || size == 0 {
                continue;
            }
            match merged.iter_mut().find(|p| p.size == size) {
                Some(p) => p.copies += copies,
                None => merged.push(ShapePart { copies, size }),
            }
        }
        merged.sort_by(|a, b| b.size.cmp(&a.size));
        CompleteUnionShape { parts: merged }
    }

    /// Shape of a graph whose components are cliques of the given sizes.
    pub fn from_component_sizes(sizes: impl IntoIterator<Item = u64>) -> CompleteUnionShape {
        CompleteUnionShape::from_parts(sizes.into_iter().map(|s| (1, s)))
    }

    pub fn parts(&self) -> &[ShapePart] {
        &self.parts
    }

    pub fn vertex_count(&self) -> u64 {
        self.parts.iter().map(|p| p.copies * p.size).sum()
    }

    pub fn component_count(&self) -> u64 {
        self.parts.iter().map(|p| p.copies).sum()
    }

    /// Component sizes, largest first, one entry per copy.
    pub fn component_sizes(&self) -> impl Iterator<Item = u64> + '_ {
        self.parts
            .iter()
            .flat_map(|p| std::iter::repeat(p.size).take(p.copies as usize))
    }
}

impl From<CompleteUnionShape> for Vec<ShapePart> {
    fn from(shape: CompleteUnionShape) -> Self {
        shape.parts
    }
}

impl TryFrom<Vec<ShapePart>> for CompleteUnionShape {
    type Error = String;

    fn try_from(parts: Vec<ShapePart>) -> Result<Self, Self::Error> {
        let shape = CompleteUnionShape::from_parts(parts.iter().map(|p| (p.copies, p.size)));
        if shape.parts == parts {
            Ok(shape)
        } else {
            Err("shape parts are not in canonical order".to_string())
        }
    }
}

impl fmt::Display for CompleteUnionShape {
    /// `K_4 ∪ 2K_2`; the empty graph renders as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("∅");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            if p.copies > 1 {
                write!(f, "{}", p.copies)?;
            }
            write!(f, "K_{}", p.size)?;
        }
        Ok(())
    }
}
