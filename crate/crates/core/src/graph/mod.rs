//! The commuting conjugacy class graph and its clique-union structure.

mod dot;
mod shape;
mod structure;

use rayon::prelude::*;

pub use dot::to_dot;
pub use shape::{CompleteUnionShape, ShapePart};
pub use structure::predicted_structure;

use crate::error::{Error, Result};
use crate::group::{ConjClass, FiniteGroup};

/// Simple undirected graph with bitset adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> SimpleGraph {
        let words = n.div_ceil(64).max(1);
        SimpleGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> SimpleGraph {
        let mut g = SimpleGraph::empty(n);
        for u in 1..n {
            g.add_edge(u - 1, u);
        }
        g
    }

    /// Lays the shape out with components in canonical order (largest first).
    pub fn from_shape(shape: &CompleteUnionShape) -> SimpleGraph {
        let mut g = SimpleGraph::empty(shape.vertex_count() as usize);
        let mut start = 0usize;
        for size in shape.component_sizes() {
            let size = size as usize;
            for u in start..start + size {
                for v in u + 1..start + size {
                    g.add_edge(u, v);
                }
            }
            start += size;
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Adds `{u, v}`; self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for v in self.neighbours(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// `Γ(G)`: vertices are the non-central conjugacy classes of `G`.
#[derive(Debug, Clone)]
pub struct CccGraph {
    pub group_label: String,
    pub vertices: Vec<ConjClass>,
    /// Normal form of each vertex's representative.
    pub labels: Vec<String>,
    pub graph: SimpleGraph,
}

impl CccGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

/// Whether some member of `a` commutes with some member of `b`.
///
/// If `g x g^-1` commutes with `y` then `x` commutes with `g^-1 y g`, which
/// lies in the class of `y`; so fixing `x = rep(a)` and scanning `b` suffices.
pub fn classes_commute(a: &ConjClass, b: &ConjClass, group: &FiniteGroup) -> Result<bool> {
    if a.representative == b.representative {
        return Err(Error::SameVertex(a.representative));
    }
    let x = a.representative;
    Ok(b.members.iter().any(|&y| group.commute(x, y)))
}

pub fn ccc_graph(group: &FiniteGroup) -> Result<CccGraph> {
    let vertices = group.noncentral_classes();
    if vertices.is_empty() {
        return Err(Error::AbelianGroup(group.label().to_string()));
    }
    let k = vertices.len();
    let edges: Vec<(usize, usize)> = (0..k)
        .into_par_iter()
        .flat_map_iter(|i| {
            let vertices = &vertices;
            (i + 1..k).filter_map(move |j| {
                classes_commute(&vertices[i], &vertices[j], group)
                    .expect("distinct classes")
                    .then_some((i, j))
            })
        })
        .collect();
    let mut graph = SimpleGraph::empty(k);
    for (i, j) in edges {
        graph.add_edge(i, j);
    }
    let labels = vertices.iter().map(|c| group.element(c.representative).to_string()).collect();
    Ok(CccGraph { group_label: group.label().to_string(), vertices, labels, graph })
}

pub fn components(graph: &SimpleGraph) -> Vec<Vec<usize>> {
    graph.components()
}

/// Certifies that every component is a clique and returns the canonical shape.
pub fn recognize_complete_union(graph: &SimpleGraph) -> Result<CompleteUnionShape> {
    let comps = graph.components();
    for comp in &comps {
        for (i, &u) in comp.iter().enumerate() {
            if let Some(&v) = comp[i + 1..].iter().find(|&&v| !graph.has_edge(u, v)) {
                return Err(Error::NotCompleteUnion { u, v });
            }
        }
    }
    Ok(CompleteUnionShape::from_component_sizes(comps.iter().map(|c| c.len() as u64)))
}
