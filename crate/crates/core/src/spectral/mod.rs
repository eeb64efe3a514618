//! Common-neighbourhood matrices, their spectra and energies.
//!
//! The numeric side ([`cn_matrix`], [`eigenvalues_symmetric`], [`spectrum`])
//! works on any simple graph. The exact side ([`complete_union_spectrum`],
//! [`complete_union_energy`]) evaluates the closed forms for disjoint unions
//! of complete graphs.

mod exact;
mod jacobi;
mod spectrum;

use serde::{Deserialize, Serialize};

pub use exact::{
    complete_graph_energy, complete_union_energy, complete_union_spectrum, IntSpectrum,
    IntSpectrumEntry,
};
pub use jacobi::{jacobi_eigenvalues, MAX_SWEEPS};
pub use spectrum::{
    classify, cn_energy, is_integral_value, Classification, EnergyReport, Spectrum, SpectrumEntry,
    BORDER_TOLERANCE, CLUSTER_TOLERANCE, INTEGRALITY_TOLERANCE,
};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// `CN(G)`: entry `(i, j)` counts the vertices other than `i` and `j`
/// adjacent to both; the diagonal is zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl CnMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.size + j]
    }

    /// Builds a matrix from rows, checking symmetry and a zero diagonal.
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<CnMatrix> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidParams(format!("row {i} has {} entries", row.len())));
            }
            entries.extend_from_slice(row);
        }
        let m = CnMatrix { size, entries };
        for i in 0..size {
            if m.get(i, i) != 0 {
                return Err(Error::InvalidParams(format!("diagonal entry {i} is nonzero")));
            }
            for j in i + 1..size {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::InvalidParams(format!("not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(m)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|&x| (x as f64) * (x as f64)).sum::<f64>().sqrt()
    }

    /// `Σ_{i<j} M_ij²`, exact.
    pub fn upper_square_sum(&self) -> u128 {
        let mut s = 0u128;
        for i in 0..self.size {
            for j in i + 1..self.size {
                s += (self.get(i, j) as u128).pow(2);
            }
        }
        s
    }

    /// Connected components of the support graph `{(i, j) : M_ij != 0}`.
    fn support_blocks(&self) -> Vec<Vec<usize>> {
        let n = self.size;
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut block = Vec::new();
            while let Some(u) = stack.pop() {
                block.push(u);
                for v in 0..n {
                    if !seen[v] && self.get(u, v) != 0 {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        blocks
    }
}

pub fn common_neighbourhood(g: &SimpleGraph, i: usize, j: usize) -> Result<usize> {
    if i == j {
        return Err(Error::SameVertex(i));
    }
    Ok(common_count(g, i, j))
}

fn common_count(g: &SimpleGraph, i: usize, j: usize) -> usize {
    // Loops are never stored, so i and j cannot be among their own neighbours.
    g.row(i).iter().zip(g.row(j)).map(|(a, b)| (a & b).count_ones() as usize).sum()
}

/// CN entries for every pair `i != j`, adjacent or not.
pub fn cn_matrix(g: &SimpleGraph) -> CnMatrix {
    let n = g.vertex_count();
    let mut entries = vec![0u32; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let c = common_count(g, i, j) as u32;
            entries[i * n + j] = c;
            entries[j * n + i] = c;
        }
    }
    CnMatrix { size: n, entries }
}

/// All eigenvalues of `M`, ascending.
///
/// `M` is permuted into block-diagonal form along its support; each block
/// goes through [`jacobi_eigenvalues`] separately and isolated indices
/// contribute a zero directly.
pub fn eigenvalues_symmetric(m: &CnMatrix) -> Result<Vec<f64>> {
    let mut values = Vec::with_capacity(m.size);
    for block in m.support_blocks() {
        if block.len() == 1 {
            values.push(0.0);
            continue;
        }
        let k = block.len();
        let mut dense = Vec::with_capacity(k * k);
        for &i in &block {
            dense.extend(block.iter().map(|&j| m.get(i, j) as f64));
        }
        values.extend(jacobi_eigenvalues(dense, k)?);
    }
    values.sort_by(f64::total_cmp);
    Ok(values)
}

/// `cnspec(G)` with tolerance-clustered multiplicities.
pub fn spectrum(g: &SimpleGraph) -> Result<Spectrum> {
    Ok(Spectrum::from_eigenvalues(&eigenvalues_symmetric(&cn_matrix(g))?))
}
