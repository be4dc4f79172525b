//! The normalized Laplacian `ℒ = I − D^{-1/2} A D^{-1/2}`.
//!
//! [`LaplacianOperator`] applies `ℒ` matrix-free in one pass over the
//! adjacency; [`dense_matrix`] materializes it for small graphs.
//!
//! Isolated vertices get `D^{-1/2} = 0`, so their row of `ℒ` is the identity
//! row and each contributes an eigenvalue of exactly 1.

use faer::Mat;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Weighted degree of every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct DegreeVector(Vec<f64>);

impl DegreeVector {
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Deref for DegreeVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

pub fn degrees(g: &Graph) -> DegreeVector {
    DegreeVector(
        (0..g.n())
            .map(|v| g.neighbors(v).map(|(_, w)| w).sum())
            .collect(),
    )
}

/// Matrix-free normalized Laplacian of a borrowed graph.
#[derive(Debug, Clone)]
pub struct LaplacianOperator<'g> {
    graph: &'g Graph,
    inv_sqrt_deg: Vec<f64>,
}

impl<'g> LaplacianOperator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let inv_sqrt_deg = degrees(graph)
            .iter()
            .map(|&d| if d > 0.0 { 1.0 / d.sqrt() } else { 0.0 })
            .collect();
        LaplacianOperator {
            graph,
            inv_sqrt_deg,
        }
    }

    /// Order of the operator.
    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn inv_sqrt_degrees(&self) -> &[f64] {
        &self.inv_sqrt_deg
    }

    /// Returns `ℒx`.
    pub fn apply(&self, x: &[f64]) -> Result<Vec<f64>> {
        let mut out = vec![0.0; self.n()];
        self.apply_into(x, &mut out)?;
        Ok(out)
    }

    /// Writes `ℒx` into `out`.
    pub fn apply_into(&self, x: &[f64], out: &mut [f64]) -> Result<()> {
        let n = self.n();
        for len in [x.len(), out.len()] {
            if len != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: len,
                });
            }
        }
        let (offsets, targets, weights) = self.graph.raw_parts();
        let s = &self.inv_sqrt_deg;
        for i in 0..n {
            let range = offsets[i]..offsets[i + 1];
            let acc: f64 = targets[range.clone()]
                .iter()
                .zip(&weights[range])
                .map(|(&j, &w)| w * s[j] * x[j])
                .sum();
            out[i] = x[i] - s[i] * acc;
        }
        Ok(())
    }

    /// `⟨x, ℒx⟩ / ⟨x, x⟩`.
    pub fn rayleigh_quotient(&self, x: &[f64]) -> Result<f64> {
        let lx = self.apply(x)?;
        let num: f64 = x.iter().zip(&lx).map(|(a, b)| a * b).sum();
        let den: f64 = x.iter().map(|a| a * a).sum();
        Ok(num / den)
    }
}

/// Explicit `n × n` normalized Laplacian. Refuses graphs above `threshold`
/// vertices.
pub fn dense_matrix(g: &Graph, threshold: usize) -> Result<Mat<f64>> {
    let n = g.n();
    if n > threshold {
        return Err(Error::DenseThresholdExceeded { n, threshold });
    }
    let op = LaplacianOperator::new(g);
    let s = op.inv_sqrt_degrees();
    let mut m = Mat::<f64>::identity(n, n);
    for (u, v, w) in g.edges() {
        let value = -w * s[u] * s[v];
        m[(u, v)] = value;
        m[(v, u)] = value;
    }
    Ok(m)
}
