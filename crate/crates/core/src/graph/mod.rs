//! Canonical simple undirected graphs, parsers and fixture generators.
//!
//! Every [`Graph`] is built through [`GraphBuilder`], which drops self-loops,
//! merges duplicate edges (summing weights of weighted graphs; unweighted
//! graphs keep weight 1) and stores the symmetric
//! adjacency in compressed sparse row form. Once built a graph is immutable.

mod components;
mod generators;
mod parse;

pub use components::{connected_components, largest_connected_component, ComponentDecomposition};
pub use generators::{generate_complete, generate_cycle, generate_lattice, permute_vertices};
pub use parse::{
    parse_edge_list, parse_matrix_market, IndexBase, ParseDiagnostics, ParseOptions, Parsed,
};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Immutable sparse undirected graph in compressed adjacency form.
///
/// Vertices are `0..n`. Each undirected edge `{u, v}` is stored twice, once
/// in the row of `u` and once in the row of `v`, with equal weights.
/// Neighbour lists are sorted by vertex index.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    weighted: bool,
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Whether edge weights were supplied explicitly. Unweighted graphs
    /// report a weight of 1 for every edge.
    pub fn is_weighted(&self) -> bool {
        self.weighted
    }

    /// Original vertex identifiers, when the graph came from a file or was
    /// extracted as a subgraph.
    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Label of vertex `v`, falling back to the index itself.
    pub fn label(&self, v: usize) -> u64 {
        self.labels.as_ref().map_or(v as u64, |l| l[v])
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    /// Number of neighbours of `v` (unweighted degree).
    pub fn neighbor_count(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Edges `(u, v, w)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&(v, _)| u < v)
                .map(move |(v, w)| (u, v, w))
        })
    }

    pub(crate) fn raw_parts(&self) -> (&[usize], &[usize], &[f64]) {
        (&self.offsets, &self.targets, &self.weights)
    }

    /// Returns a copy of this graph with every weight multiplied by `factor`.
    pub fn scale_weights(&self, factor: f64) -> Result<Graph> {
        if !(factor.is_finite() && factor > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "weight scale factor must be positive and finite, got {factor}"
            )));
        }
        let mut g = self.clone();
        g.weights.iter_mut().for_each(|w| *w *= factor);
        g.weighted = true;
        Ok(g)
    }

    pub(crate) fn with_labels(mut self, labels: Option<Vec<u64>>) -> Graph {
        debug_assert!(labels.as_ref().map_or(true, |l| l.len() == self.n()));
        self.labels = labels;
        self
    }

    /// Canonical serialization: one `u v w` line per edge with `u < v`,
    /// sorted, 0-indexed.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.edge_count() * 12);
        for (u, v, w) in self.edges() {
            let _ = writeln!(out, "{u} {v} {w}");
        }
        out
    }
}

/// Counts of input edges discarded while canonicalizing.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
}

/// Accumulates edges and produces a canonical [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    weighted: bool,
    edges: BTreeMap<(usize, usize), f64>,
    stats: BuildStats,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            weighted: false,
            edges: BTreeMap::new(),
            stats: BuildStats::default(),
        }
    }

    pub fn weighted(mut self, weighted: bool) -> Self {
        self.weighted = weighted;
        self
    }

    /// Adds an undirected edge. Self-loops are dropped. A repeated edge has
    /// its weight summed in a weighted builder; an unweighted builder
    /// ignores `w` beyond validating it and keeps every weight at 1.
    pub fn add_edge(&mut self, u: usize, v: usize, w: f64) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if !(w.is_finite() && w > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) has non-positive weight {w}"
            )));
        }
        if u == v {
            self.stats.self_loops_dropped += 1;
            return Ok(());
        }
        let w = if self.weighted { w } else { 1.0 };
        let key = (u.min(v), u.max(v));
        match self.edges.get_mut(&key) {
            Some(existing) => {
                if self.weighted {
                    *existing += w;
                }
                self.stats.duplicates_merged += 1;
            }
            None => {
                self.edges.insert(key, w);
            }
        }
        Ok(())
    }

    pub fn stats(&self) -> BuildStats {
        self.stats
    }

    pub fn build(self) -> Graph {
        let n = self.n;
        let mut counts = vec![0usize; n + 1];
        for &(u, v) in self.edges.keys() {
            counts[u + 1] += 1;
            counts[v + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut cursor = offsets.clone();
        let mut targets = vec![0usize; offsets[n]];
        let mut weights = vec![0.0; offsets[n]];
        // Keys iterate in ascending (u, v) order with u < v, which fills every
        // row in ascending neighbour order.
        for (&(u, v), &w) in &self.edges {
            targets[cursor[u]] = v;
            weights[cursor[u]] = w;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            weights[cursor[v]] = w;
            cursor[v] += 1;
        }
        Graph {
            offsets,
            targets,
            weights,
            weighted: self.weighted,
            labels: None,
        }
    }
}
