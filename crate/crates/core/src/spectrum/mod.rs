//! Eigenvalues of the normalized Laplacian.
//!
//! Small graphs get the full spectrum from a dense symmetric eigensolver.
//! Large graphs get the `m` smallest eigenvalues from a matrix-free block
//! iteration; the low end of the spectrum is all the dimension fit needs.

mod dense;
mod iterative;

pub use dense::full_spectrum_dense;
pub use iterative::partial_spectrum_iterative;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Tolerance used when checking that eigenvalues lie in `[0, 2]`.
pub const BOUNDS_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumKind {
    Full,
    /// The `m` smallest eigenvalues.
    Partial(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SolverKind {
    Dense,
    Iterative,
}

impl SolverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverKind::Dense => "dense",
            SolverKind::Iterative => "iterative",
        }
    }
}

/// Sorted eigenvalues of a normalized Laplacian together with how they were
/// obtained.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "SpectrumRecord", try_from = "SpectrumRecord")]
pub struct Spectrum {
    values: Vec<f64>,
    n: usize,
    kind: SpectrumKind,
    solver: SolverKind,
    residual_bound: Option<f64>,
    seed: Option<u64>,
}

impl Spectrum {
    /// Wraps eigenvalues computed elsewhere. `values` are sorted here; a
    /// list shorter than `n` is treated as the smallest part of the spectrum.
    pub fn from_values(mut values: Vec<f64>, n: usize, solver: SolverKind) -> Result<Spectrum> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty spectrum".into()));
        }
        if values.len() > n {
            return Err(Error::InvalidArgument(format!(
                "{} eigenvalues for an operator of order {n}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite eigenvalue".into()));
        }
        values.sort_by(f64::total_cmp);
        let kind = if values.len() == n {
            SpectrumKind::Full
        } else {
            SpectrumKind::Partial(values.len())
        };
        Ok(Spectrum {
            values,
            n,
            kind,
            solver,
            residual_bound: None,
            seed: None,
        })
    }

    pub(crate) fn with_provenance(mut self, residual_bound: f64, seed: u64) -> Spectrum {
        self.residual_bound = Some(residual_bound);
        self.seed = Some(seed);
        self
    }

    /// Same provenance, values passed through a nondecreasing map.
    pub(crate) fn map_values(&self, f: impl Fn(f64) -> f64) -> Spectrum {
        Spectrum {
            values: self.values.iter().map(|&v| f(v)).collect(),
            n: self.n,
            kind: self.kind,
            solver: self.solver,
            residual_bound: self.residual_bound,
            seed: self.seed,
        }
    }

    /// Eigenvalues in ascending order.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Order of the underlying operator.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> SpectrumKind {
        self.kind
    }

    pub fn is_full(&self) -> bool {
        self.kind == SpectrumKind::Full
    }

    pub fn solver(&self) -> SolverKind {
        self.solver
    }

    /// Largest eigenpair residual norm reported by the iterative solver.
    pub fn residual_bound(&self) -> Option<f64> {
        self.residual_bound
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Number of eigenvalues with magnitude below `tol`.
    pub fn zero_count(&self, tol: f64) -> usize {
        self.values.iter().take_while(|&&v| v < tol).count()
    }

    /// Whether every eigenvalue lies in `[-tol, 2 + tol]`.
    pub fn within_bounds(&self, tol: f64) -> bool {
        self.values.iter().all(|&v| (-tol..=2.0 + tol).contains(&v))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spectrum serializes")
    }

    /// One eigenvalue per line, printed with 14 decimals and trailing zeros
    /// trimmed, so `1.9999999999999998` prints as `2`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &v in &self.values {
            out.push_str(&format_eigenvalue(v));
            out.push('\n');
        }
        out
    }
}

fn format_eigenvalue(v: f64) -> String {
    let mut s = String::new();
    let _ = write!(s, "{v:.14}");
    if s.contains('.') {
        let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
        s.truncate(trimmed);
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

#[derive(Debug, Serialize, Deserialize)]
struct SpectrumRecord {
    n: usize,
    kind: String,
    m: usize,
    solver: SolverKind,
    seed: Option<u64>,
    residual_bound: Option<f64>,
    values: Vec<f64>,
}

impl From<Spectrum> for SpectrumRecord {
    fn from(s: Spectrum) -> Self {
        SpectrumRecord {
            n: s.n,
            kind: match s.kind {
                SpectrumKind::Full => "full".into(),
                SpectrumKind::Partial(_) => "partial".into(),
            },
            m: s.values.len(),
            solver: s.solver,
            seed: s.seed,
            residual_bound: s.residual_bound,
            values: s.values,
        }
    }
}

impl TryFrom<SpectrumRecord> for Spectrum {
    type Error = Error;

    fn try_from(r: SpectrumRecord) -> Result<Self> {
        if r.m != r.values.len() {
            return Err(Error::InvalidArgument(format!(
                "m = {} but {} values",
                r.m,
                r.values.len()
            )));
        }
        let expected_kind = if r.m == r.n { "full" } else { "partial" };
        if r.kind != expected_kind {
            return Err(Error::InvalidArgument(format!(
                "kind {:?} inconsistent with m = {}, n = {}",
                r.kind, r.m, r.n
            )));
        }
        let mut s = Spectrum::from_values(r.values, r.n, r.solver)?;
        s.residual_bound = r.residual_bound;
        s.seed = r.seed;
        Ok(s)
    }
}

/// Solver settings and the dense/iterative dispatch rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumConfig {
    /// Largest `n` solved densely.
    pub dense_threshold: usize,
    /// Fraction of the low spectrum requested from the iterative solver.
    pub target_fraction: f64,
    /// Lower bound on the number of eigenvalues requested iteratively.
    pub min_partial: usize,
    /// Residual tolerance `‖ℒv − λv‖` for each returned eigenpair.
    pub tol: f64,
    /// Cap on filter passes of the iterative solver.
    pub max_iter: usize,
    pub seed: u64,
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig {
            dense_threshold: 3000,
            target_fraction: 0.02,
            min_partial: 64,
            tol: 1e-8,
            max_iter: 500,
            seed: 42,
        }
    }
}

impl SpectrumConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_fraction > 0.0 && self.target_fraction <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "target_fraction must lie in (0, 1], got {}",
                self.target_fraction
            )));
        }
        if self.dense_threshold < 2 {
            return Err(Error::InvalidArgument(
                "dense_threshold must be at least 2".into(),
            ));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidArgument("tol must be positive".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::InvalidArgument("max_iter must be positive".into()));
        }
        Ok(())
    }

    /// Number of eigenvalues the iterative path computes for order `n`.
    pub fn partial_size(&self, n: usize) -> usize {
        let target = (self.target_fraction * n as f64).ceil() as usize;
        self.min_partial.max(target).min(n.saturating_sub(1)).max(1)
    }

    /// Whether a graph of order `n` goes to the dense solver.
    pub fn uses_dense(&self, n: usize) -> bool {
        n <= self.dense_threshold
    }
}

/// Full spectrum for `n ≤ dense_threshold`, otherwise the
/// [`SpectrumConfig::partial_size`] smallest eigenvalues.
pub fn spectrum(g: &Graph, cfg: &SpectrumConfig) -> Result<Spectrum> {
    cfg.validate()?;
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if cfg.uses_dense(g.n()) {
        full_spectrum_dense(g, cfg)
    } else {
        partial_spectrum_iterative(g, cfg.partial_size(g.n()), cfg)
    }
}
