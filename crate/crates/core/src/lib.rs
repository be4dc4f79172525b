//! Spectral dimension of graphs.
//!
//! The low end of the normalized-Laplacian spectrum of a graph that looks
//! `d`-dimensional at large scales grows like `λ(x) ~ x^{2/d}`, where `x` is
//! the fraction of eigenvalues counted. This crate computes that spectrum,
//! resamples it on a fixed grid, and fits the growth exponent:
//!
//! ```
//! use spectradim::{estimate_graph_dimension, generate_lattice, EstimateParams};
//!
//! let torus = generate_lattice(&[40, 40], true)?;
//! let estimate = estimate_graph_dimension(&torus, &EstimateParams::default())?;
//! let d = estimate.d_s.value().unwrap();
//! assert!((d - 2.0).abs() < 0.2, "{d}");
//! # Ok::<(), spectradim::Error>(())
//! ```
//!
//! The modules follow the pipeline:
//!
//! * [`graph`]: parsing, canonicalization, components and lattice fixtures.
//! * [`laplacian`]: `ℒ = I − D^{-1/2} A D^{-1/2}`, dense or matrix-free.
//! * [`spectrum`]: full (dense) or lowest-`m` (iterative) eigenvalues.
//! * [`dimension`]: interpolation, the log-log fit, and the heat-kernel
//!   return-probability cross-check.
//! * [`stats`]: Spearman correlation and mutual information for relating
//!   dimension estimates to other per-graph scores.

pub mod dimension;
mod error;
pub mod graph;
pub mod laplacian;
pub mod spectrum;
pub mod stats;

pub use dimension::{
    estimate_dimension, estimate_from_spectrum, estimate_graph_dimension, interpolate_spectrum,
    oracle_time_grid, return_probability_curve, DimensionEstimate, EstimateParams, FitConfig,
    InterpolatedSpectrum, ReturnProbabilityCurve, SpectralDimension,
};
pub use error::{Error, Result};
pub use graph::{
    connected_components, generate_complete, generate_cycle, generate_lattice,
    largest_connected_component, parse_edge_list, parse_matrix_market, permute_vertices, Graph,
    GraphBuilder,
};
pub use laplacian::{degrees, LaplacianOperator};
pub use spectrum::{
    full_spectrum_dense, partial_spectrum_iterative, spectrum, SolverKind, Spectrum,
    SpectrumConfig, SpectrumKind,
};

/// Guide chapters, compiled as doctests so their snippets stay current.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    pub mod graphs {}
    #[doc = include_str!("../../../book/src/laplacian.md")]
    pub mod laplacian {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    pub mod spectrum {}
    #[doc = include_str!("../../../book/src/dimension.md")]
    pub mod dimension {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub mod oracle {}
    #[doc = include_str!("../../../book/src/statistics.md")]
    pub mod statistics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/schemas.md")]
    pub mod schemas {}
}
