//! Spectral dimension from eigenvalue growth.
//!
//! The sorted spectrum `λ_1 ≤ … ≤ λ_n` is read as a function of the fraction
//! of eigenvalues counted, `λ(k/n) = λ_k`, linearly interpolated in between.
//! Sampling `λ(x)` on the fixed grid `x_j = j/M` gives a vector whose length
//! does not depend on `n` or on vertex order. Near the bottom of the
//! spectrum a `d`-dimensional graph has `λ(x) ~ x^{2/d}`, equivalently an
//! eigenvalue counting function growing like `λ^{d/2}`, so the slope of
//! `log λ̃_j` against `log x_j` over `x_j ≤ s` estimates `2/d`.
//!
//! [`return_probability_curve`] gives an independent reading of the same
//! exponent from the heat-kernel return probability `π(t) ~ t^{-d/2}`.

mod estimate;
mod interpolate;
mod oracle;

pub use estimate::{
    estimate_dimension, estimate_dimension_with, estimate_from_spectrum, estimate_graph_dimension,
    pipeline_spectrum, DimensionEstimate, EstimateParams, FitConfig, SpectralDimension,
};
pub use interpolate::{interpolate_spectrum, InterpolatedSpectrum, MIN_GRID_SIZE};
pub use oracle::{oracle_time_grid, return_probability_curve, ReturnProbabilityCurve};

/// Ordinary least squares fit of `y = a + b·x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

pub(crate) fn fit_line(xs: &[f64], ys: &[f64]) -> LineFit {
    debug_assert_eq!(xs.len(), ys.len());
    debug_assert!(xs.len() >= 2);
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (&x, &y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mean_x, y - mean_y);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| (y - intercept - slope * x).powi(2))
        .sum();
    let r_squared = if syy > 0.0 {
        (1.0 - ss_res / syy).clamp(0.0, 1.0)
    } else {
        1.0
    };
    LineFit {
        slope,
        intercept,
        r_squared,
    }
}
