//! Heat-kernel return probability.
//!
//! The normalized Laplacian and the random-walk Laplacian `I − D^{-1}A` are
//! similar matrices, so the average probability that a continuous-time walk
//! is back at its start after time `t` is a trace over the spectrum:
//! `π(t) = (1/n) Σ_k exp(−λ_k t)`. On an infinite `d`-dimensional graph
//! `π(t) ~ t^{-d/2}`. A finite graph saturates at `1/n` per zero mode, so the
//! fit uses the decaying part only, between `1/λ_max` and `1/λ_2`.

use serde::{Deserialize, Serialize};

use super::fit_line;
use crate::error::{Error, Result};
use crate::spectrum::Spectrum;

/// Eigenvalues below this count as zero modes.
const ZERO_MODE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReturnProbabilityCurve {
    pub times: Vec<f64>,
    /// `π(t)` at each time.
    pub probabilities: Vec<f64>,
    /// `π(t)` minus the zero-mode contribution.
    pub decaying: Vec<f64>,
    /// `−2 ×` the slope of `log(decaying)` against `log t` inside
    /// `fit_window`; absent when fewer than two times fall inside it.
    pub fitted_dimension: Option<f64>,
    pub fit_window: [f64; 2],
    pub fit_points: usize,
}

/// The fit window `[1/λ_max, 1/λ_2]` of a full spectrum, `λ_2` being the
/// smallest nonzero eigenvalue.
fn fit_window(spec: &Spectrum) -> Result<[f64; 2]> {
    let values = spec.values();
    let max = *values.last().expect("spectra are nonempty");
    let gap = values
        .iter()
        .copied()
        .find(|&v| v >= ZERO_MODE)
        .ok_or_else(|| Error::InvalidArgument("spectrum has no nonzero eigenvalue".into()))?;
    Ok([1.0 / max, 1.0 / gap])
}

/// `points` logarithmically spaced times spanning the fit window.
pub fn oracle_time_grid(spec: &Spectrum, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidArgument(format!(
            "time grid needs at least 2 points, got {points}"
        )));
    }
    let [lo, hi] = fit_window(spec)?;
    let (a, b) = (lo.ln(), hi.ln());
    Ok((0..points)
        .map(|i| {
            if i + 1 == points {
                hi
            } else {
                (a + (b - a) * i as f64 / (points - 1) as f64).exp()
            }
        })
        .collect())
}

/// Evaluates `π(t)` on `times` and fits the decay exponent.
pub fn return_probability_curve(spec: &Spectrum, times: &[f64]) -> Result<ReturnProbabilityCurve> {
    if !spec.is_full() {
        return Err(Error::PartialSpectrum);
    }
    if let Some(t) = times.iter().find(|t| !(t.is_finite() && **t >= 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "times must be finite and nonnegative, got {t}"
        )));
    }
    let n = spec.n() as f64;
    let (zeros, decaying_modes): (Vec<f64>, Vec<f64>) =
        spec.values().iter().partition(|&&v| v < ZERO_MODE);
    let mut probabilities = Vec::with_capacity(times.len());
    let mut decaying = Vec::with_capacity(times.len());
    for &t in times {
        let tail: f64 = decaying_modes.iter().map(|&l| (-l * t).exp()).sum::<f64>() / n;
        let zero_part: f64 = zeros.iter().map(|&l| (-l * t).exp()).sum::<f64>() / n;
        probabilities.push(zero_part + tail);
        decaying.push(tail);
    }

    let window = fit_window(spec)?;
    // Endpoints come from the same expressions as oracle_time_grid; allow
    // for rounding in caller-built grids.
    let inside = |t: f64| t >= window[0] * (1.0 - 1e-12) && t <= window[1] * (1.0 + 1e-12);
    let (log_t, log_p): (Vec<f64>, Vec<f64>) = times
        .iter()
        .zip(&decaying)
        .filter(|&(&t, &p)| t > 0.0 && p > 0.0 && inside(t))
        .map(|(&t, &p)| (t.ln(), p.ln()))
        .unzip();
    let fitted_dimension = (log_t.len() >= 2).then(|| -2.0 * fit_line(&log_t, &log_p).slope);
    Ok(ReturnProbabilityCurve {
        times: times.to_vec(),
        probabilities,
        decaying,
        fitted_dimension,
        fit_window: window,
        fit_points: log_t.len(),
    })
}
