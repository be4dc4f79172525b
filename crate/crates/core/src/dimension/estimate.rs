use serde::{Deserialize, Serialize};

use super::fit_line;
use super::interpolate::{interpolate_spectrum, InterpolatedSpectrum};
use crate::error::{Error, Result};
use crate::graph::{largest_connected_component, Graph};
use crate::spectrum::{
    full_spectrum_dense, partial_spectrum_iterative, SolverKind, Spectrum, SpectrumConfig,
};

/// Estimated spectral dimension. Flat low spectra (no eigenvalue growth
/// inside the fit window) have unbounded dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectralDimension {
    Finite(f64),
    Infinite,
}

impl SpectralDimension {
    pub fn value(self) -> Option<f64> {
        match self {
            SpectralDimension::Finite(d) => Some(d),
            SpectralDimension::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == SpectralDimension::Infinite
    }
}

impl std::fmt::Display for SpectralDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectralDimension::Finite(d) => write!(f, "{d}"),
            SpectralDimension::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for SpectralDimension {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SpectralDimension::Finite(d) => s.serialize_f64(*d),
            SpectralDimension::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for SpectralDimension {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Number(f64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Number(v) => Ok(SpectralDimension::Finite(v)),
            Repr::Text(t) if t == "inf" => Ok(SpectralDimension::Infinite),
            Repr::Text(t) => Err(serde::de::Error::custom(format!(
                "expected a number or \"inf\", got {t:?}"
            ))),
        }
    }
}

/// 2^-30, about 9.3e-10: coarser than the absolute error of either solver,
/// finer than `eps_zero`. A power of two keeps the rounding exact.
const RESOLUTION: f64 = 1.0 / (1u64 << 30) as f64;

/// Thresholds of the log-log fit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitConfig {
    /// Fewer usable grid points than this is an error.
    pub min_fit_points: usize,
    /// Grid values at or below this are treated as zero and left out.
    pub eps_zero: f64,
    /// Slopes in `[0, slope_floor]` map to [`SpectralDimension::Infinite`].
    pub slope_floor: f64,
    /// [`estimate_from_spectrum`] rounds eigenvalues to multiples of this
    /// before interpolating, so spectra that agree to solver accuracy
    /// (e.g. of relabelled graphs) give bit-identical estimates. Zero
    /// disables rounding.
    pub resolution: f64,
}

impl Default for FitConfig {
    fn default() -> Self {
        FitConfig {
            min_fit_points: 5,
            eps_zero: 1e-9,
            slope_floor: 1e-6,
            resolution: RESOLUTION,
        }
    }
}

/// Result of the slope fit with the parameters that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionEstimate {
    pub d_s: SpectralDimension,
    /// Fitted slope of `log λ̃` against `log x`, equal to `2/d_s`.
    pub slope: f64,
    pub r_squared: f64,
    pub points_used: usize,
    pub s: f64,
    /// `λ(s)`, the eigenvalue at the cutoff.
    pub lambda_s: f64,
    #[serde(rename = "M")]
    pub grid_size: usize,
    pub n: usize,
    pub solver: SolverKind,
}

/// [`estimate_dimension_with`] under the default [`FitConfig`].
pub fn estimate_dimension(interp: &InterpolatedSpectrum, s: f64) -> Result<DimensionEstimate> {
    estimate_dimension_with(interp, s, &FitConfig::default())
}

/// Fits `log λ̃_j = a + b·log x_j` over grid points with `x_j ≤ s`,
/// `λ̃_j ≤ λ(s)` and `λ̃_j > eps_zero`, and returns `d_s = 2/b`.
///
/// When the spectrum never rises above `eps_zero` up to `x = s` the window
/// is flat: the slope is 0 and the dimension infinite.
pub fn estimate_dimension_with(
    interp: &InterpolatedSpectrum,
    s: f64,
    fit: &FitConfig,
) -> Result<DimensionEstimate> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "cutoff s must lie in (0, 1), got {s}"
        )));
    }
    let window: Vec<(f64, Option<f64>)> = interp
        .grid()
        .iter()
        .copied()
        .zip(interp.values().iter().copied())
        .take_while(|&(x, _)| x <= s)
        .collect();
    if window.len() < fit.min_fit_points {
        return Err(Error::InsufficientLowSpectrum {
            eligible: window.len(),
            required: fit.min_fit_points,
        });
    }
    let lambda_s = interp.eval(s).ok_or(Error::UncoveredFitWindow { s })?;
    let mut log_x = Vec::with_capacity(window.len());
    let mut log_y = Vec::with_capacity(window.len());
    for &(x, value) in &window {
        let value = value.ok_or(Error::UncoveredFitWindow { s })?;
        if value > fit.eps_zero && value <= lambda_s {
            log_x.push(x.ln());
            log_y.push(value.ln());
        }
    }

    let base = DimensionEstimate {
        d_s: SpectralDimension::Infinite,
        slope: 0.0,
        r_squared: 1.0,
        points_used: window.len(),
        s,
        lambda_s,
        grid_size: interp.grid_size(),
        n: interp.n(),
        solver: interp.solver(),
    };
    if log_x.len() < fit.min_fit_points {
        if lambda_s <= fit.eps_zero {
            return Ok(base);
        }
        return Err(Error::InsufficientLowSpectrum {
            eligible: log_x.len(),
            required: fit.min_fit_points,
        });
    }

    let line = fit_line(&log_x, &log_y);
    let slope = line.slope;
    if slope < -fit.slope_floor || !slope.is_finite() {
        return Err(Error::NonMonotoneFit { slope });
    }
    let estimate = DimensionEstimate {
        r_squared: line.r_squared,
        points_used: log_x.len(),
        ..base
    };
    if slope <= fit.slope_floor {
        return Ok(DimensionEstimate {
            slope: slope.max(0.0),
            ..estimate
        });
    }
    Ok(DimensionEstimate {
        d_s: SpectralDimension::Finite(2.0 / slope),
        slope,
        ..estimate
    })
}

/// Settings of the end-to-end graph pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateParams {
    /// Grid size `M`.
    pub grid_size: usize,
    /// Cutoff `s` on the fraction of the spectrum used by the fit.
    pub s: f64,
    pub spectrum: SpectrumConfig,
    pub fit: FitConfig,
    /// Restrict to the largest connected component first.
    pub use_lcc: bool,
}

impl Default for EstimateParams {
    fn default() -> Self {
        EstimateParams {
            grid_size: 1024,
            s: 0.01,
            spectrum: SpectrumConfig::default(),
            fit: FitConfig::default(),
            use_lcc: true,
        }
    }
}

/// Spectrum of the graph (or its largest component) as the pipeline would
/// compute it: dense up to the threshold, otherwise enough of the low end
/// to cover the fit window.
pub fn pipeline_spectrum(g: &Graph, params: &EstimateParams) -> Result<Spectrum> {
    let cfg = &params.spectrum;
    cfg.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if cfg.uses_dense(n) {
        return full_spectrum_dense(g, cfg);
    }
    let cover = (params.s * n as f64).ceil() as usize + 1;
    let m = cfg.partial_size(n).max(cover).min(n - 1);
    partial_spectrum_iterative(g, m, cfg)
}

/// Estimates the spectral dimension of a graph end to end.
pub fn estimate_graph_dimension(g: &Graph, params: &EstimateParams) -> Result<DimensionEstimate> {
    let lcc;
    let g = if params.use_lcc {
        lcc = largest_connected_component(g);
        &lcc
    } else {
        g
    };
    let spec = pipeline_spectrum(g, params)?;
    estimate_from_spectrum(&spec, params)
}

/// The fit stages of [`estimate_graph_dimension`] applied to a precomputed
/// spectrum.
pub fn estimate_from_spectrum(spec: &Spectrum, params: &EstimateParams) -> Result<DimensionEstimate> {
    let n = spec.n() as f64;
    let zeros_in_window = spec
        .values()
        .iter()
        .enumerate()
        .filter(|&(k, &v)| v < params.fit.eps_zero && (k + 1) as f64 / n <= params.s)
        .count();
    if zeros_in_window > 1 {
        return Err(Error::ZeroEigenvalueContamination {
            zeros: zeros_in_window,
        });
    }
    let interp = if params.fit.resolution > 0.0 {
        let q = params.fit.resolution;
        interpolate_spectrum(&spec.map_values(|v| (v / q).round() * q), params.grid_size)?
    } else {
        interpolate_spectrum(spec, params.grid_size)?
    };
    estimate_dimension_with(&interp, params.s, &params.fit)
}
