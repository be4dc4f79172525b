use crate::error::{Error, Result};
use crate::spectrum::{SolverKind, Spectrum, SpectrumKind};

/// Smallest accepted grid size.
pub const MIN_GRID_SIZE: usize = 16;

/// The spectrum resampled on the grid `x_j = j/M`, `j = 1..=M`.
///
/// For a partial spectrum of `m` eigenvalues, grid points beyond `m/n` are
/// absent (`None`).
#[derive(Debug, Clone, PartialEq)]
pub struct InterpolatedSpectrum {
    grid: Vec<f64>,
    values: Vec<Option<f64>>,
    n: usize,
    source_kind: SpectrumKind,
    solver: SolverKind,
    knots: Vec<f64>,
}

impl InterpolatedSpectrum {
    /// Grid size `M`.
    pub fn grid_size(&self) -> usize {
        self.grid.len()
    }

    /// Abscissae `x_j = j/M`.
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    /// Sampled values `λ̃_j`.
    pub fn values(&self) -> &[Option<f64>] {
        &self.values
    }

    /// Order of the graph the spectrum came from.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn source_kind(&self) -> SpectrumKind {
        self.source_kind
    }

    pub fn solver(&self) -> SolverKind {
        self.solver
    }

    /// Evaluates the interpolant `λ(x)` at any `x > 0`.
    ///
    /// Left of the first knot `1/n` the value is clamped to `λ_1`; right of
    /// the last known eigenvalue the result is `None` for partial spectra
    /// and clamped to `λ_n` for full ones.
    pub fn eval(&self, x: f64) -> Option<f64> {
        let t = x * self.n as f64;
        let k = t.floor();
        if k < 1.0 {
            return Some(self.knots[0]);
        }
        let k = k as usize;
        let frac = t - k as f64;
        self.at_knot_fraction(k, frac)
    }

    /// Value at `(k + frac)/n` for `k ≥ 1`, `0 ≤ frac < 1`.
    fn at_knot_fraction(&self, k: usize, frac: f64) -> Option<f64> {
        let len = self.knots.len();
        let full = self.source_kind == SpectrumKind::Full;
        if k > len || (k == len && frac > 0.0) {
            return full.then(|| self.knots[len - 1]);
        }
        let low = self.knots[k - 1];
        if frac == 0.0 {
            return Some(low);
        }
        Some(low + frac * (self.knots[k] - low))
    }
}

/// Samples the piecewise-linear interpolant through `(k/n, λ_k)` at
/// `x_j = j/M`.
///
/// Grid positions are computed in integer arithmetic, so when `M = n` the
/// samples are the eigenvalues themselves.
pub fn interpolate_spectrum(spec: &Spectrum, grid_size: usize) -> Result<InterpolatedSpectrum> {
    if grid_size < MIN_GRID_SIZE {
        return Err(Error::InvalidArgument(format!(
            "grid size must be at least {MIN_GRID_SIZE}, got {grid_size}"
        )));
    }
    let knots = spec.values().to_vec();
    if knots.is_empty() {
        return Err(Error::InvalidArgument("empty spectrum".into()));
    }
    let n = spec.n();
    let mut interp = InterpolatedSpectrum {
        grid: (1..=grid_size)
            .map(|j| j as f64 / grid_size as f64)
            .collect(),
        values: Vec::with_capacity(grid_size),
        n,
        source_kind: spec.kind(),
        solver: spec.solver(),
        knots,
    };
    for j in 1..=grid_size {
        let scaled = j as u128 * n as u128;
        let k = (scaled / grid_size as u128) as usize;
        let rem = (scaled % grid_size as u128) as f64;
        let value = if k == 0 {
            Some(interp.knots[0])
        } else {
            interp.at_knot_fraction(k, rem / grid_size as f64)
        };
        interp.values.push(value);
    }
    Ok(interp)
}
