//! Smallest eigenvalues by Chebyshev-filtered subspace iteration.
//!
//! A block of `p > m` orthonormal vectors is repeatedly passed through a
//! Chebyshev polynomial of `ℒ` that is bounded by one on `[cut, 2]` and grows
//! quickly below `cut`, then rotated onto Ritz vectors by a Rayleigh–Ritz
//! step. `cut` is the largest current Ritz value, so every pass enriches the
//! block in the lowest part of the spectrum. Only products with `ℒ` are
//! needed; the spectrum's upper end is known to be 2.
//!
//! Working on a block rather than a single Krylov vector means repeated
//! eigenvalues (cycles, tori, any graph with symmetry) come out with their
//! full multiplicity.

use faer::{Mat, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{SolverKind, Spectrum, SpectrumConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::LaplacianOperator;

/// Upper end of every normalized-Laplacian spectrum.
const SPECTRUM_MAX: f64 = 2.0;
/// Bound on the filter's gain at λ = 0 relative to the damped interval.
/// Higher gains converge in fewer passes but wash out the weaker wanted
/// directions below double precision.
const MAX_GAIN: f64 = 1e6;
const MIN_DEGREE: usize = 4;
const MAX_DEGREE: usize = 400;
/// Extra block columns beyond the requested count.
const MIN_GUARD: usize = 8;

/// The `m` smallest eigenvalues of the normalized Laplacian of `g`.
///
/// Deterministic for a given `cfg.seed`. Each returned eigenvalue has a Ritz
/// vector with residual `‖ℒv − λv‖ ≤ cfg.tol`; the largest of these residuals
/// is recorded in the result.
pub fn partial_spectrum_iterative(g: &Graph, m: usize, cfg: &SpectrumConfig) -> Result<Spectrum> {
    cfg.validate()?;
    let n = g.n();
    if m == 0 || m >= n {
        return Err(Error::InvalidArgument(format!(
            "partial solve needs 1 <= m < n, got m = {m}, n = {n}"
        )));
    }
    let op = LaplacianOperator::new(g);
    let block = (m + (m / 4).max(MIN_GUARD)).min(n);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut start = Mat::<f64>::zeros(n, block);
    for j in 0..block {
        for x in start.col_as_slice_mut(j) {
            *x = rng.random_range(-1.0..1.0);
        }
    }
    let mut ritz = rayleigh_ritz(&op, &orthonormalize(&start))?;

    for pass in 0..=cfg.max_iter {
        let residual = ritz.residuals[..m].iter().copied().fold(0.0, f64::max);
        if residual <= cfg.tol {
            return Ok(
                Spectrum::from_values(ritz.values[..m].to_vec(), n, SolverKind::Iterative)?
                    .with_provenance(residual, cfg.seed),
            );
        }
        if pass == cfg.max_iter {
            break;
        }
        let cut = ritz.values[block - 1].min(SPECTRUM_MAX - 1e-3);
        if cut <= f64::EPSILON {
            // The whole block sits at zero yet has not converged; filtering
            // cannot separate anything.
            break;
        }
        let filtered = chebyshev_filter(&op, &ritz.vectors, cut);
        ritz = rayleigh_ritz(&op, &orthonormalize(&filtered))?;
    }

    let converged = ritz.residuals[..m]
        .iter()
        .filter(|&&r| r <= cfg.tol)
        .count();
    Err(Error::NoConvergence {
        iterations: cfg.max_iter,
        converged,
        wanted: m,
        residual_bound: ritz.residuals[..m].iter().copied().fold(0.0, f64::max),
    })
}

struct Ritz {
    values: Vec<f64>,
    vectors: Mat<f64>,
    residuals: Vec<f64>,
}

fn apply_block(op: &LaplacianOperator<'_>, x: &Mat<f64>) -> Mat<f64> {
    let mut out = Mat::<f64>::zeros(x.nrows(), x.ncols());
    for j in 0..x.ncols() {
        op.apply_into(x.col_as_slice(j), out.col_as_slice_mut(j))
            .expect("block rows match operator order");
    }
    out
}

fn orthonormalize(x: &Mat<f64>) -> Mat<f64> {
    x.qr().compute_thin_Q()
}

fn rayleigh_ritz(op: &LaplacianOperator<'_>, basis: &Mat<f64>) -> Result<Ritz> {
    let lx = apply_block(op, basis);
    let projected = basis.transpose() * &lx;
    let p = projected.nrows();
    let sym = Mat::<f64>::from_fn(p, p, |i, j| 0.5 * (projected[(i, j)] + projected[(j, i)]));
    let eig = sym
        .self_adjoint_eigen(Side::Lower)
        .map_err(|_| Error::DenseSolver)?;
    let rotation = eig.U();
    let values: Vec<f64> = eig.S().column_vector().iter().copied().collect();
    let vectors = basis * rotation;
    let images = &lx * rotation;
    let residuals = values
        .iter()
        .enumerate()
        .map(|(j, &theta)| {
            let v = vectors.col_as_slice(j);
            let lv = images.col_as_slice(j);
            lv.iter()
                .zip(v)
                .map(|(a, b)| (a - theta * b).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    Ok(Ritz {
        values,
        vectors,
        residuals,
    })
}

/// Polynomial degree giving gain about [`MAX_GAIN`] at zero for a damped
/// interval `[cut, 2]`.
fn filter_degree(cut: f64) -> usize {
    let ratio = (SPECTRUM_MAX + cut) / (SPECTRUM_MAX - cut);
    let degree = (MAX_GAIN.acosh() / ratio.acosh()).ceil();
    (degree as usize).clamp(MIN_DEGREE, MAX_DEGREE)
}

/// Applies the Chebyshev polynomial mapping `[cut, 2]` onto `[-1, 1]`,
/// scaled to equal one at λ = 0, to every column of `x`.
fn chebyshev_filter(op: &LaplacianOperator<'_>, x: &Mat<f64>, cut: f64) -> Mat<f64> {
    let degree = filter_degree(cut);
    let half_width = (SPECTRUM_MAX - cut) / 2.0;
    let center = (SPECTRUM_MAX + cut) / 2.0;
    let sigma1 = half_width / (0.0 - center);
    let tau = 2.0 / sigma1;

    let n = x.nrows();
    let mut out = Mat::<f64>::zeros(n, x.ncols());
    let mut prev = vec![0.0; n];
    let mut cur = vec![0.0; n];
    let mut next = vec![0.0; n];
    let mut image = vec![0.0; n];
    for j in 0..x.ncols() {
        prev.copy_from_slice(x.col_as_slice(j));
        op.apply_into(&prev, &mut image)
            .expect("block rows match operator order");
        for i in 0..n {
            cur[i] = (image[i] - center * prev[i]) * sigma1 / half_width;
        }
        let mut sigma = sigma1;
        for _ in 1..degree {
            let sigma_next = 1.0 / (tau - sigma);
            op.apply_into(&cur, &mut image)
                .expect("block rows match operator order");
            let scale = 2.0 * sigma_next / half_width;
            let carry = sigma * sigma_next;
            for i in 0..n {
                next[i] = scale * (image[i] - center * cur[i]) - carry * prev[i];
            }
            std::mem::swap(&mut prev, &mut cur);
            std::mem::swap(&mut cur, &mut next);
            sigma = sigma_next;
        }
        out.col_as_slice_mut(j).copy_from_slice(&cur);
    }
    out
}
