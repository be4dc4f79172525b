use faer::Side;

use super::{SolverKind, Spectrum, SpectrumConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::dense_matrix;

/// All `n` eigenvalues of the dense normalized Laplacian, ascending.
///
/// Refuses graphs with more than `cfg.dense_threshold` vertices.
pub fn full_spectrum_dense(g: &Graph, cfg: &SpectrumConfig) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    let m = dense_matrix(g, cfg.dense_threshold)?;
    let values = m
        .self_adjoint_eigenvalues(Side::Lower)
        .map_err(|_| Error::DenseSolver)?;
    Spectrum::from_values(values, g.n(), SolverKind::Dense)
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::graph::{generate_complete, generate_cycle, GraphBuilder};
    use crate::spectrum::SpectrumKind;

    fn solve(g: &Graph) -> Spectrum {
        full_spectrum_dense(g, &SpectrumConfig::default()).unwrap()
    }

    #[test]
    fn k2() {
        let s = solve(&generate_complete(2).unwrap());
        assert_eq!(s.kind(), SpectrumKind::Full);
        assert!(s.values()[0].abs() < 1e-15);
        assert!((s.values()[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn k3() {
        let s = solve(&generate_complete(3).unwrap());
        for (got, want) in s.values().iter().zip([0.0, 1.5, 1.5]) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn complete_graph_formula() {
        for n in [4usize, 7, 20] {
            let s = solve(&generate_complete(n).unwrap());
            let high = n as f64 / (n as f64 - 1.0);
            assert!(s.values()[0].abs() < 1e-12);
            assert!(s.values()[1..].iter().all(|v| (v - high).abs() < 1e-12));
        }
    }

    #[test]
    fn cycle_matches_circulant_formula() {
        let n = 16;
        let s = solve(&generate_cycle(n).unwrap());
        let mut expected: Vec<f64> = (0..n)
            .map(|k| 1.0 - (2.0 * PI * k as f64 / n as f64).cos())
            .collect();
        expected.sort_by(f64::total_cmp);
        for (got, want) in s.values().iter().zip(&expected) {
            assert!((got - want).abs() < 1e-10, "{got} vs {want}");
        }
    }

    #[test]
    fn isolated_vertices_contribute_one() {
        let mut b = GraphBuilder::new(3);
        b.add_edge(0, 1, 1.0).unwrap();
        let s = solve(&b.build());
        let want = [0.0, 1.0, 2.0];
        for (got, want) in s.values().iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn threshold_refusal() {
        let cfg = SpectrumConfig {
            dense_threshold: 10,
            ..Default::default()
        };
        let err = full_spectrum_dense(&generate_cycle(11).unwrap(), &cfg).unwrap_err();
        assert!(matches!(err, Error::DenseThresholdExceeded { n: 11, threshold: 10 }));
        assert!(err.to_string().contains("iterative"));
    }
}
