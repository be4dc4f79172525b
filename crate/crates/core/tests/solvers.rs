use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spectradim::stats::{mutual_information, PairedSeries};
use spectradim::{
    full_spectrum_dense, generate_cycle, generate_lattice, partial_spectrum_iterative, Graph,
    GraphBuilder, SpectrumConfig,
};

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, extra: usize, weighted: bool) -> Graph {
    let mut b = GraphBuilder::new(n).weighted(weighted);
    for v in 1..n {
        let u = rng.random_range(0..v);
        b.add_edge(u, v, rng.random_range(0.5..2.0)).unwrap();
    }
    for _ in 0..extra {
        let (u, v) = (rng.random_range(0..n), rng.random_range(0..n));
        if u != v {
            b.add_edge(u, v, rng.random_range(0.5..2.0)).unwrap();
        }
    }
    b.build()
}

#[test]
fn partial_agrees_with_full_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let cfg = SpectrumConfig::default();
    for (n, extra, weighted) in [(200, 300, false), (400, 100, true), (600, 1200, false)] {
        let g = random_graph(&mut rng, n, extra, weighted);
        let full = full_spectrum_dense(&g, &cfg).unwrap();
        for m in [1, 10, 40] {
            let partial = partial_spectrum_iterative(&g, m, &cfg).unwrap();
            assert_eq!(partial.values().len(), m);
            let err = max_diff(&full.values()[..m], partial.values());
            assert!(err < 1e-6, "n={n} m={m}: {err}");
        }
    }
}

#[test]
fn cycle_4096_low_spectrum_is_analytic() {
    let g = generate_cycle(4096).unwrap();
    let spec = partial_spectrum_iterative(&g, 64, &SpectrumConfig::default()).unwrap();
    let mut want: Vec<f64> = (0..4096)
        .map(|k| 1.0 - (2.0 * PI * k as f64 / 4096.0).cos())
        .collect();
    want.sort_by(f64::total_cmp);
    let err = max_diff(&want[..64], spec.values());
    assert!(err < 1e-7, "{err}");
    assert!(spec.residual_bound().unwrap() <= 1e-8);
}

#[test]
fn torus_partial_matches_dense() {
    let g = generate_lattice(&[30, 30], true).unwrap();
    let cfg = SpectrumConfig::default();
    let full = full_spectrum_dense(&g, &cfg).unwrap();
    let partial = partial_spectrum_iterative(&g, 100, &cfg).unwrap();
    let err = max_diff(&full.values()[..100], partial.values());
    assert!(err < 1e-7, "{err}");
}

#[test]
fn mutual_information_of_independent_series_is_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 10_000;
    let xs: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let ys: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
    let series = PairedSeries::from_pairs(&xs, &ys).unwrap();
    // Plug-in bias is about (B-1)^2 / 2N = 0.04 for B = 10.
    let mi = mutual_information(&series, 10).unwrap().value;
    assert!(mi <= 0.05, "{mi}");
}
