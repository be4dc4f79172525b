use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use spectradim::dimension::pipeline_spectrum;
use spectradim::{
    connected_components, estimate_from_spectrum, largest_connected_component, DimensionEstimate,
    EstimateParams, Error, ReturnProbabilityCurve,
};

use crate::args::InputArgs;
use crate::input::load_graph;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub components: usize,
    pub lcc_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Timing {
    pub parse: f64,
    pub solve: f64,
    pub fit: f64,
}

impl Timing {
    pub fn total(&self) -> f64 {
        self.parse + self.solve + self.fit
    }
}

/// Everything `estimate` reports about one input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub input: String,
    pub graph: GraphSummary,
    pub estimate: DimensionEstimate,
    pub timing_ms: Timing,
    pub warnings: Vec<String>,
}

/// A pipeline error with whatever was learned before it.
#[derive(Debug)]
pub struct Failure {
    pub error: Error,
    pub graph: Option<GraphSummary>,
    pub elapsed_ms: f64,
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// Parse, restrict, solve and fit one graph file.
pub fn run_pipeline(
    path: &Path,
    input: &InputArgs,
    params: &EstimateParams,
) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let fail = |error, graph| Failure {
        error,
        graph,
        elapsed_ms: ms_since(start),
    };

    let parsed = load_graph(path, input).map_err(|e| fail(e, None))?;
    let parse_ms = ms_since(start);
    let g = &parsed.graph;
    let comps = connected_components(g);
    let summary = GraphSummary {
        n: g.n(),
        edges: g.edge_count(),
        components: comps.count(),
        lcc_size: comps.sizes[comps.largest],
    };

    let mut warnings = Vec::new();
    let diag = parsed.diagnostics;
    if diag.self_loops_dropped > 0 {
        warnings.push(format!("dropped {} self-loops", diag.self_loops_dropped));
    }
    if diag.duplicates_merged > 0 {
        warnings.push(format!("merged {} duplicate edges", diag.duplicates_merged));
    }
    if summary.components > 1 {
        warnings.push(if params.use_lcc {
            format!(
                "graph has {} components; using the largest ({} of {} vertices)",
                summary.components, summary.lcc_size, summary.n
            )
        } else {
            format!(
                "graph has {} components; each adds a zero eigenvalue",
                summary.components
            )
        });
    }

    let solve_start = Instant::now();
    let lcc;
    let analysed = if params.use_lcc && summary.components > 1 {
        lcc = largest_connected_component(g);
        &lcc
    } else {
        g
    };
    let spec = pipeline_spectrum(analysed, params).map_err(|e| fail(e, Some(summary)))?;
    let solve_ms = ms_since(solve_start);
    if let Some(r) = spec.residual_bound() {
        warnings.push(format!(
            "partial spectrum: {} of {} eigenvalues, max residual {r:.1e}",
            spec.values().len(),
            spec.n()
        ));
    }

    let fit_start = Instant::now();
    let estimate = estimate_from_spectrum(&spec, params).map_err(|e| fail(e, Some(summary)))?;
    let fit_ms = ms_since(fit_start);
    if estimate.r_squared < 0.9 {
        warnings.push(format!("poor log-log fit, r^2 = {:.3}", estimate.r_squared));
    }

    Ok(RunReport {
        schema_version: SCHEMA_VERSION,
        input: path.display().to_string(),
        graph: summary,
        estimate,
        timing_ms: Timing {
            parse: parse_ms,
            solve: solve_ms,
            fit: fit_ms,
        },
        warnings,
    })
}

/// One CSV row of `batch`, also the flat form of `estimate --output csv`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub name: String,
    pub n: Option<usize>,
    pub edges: Option<usize>,
    pub d_s: Option<String>,
    pub slope: Option<f64>,
    pub r2: Option<f64>,
    pub solver: Option<&'static str>,
    pub ms_total: Option<f64>,
    pub error: Option<String>,
}

impl Row {
    pub fn from_outcome(name: String, outcome: &Result<RunReport, Failure>, timing: bool) -> Row {
        match outcome {
            Ok(r) => Row {
                name,
                n: Some(r.graph.n),
                edges: Some(r.graph.edges),
                d_s: Some(r.estimate.d_s.to_string()),
                slope: Some(r.estimate.slope),
                r2: Some(r.estimate.r_squared),
                solver: Some(r.estimate.solver.as_str()),
                ms_total: timing.then(|| r.timing_ms.total()),
                error: None,
            },
            Err(f) => Row {
                name,
                n: f.graph.map(|g| g.n),
                edges: f.graph.map(|g| g.edges),
                d_s: None,
                slope: None,
                r2: None,
                solver: None,
                ms_total: timing.then_some(f.elapsed_ms),
                error: Some(f.error.to_string()),
            },
        }
    }
}

pub fn rows_to_csv(rows: &[Row]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    // An empty batch still gets its header.
    if rows.is_empty() {
        w.write_record([
            "name", "n", "edges", "d_s", "slope", "r2", "solver", "ms_total", "error",
        ])
        .expect("writing to memory");
    }
    for row in rows {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is utf-8")
}

/// Output of the `oracle` command.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub schema_version: &'static str,
    pub input: String,
    pub n: usize,
    pub curve: ReturnProbabilityCurve,
    /// The eigenvalue-growth estimate on the same spectrum; null when refused.
    pub weyl: Option<DimensionEstimate>,
    pub weyl_error: Option<String>,
    /// `|fitted_dimension − d_s|` when both are finite.
    pub difference: Option<f64>,
}
