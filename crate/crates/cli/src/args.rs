use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectradim::graph::{IndexBase, ParseOptions};
use spectradim::{EstimateParams, FitConfig, SpectrumConfig};

#[derive(Debug, Parser)]
#[command(
    name = "spectradim",
    version,
    about = "Spectral dimension of graphs from normalized-Laplacian eigenvalue growth"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Estimate the spectral dimension of one graph.
    Estimate(EstimateArgs),
    /// Dump normalized-Laplacian eigenvalues.
    Spectrum(SpectrumArgs),
    /// Compare the heat-kernel return-probability exponent with the estimate.
    Oracle(OracleArgs),
    /// Write a fixture graph with known dimension.
    Gen(GenArgs),
    /// Estimate every graph in a directory or manifest; CSV on stdout.
    Batch(BatchArgs),
    /// Spearman correlation and mutual information of a scores CSV.
    Correlate(CorrelateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `.mtx` extension or a `%%MatrixMarket` header selects Matrix Market.
    Auto,
    Edgelist,
    Mtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Base {
    Auto,
    #[value(name = "0")]
    Zero,
    #[value(name = "1")]
    One,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
    /// Read edge weights (third edge-list column, Matrix Market values).
    #[arg(long)]
    pub weighted: bool,
    /// Vertex id base of edge lists.
    #[arg(long, value_enum, default_value_t = Base::Auto)]
    pub index_base: Base,
}

impl InputArgs {
    pub fn parse_options(&self) -> ParseOptions {
        ParseOptions {
            index_base: match self.index_base {
                Base::Auto => IndexBase::Auto,
                Base::Zero => IndexBase::Zero,
                Base::One => IndexBase::One,
            },
            weighted: self.weighted,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct PipelineArgs {
    /// Interpolation grid size.
    #[arg(long = "M", visible_alias = "grid-size", default_value_t = 1024)]
    pub grid_size: usize,
    /// Fraction of the spectrum used by the slope fit.
    #[arg(long, default_value_t = 0.01)]
    pub s: f64,
    /// Largest vertex count solved with the dense eigensolver.
    #[arg(long, default_value_t = 3000)]
    pub dense_threshold: usize,
    /// Seed of the iterative solver's start block.
    #[arg(long, env = "SPECTRADIM_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Analyze the whole graph instead of its largest connected component.
    #[arg(long)]
    pub keep_disconnected: bool,
}

impl PipelineArgs {
    pub fn params(&self) -> EstimateParams {
        EstimateParams {
            grid_size: self.grid_size,
            s: self.s,
            spectrum: SpectrumConfig {
                dense_threshold: self.dense_threshold,
                seed: self.seed,
                ..SpectrumConfig::default()
            },
            fit: FitConfig::default(),
            use_lcc: !self.keep_disconnected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub input_args: InputArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub output: ReportFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumFormat {
    Json,
    /// One eigenvalue per line.
    Txt,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub input_args: InputArgs,
    /// All eigenvalues from the dense solver.
    #[arg(long, conflicts_with = "smallest")]
    pub full: bool,
    /// Only the m smallest eigenvalues, from the iterative solver.
    #[arg(long, value_name = "M")]
    pub smallest: Option<usize>,
    #[arg(long, default_value_t = 3000)]
    pub dense_threshold: usize,
    #[arg(long, env = "SPECTRADIM_SEED", default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SpectrumFormat::Json)]
    pub output: SpectrumFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum JsonOnly {
    Json,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub input_args: InputArgs,
    /// Number of log-spaced times in the fit window.
    #[arg(long, default_value_t = 64)]
    pub points: usize,
    /// The oracle needs the full spectrum; graphs above this are refused.
    #[arg(long, default_value_t = 8192)]
    pub dense_threshold: usize,
    #[arg(long = "M", visible_alias = "grid-size", default_value_t = 1024)]
    pub grid_size: usize,
    #[arg(long, default_value_t = 0.01)]
    pub s: f64,
    #[arg(long)]
    pub keep_disconnected: bool,
    #[arg(long, value_enum, default_value_t = JsonOnly::Json)]
    pub output: JsonOnly,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Grid over the given axis lengths (1 to 4 axes).
    Lattice {
        #[arg(required = true, num_args = 1..)]
        dims: Vec<usize>,
        /// Wrap every axis (torus).
        #[arg(long)]
        periodic: bool,
    },
    /// Complete graph K_n.
    Complete { n: usize },
    /// Cycle C_n.
    Cycle { n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CsvOnly {
    Csv,
}

#[derive(Debug, Args)]
pub struct BatchArgs {
    /// Directory of graph files, or a manifest listing one path per line.
    pub path: PathBuf,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Leave the ms_total column empty so output is byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
    #[command(flatten)]
    pub input_args: InputArgs,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = CsvOnly::Csv)]
    pub output: CsvOnly,
}

#[derive(Debug, Args)]
pub struct CorrelateArgs {
    /// CSV with `name,complexity,metric` columns.
    pub csv: PathBuf,
    /// Histogram bins per axis; floor(sqrt(N)) when absent.
    #[arg(long)]
    pub bins: Option<usize>,
}
