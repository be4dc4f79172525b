use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("empty graph")]
    EmptyGraph,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vector length {got} does not match operator order {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error(
        "graph has {n} vertices, above the dense threshold of {threshold}; \
         use the partial (iterative) solver or raise the threshold"
    )]
    DenseThresholdExceeded { n: usize, threshold: usize },

    #[error(
        "iterative solver did not converge after {iterations} filter passes: \
         {converged} of {wanted} eigenpairs below tolerance, max residual {residual_bound:e}"
    )]
    NoConvergence {
        iterations: usize,
        converged: usize,
        wanted: usize,
        residual_bound: f64,
    },

    #[error("dense eigensolver failed to converge")]
    DenseSolver,

    #[error("oracle requires full spectrum")]
    PartialSpectrum,

    #[error(
        "insufficient low spectrum: {eligible} usable grid points, at least {required} required"
    )]
    InsufficientLowSpectrum { eligible: usize, required: usize },

    #[error("interpolated spectrum does not cover the fit window up to x = {s}")]
    UncoveredFitWindow { s: f64 },

    #[error("non-monotone fit: slope {slope}")]
    NonMonotoneFit { slope: f64 },

    #[error("zero-eigenvalue contamination: {zeros} zero eigenvalues inside the fit window")]
    ZeroEigenvalueContamination { zeros: usize },

    #[error("undefined correlation: {0} series is constant")]
    UndefinedCorrelation(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
