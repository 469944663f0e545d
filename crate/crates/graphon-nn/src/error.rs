use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric: max |S - S^T| = {max_abs:.3e} exceeds {tol:.1e}")]
    Asymmetric { max_abs: f64, tol: f64 },

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("empty band: no induced eigenvalue has |lambda| >= c = {c}")]
    EmptyBand { c: f64 },

    #[error("degenerate spectrum: delta_c = {delta_c:.3e} at c = {c}; the bound diverges")]
    DegenerateSpectrum { delta_c: f64, c: f64 },

    #[error("graphon has no Lipschitz constant ({0}); bound evaluation requires an A1-Lipschitz family")]
    NotLipschitz(String),

    #[error("filter family not trainable: {0}")]
    NotTrainable(String),

    #[error("training diverged at epoch {epoch}: {what}")]
    Diverged { epoch: usize, what: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
