use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// A sphere, ball, stencil or annulus leaves the region where the object is defined.
    #[error("outside domain: {0}")]
    Domain(String),

    /// A field or coefficient spec string could not be parsed.
    #[error("parse error at column {position}: {message}")]
    Parse { position: usize, message: String },

    /// A CSV lattice file is malformed.
    #[error("format error in row {row}: {message}")]
    Format { row: usize, message: String },

    /// A hypothesis failed, so no certificate or bound can be issued.
    #[error("refused: {reason} (estimate {estimate})")]
    Refused { reason: String, estimate: f64 },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A fit or construction degenerated (all displacements zero, zero measure...).
    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
