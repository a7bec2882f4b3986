use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Input violates a precondition (non-positive radius, odd particle count, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A numerical routine failed to reach its tolerance.
    #[error("numerical error in {what}: {diagnostics}")]
    Numerical { what: String, diagnostics: String },

    /// Two particles came closer than the coincidence guard allows.
    #[error("singularity: pair ({i}, {j}) at distance {dist:e}")]
    Singularity { i: usize, j: usize, dist: f64 },

    /// Scenario construction could not satisfy its contract.
    #[error("construction error: {0}")]
    Construction(String),

    /// A 1D meeting pattern outside the two supported collision types.
    #[error("unsupported collision at t={time}: {detail}")]
    UnsupportedCollision { time: f64, detail: String },

    /// Event-driven loop exceeded its event budget.
    #[error("runaway event cascade: {count} events exceed budget {budget}")]
    RunawayEvents { count: usize, budget: usize },

    /// A scenario verification assertion failed.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn numerical(what: impl Into<String>, diagnostics: impl Into<String>) -> Self {
        Error::Numerical {
            what: what.into(),
            diagnostics: diagnostics.into(),
        }
    }

    pub fn construction(msg: impl Into<String>) -> Self {
        Error::Construction(msg.into())
    }
}
