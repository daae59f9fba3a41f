use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by the imaging stages.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument left the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Curves intersect, coincide or violate the required nesting.
    #[error("geometry error: {0}")]
    Geometry(String),

    /// A candidate boundary is not representable (nonpositive radius,
    /// outside the admissible annulus, ...).
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    /// Evaluation requested at (or too close to) a kernel singularity.
    #[error("singular evaluation: {0}")]
    Singularity(String),

    /// The forward system is near-singular; k^2 sits close to an interior
    /// Dirichlet eigenvalue of the cavity.
    #[error("near-singular forward system (condition {condition:.3e}); choose a different wavenumber")]
    EigenvalueProximity { condition: f64 },

    /// The discrepancy target exceeds the data norm, so no regularization
    /// parameter can attain it.
    #[error("discrepancy target {target:.3e} exceeds the data norm {data_norm:.3e}")]
    DiscrepancyUnsolvable { target: f64, data_norm: f64 },

    /// A linear-algebra factorization failed to converge.
    #[error("linear algebra failure: {0}")]
    Linalg(String),

    /// Invalid arguments that are not domain violations (empty inputs,
    /// mismatched lengths, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An experiment configuration failed validation.
    #[error("invalid configuration:\n{}", .0.join("\n"))]
    InvalidConfig(Vec<String>),

    /// A pipeline stage failed; carries the stage name for diagnostics.
    #[error("stage `{stage}` failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("malformed artifact {path}: {reason}")]
    Artifact { path: String, reason: String },
}

impl Error {
    /// Tags an error with the pipeline stage it occurred in.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage { stage, source: Box::new(self) }
    }
}
