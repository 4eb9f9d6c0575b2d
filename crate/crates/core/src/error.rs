use thiserror::Error;

/// Errors shared by all modules of the crate.
///
/// Failed verifications are not errors: checker functions return `bool` (or a
/// report), and reserve `Error` for contract violations such as weight
/// mismatches or out-of-range indices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition text {0:?}")]
    ParsePartition(String),

    #[error("corner index {index} out of range 1..={max}")]
    CornerIndex { index: usize, max: usize },

    #[error("cannot pad partition of weight {weight} to smaller weight {n}")]
    PadTooSmall { weight: u64, n: u64 },

    #[error("weight mismatch: |lambda| = {0} but |mu| = {1}")]
    WeightMismatch(u64, u64),

    #[error("expected mu of weight {expected}, got weight {got}")]
    BadTargetWeight { expected: u64, got: u64 },

    #[error("binomial with negative first argument {0}")]
    NegativeBinomial(i64),

    #[error("missing binding for indeterminate {0}")]
    MissingBinding(&'static str),

    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid one-line notation: {0}")]
    BadPermutation(String),

    #[error("index {index} out of range 1..={n}")]
    IndexRange { index: usize, n: usize },

    #[error("n = {n} exceeds the guard rail {limit} (use force to override)")]
    SizeGuard { n: usize, limit: usize },

    #[error(
        "element is not central: {a} and {b} have cycle type {class} \
         but coefficients {ca} and {cb}"
    )]
    NotCentral {
        a: String,
        b: String,
        class: String,
        ca: String,
        cb: String,
    },

    #[error("evaluation point {point} hits the pole {pole}")]
    Pole { point: String, pole: String },

    #[error("series for |rho| <= 1 requires the explicit convention flag")]
    DegenerateSeries,

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
