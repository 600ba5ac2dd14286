use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("arity {n} out of range ({min}..={max})")]
    ArityOutOfRange { n: usize, min: usize, max: usize },

    #[error("{what} requires {parity} arity, got n = {n}")]
    ArityParity {
        what: &'static str,
        parity: &'static str,
        n: usize,
    },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range for arity {n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("invalid truth table: {0}")]
    InvalidTable(String),

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("singular system: rank {rank} < {unknowns} unknowns")]
    SingularSystem { rank: usize, unknowns: usize },

    #[error("residual {residual:e} exceeds tolerance {tolerance:e}")]
    Residual { residual: f64, tolerance: f64 },

    #[error("1 - A^2 - B^2 is negative ({min:e}) somewhere; no completion exists")]
    NegativePower { min: f64 },

    #[error("root pairing failed: {0}")]
    RootPairing(String),

    #[error("angle finding stalled at length {length}: out-of-degree coefficient {norm:e}")]
    DegreeNotReduced { length: usize, norm: f64 },

    #[error("angle sequence does not match signal parameters: {0}")]
    AngleMismatch(String),

    #[error("malformed circuit: {0}")]
    MalformedCircuit(String),

    #[error("malformed program: {0}")]
    MalformedProgram(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
