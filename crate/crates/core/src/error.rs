use thiserror::Error;

/// Errors produced anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("register of {requested} qubits exceeds the capacity limit of {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("qubit index {qubit} out of range for a {n_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, n_qubits: usize },

    #[error("qubit index {0} listed more than once for a single gate")]
    RepeatedQubit(usize),

    #[error("gate {gate} acts on {expected} qubit(s), got {got} target(s)")]
    GateArity {
        gate: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("rotation angle must be finite, got {0}")]
    InvalidAngle(f64),

    #[error("amplitude vector of length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("state is not normalized: squared norm {0}")]
    NotNormalized(f64),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("measurement outcome has zero probability")]
    DegenerateMeasurement,

    #[error("membership value {0} outside [0, 1]")]
    InvalidMembership(f64),

    #[error("operation requires {expected}-qubit membership functions, got {got}")]
    QmfArity { expected: usize, got: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("row {row} has {got} entries, expected {expected}")]
    Ragged {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("invalid entry at row {row}, column {column}: {source}")]
    Cell {
        row: usize,
        column: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("correlation undefined: vector has zero variance")]
    UndefinedCorrelation,

    #[error("every score in row {0} is undefined")]
    NoDefinedScore(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
