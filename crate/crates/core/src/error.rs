use thiserror::Error;

/// Errors raised by the lattice, cycle and transformation routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitivity")]
    ZeroVector,

    #[error("cycle length {len} is outside the supported range {min}..={max}")]
    LengthOutOfRange { len: usize, min: usize, max: usize },

    #[error("cycle is not the boundary of a smooth complete toric surface: {reason}")]
    NotToric { reason: String },

    #[error("invalid fan: {reason}")]
    InvalidFan { reason: String },

    #[error("component {index} cannot be blown down (needs a_i = 1 and v(i-1) + v(i+1) = v(i))")]
    NotContractible { index: usize },

    #[error("components {up} and {down} are not opposite rays")]
    NotOpposite { up: usize, down: usize },

    #[error("invalid move ({up}, {down}) on a cycle of length {len}")]
    InvalidMove { up: usize, down: usize, len: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("no interior blowup available on component {component}")]
    NoMarkAvailable { component: usize },

    #[error("no path found within bounds (max_moves = {max_moves}, entry_min = {entry_min})")]
    NotFoundWithinBounds { max_moves: usize, entry_min: i64 },

    #[error("cycle is not negative definite with all entries >= 2")]
    NotNegativeDefinite,

    #[error("unknown continuation row {label:?} in table {table}")]
    UnknownContinuation { table: u8, label: String },

    #[error("unknown standard model {0:?}")]
    UnknownModel(String),

    #[error("component index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("integer overflow")]
    Overflow,
}

impl Error {
    /// Stable identifier used in machine-readable error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroVector => "ZeroVector",
            Error::LengthOutOfRange { .. } => "LengthOutOfRange",
            Error::NotToric { .. } => "NotToric",
            Error::InvalidFan { .. } => "InvalidFan",
            Error::NotContractible { .. } => "NotContractible",
            Error::NotOpposite { .. } => "NotOpposite",
            Error::InvalidMove { .. } => "InvalidMove",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::NoMarkAvailable { .. } => "NoMarkAvailable",
            Error::NotFoundWithinBounds { .. } => "NotFoundWithinBounds",
            Error::NotNegativeDefinite => "NotNegativeDefinite",
            Error::UnknownContinuation { .. } => "UnknownContinuation",
            Error::UnknownModel(_) => "UnknownModel",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::Overflow => "Overflow",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
