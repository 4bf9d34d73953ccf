use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix must be square and non-empty, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian: max |M - M†| entry {deviation:e} exceeds {tol:e}")]
    NotHermitian { deviation: f64, tol: f64 },

    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e} below -{tol:e}")]
    NotPositive { eigenvalue: f64, tol: f64 },

    #[error("trace {trace} differs from 1 by more than {tol:e}")]
    TraceNotOne { trace: f64, tol: f64 },

    #[error("Kraus set is empty")]
    EmptyKraus,

    #[error("Kraus completeness violated: ||Σ K†K - I||_F = {residual:e} exceeds {bound:e}")]
    IncompleteKraus { residual: f64, bound: f64 },

    #[error("Choi ancilla marginal deviates from I/d by {deviation:e} (tolerance {tol:e})")]
    ChoiMarginal { deviation: f64, tol: f64 },

    #[error("operation requires a qubit channel, got dimension {dim}")]
    NotQubit { dim: usize },

    #[error("coherence-breaking qubit parameters violate |tau3| + |lambda3| <= 1: tau3 = {tau3}, lambda3 = {lambda3}")]
    CbcOutOfRange { tau3: f64, lambda3: f64 },

    #[error("parameter {name} = {value} is out of range ({reason})")]
    Parameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("times must be strictly increasing (violated at index {index})")]
    UnorderedTimes { index: usize },

    #[error("phase-covariant map is not CPTP at lambda*t = {t}: eigenvalue {eigenvalue:e}")]
    NonCptpFrame { t: f64, eigenvalue: f64 },

    #[error("internal consistency failure in {what}: residual {residual:e}")]
    InternalConsistency { what: &'static str, residual: f64 },
}
