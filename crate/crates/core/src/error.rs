use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input matrix is not square ({rows}x{cols})")]
    NonSquareInput { rows: usize, cols: usize },
    #[error("input matrix has odd order {0}")]
    OddOrderInput(usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not Hamiltonian")]
    NotHamiltonian,
    #[error("matrix is not skew-Hamiltonian")]
    NotSkewHamiltonian,
    #[error("characteristic polynomial does not split over Q(i)")]
    SpectrumNotInField,
    #[error("normalization needs a square root outside Q(i): {0}")]
    FieldExtensionRequired(String),
    #[error("Jordan structure is not realizable by a Hamiltonian matrix")]
    InvalidHamiltonianStructure,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::NonSquareInput { .. } => "NonSquareInput",
            Error::OddOrderInput(_) => "OddOrderInput",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotHamiltonian => "NotHamiltonian",
            Error::NotSkewHamiltonian => "NotSkewHamiltonian",
            Error::SpectrumNotInField => "SpectrumNotInField",
            Error::FieldExtensionRequired(_) => "FieldExtensionRequired",
            Error::InvalidHamiltonianStructure => "InvalidHamiltonianStructure",
            Error::Parse(_) => "Parse",
        }
    }
}
