use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic {0} is neither 0 nor prime")]
    InvalidCharacteristic(u64),
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("inexact division")]
    InexactDivision,
    #[error("could not draw independent linear forms within the retry budget")]
    IndependenceFailure,
    #[error("vector field is zero")]
    ZeroField,
    #[error("hyperplane is left invariant by the field")]
    InvariantHyperplane,
    #[error("hypersurface is singular")]
    SingularHypersurface,
    #[error("characteristic {p} divides degree {d}")]
    CharacteristicDividesDegree { p: u64, d: u32 },
    #[error("characteristic {p} does not divide degree {d}")]
    CharacteristicDoesNotDivideDegree { p: u64, d: u32 },
    #[error("field does not leave the variety invariant")]
    NotInvariant,
    #[error("unmet precondition: {0}")]
    Precondition(String),
    #[error("genericity failure: {0}")]
    Genericity(String),
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("result indeterminate: {0}")]
    Indeterminate(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
