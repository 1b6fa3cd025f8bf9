use thiserror::Error;

/// Error type shared by the whole engine.
#[derive(Debug, Error)]
pub enum KextError {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("minimal polynomial for variable '{0}' is reducible")]
    ReducibleMinPoly(String),
    #[error("duplicate variable '{0}' in tower")]
    DuplicateVariable(String),
    #[error("operation not supported over this field: {0}")]
    UnsupportedField(String),
    #[error("matrix entries come from different towers")]
    MixedFields,
    #[error("structure constants are not associative, witness ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit vector does not satisfy the unit laws")]
    BadUnit,
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("bad constructor parameters: {0}")]
    BadParameters(String),
    #[error("modules live over different algebras")]
    DifferentAlgebras,
    #[error("field of the object does not match the inclusion")]
    FieldMismatch,
    #[error("module is not simple")]
    NotSimple,
    #[error("instance too large for exhaustive enumeration")]
    TooLarge,
    #[error("algebra is not a group algebra")]
    NotAGroupAlgebra,
    #[error("unknown check id '{0}'")]
    UnknownCheck(String),
    #[error("semisimplicity is undecidable in this regime")]
    Undecidable,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bad input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, KextError>;
