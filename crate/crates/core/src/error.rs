use crate::cyclotomic::CycError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("polynomial {poly:?} is not irreducible of degree {degree} over F_{p}")]
    NotIrreducible { poly: Vec<u32>, degree: u32, p: u32 },
    #[error("field of order {0} exceeds the supported table size")]
    FieldTooLarge(u64),
    #[error("no subfield of degree {0} in this tower")]
    NoSuchLevel(u32),
    #[error("character with exponent {exponent} of F_(q^{degree})^x is not regular")]
    NotRegular { exponent: u64, degree: u32 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

pub type Result<T> = std::result::Result<T, Error>;
