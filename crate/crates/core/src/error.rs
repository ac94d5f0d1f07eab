use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid system data: {0}")]
    InvalidSystem(String),
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid degree vector: {0}")]
    InvalidDegreeVector(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("{r} variable groups exceed the permutation enumeration limit of 8")]
    TooManyGroups { r: usize },
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("entries do not match a {rows}x{cols} label set")]
    ShapeMismatch { rows: usize, cols: usize },
    #[error("defect vector {delta:?} exceeds the bound {bound}")]
    DefectTooLarge { bound: u32, delta: Vec<u32> },
    #[error("pure Bezout matrices need all defects zero, got {delta:?}")]
    NonzeroDefect { delta: Vec<u32> },
    #[error("Bezoutian term {term} lies outside the expected support")]
    SupportViolation { term: String },
    #[error("could not force a common root at the given point")]
    DegeneratePoint,
    #[error("determinant vanished on every specialization")]
    VanishingDeterminant,
    #[error("determinant is not homogeneous along the scaling path")]
    NotHomogeneous,
}
