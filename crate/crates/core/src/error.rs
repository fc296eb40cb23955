use thiserror::Error;

use crate::algebra::{AlgebraViolation, BimoduleViolation};
use crate::symmetry::WitnessViolation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not below 2^31")]
    ModulusTooLarge(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator {den} vanishes modulo {p}")]
    DenominatorVanishes { den: String, p: u64 },
    #[error("malformed scalar `{0}`")]
    BadScalar(String),
    #[error("unrecognised field `{0}`")]
    Unrecognised(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("degree {degree} is below the minimum {min} for {context}")]
    DegreeTooLow {
        context: &'static str,
        degree: usize,
        min: usize,
    },
    #[error("degree {degree} exceeds the cap {cap} for {context}")]
    DegreeCap {
        context: &'static str,
        degree: usize,
        cap: usize,
    },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(AlgebraViolation),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(BimoduleViolation),
    #[error("not a Hochschild 2-cocycle: condition fails on basis triple ({0}, {1}, {2})")]
    NotACocycle(usize, usize, usize),
    #[error("not a Hochschild cocycle in dual form: b*(beta) is nonzero")]
    NotADualCocycle,
    #[error("the extension has no unit")]
    NoUnit,
    #[error("invalid witness: {0}")]
    InvalidWitness(WitnessViolation),
    #[error("quiver presentation: {0}")]
    Quiver(String),
    #[error("ideal is not admissible: {0}")]
    NotAdmissible(String),
    #[error("unknown criterion `{0}`")]
    UnknownCriterion(String),
    #[error("search space of {size} points exceeds the cap {cap}")]
    SearchCap { size: u128, cap: u128 },
    #[error("criteria disagree (implementation defect):\n{0}")]
    Disagreement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
