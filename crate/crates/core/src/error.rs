use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("sigma is not a permutation of H")]
    SigmaNotPermutation,
    #[error("sigma is not an involution: sigma(sigma({0})) != {0}")]
    SigmaNotInvolution(usize),
    #[error("sigma is not an automorphism: sigma({a}+{b}) != sigma({a})+sigma({b})")]
    SigmaNotAutomorphism { a: usize, b: usize },
    #[error("element component {value} out of range for modulus {modulus}")]
    ComponentOutOfRange { value: u32, modulus: u32 },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("value {0} + {1}w has a nonzero w-component where a rational integer was required")]
    NonRealValue(BigInt, BigInt),
    #[error("operation not supported for group {0}")]
    UnsupportedGroup(String),
    #[error("{0} is not an integer group determinant of {1}")]
    NotInSpectrum(BigInt, String),
    #[error("unknown family id {0:?}")]
    UnknownFamily(String),
    #[error("search space of {required} elements exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("unknown group name {0:?} (expected g18-4, z3xd6 or d18)")]
    UnknownGroup(String),
    #[error("invalid coefficient list: {0}")]
    BadCoefficients(String),
}

pub type Result<T> = std::result::Result<T, Error>;
