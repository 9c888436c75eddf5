//! Crate-wide error type.

use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Extension degree outside the supported range 1..=16.
    UnsupportedDegree(usize),
    /// Supplied modulus does not have the required degree.
    ModulusDegreeMismatch { expected: usize, got: usize },
    /// Supplied modulus factors over GF(2).
    ReducibleModulus { modulus: u32, factor: u32 },
    /// Element bits exceed the field size.
    ElementOutOfRange { bits: u32, degree: usize },
    /// Operands belong to different field contexts.
    ContextMismatch,
    /// Inverse of zero requested.
    DivisionByZero,
    /// Vector or matrix shapes do not line up.
    ShapeMismatch { expected: usize, got: usize },
    /// Empty input where at least one element is required.
    EmptyInput,
    /// Code length exceeds the extension degree (rank spaces need n <= N).
    LengthExceedsDegree { len: usize, degree: usize },
    /// Generator rows are linearly dependent (or a basis is dependent).
    RankDeficient { expected: usize, got: usize },
    /// An exhaustive routine would exceed the enumeration budget.
    BudgetExceeded { needed_bits: u32, max_bits: u32 },
    /// gcd(0, 0) requested.
    GcdOfZeros,
    /// Parity-check condition for the single-error construction fails.
    ConditionFailed,
    /// A parameter combination the operation does not accept.
    InvalidParameter(&'static str),
    /// Ensemble components must be pairwise distinct.
    DuplicateComponent { first: usize, second: usize },
    /// Comparable ensemble components must not contain one another.
    NestedComponent { inner: usize, outer: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedDegree(n) => {
                write!(f, "unsupported extension degree {n} (supported: 1..=16)")
            }
            Error::ModulusDegreeMismatch { expected, got } => {
                write!(f, "modulus degree {got} does not match extension degree {expected}")
            }
            Error::ReducibleModulus { modulus, factor } => {
                write!(f, "modulus {modulus:#x} is reducible (divisible by {factor:#x})")
            }
            Error::ElementOutOfRange { bits, degree } => {
                write!(f, "element bits {bits:#x} out of range for GF(2^{degree})")
            }
            Error::ContextMismatch => write!(f, "operands use different field contexts"),
            Error::DivisionByZero => write!(f, "zero has no multiplicative inverse"),
            Error::ShapeMismatch { expected, got } => {
                write!(f, "shape mismatch: expected {expected}, got {got}")
            }
            Error::EmptyInput => write!(f, "empty input"),
            Error::LengthExceedsDegree { len, degree } => {
                write!(f, "length {len} exceeds extension degree {degree}")
            }
            Error::RankDeficient { expected, got } => {
                write!(f, "rank deficient: expected rank {expected}, got {got}")
            }
            Error::BudgetExceeded { needed_bits, max_bits } => {
                write!(
                    f,
                    "enumeration budget exceeded: needs 2^{needed_bits} steps, limit 2^{max_bits}"
                )
            }
            Error::GcdOfZeros => write!(f, "gcd(0, 0) is undefined"),
            Error::ConditionFailed => {
                write!(f, "parity-check matrix fails the single-error condition")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::DuplicateComponent { first, second } => {
                write!(f, "ensemble components {first} and {second} are equal")
            }
            Error::NestedComponent { inner, outer } => {
                write!(f, "ensemble component {inner} is contained in component {outer}")
            }
        }
    }
}
