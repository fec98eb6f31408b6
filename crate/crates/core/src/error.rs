use thiserror::Error;

/// Everything that can go wrong while building or checking a code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not irreducible")]
    NotIrreducible(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of size {size} exceeds the table budget of {budget} elements")]
    FieldTooLarge { size: u64, budget: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("no element of order {n} in a field with {order} nonzero elements")]
    OrderUnavailable { n: u64, order: u64 },
    #[error("{0} is not an element of this field")]
    NotAnElement(u64),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("exponent {exponent} is outside [0, {n})")]
    ExponentOutOfRange { exponent: usize, n: usize },
    #[error("exponent set is not a union of cyclotomic cosets: product has coefficients outside the base field")]
    NotAClosedCoset,
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: usize },
    #[error("empty set")]
    EmptySet,
    #[error("defining set is not closed under multiplication by {q} mod {n} (exponent {missing} missing)")]
    NotGaloisClosed { q: u64, n: usize, missing: usize },
    #[error("splitting field GF({q}^{m}) exceeds the field budget")]
    NoSplittingField { q: u64, m: u32 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("r + 1 = {group} does not divide n = {n}")]
    LocalityDoesNotDivide { group: usize, n: usize },
    #[error("coset of {0} is added without the coset of its negation")]
    UnpairedCoset(usize),
    #[error("parameter violation: {0}")]
    ParameterViolation(String),
    #[error("parity violation: n/(r+1) - k/r = {value} is odd")]
    ParityViolation { value: i64 },
    #[error("divisibility violation: 2r = {modulus} does not divide n*r/(r+1) - k - 2a = {value}")]
    DivisibilityViolation { value: i64, modulus: i64 },
    #[error("locality {r} not verified for coordinates {coordinates:?}")]
    LocalityNotVerified { r: usize, coordinates: Vec<usize> },
    #[error("no local check covers coordinate {0}")]
    NoLocalCheck(usize),
    #[error("coordinate {0} is erased")]
    ErasedRead(usize),
    #[error("assertion failed: {0}")]
    AssertionFailed(String),
}

impl Error {
    /// Process exit code: 1 for internal failures, 2 for rejected input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvariantViolation(_) | Error::AssertionFailed(_) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
