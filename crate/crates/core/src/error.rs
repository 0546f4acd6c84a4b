use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("characteristic must be an odd prime, got {0}")]
    EvenCharacteristic(u64),
    #[error("modulus {0} exceeds the 2^31 bound")]
    ModulusTooLarge(u64),
    #[error("unsupported extension degree {0} (expected 1 or 2)")]
    UnsupportedDegree(u32),
    #[error("field context mismatch: {0} vs {1}")]
    ContextMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse field element {0:?}")]
    ParseElement(String),

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("polynomial degree {0} exceeds the cap of 2^24 coefficients")]
    DegreeCap(usize),
    #[error("constant polynomial has no squarefree test")]
    ConstantPolynomial,

    #[error("model y^2 = f(x) is singular (f not squarefree)")]
    SingularModel,
    #[error("model needs deg f >= 3, got {0}")]
    DegreeTooSmall(usize),
    #[error("coefficient index {index} outside [0, {top}]")]
    IndexOutOfRange { index: usize, top: usize },
    #[error("recurrence path unavailable: {0}")]
    RecurrenceUnavailable(String),
    #[error("oracle guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("fiber product is disconnected: f1*f2 is a square")]
    SquareProduct,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("p-rank check failed: {0}")]
    Verification(String),

    #[error("stratum query out of range: {0}")]
    OutOfWindow(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}
