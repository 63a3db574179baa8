use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("extension degree {0} is outside 1..=4")]
    DegreeOutOfRange(u32),
    #[error("no built-in modulus for GF({p}^{m})")]
    NoModulusAvailable { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {value} is not in GF({q})")]
    ElementOutOfRange { value: u32, q: u32 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("symplectic code needs even length, got {0}")]
    OddLength(usize),
    #[error("code is empty (rank 0)")]
    EmptyCode,
    #[error("enumeration of {size} elements exceeds the cap of {cap}")]
    EnumerationTooLarge { size: String, cap: u64 },
    #[error("gauge code is the zero code")]
    ZeroCode,
    #[error("generators are additive but not F_q-linear")]
    NotLinear,
    #[error("factor code must satisfy 0 < k < n (got n={n}, k={k})")]
    TrivialFactor { n: usize, k: usize },
    #[error("lattice side must be at least 2, got {0}")]
    SizeTooSmall(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("vector of {0} qudits is too short to puncture")]
    TooShort(usize),
    #[error("q^n is not divisible by K*R")]
    NonIntegerRhs,
    #[error("wire {wire} out of range for a {n}-qudit register")]
    WireOutOfRange { wire: usize, n: usize },
    #[error("scale gate M(0) is singular")]
    SingularScale,
    #[error("state is not stabilized: largest ancilla outcome probability {0:.3e} short of 1")]
    NotStabilized(f64),
    #[error("projection onto the code space vanished")]
    ProjectionVanished,
    #[error("state of {0} amplitudes exceeds the simulator cap")]
    StateTooLarge(String),
    #[error("closed form disagrees with computed value: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}
