use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring parameters: {0}")]
    ParameterInvalid(String),

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("element is not a unit")]
    NotAUnit,

    #[error("gcd({0}, {1}) != 1")]
    NonCoprime(u64, u64),

    #[error("rank {0} is neither 1 nor prime")]
    RNotPrime(u32),

    #[error("hensel factors are not pairwise coprime modulo p")]
    NotCoprime,

    #[error("product of the factors does not match the polynomial modulo p")]
    ProductMismatch,

    #[error("element is not fixed by the required automorphism or does not lie in the subring: {0}")]
    CoercionFailed(String),

    #[error("unknown component {0}")]
    UnknownComponent(String),

    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("code spec shape mismatch: {0}")]
    SpecShapeMismatch(String),

    #[error("code is not closed under the cyclic shift")]
    NotCyclic,

    #[error("code is not closed under multiplication by the scalar ring")]
    NotLinear,

    #[error("code is not a sum of the canonical components: {0}")]
    NotDecomposable(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("operation requires a ring of rank 1, got rank {0}")]
    RankNotOne(u32),

    #[error("no trace inner product exists for the Eisenstein family: {0}")]
    TraceUnavailable(String),

    #[error("index closure changed the code at component {component}, exponent {exponent}")]
    ClosureChangedCode { component: usize, exponent: usize },

    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
}
