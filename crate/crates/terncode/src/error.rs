//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong while building tables, spectra or verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rank was outside `0..3^n`.
    RankOutOfRange { rank: usize, n: usize },
    /// Two vectors (or a vector and a table) had incompatible dimensions.
    DimensionMismatch { expected: usize, got: usize },
    /// Requested dimensions exceed the supported cap (`n <= 16`, `m <= 8`).
    CapExceeded { what: &'static str, value: usize, cap: usize },
    /// A basis passed to `SubspaceSpec` is linearly dependent.
    DependentBasis,
    /// No fixed modulus is available for this extension degree.
    UnsupportedExtensionDegree(usize),
    /// Indicator-quadratic constraint violation: the named vector lies in
    /// the dual of the subspace, or the subspace is too large.
    IndicatorConstraint { which: &'static str },
    /// The two direction vectors of an indicator-quadratic function must be
    /// linearly independent.
    DependentDirections,
    /// `field_mult_bent` requires `m <= k`.
    TooManyComponents { m: usize, k: usize },
    /// A spectrum row failed the inverse-transform divisibility or unit
    /// check, so it is not the spectrum of any function.
    NotASpectrum { nu_rank: usize },
    /// A weight computed from a spectrum row was not an integer; the
    /// spectrum is corrupt or the function does not vanish at the origin.
    WeightNotIntegral { mu_rank: usize, nu_rank: usize },
    /// The function does not satisfy `F(0) = 0`.
    NonzeroOrigin,
    /// A component `mu.F` is affine; the offending `mu` rank is reported.
    AffineComponent { mu_rank: usize },
    /// A weight distribution without nonzero weights was queried.
    EmptyDistribution,
    /// Exhaustive covering enumeration was requested above its cap.
    CoveringCapExceeded { codewords: usize, cap: usize },
    /// A parameter of the AB-violating pipeline is outside its valid range.
    Parameter(String),
    /// A pipeline verification step failed (an expected property did not
    /// hold on the constructed instance).
    VerificationFailed(String),
    /// A `TFT/1` function-table file could not be parsed.
    TftParse(String),
    /// Underlying I/O failure.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankOutOfRange { rank, n } => {
                write!(f, "rank {rank} out of range for F_3^{n}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::CapExceeded { what, value, cap } => {
                write!(f, "{what} = {value} exceeds supported cap {cap}")
            }
            Error::DependentBasis => write!(f, "basis vectors are linearly dependent"),
            Error::UnsupportedExtensionDegree(k) => {
                write!(f, "no fixed irreducible modulus for extension degree {k}")
            }
            Error::IndicatorConstraint { which } => {
                write!(f, "indicator-quadratic constraint violated: {which}")
            }
            Error::DependentDirections => {
                write!(f, "direction vectors a, b must be linearly independent")
            }
            Error::TooManyComponents { m, k } => {
                write!(f, "field_mult_bent requires m <= k, got m = {m}, k = {k}")
            }
            Error::NotASpectrum { nu_rank } => {
                write!(f, "not a spectrum: inverse transform fails at nu rank {nu_rank}")
            }
            Error::WeightNotIntegral { mu_rank, nu_rank } => write!(
                f,
                "weight not integral at (mu, nu) ranks ({mu_rank}, {nu_rank}); \
                 spectrum corrupt or F(0) != 0"
            ),
            Error::NonzeroOrigin => write!(f, "function does not satisfy F(0) = 0"),
            Error::AffineComponent { mu_rank } => {
                write!(f, "component mu.F is affine at mu rank {mu_rank}")
            }
            Error::EmptyDistribution => write!(f, "weight distribution has no nonzero weight"),
            Error::CoveringCapExceeded { codewords, cap } => write!(
                f,
                "exhaustive covering requested for {codewords} codewords (cap {cap}); \
                 use sampled mode"
            ),
            Error::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
            Error::TftParse(msg) => write!(f, "TFT parse error: {msg}"),
            Error::Io(msg) => write!(f, "i/o error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
