use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gcd of zeros")]
    GcdOfZeros,

    #[error("valuation of zero")]
    ValuationOfZero,

    #[error("no roots: polynomial is constant")]
    NoRoots,

    #[error("pole of family at t = {0}")]
    PoleAt(String),

    #[error("resultant vanishes at t = {0}")]
    DegenerateAt(String),

    #[error("zero form")]
    ZeroForm,

    #[error("degenerate lift: Res(P, Q) vanishes identically")]
    DegenerateLift,

    #[error("lift components must have equal degree d >= 2, got {0} and {1}")]
    BadLiftDegrees(usize, usize),

    #[error("theta requires polynomial coefficients (denominator 1)")]
    ThetaNonPolynomial,

    #[error("not primitive, use strong_bound")]
    NotPrimitive,

    #[error("nothing to certify: deg_s = 0")]
    NothingToCertify,

    #[error("no certificate solution with a != 0")]
    NoCertificateSolution,

    #[error("root finder did not converge at {0}")]
    RootFinderDiverged(String),

    #[error("preimage tree too deep: d^(2k) = {0} exceeds the point budget")]
    TreeTooDeep(f64),

    #[error("no rational unit sample at p = {0}: every unit residue is a root mod p")]
    NoUnitSample(String),

    #[error("unit circle scan exhausted")]
    ScanExhausted,

    #[error("need at least 4 distinct magnitudes, got {0}")]
    TooFewMagnitudes(usize),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
}
