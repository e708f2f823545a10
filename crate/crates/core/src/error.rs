use alloc::string::String;
use core::fmt;

/// Errors raised by the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidMatrix(String),
    UnknownGenerator(String),
    Parse(String),
    /// A word uses letters outside the subset it was declared over.
    Alphabet(String),
    TooManyGenerators(usize),
    /// An element failed an `I`-reduced / reduced-`J` precondition.
    NotReduced,
    /// The named subset does not generate a finite parabolic subgroup.
    NotSphericalType(String),
    NotBiclosed,
    NotSimpleRoot,
    NotPositive,
    CaseNotApplicable,
    LcmBoundExceeded(usize),
    NoCommonMultiple,
    BoundExceeded(usize),
    NotConjugatePositive,
    OracleUnavailable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidMatrix(msg) => write!(f, "invalid Coxeter matrix: {msg}"),
            Error::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Alphabet(msg) => write!(f, "alphabet error: {msg}"),
            Error::TooManyGenerators(n) => write!(f, "{n} generators exceeds the limit of 64"),
            Error::NotReduced => f.write_str("element is not reduced on the required side"),
            Error::NotSphericalType(i) => write!(f, "subset {i} is not of spherical type"),
            Error::NotBiclosed => f.write_str("set of roots is not biclosed"),
            Error::NotSimpleRoot => f.write_str("root sequence has a non-simple term"),
            Error::NotPositive => f.write_str("word is not positive"),
            Error::CaseNotApplicable => f.write_str("no product-formula hypothesis holds"),
            Error::LcmBoundExceeded(b) => write!(f, "no common multiple found within bound {b}"),
            Error::NoCommonMultiple => f.write_str("elements have no common right-multiple"),
            Error::BoundExceeded(b) => write!(f, "enumeration bound {b} exceeded"),
            Error::NotConjugatePositive => f.write_str("conjugate is not a positive braid"),
            Error::OracleUnavailable(msg) => write!(f, "no oracle can certify: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
