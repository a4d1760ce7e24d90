use std::fmt;

use num_complex::Complex64;

/// Crate-wide error type.
///
/// Variants mirror the failure modes of the individual modules so callers
/// can match on exactly what went wrong instead of parsing strings.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A normalized series must start with first coefficient exactly 1.
    Normalization { got: Complex64 },
    /// A coefficient list was empty.
    EmptyInput,
    /// Series inversion requires a nonzero constant term.
    ZeroConstantTerm,
    /// The defect bound lambda must be strictly positive.
    InvalidLambda(f64),
    /// A parameter fell outside its documented domain.
    Domain(String),
    /// The operation requires a certificate of class membership.
    NotCertified,
    /// A functional denominator vanished during a circle scan.
    PoleEncountered {
        radius: f64,
        theta: f64,
        /// Largest scanned radius known to be pole-free, when the scan
        /// stepped outward in `r`.
        last_good_radius: Option<f64>,
    },
    /// Bracket endpoints do not straddle a sign change.
    NoSignChange { a: f64, b: f64, fa: f64, fb: f64 },
    /// Iteration cap reached before convergence.
    MaxIterations(usize),
    /// Equation name not present in the catalog.
    UnknownEquation(String),
    /// Malformed coefficient file or JSON payload.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Normalization { got } => {
                write!(f, "first coefficient must be exactly 1, got {}", got)
            }
            Error::EmptyInput => write!(f, "coefficient list is empty"),
            Error::ZeroConstantTerm => {
                write!(f, "cannot invert a series with zero constant term")
            }
            Error::InvalidLambda(l) => {
                write!(f, "lambda must be strictly positive, got {}", l)
            }
            Error::Domain(msg) => write!(f, "domain error: {}", msg),
            Error::NotCertified => {
                write!(f, "operation requires a certified class member")
            }
            Error::PoleEncountered {
                radius,
                theta,
                last_good_radius,
            } => {
                write!(f, "functional pole near r={}, theta={}", radius, theta)?;
                if let Some(r) = last_good_radius {
                    write!(f, " (last pole-free radius {})", r)?;
                }
                Ok(())
            }
            Error::NoSignChange { a, b, fa, fb } => write!(
                f,
                "no sign change on [{}, {}]: f(a)={}, f(b)={}",
                a, b, fa, fb
            ),
            Error::MaxIterations(n) => {
                write!(f, "no convergence after {} iterations", n)
            }
            Error::UnknownEquation(name) => {
                write!(f, "unknown equation name: {}", name)
            }
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}
