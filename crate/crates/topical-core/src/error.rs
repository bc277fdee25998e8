use core::fmt;

/// Errors shared by all modules.  Every variant corresponds to a violated
/// stated precondition, never to an internal panic path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors (or a vector and a configured dimension) disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// ⊤ appeared where only base-semifield values are admitted
    /// (vector coordinates, scaling factors, certain parameters).
    TopOperand(&'static str),
    /// A stated hypothesis of the operation does not hold.
    Precondition(&'static str),
    /// A vector was used as a point of the enumerated Boolean cube but has
    /// coordinates other than ε and e.
    NotBooleanPoint,
    /// Exhaustive enumeration was requested for a cube too large to sweep.
    DomainTooLarge { dim: usize, max: usize },
    /// Text input could not be parsed.
    Parse(&'static str),
    /// Two formulations that are provably equivalent disagreed; this
    /// signals a defect in the library itself, never expected.
    Inconsistency(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::TopOperand(what) => write!(f, "top is not a base-semifield value: {what}"),
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NotBooleanPoint => write!(f, "not a point of the Boolean cube"),
            Error::DomainTooLarge { dim, max } => {
                write!(f, "exhaustive sweep limited to dimension {max}, got {dim}")
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
            Error::Inconsistency(what) => write!(f, "internal consistency failure: {what}"),
        }
    }
}

impl core::error::Error for Error {}
