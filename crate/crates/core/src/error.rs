use thiserror::Error;

/// Everything that can go wrong while building, inverting or drawing a triple.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}({lhs}, {rhs}) exceeds the 64-bit range")]
    Overflow {
        op: &'static str,
        lhs: u64,
        rhs: u64,
    },

    #[error("side {0} is not an even integer >= 2")]
    InvalidSide(u64),

    #[error("(t={t}, l={l}) is not a partition: l must be odd and coprime to t")]
    InvalidPartition { t: u64, l: u64 },

    #[error("side range [{from}, {to}] is empty")]
    EmptyRange { from: u64, to: u64 },

    #[error("{a}, {b}, {c} do not satisfy x^2 + y^2 = z^2")]
    NotATriple { a: u64, b: u64, c: u64 },

    #[error("({x}, {y}, {z}) share the factor {gcd}")]
    NotPrimitive { x: u64, y: u64, z: u64, gcd: u64 },

    #[error("({x}, {y}, {z}) cannot be mapped to a partition: {reason}")]
    Malformed {
        x: u64,
        y: u64,
        z: u64,
        reason: &'static str,
    },

    #[error("scale factor must be >= 1")]
    ZeroScale,

    #[error("{what} must be positive")]
    NotPositive { what: &'static str },

    #[error("diagram would be {width}x{height} px, limit is {limit} px per side")]
    SizeLimit { width: u64, height: u64, limit: u64 },

    #[error("{kind} diagram: gnomon cells cover {drawn} units^2, square has {expected}")]
    AreaMismatch {
        kind: &'static str,
        drawn: u64,
        expected: u64,
    },
}

impl Error {
    /// Stable machine-readable code, used as the CLI error prefix.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Overflow { .. } => "overflow",
            Error::InvalidSide(_) => "invalid-side",
            Error::InvalidPartition { .. } => "invalid-partition",
            Error::EmptyRange { .. } => "empty-range",
            Error::NotATriple { .. } => "not-a-triple",
            Error::NotPrimitive { .. } => "not-primitive",
            Error::Malformed { .. } => "malformed",
            Error::ZeroScale => "zero-scale",
            Error::NotPositive { .. } => "not-positive",
            Error::SizeLimit { .. } => "size-limit",
            Error::AreaMismatch { .. } => "area-mismatch",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
