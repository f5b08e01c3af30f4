use core::fmt;

/// Precondition violations surfaced to callers. Internal consistency
/// failures (e.g. a division that theory says must be exact leaving a
/// remainder) panic instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `d` was required to divide `n`.
    NotDivisor { d: u64, n: u64 },
    /// The modulus must be a multiple of `of`.
    NotMultipleOf { n: u64, of: u64 },
    /// Residue-class selector outside its allowed range.
    BadResidueClass { r: u64, allowed: &'static [u64] },
    /// Connection sets live on Z_n with n >= 2.
    ModulusTooSmall { n: u64 },
    /// Connection-set member out of 1..n-1.
    MemberOutOfRange { k: u64, n: u64 },
    /// Connection-set member listed twice.
    DuplicateMember { k: u64 },
    /// Input outside a formula's validity domain (e.g. the Möbius-style
    /// T formulas); the message names the violated condition.
    OutsideDomain { what: &'static str },
    /// Could not parse a textual form; carries the offending input fragment.
    Parse { what: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotDivisor { d, n } => write!(f, "{d} does not divide {n}"),
            Error::NotMultipleOf { n, of } => write!(f, "{n} is not a multiple of {of}"),
            Error::BadResidueClass { r, allowed } => {
                write!(f, "residue class {r} not in {allowed:?}")
            }
            Error::ModulusTooSmall { n } => write!(f, "modulus {n} too small (need n >= 2)"),
            Error::MemberOutOfRange { k, n } => {
                write!(f, "set member {k} outside 1..{}", n - 1)
            }
            Error::DuplicateMember { k } => write!(f, "set member {k} repeated"),
            Error::OutsideDomain { what } => write!(f, "outside validity domain: {what}"),
            Error::Parse { what } => write!(f, "parse error: {what}"),
        }
    }
}

impl core::error::Error for Error {}
