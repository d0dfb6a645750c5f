//! Enumeration of the permutation classes Av(312, 4321) and Av(321, 4123)
//! by number of cycles, fixed points, excedances, and inversions.
//!
//! The crate has three layers that check each other:
//!
//! * [`bijections`] — two size-reducing bijections (`phi` for Av(312, 4321),
//!   `psi` for Av(321, 4123)) from a four-part multiset of smaller class
//!   members onto the class, with per-case statistic deltas.
//! * [`series`] — exact sparse polynomials in the markers t (cycles),
//!   u (fixed points), x (excedances), y (inversions), and the seven built-in
//!   rational generating functions with series expansion and the two cycle
//!   recurrences.
//! * [`oracle`] — brute-force enumeration of S_n with class and involution
//!   filters, producing the same joint distributions independently.
//!
//! All integer arithmetic is exact; coefficient overflow is a hard error.
//! The crate is `no_std` (with `alloc`); IO and the CLI live in the
//! companion `permcycle-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bijections;
pub mod oracle;
pub mod patterns;
pub mod perm;
pub mod series;

use core::fmt;

/// Errors shared by all modules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// One-line values are not a rearrangement of 1..=n.
    InvalidOneLine,
    /// Cycle list does not partition 1..=n; carries the offending element.
    MalformedCycles { element: usize },
    /// A permutation is too small for the requested operation.
    SizeTooSmall { need: usize, got: usize },
    /// Preimage size does not match its case rule for the target size.
    SizeMismatch { expected: usize, got: usize },
    /// The bijections are defined only for target size n >= 4.
    TargetTooSmall { n: usize },
    /// Permutation is outside the pattern class (or restricted set) required here.
    OutsideClass,
    /// Exhaustive enumeration refused: n exceeds the configured cap.
    SizeCapExceeded { n: usize, cap: usize },
    /// Exact integer coefficient arithmetic overflowed.
    CoefficientOverflow,
    /// Rational generating function denominator has no unit constant term.
    UnnormalizedDenominator,
    /// Malformed textual input.
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOneLine => {
                write!(f, "one-line values are not a permutation of 1..=n")
            }
            Error::MalformedCycles { element } => {
                write!(f, "cycles do not partition 1..=n (element {element})")
            }
            Error::SizeTooSmall { need, got } => {
                write!(f, "permutation of size {got} is too small (need at least {need})")
            }
            Error::SizeMismatch { expected, got } => {
                write!(f, "preimage has size {got}, case rule requires {expected}")
            }
            Error::TargetTooSmall { n } => {
                write!(f, "bijection undefined for target size {n} (need n >= 4)")
            }
            Error::OutsideClass => write!(f, "permutation lies outside the required class"),
            Error::SizeCapExceeded { n, cap } => {
                write!(f, "n = {n} exceeds the enumeration cap {cap}")
            }
            Error::CoefficientOverflow => write!(f, "exact coefficient arithmetic overflowed"),
            Error::UnnormalizedDenominator => {
                write!(f, "denominator constant term is not a unit")
            }
            Error::Parse(what) => write!(f, "parse error: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
