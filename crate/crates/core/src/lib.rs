//! Exact computation of Riemann-Roch coefficients `T_i` and correction
//! terms `delta(E)` for the finite ADE subgroups of `SL(2)`: the cyclic
//! groups, the binary dihedral groups `Dic_n`, and the binary tetrahedral,
//! octahedral, and icosahedral groups.
//!
//! Everything is computed in exact arithmetic (arbitrary-precision
//! rationals and cyclotomic field elements); there are no floating-point
//! values and no tolerances. The pipeline is:
//!
//! * [`exactnum`]: rationals and `Q(zeta_N)` arithmetic,
//! * [`matgroup`]: the groups as explicit sets of 2x2 matrices, with
//!   conjugacy classes and centralizer orders,
//! * [`chartab`]: character tables (constructed for types A/D, embedded
//!   reference data for the E types) and class-function operations,
//! * [`rrcoeff`]: the coefficients `T_i`, correction terms, closed forms,
//!   and a cross-verification suite.

pub mod chartab;
pub mod exactnum;
pub mod matgroup;
pub mod rrcoeff;

pub use chartab::{character_table, CharacterTable, Irrep, KClass};
pub use exactnum::{Cyclotomic, Rational};
pub use matgroup::{ConjClass, Group, GroupSpec, Mat2};
pub use rrcoeff::RrCoefficients;

use std::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// `to_rational` on an element with nonzero non-constant coefficients.
    NotRational(String),
    /// Vector lengths do not line up with the table.
    LengthMismatch { expected: usize, got: usize },
    /// Unparseable input (group spec, word, class vector, literal).
    Parse(String),
    /// Group closure exceeded the safety cap: wrong generators.
    ClosureCap(usize),
    /// An internal cross-check failed; indicates corrupted table data.
    Integrity(String),
    /// A class function with non-integral multiplicities was passed where
    /// a virtual character was required.
    NotVirtualCharacter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::NotRational(s) => write!(f, "value is not rational: {}", s),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {}, got {}", expected, got)
            }
            Error::Parse(s) => write!(f, "{}", s),
            Error::ClosureCap(cap) => {
                write!(f, "group closure exceeded safety cap of {} elements", cap)
            }
            Error::Integrity(s) => write!(f, "integrity check failed: {}", s),
            Error::NotVirtualCharacter(s) => {
                write!(f, "not a virtual character: {}", s)
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
