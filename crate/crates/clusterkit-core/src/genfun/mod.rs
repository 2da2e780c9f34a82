//! Exact generating-function arithmetic and the class transforms.
//!
//! Everything here is exact arithmetic over arbitrary-precision rationals:
//! dense polynomials ([`Poly`]), rational generating functions kept in a
//! reduced canonical form ([`RationalGF`]), and truncated formal power
//! series ([`Series`]) with a square root so the algebraic generating
//! functions are representable too.
//!
//! Generating functions are indexed by rank: the coefficient of `x^n`
//! counts permutations in `S_{n+1}`. Recurrences extracted from rational
//! generating functions report both the rank indexing and the size
//! indexing (which differ by the documented shift of one).

pub mod catalog;
pub mod lattice;
pub mod poly;
pub mod ratfun;
pub mod recurrence;
pub mod series;
pub mod transform;

// The exact scalar types, re-exported for downstream users.
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use catalog::NamedClass;
pub use lattice::lattice_path_gf_avoiding;
pub use poly::Poly;
pub use ratfun::RationalGF;
pub use recurrence::{recurrence_from_ratfun, Recurrence};
pub use series::Series;
pub use transform::{
    clustered_gf, clustered_series, diamond_avoiding_gf, diamond_closed_from_g,
    diamond_closed_from_gc, diamond_component_form, pieces_gf, pieces_series, to_connected_gf,
    to_connected_series, to_full_gf, to_full_series, ClusterMode,
};

use core::fmt;

/// Default truncation order for series computations; covers every table
/// with ample margin.
pub const DEFAULT_ORDER: usize = 40;

/// Errors from generating-function arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GfError {
    /// Division by the zero polynomial or zero generating function.
    DivisionByZero,
    /// The denominator (or divisor) has constant term zero, so the result
    /// is not a power series.
    ZeroConstantTerm,
    /// Square roots require constant term one.
    NonUnitConstantTerm,
    /// The shift-then-divide helper found a nonzero low-order coefficient
    /// in the numerator below the divisor's valuation.
    NonVanishingLowOrder { valuation: usize },
    /// The truncation order is too small for the requested operation.
    InsufficientOrder { needed: usize },
    /// Transform input must have constant term one.
    ConstantTermNotOne,
    /// Transform input must have constant term zero.
    ConstantTermNotZero,
    /// The two closed diamond forms disagreed (internal check).
    FormsDisagree,
    /// Lattice path step words must be nonempty.
    EmptyStepWord,
    /// Lattice path step words use only `U` and `D`.
    InvalidStepChar { ch: char },
    /// Parse failure for the text formats.
    Parse { message: alloc::string::String },
}

impl fmt::Display for GfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GfError::DivisionByZero => write!(f, "division by zero"),
            GfError::ZeroConstantTerm => write!(f, "denominator has constant term zero"),
            GfError::NonUnitConstantTerm => write!(f, "sqrt requires constant term 1"),
            GfError::NonVanishingLowOrder { valuation } => write!(
                f,
                "numerator must vanish to order {valuation} to divide by this denominator"
            ),
            GfError::InsufficientOrder { needed } => {
                write!(f, "truncation order too small (need at least {needed})")
            }
            GfError::ConstantTermNotOne => write!(f, "input must have constant term 1"),
            GfError::ConstantTermNotZero => write!(f, "input must have constant term 0"),
            GfError::FormsDisagree => write!(f, "the two closed diamond forms disagree"),
            GfError::EmptyStepWord => write!(f, "forbidden step word must be nonempty"),
            GfError::InvalidStepChar { ch } => {
                write!(f, "invalid step character {ch:?} (expected U or D)")
            }
            GfError::Parse { message } => write!(f, "parse error: {message}"),
        }
    }
}

impl core::error::Error for GfError {}
