//! Exact generating-function algebra for Bell, Euler, Stirling and
//! Bell-based Euler polynomials, with executable identity checks and an
//! umbral-calculus layer.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! identities are checked as equality of canonical polynomial forms.

pub mod algebra;
pub mod error;
pub mod identities;
pub mod sequences;
pub mod umbral;

pub use algebra::{BivariatePoly, Poly, Rational, TruncatedSeries};
pub use error::{ParseError, SequenceError, SeriesError, UmbralError};
pub use num_traits::{One, Zero};
