//! Exact arithmetic for Laurent polynomials, rational functions, and
//! quadratic extensions, with a canonical text form for fixtures.

pub mod error;
pub mod expt;
pub mod parse;
pub mod poly;
pub mod quad;
pub mod ratfn;
pub mod report;
pub mod sample;
pub mod vars;

pub use error::AlgebraError;
pub use expt::ExponentVector;
pub use poly::LaurentPoly;
pub use quad::QuadElem;
pub use ratfn::RationalFn;
pub use report::{Check, VerificationReport};
pub use vars::VarTable;

/// Arbitrary-precision rational scalar.
pub type Rational = num::BigRational;

pub type Result<T> = std::result::Result<T, AlgebraError>;

/// Convenience constructor for small rational constants.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(num::BigInt::from(p), num::BigInt::from(q))
}
