//! Log-canonical Poisson brackets attached to a quiver, their extension to
//! quadratic field extensions, and verification of expected bracket tables.

pub mod bracket;
pub mod verify;

pub use bracket::{bracket, bracket_quad, half_bracket};
pub use verify::verify_log_canonical;

pub type Result<T> = algebra::Result<T>;
