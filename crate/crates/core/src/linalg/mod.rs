//! Exact dense linear algebra over prime fields and the rationals.

mod field;
mod matrix;
pub mod poly;

pub use field::{is_prime, FieldSpec, Scalar, DEFAULT_PRIME, MAX_PRIME};
pub use matrix::Matrix;
