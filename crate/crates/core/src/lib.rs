pub mod algebra;
pub mod auslander_reiten;
pub mod corpus;
pub mod decomposition;
pub mod error;
pub mod expr;
pub mod homological;
pub mod linalg;
pub mod module;
pub mod report;
pub mod tilting;

pub use algebra::{build_algebra, parse_algebra, BoundQuiverAlgebra, BuildOptions, Presentation};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Matrix, Scalar};
pub use module::{Morphism, Representation};
