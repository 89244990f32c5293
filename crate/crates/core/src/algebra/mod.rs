//! Bound quiver algebras: presentations, the text format and the
//! multiplication table on a basis of standard paths.

mod build;
mod dsl;
mod quiver;

pub use build::{build_algebra, opposite_algebra, AlgebraData, BoundQuiverAlgebra, BuildOptions, Sparse};
pub use dsl::{parse_algebra, print_presentation, print_relation};
pub use quiver::{Arrow, PathWord, Presentation, Quiver, Relation};
