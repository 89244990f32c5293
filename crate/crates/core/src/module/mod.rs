//! Right modules as quiver representations.

mod hom;
mod rep;
mod standard;

pub use hom::{cogen_membership, gen_membership, hom_basis, hom_dim, hom_matrix, reject_rows, trace_rows};
pub use rep::{Morphism, Representation};
pub use standard::{
    dual_regular, injective, projective, regular, simple, standard_modules, StandardModules,
};

#[cfg(test)]
mod tests;
