//! Endomorphism algebras, decomposition into indecomposables, isomorphism
//! tests, libraries of indecomposables and Auslander algebras.

mod auslander;
mod decompose;
mod endo;
mod library;

pub use auslander::{auslander_algebra, presentations_isomorphic};
pub use decompose::{
    decompose, describe, group_summands, module_name, indecomposable_summands, is_indecomposable, is_isomorphic,
    standard_label, summary, Decomposition, SummandInfo, ISO_SAMPLES,
};
pub use endo::{endomorphism_algebra, total_matrix, EndoAlgebra};
pub use library::{
    almost_split_middle, enumerate_indecomposables, is_nakayama, library_from_json, library_to_json,
    IndecomposableLibrary, Provenance, Strategy, DEFAULT_MAX_DIM,
};

#[cfg(test)]
mod tests;
