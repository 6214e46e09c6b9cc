//! Irreducible representations and Wigner corepresentations of the little groups.

mod construct;
mod matrix;
mod tables;

pub use construct::{
    apply_label_decoration, build_type_a, build_type_c, corep_catalog, corep_equivalent, corep_number,
    equivalence_defect, multiplication_defect, reference_beta, type_a_matrices, Corepresentation, Decoration,
    Equivalence, EXACT_TOL,
};
pub use matrix::CMat;
pub use tables::{CharacterTable, Irrep};
