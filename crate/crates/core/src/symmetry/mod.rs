//! Magnetic space group C4v + {T | 1/2, 1/2} C4v and its little groups.

mod abstract_group;
mod element;
mod group;

pub use abstract_group::FiniteGroup;
pub use element::{space_group_cosets, HalfVec, PointOp, SymmetryElement};
pub use group::{CorepType, LittleGroup, TranslationQuotient};
