//! Cayley-table groups, subgroups and homomorphisms.

mod morphism;
mod subgroup;
mod table;

pub use morphism::{homomorphism_defect, is_homomorphism, Morphism};
pub use subgroup::Subgroup;
pub use table::{verify_group_axioms, AxiomViolation, GroupTable, Limits};
