//! Finite groups given by Cayley tables.
//!
//! Constructors for cyclic, dihedral, direct and semidirect products and
//! holomorphs; automorphism groups as tables; subgroup, quotient and
//! isomorphism machinery. Everything is exact and runs on `alloc` only.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod aut;
pub mod construct;
mod error;
pub mod group;
pub mod iso;
pub mod numth;
pub mod search;

pub use error::{Error, Result};
pub use group::{verify_group_axioms, AxiomViolation, GroupTable, Limits, Morphism, Subgroup};
