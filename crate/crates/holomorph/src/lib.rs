//! Command-line companion to `holomorph-core`: the group-expression
//! language, Cayley-table JSON and the verification suite.

pub mod expr;
pub mod json;
pub mod verify;
