//! Coxeter matrices, their diagram symmetries, and breadth-first
//! enumeration of the finite groups they present.

mod geometry;
mod matrix;
mod symmetry;
mod table;

pub use geometry::{bilinear_form, geometric_generators, CoxElement, GenAction, SqMatrix};
pub use matrix::{Classification, CoxeterMatrix, IrreducibleType};
pub use symmetry::{diagram_symmetries, DiagramSymmetry};
pub use table::{ElementId, GroupTable};
