//! Desk-scale order theory: poset balls in the positive cone, intervals,
//! rigidity checks and automorphism search on the Hasse diagram.

mod autos;
mod ball;
mod dot;
mod rigidity;

pub use autos::{atom_permutation, atom_symmetry, poset_automorphisms};
pub use ball::{divisors, interval, PosetBall, DEFAULT_NODE_GUARD};
pub use dot::export_dot;
pub use rigidity::{check_rigidity, RigidityReport};
