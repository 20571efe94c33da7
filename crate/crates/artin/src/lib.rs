//! Spherical Artin-Tits groups as lattice-ordered groups.
//!
//! The crate builds finite Coxeter groups exactly (over Q(2cos(pi/L))),
//! computes left-weighted normal forms and lattice operations in the
//! corresponding Artin-Tits monoids and groups, explores divisibility-order
//! balls and their automorphisms, and constructs the twisted group
//! structures obtained by composing translation with diagram symmetries.

pub mod brace;
pub mod coxeter;
pub mod error;
pub mod exact;
pub mod exec;
pub mod garside;
pub mod order;

pub use error::{Error, Result};
pub use exec::ExecMode;
