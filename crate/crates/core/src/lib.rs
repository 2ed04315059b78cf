//! Finite rings, their unit graphs, and exact graph invariants.
//!
//! The unit graph `G(R)` of a finite ring `R` has the elements of `R` as
//! vertices, with distinct `a` and `b` adjacent exactly when `a + b` is a unit.
//! The `lab` module checks structural statements about these graphs over
//! a catalog of rings.

pub mod bitset;
pub mod ring;
pub mod graph;
pub mod invariants;
pub mod lab;
pub mod structure;
