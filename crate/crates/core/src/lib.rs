//! Exact combinatorics of Coxeter groups: root posets, small roots, reflection prefixes,
//! canonical automata and Poincaré-type series.

#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod arith;
pub mod automata;
pub mod coxeter;
pub mod dihedral;
pub mod prefixes;
pub mod roots;
mod error;
pub mod series;

pub use error::{CoxError, Result};
