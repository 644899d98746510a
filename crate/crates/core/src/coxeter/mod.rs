//! Coxeter matrices, the geometric representation and group elements.

mod catalog;
mod cayley;
mod element;
mod linalg;
mod matrix;
mod system;

pub use catalog::FiniteType;
pub use cayley::{cayley_bfs, CayleyBall};
pub use element::{GroupElement, Word};
pub use linalg::{Matrix, Vector};
pub use matrix::{Bond, CoxeterMatrix};
pub use system::{CoxeterSystem, NormMode};
