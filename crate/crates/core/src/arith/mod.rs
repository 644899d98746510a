//! Exact arithmetic in real cyclotomic fields.

mod field;
mod number;

pub use field::{cyclotomic, CyclotomicField};
pub use number::AlgebraicNumber;
