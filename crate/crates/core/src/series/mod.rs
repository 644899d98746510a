//! Polynomials and rational generating functions over the rationals.

mod poly;
mod rational;
mod transfer;

pub use poly::Polynomial;
pub use rational::RationalSeries;
pub use transfer::{chain_series, dfa_series, pal_series};
