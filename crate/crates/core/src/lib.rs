//! Exact computation of non-symmetric Jack polynomials, Dunkl and Cherednik
//! operators, generalized binomial coefficients, non-symmetric Laguerre and
//! Meixner–Pollaczek type polynomials, and the expansion identities that
//! connect them.

pub mod binomial;
pub mod error;
pub mod expansions;
pub mod interp;
pub mod jack;
pub mod memo;
pub mod numquad;
pub mod operators;
pub mod params;
pub mod poly;
pub mod rational;
pub mod special;

pub use error::{Error, Result};
pub use jack::JackFamily;
pub use operators::Permutation;
pub use params::{AlphaContext, Composition, RationalVector};
pub use poly::{ExpansionTable, Polynomial, TruncatedSeries};
pub use rational::Q;
