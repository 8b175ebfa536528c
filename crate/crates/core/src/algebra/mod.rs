//! Exact scalars, polynomials in `z` and `z̄`, and rational functions.

mod alg;
mod bipoly;
pub mod linalg;
mod poly;
mod rational_fn;
mod scalar;

pub use alg::AlgScalar;
pub use bipoly::BiPoly;
pub use poly::Poly;
pub use rational_fn::RationalFn;
pub use scalar::{Conjugate, Ring, Scalar};
