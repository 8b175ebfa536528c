//! Exact and numerical construction of superminimal almost complex
//! 2-spheres in S⁶ from their directrix curves, and verification of the
//! identities they satisfy.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod g2;
pub mod harmonic;
pub mod io;
pub mod plucker;
pub mod quadrature;
pub mod sample;
pub mod twistor;

pub use error::{Error, Result};
