//! Exact Hopf–Hochschild homology of module algebras over finite-dimensional
//! bialgebras, with machine-checked comparison maps.

pub mod error;
pub mod exactfield;
pub mod hhcomplex;
pub mod hopfcore;
pub mod lincat;
pub mod modact;
pub mod report;
pub mod tensor;
pub mod ydtwist;

pub use error::{Error, Result};
