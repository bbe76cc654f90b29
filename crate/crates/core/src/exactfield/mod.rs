//! Exact scalars and the linear-algebra kernel.
//!
//! Dense [`Matrix`] values back the small public API (`rank`,
//! `kernel_basis`, `span_reduce`, `quotient_data`). The complexes use the
//! sparse [`LinearMap`] and the incremental [`Echelon`] builder, which scale
//! to ambient dimensions in the hundreds of thousands.

pub(crate) mod dense;
mod echelon;
mod field;
mod sparse;

use thiserror::Error;

pub use dense::{kernel_basis, quotient_data, rank, span_reduce, Matrix, SubspaceBasis};
pub use echelon::{null_space, Echelon, QuotientSpace};
pub use field::{format_ratio, is_prime, parse_ratio, Field, FieldSpec, PrimeField, Rationals};
pub use sparse::{normalize, LinearMap, SparseVec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("p must be prime (got {0})")]
    NotPrime(u64),
    #[error("prime {0} too large (must be below 2^31)")]
    PrimeTooLarge(u64),
    #[error("malformed scalar {0:?}")]
    BadScalar(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator of {value} vanishes modulo {p}")]
    DenominatorVanishes { value: String, p: u64 },
}
