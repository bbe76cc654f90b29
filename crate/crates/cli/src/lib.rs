//! Input documents, command dispatch and report emission for `hhcalc`.

pub mod doc;
pub mod emit;
pub mod error;
pub mod run;
