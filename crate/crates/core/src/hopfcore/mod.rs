//! Algebras, bialgebras and Hopf algebras from structure constants.

mod algebra;
mod builtins;
mod hopf;

pub use algebra::StructureAlgebra;
pub use builtins::{check_group_table, cyclic_table, group_algebra, make_builtin, sweedler4, trivial_k, Builtin};
pub use hopf::{CoproductTerm, HopfData, IteratedCoproduct};
