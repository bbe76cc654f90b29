//! Finite k-linear `B`-categories, equivariant bifunctors, the category-level
//! Hochschild complexes and their Morita-type comparison oracles.

mod category;
mod complex;
mod oracles;

#[cfg(test)]
mod tests;

pub use category::{
    build_module_category, check_conjugation, invariant_subcategory, one_object, validate_bcategory,
    validate_bifunctor, BCategoryData, BifunctorData, Component, Decomposition, FiniteLinearCategory,
    InvariantSubcategory, ModuleCategory, Retraction,
};
pub use complex::{
    build_cat_ch, cat_quotient, compare_one_object, CatHochschildData, CategoryComplex, DegreeLayout, TupleBlock,
};
pub use oracles::{cofinality_oracle, free_generation_oracle};
pub(crate) use category::check_module_table;
