//! Hochschild complexes of module algebras, the obstruction `J_*`, the
//! quotients `QCH_*` and their coinvariants, the equivariant bar complex
//! `CB_*(A)`, cochains, and comparison oracles.

mod bar;
mod chain;
mod cochain;
mod hochschild;
mod mainiso;
mod ordinary;
mod quotient;

pub use bar::{build_cb, BarComplex};
pub(crate) use hochschild::{check_size, diagonal_on_tensor};
pub use chain::{ChainComplexRealization, GradedAction, DEFAULT_SIZE_CAP};
pub use hochschild::{
    build_ch, ch_action, check_action_module, dgm_oracle, diagonal_action, quotient_complex, HochschildData,
};
pub use cochain::{
    cochain_complex, compare_cochain_models, full_cochain_complex, hh01_closed_forms, restriction,
    CochainComplexRealization,
};
pub use mainiso::{main_iso_oracle, tensor_side, tor_ext_crosscheck, TensorSide};
pub use ordinary::{compare_with_ordinary, ordinary_coinvariant_homology};
pub use quotient::{
    check_action_stable, complex_homology, last_face_commutator, map_rank, obstruction_subspace, quotient_by, quotient_pipeline,
    QuotientComplex, QuotientMode,
};
