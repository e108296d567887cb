//! The type-B 0-Hecke–Clifford algebra and its induced modules.

mod algebra;
mod characteristic;
mod maps;
mod module;

pub use algebra::{clifford_normalize, pi_commute, CliffordNormalForm};
pub use characteristic::{
    induce_and_restrict, iso_predicate, k_factor, k_set, res_mi_formula,
    restriction_characteristic, InductionReport, ResForm,
};
pub use maps::{
    build_intertwiner, centralizer_check, verify_intertwiner, Intertwiner, IntertwinerCheck,
};
pub use module::{
    build_mi, build_mi_table, induce, is_cover, render_ribbon, verify_hcl_relations, HclReport,
    InducedModule,
};
