//! Operator families for `π_0..π_{n-1}` on labeled bases, relation checks and
//! characteristics by composition series.

mod basis;
mod family;
mod series;

pub use basis::LabeledBasis;
pub use family::{
    build_from_labeled_basis, verify_relations, OperatorFamily, RelationKind, RelationReport,
};
pub use series::{
    characteristic_by_composition_series, characteristic_by_descent_sum, permutation_family, qx,
    CompositionSeries, TieBreak,
};
