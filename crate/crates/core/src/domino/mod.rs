//! Partitions, domino tilings, standard domino tableaux and the domino
//! functions `G_λ`.

mod partition;
mod sdt;
mod tiling;

pub use partition::Partition;
pub use sdt::{
    brute_force_sdt, enumerate_sdt, g_lambda, sdt_labeled_basis, sdt_operator_family,
    StandardDominoTableau,
};
pub use tiling::{
    cell_index, descents_of, enumerate_tilings, flip_northwest, strictly_increasing, tiles_exactly,
    Domino, Orientation,
};
