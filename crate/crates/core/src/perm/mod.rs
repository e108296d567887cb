//! The hyperoctahedral group `B_n` and the symmetric group `S_n` in window
//! notation, with length, descents, left weak order and ascent-compatibility.

mod coxeter;
mod signed;
mod weak;

pub use coxeter::{CoxeterDescriptor, CoxeterKind};
pub use signed::{all_elements, bfs_lengths, SignedPermutation};
pub use weak::{
    ascent_compatibility_witness, is_aligned, is_ascent_compatible, reflections, AlignedWitness,
    Reflection, WeakOrder,
};
