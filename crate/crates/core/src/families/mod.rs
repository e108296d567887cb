//! Named subsets of `B_n`: left descent classes, left-unimodal permutations,
//! signed arc permutations, and random convex sets.

mod build;
mod report;

pub use build::{
    arc_nonconvexity_witness, build_family, convexity_violation, format_word, is_left_unimodal,
    is_signed_arc, shuffles, unimodal_interval_endpoints, unimodal_interval_endpoints_corrected,
    ConvexityWitness, FamilyKind, FamilySpec, PermutationFamily,
};
pub use report::{family_report, random_convex_set, set_report, FamilyReport};
