//! 2-quotients, shifted tilings and the standard, semistandard and marked
//! shifted domino tableaux, with the functions `H_λ`.

mod functions;
mod quotient;
mod semistandard;
mod standard;

pub use functions::{
    conjugate_family, conjugate_label_mismatches, conjugate_labeled_basis,
    descent_interval_violation, h_lambda_monomial, h_lambda_peak, stand_theorem_failures,
    verify_peak_theorem, verify_stand_theorem, IntervalCondition,
};
pub use quotient::{two_quotient, TwoQuotient};
pub use semistandard::{enumerate_ssshdt, standardize, Letter, SemistandardTableau};
pub use standard::{
    enumerate_sshdt, is_shifted_tiling, marked_descents, shifted_tilings, weakly_above_diagonal,
    MarkedTableau, ShiftedStandardTableau,
};
