//! Exact computations for type-B 0-Hecke and 0-Hecke-Clifford modules,
//! type-B quasisymmetric functions and domino tableaux.

pub mod algebra;
pub mod clifford;
pub mod domino;
pub mod error;
pub mod families;
pub mod hecke;
pub mod perm;
pub mod qsym;
pub mod shifted;
pub mod subset;
pub mod verify;

pub use algebra::{GaussianRational, SparseMatrix, TruncatedPolynomial};
pub use error::{Error, Result};
pub use subset::Subset;

pub type Rational = num_rational::BigRational;
pub type RationalMatrix = SparseMatrix<Rational>;
pub type GaussianMatrix = SparseMatrix<GaussianRational>;
pub type IntPolynomial = TruncatedPolynomial<num_bigint::BigInt>;
