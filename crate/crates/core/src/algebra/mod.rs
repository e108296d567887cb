//! Exact scalars, sparse matrices and truncated polynomials.

mod gaussian;
mod matrix;
mod poly;
mod scalar;

pub use gaussian::{parse_rational, rational_to_string, GaussianRational};
pub use matrix::SparseMatrix;
pub use poly::{bigint_json, TruncatedPolynomial};
pub use scalar::{from_int, rational_from_bigint, FieldScalar, Scalar};

#[cfg(test)]
mod props {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn rational() -> impl Strategy<Value = BigRational> {
        (-20i64..20, 1i64..8).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
    }

    fn gaussian() -> impl Strategy<Value = GaussianRational> {
        (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix<GaussianRational>> {
        proptest::collection::vec((0..rows, 0..cols, gaussian()), 0..8)
            .prop_map(move |t| SparseMatrix::from_triplets(rows, cols, t))
    }

    fn poly() -> impl Strategy<Value = TruncatedPolynomial<BigInt>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -5i64..5), 0..6).prop_map(
            |terms| {
                let mut p = TruncatedPolynomial::zero(3, 12);
                for (e, c) in terms {
                    p.add_term(e, c.into());
                }
                p
            },
        )
    }

    proptest! {
        #[test]
        fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(
                a.clone() * (b.clone() + c.clone()),
                a.clone() * b.clone() + a.clone() * c.clone()
            );
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.inv().unwrap(), GaussianRational::one());
            }
        }

        #[test]
        fn matrix_mul_associative(a in matrix(3, 2), b in matrix(2, 4), c in matrix(4, 2)) {
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn matrix_entries_never_zero(a in matrix(3, 3), b in matrix(3, 3)) {
            let s = a.add(&b).unwrap();
            prop_assert!(s.iter().all(|(_, _, v)| !v.is_zero()));
        }

        #[test]
        fn poly_ring_laws(p in poly(), q in poly(), r in poly()) {
            prop_assert!(p.mul(&q).unwrap().try_eq(&q.mul(&p).unwrap()).unwrap());
            let lhs = p.mul(&q.add(&r).unwrap()).unwrap();
            let rhs = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
            prop_assert!(lhs.try_eq(&rhs).unwrap());
            prop_assert!(!lhs.truncated());
        }
    }
}
