//! Compositions, the fundamental bases `F` and `F^B`, type-B peak data,
//! peak functions and `Δ^B`.

mod composition;
mod element;
mod peak;

pub use composition::{Composition, TypeBComposition};
pub use element::{f_monomials, fb_monomials, Basis, QSymElement};
pub use peak::{
    delta_b, peak_data, peak_function_a, peak_function_b, peak_set, valley_set, zeta, PeakDataB,
    Variant,
};

#[cfg(test)]
mod props {
    use super::*;
    use crate::subset::Subset;
    use crate::RationalMatrix;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn fb_truncations_are_independent() {
        for n in 1..=6 {
            let nvars = n + 1;
            let sets: Vec<Subset> = Subset::zero_based(n).subsets().collect();
            let polys: Vec<_> = sets
                .iter()
                .map(|&s| fb_monomials(s, n, nvars).unwrap())
                .collect();
            let mut columns = std::collections::BTreeMap::new();
            let mut triplets = Vec::new();
            for (row, p) in polys.iter().enumerate() {
                for (exp, c) in p.terms() {
                    let next = columns.len();
                    let col = *columns.entry(exp.clone()).or_insert(next);
                    triplets.push((row, col, BigRational::from_integer(c.clone())));
                }
            }
            let m = RationalMatrix::from_triplets(sets.len(), columns.len(), triplets);
            assert_eq!(m.rank(), sets.len(), "n={n}");
        }
    }

    proptest! {
        #[test]
        fn delta_is_additive_under_monomials(n in 1usize..5, bits in 0u32..16) {
            let set = Subset::from_bits(bits).intersection(Subset::zero_based(n));
            let d = delta_b(set, n, Variant::Literal).unwrap();
            let direct = d.to_monomials(n + 1);
            let mut summed = crate::IntPolynomial::zero(n + 1, n as u32);
            for (&j, c) in d.coeffs() {
                summed = summed.add(&fb_monomials(j, n, n + 1).unwrap().scale(c)).unwrap();
            }
            prop_assert!(direct.try_eq(&summed).unwrap());
        }
    }
}
