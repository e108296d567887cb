use proptest::prelude::*;
use tbhl_core::clifford::{clifford_normalize, k_set};
use tbhl_core::families::{random_convex_set, set_report, shuffles};
use tbhl_core::perm::{CoxeterDescriptor, SignedPermutation, WeakOrder};
use tbhl_core::qsym::{peak_data, valley_set};
use tbhl_core::{GaussianRational, Subset};

fn signed_permutation(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), n),
            )
        })
        .prop_map(|(values, signs)| {
            let window: Vec<i32> = values
                .iter()
                .zip(&signs)
                .map(|(&v, &neg)| if neg { -v } else { v })
                .collect();
            SignedPermutation::from_window(&window).unwrap()
        })
}

proptest! {
    #[test]
    fn descents_lower_length(w in signed_permutation(6)) {
        let desc = CoxeterDescriptor::type_b(w.n());
        let des = w.descents_in(&desc);
        for i in 0..w.n() {
            let moved = w.left_simple(i);
            prop_assert_eq!(moved.left_simple(i), w.clone());
            prop_assert_eq!(moved.length() < w.length(), des.contains(i));
        }
    }

    #[test]
    fn inverse_reverses_products(a in signed_permutation(5), b_seed in any::<u64>()) {
        let n = a.n();
        let b = {
            let mut values: Vec<i32> = (1..=n as i32).collect();
            values.rotate_left((b_seed as usize) % n);
            if b_seed & 1 == 1 {
                values[0] = -values[0];
            }
            SignedPermutation::from_window(&values).unwrap()
        };
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.inverse(), b.inverse().mul(&a.inverse()).unwrap());
        prop_assert!(ab.length() <= a.length() + b.length());
    }

    #[test]
    fn clifford_words_multiply_like_normal_forms(x in proptest::collection::vec(1usize..6, 0..6), y in proptest::collection::vec(1usize..6, 0..6)) {
        let one = GaussianRational::from_ints(1, 0);
        let whole: Vec<usize> = x.iter().chain(&y).copied().collect();
        let a = clifford_normalize(&x, one.clone()).unwrap();
        let b = clifford_normalize(&y, one.clone()).unwrap();
        let ab = clifford_normalize(&whole, one).unwrap();
        let mut glued: Vec<usize> = a.subset.to_vec();
        glued.extend(b.subset.to_vec());
        let again = clifford_normalize(&glued, a.sign.clone() * b.sign.clone()).unwrap();
        prop_assert_eq!(ab, again);
    }

    #[test]
    fn valleys_count_peaks_and_zeta(n in 1usize..20, bits in any::<u32>()) {
        let set = Subset::from_bits(bits).intersection(Subset::zero_based(n));
        let d = peak_data(set, n);
        prop_assert_eq!(d.valley.len(), d.peak.len() + d.zeta as usize);
    }

    #[test]
    fn adding_a_valley_keeps_the_factor(n in 1usize..7, i_bits in any::<u32>(), d_bits in any::<u32>()) {
        let full = Subset::zero_based(n);
        let set = Subset::from_bits(i_bits).intersection(full);
        let d = Subset::from_bits(d_bits).intersection(Subset::one_based(n));
        for v in valley_set(full.difference(set), n).iter() {
            prop_assert_eq!(k_set(set, d, n), k_set(set, d.with(v), n));
        }
    }

    #[test]
    fn shuffle_count_is_binomial(a in 0usize..5, b in 0usize..5) {
        let x0: Vec<i32> = (1..=a as i32).collect();
        let x1: Vec<i32> = (1..=b as i32).map(|v| -v).collect();
        let binom = (1..=b).fold(1usize, |acc, k| acc * (a + k) / k);
        prop_assert_eq!(shuffles(&x0, &x1).unwrap().len(), binom);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_convex_sets_give_modules(seed in any::<u64>(), n in 1usize..4) {
        let set = random_convex_set(n, seed);
        let order = WeakOrder::new(CoxeterDescriptor::type_b(n));
        prop_assert!(order.is_convex(&set));
        let report = set_report("random", &set, n).unwrap();
        prop_assert!(report.is_ok());
    }
}
