use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::GaussianRational;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// `sign · c_D` with `c_D = c_{d_1} ⋯ c_{d_r}`, `d_1 < ⋯ < d_r`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CliffordNormalForm {
    pub sign: GaussianRational,
    pub subset: Subset,
}

/// `c_D c_j = (-1)^{#{d ∈ D : d > j}} (-1)^{[j ∈ D]} c_{D △ {j}}`.
pub(crate) fn times_generator(set: Subset, j: usize) -> (i32, Subset) {
    let above = set.iter().filter(|&d| d > j).count();
    let mut sign = if above % 2 == 0 { 1 } else { -1 };
    if set.contains(j) {
        sign = -sign;
    }
    (sign, set.toggle(j))
}

/// `c_A c_B` in normal form.
pub(crate) fn multiply(a: Subset, b: Subset) -> (i32, Subset) {
    b.iter().fold((1, a), |(sign, acc), j| {
        let (s, next) = times_generator(acc, j);
        (sign * s, next)
    })
}

pub(crate) fn sign_scalar(sign: i32) -> GaussianRational {
    GaussianRational::from_ints(sign as i64, 0)
}

/// Normal form of `scalar · c_{w_1} c_{w_2} ⋯`.
pub fn clifford_normalize(word: &[usize], scalar: GaussianRational) -> Result<CliffordNormalForm> {
    if let Some(&bad) = word
        .iter()
        .find(|&&j| j == 0 || j > crate::subset::MAX_ELEMENT)
    {
        return Err(Error::SubsetOutOfRange {
            subset: format!("{{{bad}}}"),
            range: "[n]".into(),
        });
    }
    let (sign, subset) = word.iter().fold((1, Subset::EMPTY), |(sign, acc), &j| {
        let (s, next) = times_generator(acc, j);
        (sign * s, next)
    });
    Ok(CliffordNormalForm {
        sign: scalar * sign_scalar(sign),
        subset,
    })
}

/// `π_i c_j` as a sum of `scalar · c_{j'} · π_i^{[flag]}`.
fn commute_one(i: usize, j: usize) -> Vec<(GaussianRational, Option<usize>, bool)> {
    let one = GaussianRational::one;
    if i == 0 {
        if j == 1 {
            return vec![(GaussianRational::i(), None, true)];
        }
        return vec![(one(), Some(j), true)];
    }
    if j == i {
        vec![
            (one(), Some(i + 1), true),
            (one(), Some(i + 1), false),
            (-one(), Some(i), false),
        ]
    } else if j == i + 1 {
        vec![(one(), Some(i), true)]
    } else {
        vec![(one(), Some(j), true)]
    }
}

fn expand(i: usize, word: &[usize]) -> BTreeMap<(Subset, bool), GaussianRational> {
    let mut out = BTreeMap::new();
    let Some((&j, rest)) = word.split_first() else {
        out.insert((Subset::EMPTY, true), GaussianRational::one());
        return out;
    };
    let rest_set = Subset::from_elements(rest.iter().copied());
    let mut add = |key: (Subset, bool), value: GaussianRational| {
        let slot = out.entry(key).or_insert_with(GaussianRational::zero);
        *slot = slot.clone() + value;
    };
    for (scalar, generator, has_pi) in commute_one(i, j) {
        let left = generator.map_or(Subset::EMPTY, |g| Subset::EMPTY.with(g));
        if has_pi {
            for ((e, flag), coeff) in expand(i, rest) {
                let (sign, set) = multiply(left, e);
                add((set, flag), scalar.clone() * sign_scalar(sign) * coeff);
            }
        } else {
            let (sign, set) = multiply(left, rest_set);
            add((set, false), scalar.clone() * sign_scalar(sign));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `π_i c_D = Σ_E c_E (γ_E + δ_E π_i)`, as `(E, γ_E, δ_E)` sorted by `E`.
pub fn pi_commute(i: usize, set: Subset) -> Vec<(Subset, GaussianRational, GaussianRational)> {
    let word = set.to_vec();
    let mut merged: BTreeMap<Subset, (GaussianRational, GaussianRational)> = BTreeMap::new();
    for ((e, flag), coeff) in expand(i, &word) {
        let slot = merged
            .entry(e)
            .or_insert_with(|| (GaussianRational::zero(), GaussianRational::zero()));
        if flag {
            slot.1 = slot.1.clone() + coeff;
        } else {
            slot.0 = slot.0.clone() + coeff;
        }
    }
    merged.into_iter().map(|(e, (g, d))| (e, g, d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn normal_forms() {
        let n = clifford_normalize(&[2, 1], g(1, 0)).unwrap();
        assert_eq!((n.sign, n.subset), (g(-1, 0), s(&[1, 2])));
        let n = clifford_normalize(&[1, 1], g(1, 0)).unwrap();
        assert_eq!((n.sign, n.subset), (g(-1, 0), Subset::EMPTY));
        let n = clifford_normalize(&[3, 1, 3], g(1, 0)).unwrap();
        assert_eq!((n.sign, n.subset), (g(1, 0), s(&[1])));
        assert!(clifford_normalize(&[0], g(1, 0)).is_err());
    }

    #[test]
    fn commutation_examples() {
        assert_eq!(pi_commute(1, s(&[3])), vec![(s(&[3]), g(0, 0), g(1, 0))]);
        assert_eq!(pi_commute(1, s(&[2])), vec![(s(&[1]), g(0, 0), g(1, 0))]);
        assert_eq!(
            pi_commute(0, s(&[1])),
            vec![(Subset::EMPTY, g(0, 0), g(0, 1))]
        );
        // π_1 c_1 = c_2 π_1 + c_2 - c_1.
        assert_eq!(
            pi_commute(1, s(&[1])),
            vec![(s(&[1]), g(-1, 0), g(0, 0)), (s(&[2]), g(1, 0), g(1, 0))]
        );
    }

    #[test]
    fn multiplication_is_associative() {
        let all: Vec<Subset> = Subset::interval(1, 4).subsets().collect();
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    let (s1, ab) = multiply(a, b);
                    let (s2, left) = multiply(ab, c);
                    let (s3, bc) = multiply(b, c);
                    let (s4, right) = multiply(a, bc);
                    assert_eq!((s1 * s2, left), (s3 * s4, right));
                }
            }
        }
    }
}
