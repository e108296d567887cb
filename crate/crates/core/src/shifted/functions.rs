use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::semistandard::{enumerate_ssshdt, standardize};
use super::standard::{check_quotient, enumerate_sshdt, MarkedTableau, ShiftedStandardTableau};
use crate::algebra::{Scalar, TruncatedPolynomial};
use crate::domino::{descents_of, Partition};
use crate::error::Result;
use crate::hecke::{build_from_labeled_basis, LabeledBasis, OperatorFamily};
use crate::perm::CoxeterDescriptor;
use crate::qsym::{delta_b, fb_monomials, Basis, QSymElement, Variant};
use crate::subset::Subset;
use crate::IntPolynomial;

/// Number of filled dominoes; every shifted tiling of a shape has the same
/// count (checked in tests), so the first tableau decides it.
fn degree(shape: &Partition, tableaux: &[ShiftedStandardTableau]) -> usize {
    tableaux.first().map_or(shape.size() / 2, |t| t.m())
}

/// `Σ_{T ∈ SSShDT(λ)} x^{wt(T)}` restricted to `x_0..x_{nvars-1}`. Every
/// tableau with larger entries has a variable outside the range, so the
/// result is the exact truncation.
pub fn h_lambda_monomial(shape: &Partition, nvars: usize) -> Result<IntPolynomial> {
    check_quotient(shape)?;
    let standard = enumerate_sshdt(shape)?;
    let m = degree(shape, &standard);
    let mut out = TruncatedPolynomial::zero(nvars, m as u32);
    if nvars == 0 {
        return Ok(out);
    }
    for t in enumerate_ssshdt(shape, nvars as u32 - 1, None)? {
        let mut exp = t.weight();
        exp.resize(nvars, 0);
        out.add_term(exp, BigInt::one());
    }
    Ok(out)
}

/// `Σ_{Q ∈ SShDT(λ)} Δ^B(Des(Q))`.
pub fn h_lambda_peak(shape: &Partition, variant: Variant) -> Result<QSymElement> {
    let standard = enumerate_sshdt(shape)?;
    let m = degree(shape, &standard);
    let mut out = QSymElement::zero(m, Basis::FB);
    for q in &standard {
        out = out.add(&delta_b(q.descents(), m, variant)?)?;
    }
    Ok(out)
}

/// `Σ_{std(T) = S} x^{wt(T)}` against `F^B_{Des(S)}`, both in `nvars`
/// variables.
pub fn verify_stand_theorem(s: &MarkedTableau, nvars: usize) -> Result<bool> {
    let m = s.m();
    let mut lhs = TruncatedPolynomial::zero(nvars, m as u32);
    if nvars > 0 {
        for t in enumerate_ssshdt(&s.base.shape, nvars as u32 - 1, None)? {
            if standardize(&t) == *s {
                let mut exp = t.weight();
                exp.resize(nvars, 0);
                lhs.add_term(exp, BigInt::one());
            }
        }
    }
    lhs.try_eq(&fb_monomials(s.descents(), m, nvars)?)
}

/// Groups every semistandard tableau by standardization once, then checks
/// the identity for every marking. Returns the failing markings.
pub fn stand_theorem_failures(shape: &Partition, nvars: usize) -> Result<Vec<MarkedTableau>> {
    let standard = enumerate_sshdt(shape)?;
    let m = degree(shape, &standard);
    let mut sums: HashMap<MarkedTableau, IntPolynomial> = HashMap::new();
    if nvars > 0 {
        for t in enumerate_ssshdt(shape, nvars as u32 - 1, None)? {
            let mut exp = t.weight();
            exp.resize(nvars, 0);
            sums.entry(standardize(&t))
                .or_insert_with(|| TruncatedPolynomial::zero(nvars, m as u32))
                .add_term(exp, BigInt::one());
        }
    }
    let mut failures = Vec::new();
    for q in &standard {
        for s in MarkedTableau::markings(q) {
            let lhs = sums
                .remove(&s)
                .unwrap_or_else(|| TruncatedPolynomial::zero(nvars, m as u32));
            if !lhs.try_eq(&fb_monomials(s.descents(), m, nvars)?)? {
                failures.push(s);
            }
        }
    }
    // Anything left standardized to a non-tableau.
    failures.extend(sums.into_keys());
    Ok(failures)
}

/// `Σ_{demark(S) = Q} F^B_{Des(S)} = Δ^B(Des(Q))`.
pub fn verify_peak_theorem(q: &ShiftedStandardTableau, variant: Variant) -> Result<bool> {
    let m = q.m();
    let mut lhs = QSymElement::zero(m, Basis::FB);
    for s in MarkedTableau::markings(q) {
        lhs.add_basis(s.descents(), BigInt::one())?;
    }
    lhs.try_eq(&delta_b(q.descents(), m, variant)?)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum IntervalCondition {
    /// `i` unprimed and `j'` primed.
    I,
    /// `i`, `j` unprimed with `dom_j` strictly lower than `dom_i`.
    II,
    /// `i'`, `j'` primed with `dom_i` weakly below `dom_j`.
    III,
}

/// A pair `i < j` meeting one of the conditions with no descent of `S` in
/// `[i, j-1]`. "Weakly below" is read as: some row of `dom_i` is at or
/// below some row of `dom_j`.
pub fn descent_interval_violation(s: &MarkedTableau) -> Option<(usize, usize, IntervalCondition)> {
    let des = s.descents();
    let dom = |k: usize| s.base.dominoes[k - 1];
    for i in 1..=s.m() {
        for j in i + 1..=s.m() {
            let (pi, pj) = (s.is_primed(i), s.is_primed(j));
            let cond = if !pi && pj {
                Some(IntervalCondition::I)
            } else if !pi && !pj && dom(i).strictly_above(&dom(j)) {
                Some(IntervalCondition::II)
            } else if pi && pj && dom(i).max_row() >= dom(j).min_row() {
                Some(IntervalCondition::III)
            } else {
                None
            };
            if let Some(c) = cond {
                if des.intersection(Subset::interval(i, j - 1)).is_empty() {
                    return Some((i, j, c));
                }
            }
        }
    }
    None
}

/// The conjugated tableaux `Q̂` for `Q ∈ SShDT(λ)`, labeled by the
/// complement of `Des(Q)`.
pub fn conjugate_labeled_basis(shape: &Partition) -> Result<LabeledBasis> {
    let standard = enumerate_sshdt(shape)?;
    let m = degree(shape, &standard);
    let index: HashMap<&ShiftedStandardTableau, usize> =
        standard.iter().enumerate().map(|(k, q)| (q, k)).collect();
    let full = Subset::zero_based(m);
    let transitions = (0..m)
        .map(|i| {
            standard
                .iter()
                .map(|q| q.simple(i).and_then(|s| index.get(&s).copied()))
                .collect()
        })
        .collect();
    LabeledBasis::new(
        CoxeterDescriptor::type_b(m),
        standard.iter().map(conjugate_label).collect(),
        standard
            .iter()
            .map(|q| full.difference(q.descents()))
            .collect(),
        transitions,
    )
}

fn conjugate_label(q: &ShiftedStandardTableau) -> String {
    let (_, doms) = q.conjugate();
    let parts: Vec<String> = doms
        .iter()
        .enumerate()
        .map(|(k, d)| format!("{}:{}", k + 1, d))
        .collect();
    parts.join(" ")
}

/// Tableaux whose geometric descent set after reflection differs from the
/// complement of `Des(Q)`, as `(label, geometric, complement)`.
pub fn conjugate_label_mismatches(shape: &Partition) -> Result<Vec<(String, Subset, Subset)>> {
    let standard = enumerate_sshdt(shape)?;
    let m = degree(shape, &standard);
    Ok(standard
        .iter()
        .filter_map(|q| {
            let geometric = descents_of(&q.conjugate().1);
            let complement = Subset::zero_based(m).difference(q.descents());
            (geometric != complement).then(|| (conjugate_label(q), geometric, complement))
        })
        .collect())
}

pub fn conjugate_family<S: Scalar>(shape: &Partition) -> Result<OperatorFamily<S>> {
    Ok(build_from_labeled_basis(&conjugate_labeled_basis(shape)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hecke::{characteristic_by_composition_series, verify_relations, TieBreak};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn h_of_one_domino() {
        let h = h_lambda_monomial(&p(&[2]), 3).unwrap();
        assert_eq!(h.to_string(), "x0 + 2*x1 + 2*x2");
        let peak = h_lambda_peak(&p(&[2]), Variant::Literal).unwrap();
        assert_eq!(peak.to_string(), "FB{} + FB{0}");
        assert!(peak.to_monomials(3).try_eq(&h).unwrap());
        assert!(h_lambda_monomial(&p(&[1, 1]), 3).unwrap().is_zero());
        assert!(h_lambda_peak(&p(&[1, 1]), Variant::Literal)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn stand_theorem_small() {
        for shape in [p(&[2]), p(&[2, 2]), p(&[4])] {
            for q in enumerate_sshdt(&shape).unwrap() {
                for s in MarkedTableau::markings(&q) {
                    assert!(verify_stand_theorem(&s, 4).unwrap(), "{}", s.label());
                }
            }
        }
    }

    #[test]
    fn peak_theorem_small() {
        for shape in [p(&[2]), p(&[2, 2]), p(&[4])] {
            for q in enumerate_sshdt(&shape).unwrap() {
                assert!(verify_peak_theorem(&q, Variant::Literal).unwrap());
            }
        }
    }

    #[test]
    fn conjugate_small() {
        let fam = conjugate_family::<BigInt>(&p(&[2])).unwrap();
        assert_eq!(
            fam.basis.as_ref().unwrap().descents,
            vec![Subset::from_elements([0])]
        );
        assert_eq!(fam.pi(0).get(0, 0), BigInt::from(-1));
        let fam = conjugate_family::<BigInt>(&p(&[2, 2])).unwrap();
        assert_eq!(
            fam.basis.as_ref().unwrap().descents,
            vec![Subset::from_elements([0])]
        );
        assert!(verify_relations(&fam).is_ok());
    }

    #[test]
    fn conjugate_families_up_to_ten() {
        for size in (2..=10).step_by(2) {
            for shape in Partition::all(size) {
                let Ok(fam) = conjugate_family::<BigInt>(&shape) else {
                    continue;
                };
                assert!(verify_relations(&fam).is_ok(), "{shape}");
                characteristic_by_composition_series(&fam, TieBreak::Canonical).unwrap();
            }
        }
    }
}
