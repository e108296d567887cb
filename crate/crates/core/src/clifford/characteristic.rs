use num_bigint::BigInt;
use serde::Serialize;

use super::module::{induce, verify_hcl_relations, HclReport, InducedModule};
use crate::error::Result;
use crate::hecke::{
    characteristic_by_composition_series, CompositionSeries, LabeledBasis, TieBreak,
};
use crate::qsym::{delta_b, peak_set, valley_set, Basis, QSymElement, Variant};
use crate::subset::Subset;

/// `α(i, I, D)`: the eigenvalue of `π_i` on `c_D ε_I` modulo lower terms,
/// as `-1` or `0`.
pub fn k_factor(i: usize, set: Subset, d: Subset) -> i32 {
    let minus = if set.contains(i) {
        !d.contains(i + 1)
    } else {
        d.contains(i)
    };
    if minus {
        -1
    } else {
        0
    }
}

/// `{i ∈ [0, n-1] : α(i, I, D) = -1}`, the descent set of the simple factor
/// contributed by `c_D ε_I`.
pub fn k_set(set: Subset, d: Subset, n: usize) -> Subset {
    Subset::from_elements((0..n).filter(|&i| k_factor(i, set, d) == -1))
}

pub fn restriction_characteristic(m: &InducedModule) -> Result<(QSymElement, CompositionSeries)> {
    characteristic_by_composition_series(&m.restriction(), TieBreak::Canonical)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResForm {
    ProofPenultimate,
    TheoremLiteral,
    TheoremComplemented,
}

impl ResForm {
    pub const ALL: [ResForm; 3] = [
        ResForm::ProofPenultimate,
        ResForm::TheoremLiteral,
        ResForm::TheoremComplemented,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ResForm::ProofPenultimate => "proof_penultimate",
            ResForm::TheoremLiteral => "theorem_literal",
            ResForm::TheoremComplemented => "theorem_complemented",
        }
    }
}

/// Closed forms for the restriction of `M_I`.
pub fn res_mi_formula(set: Subset, n: usize, form: ResForm) -> Result<QSymElement> {
    let full = Subset::zero_based(n);
    let comp = full.difference(set);
    match form {
        ResForm::TheoremLiteral => delta_b(comp, n, Variant::Literal),
        ResForm::TheoremComplemented => delta_b(comp, n, Variant::Complemented),
        ResForm::ProofPenultimate => {
            let peaks = peak_set(comp, n);
            let weight = BigInt::from(1) << valley_set(comp, n).len();
            let mut out = QSymElement::zero(n, Basis::FB);
            for k in full.subsets() {
                if !set.contains(0) && k.contains(0) {
                    continue;
                }
                if peaks.is_subset(k.symmetric_difference(k.shift_up())) {
                    out.add_basis(k, weight.clone())?;
                }
            }
            Ok(out)
        }
    }
}

/// `Peak^B(I^c) = Peak^B(J^c)` and `0 ∉ I △ J`.
pub fn iso_predicate(i: Subset, j: Subset, n: usize) -> bool {
    let full = Subset::zero_based(n);
    peak_set(full.difference(i), n) == peak_set(full.difference(j), n)
        && !i.symmetric_difference(j).contains(0)
}

#[derive(Clone, Debug, Serialize)]
pub struct InductionReport {
    pub n: usize,
    pub characteristic: QSymElement,
    pub relations: HclReport,
    pub literal: bool,
    pub complemented: bool,
    pub penultimate: bool,
}

fn sum_over_base(
    base: &LabeledBasis,
    term: impl Fn(Subset) -> Result<QSymElement>,
) -> Result<QSymElement> {
    let mut total = QSymElement::zero(base.n(), Basis::FB);
    for &d in &base.descents {
        total = total.add(&term(d)?)?;
    }
    Ok(total)
}

/// Induces `base`, reads off the restriction characteristic and compares it
/// with `Σ_y Δ^B([0,n-1] ∖ L(y))` under both variants and with the sum of
/// the penultimate forms.
pub fn induce_and_restrict(base: &LabeledBasis) -> Result<InductionReport> {
    let m = induce(base)?;
    let n = m.n;
    let full = Subset::zero_based(n);
    let (ch, _) = restriction_characteristic(&m)?;
    let literal = sum_over_base(base, |l| delta_b(full.difference(l), n, Variant::Literal))?;
    let complemented = sum_over_base(base, |l| {
        delta_b(full.difference(l), n, Variant::Complemented)
    })?;
    let penultimate = sum_over_base(base, |l| res_mi_formula(l, n, ResForm::ProofPenultimate))?;
    Ok(InductionReport {
        n,
        relations: verify_hcl_relations(&m),
        literal: ch == literal,
        complemented: ch == complemented,
        penultimate: ch == penultimate,
        characteristic: ch,
    })
}
