use num_bigint::BigInt;
use tbhl_core::clifford::{
    build_intertwiner, build_mi, build_mi_table, centralizer_check, induce, induce_and_restrict,
    iso_predicate, res_mi_formula, restriction_characteristic, verify_hcl_relations, HclReport,
    ResForm,
};
use tbhl_core::domino::Partition;
use tbhl_core::hecke::LabeledBasis;
use tbhl_core::perm::{all_elements, CoxeterDescriptor};
use tbhl_core::qsym::{peak_set, QSymElement};
use tbhl_core::shifted::{conjugate_labeled_basis, h_lambda_peak};
use tbhl_core::Subset;

fn s(xs: &[usize]) -> Subset {
    Subset::from_elements(xs.iter().copied())
}

#[test]
fn induction_from_a_simple_module_is_m_i() {
    for n in 1..=3 {
        for set in Subset::zero_based(n).subsets() {
            let base = LabeledBasis::singleton(CoxeterDescriptor::type_b(n), "e", set).unwrap();
            let a = induce(&base).unwrap();
            let b = build_mi_table(set, n).unwrap();
            assert_eq!(a.pi, b.pi);
            assert_eq!(a.c, b.c);
        }
    }
}

#[test]
fn modules_without_zero_satisfy_every_relation() {
    for n in 1..=4 {
        for set in Subset::zero_based(n).subsets().filter(|i| !i.contains(0)) {
            assert_eq!(
                verify_hcl_relations(&build_mi(set, n).unwrap()),
                HclReport::Ok
            );
        }
    }
}

#[test]
fn relation_report_serializes() {
    let ok = serde_json::to_string(&HclReport::Ok).unwrap();
    assert_eq!(ok, r#"{"relations":"ok"}"#);
    let bad = verify_hcl_relations(&build_mi(s(&[0]), 2).unwrap());
    assert_eq!(
        serde_json::to_string(&bad).unwrap(),
        r#"{"failed":{"kind":"mixed","i":0,"j":2}}"#
    );
}

#[test]
fn isomorphic_modules_share_peaks_and_characteristics() {
    let n = 4;
    let full = Subset::zero_based(n);
    for i in full.subsets() {
        for j in full.subsets() {
            if iso_predicate(i, j, n) {
                assert_eq!(
                    peak_set(full.difference(i), n),
                    peak_set(full.difference(j), n)
                );
                assert_eq!(
                    res_mi_formula(i, n, ResForm::ProofPenultimate).unwrap(),
                    res_mi_formula(j, n, ResForm::ProofPenultimate).unwrap()
                );
            }
        }
    }
}

#[test]
fn intertwiner_hypotheses_are_enforced() {
    assert!(build_intertwiner(Subset::EMPTY, 1, 2).is_ok());
    assert!(build_intertwiner(s(&[1]), 1, 3).is_err());
    assert!(build_intertwiner(Subset::EMPTY, 0, 2).is_err());
    assert!(build_intertwiner(Subset::EMPTY, 2, 2).is_err());
}

#[test]
fn centralizer_dimension_is_a_power_of_two() {
    for n in 1..=3 {
        for set in Subset::zero_based(n).subsets() {
            assert!(centralizer_check(set, n).unwrap().len().is_power_of_two());
        }
    }
}

#[test]
fn induced_conjugate_families_give_h_lambda() {
    for text in ["2", "2,2", "4", "4,2", "3,3"] {
        let shape: Partition = text.parse().unwrap();
        let report = induce_and_restrict(&conjugate_labeled_basis(&shape).unwrap()).unwrap();
        assert_eq!(
            report.characteristic,
            h_lambda_peak(&shape, tbhl_core::qsym::Variant::Literal).unwrap()
        );
        assert!(report.penultimate && report.literal);
    }
}

#[test]
fn induced_regular_module_has_total_dimension() {
    let n = 2;
    let desc = CoxeterDescriptor::type_b(n);
    let all = all_elements(&desc);
    let base = LabeledBasis::from_permutations(&all, desc).unwrap();
    let m = induce(&base).unwrap();
    assert_eq!(m.dim(), 4 * all.len());
    let (ch, _) = restriction_characteristic(&m).unwrap();
    assert_eq!(ch.total(), BigInt::from(m.dim()));
    let mut sum = QSymElement::zero(n, tbhl_core::qsym::Basis::FB);
    for x in &all {
        sum = sum
            .add(
                &restriction_characteristic(&build_mi(x.descents(), n).unwrap())
                    .unwrap()
                    .0,
            )
            .unwrap();
    }
    assert_eq!(ch, sum);
}
