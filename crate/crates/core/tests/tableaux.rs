use num_bigint::BigInt;
use tbhl_core::domino::{enumerate_sdt, g_lambda, sdt_operator_family, Partition};
use tbhl_core::hecke::{characteristic_by_composition_series, verify_relations, TieBreak};
use tbhl_core::qsym::Variant;
use tbhl_core::shifted::{
    conjugate_family, enumerate_sshdt, enumerate_ssshdt, h_lambda_monomial, h_lambda_peak,
    standardize, two_quotient, verify_peak_theorem,
};
use tbhl_core::Subset;

fn p(text: &str) -> Partition {
    text.parse().unwrap()
}

#[test]
fn domino_module_for_a_larger_shape() {
    let shape = p("4,3,3");
    let fam = sdt_operator_family::<BigInt>(&shape).unwrap();
    assert!(verify_relations(&fam).is_ok());
    let (ch, _) = characteristic_by_composition_series(&fam, TieBreak::Reversed).unwrap();
    assert_eq!(ch, g_lambda(&shape).unwrap());
    assert_eq!(
        ch.total(),
        BigInt::from(enumerate_sdt(&shape).unwrap().len())
    );
}

#[test]
fn five_row_shape_witnesses() {
    let shape = p("7,7,6,5,1");
    let q = two_quotient(&shape);
    assert_eq!(
        (q.mu.to_string(), q.nu.to_string()),
        ("3,3,3".to_string(), "4".to_string())
    );
    let standard = enumerate_sshdt(&shape).unwrap();
    assert_eq!(standard.len(), 252);
    assert!(standard.iter().all(|t| t.m() == 10));
    assert!(standard
        .iter()
        .any(|t| t.descents() == Subset::from_elements([1, 5, 7, 8])));
    let filled = enumerate_ssshdt(&shape, 5, Some(&[1, 4, 0, 1, 2, 2])).unwrap();
    assert!(!filled.is_empty());
    for t in filled.iter().take(20) {
        assert!(t.is_valid());
        assert_eq!(standardize(t).base.shape, shape);
    }
}

#[test]
fn shifted_functions_agree_in_both_modes() {
    for text in ["2", "2,2", "4", "4,2", "3,3", "4,4"] {
        let shape = p(text);
        let m = shape.size() / 2;
        let peak = h_lambda_peak(&shape, Variant::Literal).unwrap();
        let mono = h_lambda_monomial(&shape, m + 1).unwrap();
        assert!(mono.try_eq(&peak.to_monomials(m + 1)).unwrap(), "{text}");
        for q in enumerate_sshdt(&shape).unwrap() {
            assert!(verify_peak_theorem(&q, Variant::Literal).unwrap());
        }
    }
}

#[test]
fn conjugate_families_satisfy_the_relations() {
    for text in ["2", "2,2", "4,2", "3,3"] {
        let fam = conjugate_family::<BigInt>(&p(text)).unwrap();
        assert!(verify_relations(&fam).is_ok(), "{text}");
    }
}
