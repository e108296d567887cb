use num_bigint::BigInt;
use tbhl_core::families::{build_family, family_report, FamilyKind, FamilySpec};
use tbhl_core::hecke::{characteristic_by_composition_series, permutation_family, qx, TieBreak};
use tbhl_core::perm::{all_elements, is_ascent_compatible, CoxeterDescriptor};

fn spec(text: &str) -> FamilySpec {
    text.parse().unwrap()
}

#[test]
fn whole_group_is_a_module_with_the_regular_characteristic() {
    for n in 1..=3 {
        let desc = CoxeterDescriptor::type_b(n);
        let all = all_elements(&desc);
        assert!(is_ascent_compatible(&all, &desc).unwrap());
        let fam = permutation_family::<BigInt>(&all, n).unwrap();
        let (ch, _) = characteristic_by_composition_series(&fam, TieBreak::Canonical).unwrap();
        assert_eq!(ch, qx(&all, n).unwrap());
        assert_eq!(ch.total(), BigInt::from(all.len()));
    }
}

#[test]
fn arc_module_characteristic_is_q_of_inverses() {
    let fam = build_family(spec("arc:4")).unwrap();
    let report = family_report(&fam).unwrap();
    assert!(report.is_ok());
    let inverses = build_family(spec("arc:4:inv")).unwrap();
    assert_eq!(
        report.characteristic.unwrap(),
        qx(&inverses.members, 4).unwrap()
    );
}

#[test]
fn unimodal_union_covers_each_class() {
    for n in 1..=4 {
        let union = build_family(FamilySpec {
            kind: FamilyKind::LeftUnimodalUnion,
            n,
            inverse: false,
        })
        .unwrap();
        let mut total = 0;
        for i in 1..=n {
            let part = build_family(FamilySpec {
                kind: FamilyKind::LeftUnimodal { i },
                n,
                inverse: false,
            })
            .unwrap();
            assert!(part.members.iter().all(|x| union.members.contains(x)));
            total += part.members.len();
        }
        // Identity-like elements sit in two classes at once, so the union is smaller.
        assert!(union.members.len() <= total);
    }
}

#[test]
fn family_report_serializes() {
    let report = family_report(&build_family(spec("dclass:{0}:2")).unwrap()).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    assert_eq!(value["ascent_compatible"], true);
    assert_eq!(value["relations"]["relations"], "ok");
}
