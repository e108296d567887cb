use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::{AuditCase, AuditConfig, Status};
use crate::algebra::SparseMatrix;
use crate::clifford::{
    build_intertwiner, build_mi, centralizer_check, induce_and_restrict, iso_predicate, k_factor,
    k_set, res_mi_formula, restriction_characteristic, verify_hcl_relations, verify_intertwiner,
    ResForm,
};
use crate::domino::{brute_force_sdt, enumerate_sdt, g_lambda, sdt_operator_family, Partition};
use crate::error::Result;
use crate::families::{
    arc_nonconvexity_witness, build_family, family_report, random_convex_set, set_report,
    unimodal_interval_endpoints, unimodal_interval_endpoints_corrected, FamilyKind, FamilyReport,
    FamilySpec,
};
use crate::hecke::{
    characteristic_by_composition_series, verify_relations, LabeledBasis, TieBreak,
};
use crate::perm::{CoxeterDescriptor, SignedPermutation, WeakOrder};
use crate::qsym::{fb_monomials, peak_data, valley_set, Basis, QSymElement, Variant};
use crate::shifted::{
    conjugate_labeled_basis, enumerate_sshdt, enumerate_ssshdt, h_lambda_monomial, h_lambda_peak,
    stand_theorem_failures, two_quotient, verify_peak_theorem,
};
use crate::subset::Subset;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    HeckeFamilies,
    ArcFamilies,
    UnimodalIntervals,
    Domino,
    Shifted,
    Clifford,
    Isomorphism,
    Induction,
    Foundations,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::HeckeFamilies,
        Suite::ArcFamilies,
        Suite::UnimodalIntervals,
        Suite::Domino,
        Suite::Shifted,
        Suite::Clifford,
        Suite::Isomorphism,
        Suite::Induction,
        Suite::Foundations,
    ];

    pub fn criterion(self) -> u8 {
        Suite::ALL.iter().position(|&s| s == self).expect("listed") as u8 + 1
    }
}

pub fn run_suite(suite: Suite, cfg: &AuditConfig) -> Vec<AuditCase> {
    match suite {
        Suite::HeckeFamilies => hecke_families(cfg),
        Suite::ArcFamilies => arc_families(cfg),
        Suite::UnimodalIntervals => unimodal_intervals(cfg),
        Suite::Domino => domino(cfg),
        Suite::Shifted => shifted(cfg),
        Suite::Clifford => clifford_audit(cfg.max_n.min(4)),
        Suite::Isomorphism => isomorphism(cfg),
        Suite::Induction => induction(cfg),
        Suite::Foundations => foundations(cfg),
    }
}

/// Runs `check`; an error becomes a failing case carrying the message.
fn case(
    criterion: u8,
    theorem: &str,
    check: impl FnOnce() -> Result<(Status, String)>,
) -> AuditCase {
    match check() {
        Ok((status, details)) => AuditCase::new(criterion, theorem, status).details(details),
        Err(e) => AuditCase::new(criterion, theorem, Status::Fail).details(format!("error: {e}")),
    }
}

fn describe_family(r: &FamilyReport) -> (Status, String) {
    if let Some(w) = &r.witness {
        return (
            Status::Fail,
            format!(
                "not ascent-compatible: u={} v={} s={} t={}",
                w.u, w.v, w.s, w.t
            ),
        );
    }
    let relations = r.relations.as_ref().is_some_and(|x| x.is_ok());
    let ch = r.characteristic_matches == Some(true);
    let details = format!(
        "size {}, relations {}, ch {}",
        r.size,
        ok_word(relations),
        ok_word(ch)
    );
    (Status::from_bool(relations && ch), details)
}

fn ok_word(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "mismatch"
    }
}

fn family_case(criterion: u8, spec: FamilySpec) -> AuditCase {
    case(criterion, "family-module", || {
        let fam = build_family(spec)?;
        Ok(describe_family(&family_report(&fam)?))
    })
    .param("family", spec)
}

fn hecke_families(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_n.min(3) {
        let mut kinds: Vec<FamilyKind> = Subset::zero_based(n)
            .subsets()
            .map(|set| FamilyKind::DescentClass { set })
            .collect();
        kinds.extend((1..=n).map(|i| FamilyKind::LeftUnimodal { i }));
        for kind in kinds {
            for inverse in [false, true] {
                out.push(family_case(1, FamilySpec { kind, n, inverse }));
            }
        }
        out.push(family_case(
            1,
            FamilySpec {
                kind: FamilyKind::Arc,
                n,
                inverse: false,
            },
        ));
    }
    let n = cfg.max_n.clamp(1, 3);
    for k in 0..cfg.random_sets as u64 {
        let seed = cfg.seed.wrapping_add(k);
        let set = random_convex_set(n, seed);
        out.push(
            case(1, "random-convex-module", || {
                let order = WeakOrder::new(CoxeterDescriptor::type_b(n));
                let shaped = order.is_convex(&set) && order.unique_max(&set).is_some();
                let (status, details) = describe_family(&set_report("random", &set, n)?);
                Ok((
                    if shaped { status } else { Status::Fail },
                    if shaped {
                        details
                    } else {
                        "not convex with a unique maximum".into()
                    },
                ))
            })
            .param("n", n)
            .param("seed", format!("{seed:020}")),
        );
    }
    out
}

fn arc_spec(n: usize) -> FamilySpec {
    FamilySpec {
        kind: FamilyKind::Arc,
        n,
        inverse: false,
    }
}

fn arc_families(cfg: &AuditConfig) -> Vec<AuditCase> {
    let max = cfg.max_n.min(4);
    let mut out: Vec<AuditCase> = (2..=max)
        .map(|n| {
            case(2, "arc-ascent-compatible", || {
                let r = family_report(&build_family(arc_spec(n))?)?;
                Ok(describe_family(&r))
            })
            .param("n", n)
        })
        .collect();
    if max >= 3 {
        out.push(case(2, "arc-count", || {
            let size = build_family(arc_spec(3))?.members.len();
            Ok((Status::from_bool(size == 24), format!("|A_3^B| = {size}")))
        }));
    }
    // The witness search always covers n ≤ 4; the first witness is at n = 3.
    out.push(
        case(2, "arc-nonconvex", || {
            Ok(match arc_nonconvexity_witness(4)? {
                Some((n, (x, y, z))) => (
                    Status::Pass,
                    format!("n={n}: {x} <= {y} <= {z}, middle not an arc permutation"),
                ),
                None => (Status::Fail, "no witness found".into()),
            })
        })
        .param("max_n", 4),
    );
    out
}

fn interval_matches(
    i: usize,
    n: usize,
    endpoints: fn(usize, usize) -> Result<(SignedPermutation, SignedPermutation)>,
) -> Result<(Status, String)> {
    let order = WeakOrder::new(CoxeterDescriptor::type_b(n));
    let (sigma, tau) = endpoints(i, n)?;
    let mut interval = order.interval(&tau, &sigma);
    interval.sort();
    let fam = build_family(FamilySpec {
        kind: FamilyKind::LeftUnimodal { i },
        n,
        inverse: true,
    })?;
    let ok = interval == fam.members;
    Ok((
        Status::from_bool(ok),
        format!(
            "sigma={sigma} tau={tau}, |interval|={} |family|={}",
            interval.len(),
            fam.members.len()
        ),
    ))
}

fn unimodal_intervals(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_n.min(4) {
        for i in 1..=n {
            out.push(
                case(3, "unimodal-interval-printed", || {
                    interval_matches(i, n, unimodal_interval_endpoints)
                })
                .param("n", n)
                .param("i", i),
            );
            out.push(
                case(3, "unimodal-interval-corrected", || {
                    interval_matches(i, n, unimodal_interval_endpoints_corrected)
                })
                .param("n", n)
                .param("i", i),
            );
        }
    }
    out
}

fn even_partitions(max_size: usize) -> Vec<Partition> {
    (1..=max_size / 2)
        .flat_map(|k| Partition::all(2 * k))
        .collect()
}

fn domino(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for shape in even_partitions(cfg.max_partition.min(8)) {
        out.push(
            case(4, "sdt-count", || {
                let (a, b) = (enumerate_sdt(&shape)?.len(), brute_force_sdt(&shape)?.len());
                Ok((
                    Status::from_bool(a == b),
                    format!("growth {a}, brute force {b}"),
                ))
            })
            .param("shape", &shape),
        );
        out.push(
            case(4, "sdt-module", || {
                let fam = sdt_operator_family::<BigInt>(&shape)?;
                let relations = verify_relations(&fam);
                let (ch, _) = characteristic_by_composition_series(&fam, TieBreak::Canonical)?;
                let ok = relations.is_ok() && ch == g_lambda(&shape)?;
                Ok((
                    Status::from_bool(ok),
                    format!("relations {:?}, ch {ch}", relations),
                ))
            })
            .param("shape", &shape),
        );
    }
    out.push(case(4, "g-example", || {
        let g = g_lambda(&"2,2".parse()?)?;
        let mut expected = QSymElement::zero(2, Basis::FB);
        expected.add_basis(Subset::from_elements([0]), BigInt::from(1))?;
        expected.add_basis(Subset::from_elements([1]), BigInt::from(1))?;
        Ok((Status::from_bool(g == expected), format!("G_(2,2) = {g}")))
    }));
    out.push(case(4, "sdt-descent-witness", || {
        let target = Subset::from_elements([0, 2, 5, 6]);
        let found = enumerate_sdt(&"5,4,4,1".parse()?)?
            .into_iter()
            .find(|t| t.descents() == target);
        Ok(match found {
            Some(t) => (Status::Pass, t.label()),
            None => (Status::Fail, "no tableau with Des {0,2,5,6}".into()),
        })
    }));
    out
}

/// Shapes of even size at most `max_size` whose 2-quotient admits shifted
/// domino tableaux.
pub(crate) fn shifted_shapes(max_size: usize) -> Vec<Partition> {
    even_partitions(max_size)
        .into_iter()
        .filter(|p| two_quotient(p).valid)
        .collect()
}

const FIGURE_BUDGET: Duration = Duration::from_secs(60);

fn shifted(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    out.push(case(5, "two-quotient", || {
        let q = two_quotient(&"7,7,6,5,1".parse()?);
        let ok = q.valid && q.mu.parts() == [3, 3, 3] && q.nu.parts() == [4];
        Ok((Status::from_bool(ok), format!("mu={} nu={}", q.mu, q.nu)))
    }));
    for shape in shifted_shapes(cfg.max_partition.min(8)) {
        let m = shape.size() / 2;
        out.push(
            case(5, "stand-theorem", || {
                let failures = stand_theorem_failures(&shape, m + 1)?;
                Ok((
                    Status::from_bool(failures.is_empty()),
                    format!("{} failing markings", failures.len()),
                ))
            })
            .param("shape", &shape)
            .param("nvars", m + 1),
        );
    }
    for shape in shifted_shapes(cfg.max_partition) {
        let m = shape.size() / 2;
        out.push(
            case(5, "peak-theorem", || {
                peak_theorem_check(&shape, Variant::Literal)
            })
            .param("shape", &shape)
            .param("variant", "literal"),
        );
        let nvars = (m + 1).min(5);
        out.push(
            case(5, "h-lambda-modes", || {
                let monomial = h_lambda_monomial(&shape, nvars)?;
                let agree = |v| -> Result<bool> {
                    monomial.try_eq(&h_lambda_peak(&shape, v)?.to_monomials(nvars))
                };
                let (lit, comp) = (agree(Variant::Literal)?, agree(Variant::Complemented)?);
                let status = match (lit, comp) {
                    (true, true) => Status::Pass,
                    (false, false) => Status::Fail,
                    _ => Status::VariantDependent,
                };
                Ok((
                    status,
                    format!("literal {}, complemented {}", ok_word(lit), ok_word(comp)),
                ))
            })
            .param("shape", &shape)
            .param("nvars", nvars),
        );
    }
    out.push(case(5, "figure-witnesses", || {
        let shape: Partition = "7,7,6,5,1".parse()?;
        let start = Instant::now();
        let target = Subset::from_elements([1, 5, 7, 8]);
        let standard = enumerate_sshdt(&shape)?;
        let u = standard.iter().any(|q| q.descents() == target);
        if start.elapsed() > FIGURE_BUDGET {
            return Ok((Status::Pass, "skipped: time budget exceeded".into()));
        }
        let weight = [1, 4, 0, 1, 2, 2];
        let t = !enumerate_ssshdt(&shape, 5, Some(&weight))?.is_empty();
        Ok((
            Status::from_bool(u && t),
            format!(
                "Des {{1,5,7,8}} {}, weight (1,4,0,1,2,2) {}",
                found(u),
                found(t)
            ),
        ))
    }));
    out
}

fn found(ok: bool) -> &'static str {
    if ok {
        "found"
    } else {
        "missing"
    }
}

/// The peak theorem on every standard tableau of `shape`.
pub fn peak_theorem_check(shape: &Partition, variant: Variant) -> Result<(Status, String)> {
    let standard = enumerate_sshdt(shape)?;
    let mut bad = 0;
    for q in &standard {
        if !verify_peak_theorem(q, variant)? {
            bad += 1;
        }
    }
    Ok((
        Status::from_bool(bad == 0),
        format!("{} tableaux, {bad} failing", standard.len()),
    ))
}

pub fn peak_theorem_cases(shape: &Partition) -> Vec<AuditCase> {
    Variant::ALL
        .iter()
        .map(|&v| {
            case(5, "peak-theorem", || peak_theorem_check(shape, v))
                .param("shape", shape)
                .param("variant", v.name())
        })
        .collect()
}

fn fb_of(n: usize, terms: &[(i64, Subset)]) -> Result<QSymElement> {
    let mut out = QSymElement::zero(n, Basis::FB);
    for &(c, s) in terms {
        out.add_basis(s, BigInt::from(c))?;
    }
    Ok(out)
}

/// Relations, the restriction characteristic against the closed forms, and
/// the diagonal and valley invariants for every `M_I`, `n ≤ max_n`.
pub fn clifford_audit(max_n: usize) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let full = Subset::zero_based(n);
        for set in full.subsets() {
            let tag = |c: AuditCase| c.param("n", n).param("I", set);
            let m = match build_mi(set, n) {
                Ok(m) => m,
                Err(e) => {
                    out.push(tag(
                        AuditCase::new(6, "clifford-build", Status::Fail).details(e.to_string())
                    ));
                    continue;
                }
            };
            out.push(tag(case(6, "hcl-relations", || {
                let r = verify_hcl_relations(&m);
                Ok((Status::from_bool(r.is_ok()), format!("{r:?}")))
            })));
            out.push(tag(case(6, "clifford-diagonal", || {
                let ok = (0..n).all(|i| {
                    m.basis.iter().enumerate().all(|(col, &(d, _))| {
                        m.pi[i].get(col, col)
                            == crate::algebra::GaussianRational::from_ints(
                                k_factor(i, set, d) as i64,
                                0,
                            )
                    })
                });
                Ok((Status::from_bool(ok), String::new()))
            })));
            out.push(tag(case(6, "valley-stability", || {
                let valleys = valley_set(full.difference(set), n);
                let ok = Subset::one_based(n).subsets().all(|d| {
                    valleys
                        .iter()
                        .all(|v| k_set(set, d, n) == k_set(set, d.with(v), n))
                });
                Ok((Status::from_bool(ok), format!("Val = {valleys}")))
            })));
            let direct = match restriction_characteristic(&m) {
                Ok((ch, _)) => ch,
                Err(e) => {
                    out.push(tag(
                        AuditCase::new(6, "restriction", Status::Fail).details(e.to_string())
                    ));
                    continue;
                }
            };
            for form in ResForm::ALL {
                out.push(tag(case(6, "restriction-form", || {
                    let value = res_mi_formula(set, n, form)?;
                    let agrees = value == direct;
                    let status = match form {
                        ResForm::ProofPenultimate => Status::from_bool(agrees),
                        _ => Status::VariantDependent,
                    };
                    let verdict = if agrees { "agrees" } else { "differs" };
                    Ok((status, format!("{verdict}: direct {direct}, form {value}")))
                })
                .param("form", form.name())));
            }
        }
    }
    if max_n >= 1 {
        out.push(
            case(6, "audit-finding", || {
                let direct = restriction_characteristic(&build_mi(Subset::EMPTY, 1)?)?.0;
                let literal = res_mi_formula(Subset::EMPTY, 1, ResForm::TheoremLiteral)?;
                let ok = direct == fb_of(1, &[(2, Subset::EMPTY)])?
                    && literal == fb_of(1, &[(2, Subset::from_elements([0]))])?;
                Ok((
                    Status::from_bool(ok),
                    format!("direct {direct}, literal {literal}"),
                ))
            })
            .param("n", 1)
            .param("I", Subset::EMPTY),
        );
    }
    out
}

fn isomorphism(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_n.min(4) {
        out.push(
            case(7, "iso-predicate", || {
                let sets: Vec<Subset> = Subset::zero_based(n).subsets().collect();
                let chs = sets
                    .iter()
                    .map(|&s| Ok(restriction_characteristic(&build_mi(s, n)?)?.0))
                    .collect::<Result<Vec<_>>>()?;
                let mut bad = 0;
                for a in 0..sets.len() {
                    for b in 0..sets.len() {
                        if iso_predicate(sets[a], sets[b], n) != (chs[a] == chs[b]) {
                            bad += 1;
                        }
                    }
                }
                Ok((
                    Status::from_bool(bad == 0),
                    format!("{} pairs, {bad} disagreements", sets.len().pow(2)),
                ))
            })
            .param("n", n),
        );
    }
    for n in 1..=cfg.max_n.min(3) {
        let full = Subset::zero_based(n);
        for set in full.subsets() {
            for k in 1..n {
                if let Ok(f) = build_intertwiner(set, k, n) {
                    let check = verify_intertwiner(&f);
                    out.push(
                        AuditCase::new(7, "intertwiner", Status::from_bool(check.is_ok()))
                            .param("n", n)
                            .param("I", set)
                            .param("k", k)
                            .details(format!("{check:?}")),
                    );
                }
            }
            out.push(
                case(7, "centralizer", || {
                    let got = centralizer_check(set, n)?;
                    let expected: Vec<Subset> =
                        valley_set(full.difference(set), n).subsets().collect();
                    let shown: Vec<String> = got.iter().map(Subset::to_string).collect();
                    Ok((Status::from_bool(got == expected), shown.join(" ")))
                })
                .param("n", n)
                .param("I", set),
            );
        }
    }
    out
}

fn induction(cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for shape in shifted_shapes(cfg.max_partition.min(8)) {
        out.push(
            case(8, "induced-conjugate-family", || {
                let report = induce_and_restrict(&conjugate_labeled_basis(&shape)?)?;
                let h = h_lambda_peak(&shape, Variant::Literal)?;
                let ok = report.characteristic == h && report.penultimate;
                Ok((
                    Status::from_bool(ok),
                    format!(
                        "ch {}, H {}, penultimate {}, module relations {:?}",
                        report.characteristic,
                        h,
                        ok_word(report.penultimate),
                        report.relations
                    ),
                ))
            })
            .param("shape", &shape),
        );
    }
    let mut factors: BTreeMap<(usize, Subset), QSymElement> = BTreeMap::new();
    for n in 1..=cfg.max_n.min(3) {
        let mut specs: Vec<FamilySpec> = Subset::zero_based(n)
            .subsets()
            .map(|set| FamilySpec {
                kind: FamilyKind::DescentClass { set },
                n,
                inverse: true,
            })
            .collect();
        specs.extend((1..=n).map(|i| FamilySpec {
            kind: FamilyKind::LeftUnimodal { i },
            n,
            inverse: true,
        }));
        specs.push(arc_spec(n));
        for spec in specs {
            out.push(
                case(8, "induced-permutation-module", || {
                    let fam = build_family(spec)?;
                    let basis = LabeledBasis::from_permutations(
                        &fam.members,
                        CoxeterDescriptor::type_b(n),
                    )?;
                    let report = induce_and_restrict(&basis)?;
                    let mut sum = QSymElement::zero(n, Basis::FB);
                    for &d in &basis.descents {
                        if let std::collections::btree_map::Entry::Vacant(e) = factors.entry((n, d))
                        {
                            e.insert(restriction_characteristic(&build_mi(d, n)?)?.0);
                        }
                        sum = sum.add(&factors[&(n, d)])?;
                    }
                    let ok = sum == report.characteristic && report.penultimate;
                    Ok((
                        Status::from_bool(ok),
                        format!(
                            "ch {}, factor sum {}",
                            report.characteristic,
                            ok_word(sum == report.characteristic)
                        ),
                    ))
                })
                .param("family", spec),
            );
        }
    }
    out
}

fn foundations(_cfg: &AuditConfig) -> Vec<AuditCase> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push(
            case(9, "valley-peak-count", || {
                let bad = Subset::zero_based(n)
                    .subsets()
                    .filter(|&s| {
                        let d = peak_data(s, n);
                        d.valley.len() != d.peak.len() + d.zeta as usize
                    })
                    .count();
                Ok((Status::from_bool(bad == 0), format!("{bad} exceptions")))
            })
            .param("n", n),
        );
    }
    for n in 1..=6 {
        out.push(
            case(9, "fb-independence", || {
                let nvars = n + 1;
                let mut columns: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
                let mut triplets = Vec::new();
                let sets: Vec<Subset> = Subset::zero_based(n).subsets().collect();
                for (row, &s) in sets.iter().enumerate() {
                    for (exp, c) in fb_monomials(s, n, nvars)?.terms() {
                        let next = columns.len();
                        let col = *columns.entry(exp.clone()).or_insert(next);
                        triplets.push((row, col, BigRational::from_integer(c.clone())));
                    }
                }
                let m = SparseMatrix::from_triplets(sets.len(), columns.len(), triplets);
                let rank = m.rank();
                Ok((
                    Status::from_bool(rank == sets.len()),
                    format!("rank {rank} of {}", sets.len()),
                ))
            })
            .param("n", n),
        );
    }
    out
}
