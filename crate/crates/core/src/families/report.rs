use std::collections::BTreeSet;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::build::PermutationFamily;
use crate::error::Result;
use crate::hecke::{
    characteristic_by_composition_series, characteristic_by_descent_sum, permutation_family, qx,
    verify_relations, RelationReport, TieBreak,
};
use crate::perm::{
    all_elements, ascent_compatibility_witness, AlignedWitness, CoxeterDescriptor,
    SignedPermutation, WeakOrder,
};
use crate::qsym::QSymElement;

#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub name: String,
    pub n: usize,
    pub size: usize,
    pub ascent_compatible: bool,
    pub witness: Option<AlignedWitness>,
    /// `Q(X) = Σ F^B_{Des(x⁻¹)}`.
    pub q: QSymElement,
    /// `Q(X⁻¹) = Σ F^B_{Des(x)}`, the expected characteristic of `ℂX`.
    pub q_of_inverse: QSymElement,
    /// Only computed when `X` is ascent-compatible.
    pub relations: Option<RelationReport>,
    pub characteristic: Option<QSymElement>,
    pub characteristic_matches: Option<bool>,
}

impl FamilyReport {
    /// Compatible, relations hold and the series characteristic is `Q(X⁻¹)`.
    pub fn is_ok(&self) -> bool {
        self.ascent_compatible
            && self.relations.as_ref().is_some_and(RelationReport::is_ok)
            && self.characteristic_matches == Some(true)
    }
}

pub fn set_report(name: &str, set: &[SignedPermutation], n: usize) -> Result<FamilyReport> {
    let desc = CoxeterDescriptor::type_b(n);
    let witness = ascent_compatibility_witness(set, &desc)?;
    let q = qx(set, n)?;
    let q_of_inverse = characteristic_by_descent_sum(set, n)?;
    let (relations, characteristic, characteristic_matches) = if witness.is_none() {
        let fam = permutation_family::<BigInt>(set, n)?;
        let (ch, _) = characteristic_by_composition_series(&fam, TieBreak::Canonical)?;
        let matches = ch == q_of_inverse;
        (Some(verify_relations(&fam)), Some(ch), Some(matches))
    } else {
        (None, None, None)
    };
    Ok(FamilyReport {
        name: name.to_string(),
        n,
        size: set.len(),
        ascent_compatible: witness.is_none(),
        witness,
        q,
        q_of_inverse,
        relations,
        characteristic,
        characteristic_matches,
    })
}

pub fn family_report(fam: &PermutationFamily) -> Result<FamilyReport> {
    set_report(&fam.name, &fam.members, fam.n)
}

/// A random convex subset of `B_n` with a unique maximum: the union of one
/// to three intervals `[u_k, w]_L` sharing the top `w`.
pub fn random_convex_set(n: usize, seed: u64) -> Vec<SignedPermutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let desc = CoxeterDescriptor::type_b(n);
    let order = WeakOrder::new(desc);
    let all = all_elements(&desc);
    let top = all.choose(&mut rng).expect("B_n is nonempty").clone();
    let below: Vec<&SignedPermutation> = all.iter().filter(|x| order.leq(x, &top)).collect();
    let count = rng.gen_range(1..=3);
    let mut out = BTreeSet::new();
    for _ in 0..count {
        let bottom = below.choose(&mut rng).expect("w ≤ w");
        out.extend(order.interval(bottom, &top));
    }
    out.into_iter().collect()
}
