use std::collections::HashSet;

use serde::Serialize;

use super::coxeter::CoxeterDescriptor;
use super::signed::{all_elements, SignedPermutation};
use crate::error::{Error, Result};

/// A reflection of `B_n`, stored as the involution it is. Equal reflections
/// have equal windows, so conjugacy tests reduce to equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Reflection(pub SignedPermutation);

impl Reflection {
    /// `w s_i w^{-1}`.
    pub fn conjugate_simple(w: &SignedPermutation, i: usize) -> Self {
        let s = SignedPermutation::simple(i, w.n());
        let ws = w.mul(&s).expect("same rank");
        Reflection(ws.mul(&w.inverse()).expect("same rank"))
    }
}

/// All `n²` reflections of `B_n` (or the `n(n-1)/2` of `S_n`) in window order.
pub fn reflections(desc: &CoxeterDescriptor) -> Vec<Reflection> {
    let n = desc.n;
    let mut out = Vec::new();
    let id: Vec<i32> = (1..=n as i32).collect();
    if matches!(desc.kind, super::coxeter::CoxeterKind::TypeB) {
        for k in 0..n {
            let mut w = id.clone();
            w[k] = -w[k];
            out.push(w);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let mut w = id.clone();
            w.swap(a, b);
            out.push(w.clone());
            if matches!(desc.kind, super::coxeter::CoxeterKind::TypeB) {
                w[a] = -w[a];
                w[b] = -w[b];
                out.push(w);
            }
        }
    }
    let mut out: Vec<Reflection> = out
        .into_iter()
        .map(|w| Reflection(SignedPermutation::from_window(&w).expect("valid reflection")))
        .collect();
    out.sort();
    out
}

/// Right inversion sets as bitmasks over a fixed reflection list.
#[derive(Clone, Debug)]
pub struct WeakOrder {
    desc: CoxeterDescriptor,
    reflections: Vec<Reflection>,
}

impl WeakOrder {
    pub fn new(desc: CoxeterDescriptor) -> Self {
        assert!(desc.n * desc.n <= 64, "inversion bitmask limited to n ≤ 8");
        WeakOrder {
            reflections: reflections(&desc),
            desc,
        }
    }

    pub fn descriptor(&self) -> &CoxeterDescriptor {
        &self.desc
    }

    pub fn reflections(&self) -> &[Reflection] {
        &self.reflections
    }

    /// `Inv(w) = {t : ℓ(wt) < ℓ(w)}`.
    pub fn inversions(&self, w: &SignedPermutation) -> u64 {
        let l = w.length();
        let mut mask = 0u64;
        for (k, t) in self.reflections.iter().enumerate() {
            if w.mul(&t.0).expect("same rank").length() < l {
                mask |= 1 << k;
            }
        }
        mask
    }

    /// `x ≤_L y`.
    pub fn leq(&self, x: &SignedPermutation, y: &SignedPermutation) -> bool {
        let ix = self.inversions(x);
        ix & !self.inversions(y) == 0
    }

    /// `[x, y]_L`, in the order of [`all_elements`].
    pub fn interval(&self, x: &SignedPermutation, y: &SignedPermutation) -> Vec<SignedPermutation> {
        let ix = self.inversions(x);
        let iy = self.inversions(y);
        if ix & !iy != 0 {
            return Vec::new();
        }
        all_elements(&self.desc)
            .into_iter()
            .filter(|z| {
                let iz = self.inversions(z);
                ix & !iz == 0 && iz & !iy == 0
            })
            .collect()
    }

    /// Every interval between two members of `set` lies in `set`.
    pub fn is_convex(&self, set: &[SignedPermutation]) -> bool {
        let masks: Vec<u64> = set.iter().map(|x| self.inversions(x)).collect();
        let members: HashSet<u64> = masks.iter().copied().collect();
        let everything: Vec<u64> = all_elements(&self.desc)
            .iter()
            .map(|z| self.inversions(z))
            .collect();
        for &ix in &masks {
            for &iy in &masks {
                if ix & !iy != 0 {
                    continue;
                }
                for &iz in &everything {
                    if ix & !iz == 0 && iz & !iy == 0 && !members.contains(&iz) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The `≤_L`-maximal members of `set`.
    pub fn maximal_elements(&self, set: &[SignedPermutation]) -> Vec<SignedPermutation> {
        let masks: Vec<u64> = set.iter().map(|x| self.inversions(x)).collect();
        set.iter()
            .enumerate()
            .filter(|&(a, _)| {
                !masks
                    .iter()
                    .enumerate()
                    .any(|(b, &mb)| b != a && mb != masks[a] && masks[a] & !mb == 0)
            })
            .map(|(_, x)| x.clone())
            .collect()
    }

    pub fn unique_max(&self, set: &[SignedPermutation]) -> Option<SignedPermutation> {
        let maxima = self.maximal_elements(set);
        if maxima.len() == 1 {
            maxima.into_iter().next()
        } else {
            None
        }
    }
}

/// A quadruple `(u, v, s, t)` witnessing a failure of ascent-compatibility.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AlignedWitness {
    pub u: SignedPermutation,
    pub v: SignedPermutation,
    pub s: usize,
    pub t: usize,
}

/// `s` is an ascent of `u`, `t` is an ascent of `v`, and `u⁻¹su = v⁻¹tv`.
pub fn is_aligned(
    u: &SignedPermutation,
    v: &SignedPermutation,
    s: usize,
    t: usize,
) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::RankMismatch(u.n(), v.n()));
    }
    if !u.is_left_ascent(s) || !v.is_left_ascent(t) {
        return Ok(false);
    }
    let ru = Reflection::conjugate_simple(&u.inverse(), s);
    let rv = Reflection::conjugate_simple(&v.inverse(), t);
    Ok(ru == rv)
}

/// Scans `u` then `v` over `set` (in the given order), then `s`, then `t`,
/// and returns the first aligned quadruple with `su ∈ X` but `tv ∉ X` or the
/// reverse. `None` means the set is ascent-compatible.
pub fn ascent_compatibility_witness(
    set: &[SignedPermutation],
    desc: &CoxeterDescriptor,
) -> Result<Option<AlignedWitness>> {
    let members: HashSet<&SignedPermutation> = set.iter().collect();
    if let Some(bad) = set.iter().find(|x| x.n() != desc.n) {
        return Err(Error::RankMismatch(bad.n(), desc.n));
    }
    let gens = desc.generators();
    // u⁻¹ s u for each ascent s of u, computed once per element.
    let conj: Vec<Vec<Option<(Reflection, bool)>>> = set
        .iter()
        .map(|u| {
            let uinv = u.inverse();
            gens.iter()
                .map(|&s| {
                    u.is_left_ascent(s).then(|| {
                        (
                            Reflection::conjugate_simple(&uinv, s),
                            members.contains(&u.left_simple(s)),
                        )
                    })
                })
                .collect()
        })
        .collect();
    for (a, u) in set.iter().enumerate() {
        for (b, v) in set.iter().enumerate() {
            for (si, &s) in gens.iter().enumerate() {
                let Some((ru, su_in)) = &conj[a][si] else {
                    continue;
                };
                for (ti, &t) in gens.iter().enumerate() {
                    let Some((rv, tv_in)) = &conj[b][ti] else {
                        continue;
                    };
                    if ru == rv && su_in != tv_in {
                        return Ok(Some(AlignedWitness {
                            u: u.clone(),
                            v: v.clone(),
                            s,
                            t,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_ascent_compatible(set: &[SignedPermutation], desc: &CoxeterDescriptor) -> Result<bool> {
    Ok(ascent_compatibility_witness(set, desc)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::Subset;
    use std::collections::{BTreeMap, BTreeSet};

    fn w(v: &[i32]) -> SignedPermutation {
        SignedPermutation::from_window(v).unwrap()
    }

    fn s1s0s1() -> SignedPermutation {
        let s0 = SignedPermutation::simple(0, 2);
        let s1 = SignedPermutation::simple(1, 2);
        s1.mul(&s0).unwrap().mul(&s1).unwrap()
    }

    #[test]
    fn reflection_count() {
        for n in 1..=4 {
            assert_eq!(reflections(&CoxeterDescriptor::type_b(n)).len(), n * n);
            assert_eq!(
                reflections(&CoxeterDescriptor::type_a(n)).len(),
                n * (n - 1) / 2
            );
        }
    }

    #[test]
    fn length_equals_inversion_count() {
        for n in 1..=3 {
            let order = WeakOrder::new(CoxeterDescriptor::type_b(n));
            for x in all_elements(order.descriptor()) {
                assert_eq!(order.inversions(&x).count_ones() as usize, x.length());
            }
        }
    }

    #[test]
    fn weak_order_matches_left_multiplication_reachability() {
        for n in 1..=3 {
            let desc = CoxeterDescriptor::type_b(n);
            let order = WeakOrder::new(desc);
            let elems = all_elements(&desc);
            // Upward closure under length-increasing left multiplication.
            let mut above: BTreeMap<SignedPermutation, BTreeSet<SignedPermutation>> =
                BTreeMap::new();
            for x in elems.iter().rev() {
                let mut set = BTreeSet::from([x.clone()]);
                for i in desc.generators() {
                    let y = x.left_simple(i);
                    if y.length() > x.length() {
                        set.extend(above[&y].iter().cloned());
                    }
                }
                above.insert(x.clone(), set);
            }
            for x in &elems {
                for y in &elems {
                    assert_eq!(order.leq(x, y), above[x].contains(y), "{x} {y}");
                }
            }
        }
    }

    #[test]
    fn interval_and_convexity() {
        let order = WeakOrder::new(CoxeterDescriptor::type_b(2));
        let e = SignedPermutation::identity(2);
        let s0 = SignedPermutation::simple(0, 2);
        assert!(order.leq(&e, &w(&[-2, -1])));
        assert_eq!(order.interval(&e, &s0), vec![e.clone(), s0.clone()]);
        let long = w(&[-1, -2]);
        let candidate = vec![e.clone(), s0.clone(), long.clone()];
        assert!(!order.is_convex(&candidate));
        assert_eq!(order.interval(&e, &long).len(), 8);
        assert_eq!(order.unique_max(&candidate), Some(long));
    }

    #[test]
    fn aligned_examples() {
        let e = SignedPermutation::identity(2);
        let s0 = SignedPermutation::simple(0, 2);
        assert!(is_aligned(&e, &e, 0, 0).unwrap());
        assert!(is_aligned(&e, &s1s0s1(), 0, 0).unwrap());
        assert!(!is_aligned(&s0, &e, 0, 0).unwrap());
        assert!(is_aligned(&e, &SignedPermutation::identity(3), 0, 0).is_err());
    }

    #[test]
    fn ascent_compatibility_examples() {
        let desc = CoxeterDescriptor::type_b(2);
        let e = SignedPermutation::identity(2);
        let s0 = SignedPermutation::simple(0, 2);
        for x in all_elements(&desc) {
            assert!(is_ascent_compatible(&[x], &desc).unwrap());
        }
        let set = vec![e.clone(), s1s0s1(), s0];
        let witness = ascent_compatibility_witness(&set, &desc).unwrap().unwrap();
        assert_eq!(
            witness,
            AlignedWitness {
                u: e,
                v: s1s0s1(),
                s: 0,
                t: 0
            }
        );
    }

    #[test]
    fn descent_class_subsets_are_compatible() {
        let desc = CoxeterDescriptor::type_b(2);
        let elems = all_elements(&desc);
        for i in Subset::zero_based(2).subsets() {
            let class: Vec<_> = elems
                .iter()
                .filter(|x| x.descents() == i)
                .cloned()
                .collect();
            for mask in 0u32..1 << class.len() {
                let sub: Vec<_> = class
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, x)| x.clone())
                    .collect();
                assert!(is_ascent_compatible(&sub, &desc).unwrap());
            }
        }
    }
}
