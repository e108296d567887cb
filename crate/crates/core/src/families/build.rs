use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{all_elements, CoxeterDescriptor, SignedPermutation, WeakOrder};
use crate::subset::Subset;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// `D_I^B`: left descent set exactly `I`.
    DescentClass { set: Subset },
    /// `L_i^B`: `σ⁻¹(1) > ⋯ > σ⁻¹(i) < ⋯ < σ⁻¹(n)`.
    LeftUnimodal { i: usize },
    /// `L^B`, the union of the `L_i^B`.
    LeftUnimodalUnion,
    /// `A_n^B`.
    Arc,
}

/// A named subset of `B_n`, optionally replaced by the set of inverses.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PermutationFamily {
    pub name: String,
    pub kind: FamilyKind,
    pub inverse: bool,
    pub n: usize,
    pub members: Vec<SignedPermutation>,
}

/// Parsed form of `arc:3`, `dclass:{0,1}:3`, `luni:2:4`, `luni:all:4`, each
/// with an optional `:inv` suffix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub inverse: bool,
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad family spec {text:?}"));
        let mut parts: Vec<&str> = text.trim().split(':').collect();
        let inverse = parts.last() == Some(&"inv");
        if inverse {
            parts.pop();
        }
        let n = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let (kind, n) = match parts.as_slice() {
            ["arc", k] => (FamilyKind::Arc, n(k)?),
            ["dclass", set, k] => (FamilyKind::DescentClass { set: set.parse()? }, n(k)?),
            ["luni", "all", k] => (FamilyKind::LeftUnimodalUnion, n(k)?),
            ["luni", i, k] => (FamilyKind::LeftUnimodal { i: n(i)? }, n(k)?),
            _ => return Err(bad()),
        };
        Ok(FamilySpec { kind, n, inverse })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Arc => write!(f, "arc:{}", self.n)?,
            FamilyKind::DescentClass { set } => write!(f, "dclass:{set}:{}", self.n)?,
            FamilyKind::LeftUnimodal { i } => write!(f, "luni:{i}:{}", self.n)?,
            FamilyKind::LeftUnimodalUnion => write!(f, "luni:all:{}", self.n)?,
        }
        if self.inverse {
            write!(f, ":inv")?;
        }
        Ok(())
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidFamily("rank must be positive".into()));
    }
    Ok(())
}

/// `σ⁻¹(1) > ⋯ > σ⁻¹(i) < ⋯ < σ⁻¹(n)`, comparing signed positions.
pub fn is_left_unimodal(w: &SignedPermutation, i: usize) -> bool {
    let inv = w.inverse();
    let win = inv.window();
    win[..i].windows(2).all(|p| p[0] > p[1]) && win[i - 1..].windows(2).all(|p| p[0] < p[1])
}

fn cyclic_successor(a: i32, b: i32, n: usize) -> bool {
    (b - a - 1).rem_euclid(n as i32) == 0
}

/// Signed arc permutation test on the one-line notation.
pub fn is_signed_arc(w: &SignedPermutation) -> bool {
    let n = w.n();
    let pos: Vec<i32> = w.window().iter().copied().filter(|&v| v > 0).collect();
    let neg: Vec<i32> = w.window().iter().copied().filter(|&v| v < 0).collect();
    let chained = |word: &[i32]| word.windows(2).all(|p| cyclic_successor(p[0], p[1], n));
    if !chained(&pos) || !chained(&neg) {
        return false;
    }
    match (pos.first(), neg.first()) {
        (Some(&a), Some(&b)) => cyclic_successor(-b, a, n),
        _ => true,
    }
}

fn kind_members(kind: FamilyKind, n: usize) -> Result<Vec<SignedPermutation>> {
    let desc = CoxeterDescriptor::type_b(n);
    let all = all_elements(&desc);
    Ok(match kind {
        FamilyKind::DescentClass { set } => {
            if !set.is_subset(Subset::zero_based(n)) {
                return Err(Error::SubsetOutOfRange {
                    subset: set.to_string(),
                    range: Subset::zero_based(n).to_string(),
                });
            }
            all.into_iter()
                .filter(|w| w.descents_in(&desc) == set)
                .collect()
        }
        FamilyKind::LeftUnimodal { i } => {
            if i == 0 || i > n {
                return Err(Error::InvalidFamily(format!(
                    "unimodal index {i} outside [1, {n}]"
                )));
            }
            all.into_iter().filter(|w| is_left_unimodal(w, i)).collect()
        }
        FamilyKind::LeftUnimodalUnion => all
            .into_iter()
            .filter(|w| (1..=n).any(|i| is_left_unimodal(w, i)))
            .collect(),
        FamilyKind::Arc => all.into_iter().filter(is_signed_arc).collect(),
    })
}

pub fn build_family(spec: FamilySpec) -> Result<PermutationFamily> {
    check_n(spec.n)?;
    let mut members = kind_members(spec.kind, spec.n)?;
    if spec.inverse {
        members = members.iter().map(SignedPermutation::inverse).collect();
    }
    members.sort();
    Ok(PermutationFamily {
        name: spec.to_string(),
        kind: spec.kind,
        inverse: spec.inverse,
        n: spec.n,
        members,
    })
}

/// Every interleaving of `x0` and `x1` that keeps both in order.
pub fn shuffles(x0: &[i32], x1: &[i32]) -> Result<Vec<Vec<i32>>> {
    let left: HashSet<i32> = x0.iter().copied().collect();
    let shared: Vec<i32> = x1.iter().copied().filter(|v| left.contains(v)).collect();
    if !shared.is_empty() {
        return Err(Error::LetterOverlap(shared));
    }
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(x0.len() + x1.len());
    fn go(a: &[i32], b: &[i32], word: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if a.is_empty() && b.is_empty() {
            out.push(word.clone());
            return;
        }
        if let Some((&h, rest)) = a.split_first() {
            word.push(h);
            go(rest, b, word, out);
            word.pop();
        }
        if let Some((&h, rest)) = b.split_first() {
            word.push(h);
            go(a, rest, word, out);
            word.pop();
        }
    }
    go(x0, x1, &mut word, &mut out);
    Ok(out)
}

/// A word with negatives shown either as `-3` or with a combining overline.
pub fn format_word(word: &[i32], overline: bool) -> String {
    if !overline {
        let parts: Vec<String> = word.iter().map(i32::to_string).collect();
        return parts.join(",");
    }
    word.iter()
        .map(|&v| {
            if v < 0 {
                format!("{}\u{0304}", -v)
            } else {
                v.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn endpoints(
    i: usize,
    n: usize,
    tau: impl Fn(i32, i32) -> i32,
) -> Result<(SignedPermutation, SignedPermutation)> {
    if i == 0 || i > n {
        return Err(Error::InvalidFamily(format!(
            "unimodal index {i} outside [1, {n}]"
        )));
    }
    let (i, n) = (i as i32, n as i32);
    let sigma: Vec<i32> = (1..=n)
        .map(|j| if j < i { -j } else { j - i - n })
        .collect();
    let tau: Vec<i32> = (1..=n).map(|j| tau(i, j)).collect();
    Ok((
        SignedPermutation::from_window(&sigma)?,
        SignedPermutation::from_window(&tau)?,
    ))
}

/// `(σ, τ)` as printed: `σ(j) = -j` for `j < i`, `σ(k) = k - i - n` for
/// `k ≥ i`; `τ(j) = i - j` for `j < i`, `τ(k) = k` for `k ≥ i`. In left weak
/// order `τ` is the bottom. This `τ` is not left-unimodal once `i ≥ 2`.
pub fn unimodal_interval_endpoints(
    i: usize,
    n: usize,
) -> Result<(SignedPermutation, SignedPermutation)> {
    endpoints(i, n, |i, j| if j < i { i - j } else { j })
}

/// Same `σ`, with `τ(j) = i + 1 - j` for `j ≤ i` and `τ(k) = k` otherwise,
/// so that `(L_i^B)⁻¹ = [τ, σ]_L`.
pub fn unimodal_interval_endpoints_corrected(
    i: usize,
    n: usize,
) -> Result<(SignedPermutation, SignedPermutation)> {
    endpoints(i, n, |i, j| if j <= i { i + 1 - j } else { j })
}

/// `(x, y, z)` with `x ≤_L y ≤_L z`, `x, z ∈ X`, `y ∉ X`.
pub fn convexity_violation(
    set: &[SignedPermutation],
    order: &WeakOrder,
) -> Option<ConvexityWitness> {
    let members: HashSet<&SignedPermutation> = set.iter().collect();
    for x in set {
        for z in set {
            if x == z || !order.leq(x, z) {
                continue;
            }
            if let Some(y) = order
                .interval(x, z)
                .into_iter()
                .find(|y| !members.contains(y))
            {
                return Some((x.clone(), y, z.clone()));
            }
        }
    }
    None
}

/// `x ≤ y ≤ z` in weak order with `x, z` in the set and `y` outside it.
pub type ConvexityWitness = (SignedPermutation, SignedPermutation, SignedPermutation);

/// The smallest `n ≤ max_n` at which `A_n^B` fails to be convex, with a
/// witness.
pub fn arc_nonconvexity_witness(max_n: usize) -> Result<Option<(usize, ConvexityWitness)>> {
    for n in 1..=max_n {
        let fam = build_family(FamilySpec {
            kind: FamilyKind::Arc,
            n,
            inverse: false,
        })?;
        let order = WeakOrder::new(CoxeterDescriptor::type_b(n));
        if let Some(w) = convexity_violation(&fam.members, &order) {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}
