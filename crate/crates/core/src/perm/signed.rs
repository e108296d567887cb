use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::coxeter::CoxeterDescriptor;
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Element of `B_n` in window notation `(σ(1), ..., σ(n))`.
///
/// Products compose right to left: `(στ)(j) = σ(τ(j))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn from_window(values: &[i32]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n {
                return Err(Error::InvalidWindow {
                    window: values.to_vec(),
                    reason: format!("entry {v} outside ±[{n}]"),
                });
            }
            if seen[a] {
                return Err(Error::InvalidWindow {
                    window: values.to_vec(),
                    reason: format!("absolute value {a} repeated"),
                });
            }
            seen[a] = true;
        }
        Ok(SignedPermutation {
            window: values.to_vec(),
        })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// The simple generator `s_i` of `B_n`.
    pub fn simple(i: usize, n: usize) -> Self {
        Self::identity(n).left_simple(i)
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// `σ(j)` for `j ∈ ±[n]`.
    pub fn apply(&self, j: i32) -> i32 {
        let v = self.window[j.unsigned_abs() as usize - 1];
        if j < 0 {
            -v
        } else {
            v
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        Ok(SignedPermutation {
            window: other.window.iter().map(|&j| self.apply(j)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.n()];
        for (pos, &v) in self.window.iter().enumerate() {
            let p = pos as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v < 0 { -p } else { p };
        }
        SignedPermutation { window }
    }

    /// `s_i σ`: the value map of `s_i` applied to every entry.
    pub fn left_simple(&self, i: usize) -> Self {
        let i = i as i32;
        let window = self
            .window
            .iter()
            .map(|&v| {
                if i == 0 {
                    if v.abs() == 1 {
                        -v
                    } else {
                        v
                    }
                } else if v.abs() == i {
                    v.signum() * (i + 1)
                } else if v.abs() == i + 1 {
                    v.signum() * i
                } else {
                    v
                }
            })
            .collect();
        SignedPermutation { window }
    }

    /// `σ s_i`: the positions of `s_i` acted on.
    pub fn right_simple(&self, i: usize) -> Self {
        let mut window = self.window.clone();
        if i == 0 {
            window[0] = -window[0];
        } else {
            window.swap(i - 1, i);
        }
        SignedPermutation { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(k, &v)| v == k as i32 + 1)
    }

    /// True when every entry is positive, i.e. the element lies in `S_n`.
    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    /// Coxeter length, by the closed form `inv(σ) + Σ_{σ(j)<0} |σ(j)|`.
    ///
    /// The form is cross-checked against [`bfs_lengths`] in the tests.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut inv = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    inv += 1;
                }
            }
        }
        let neg: i32 = w.iter().filter(|&&v| v < 0).map(|v| -v).sum();
        inv + neg as usize
    }

    /// Left descents among the generators of `desc`.
    pub fn descents_in(&self, desc: &CoxeterDescriptor) -> Subset {
        let l = self.length();
        Subset::from_elements(
            desc.generators()
                .into_iter()
                .filter(|&i| self.left_simple(i).length() < l),
        )
    }

    /// Left descent set in `B_n`, a subset of `[0, n-1]`.
    pub fn descents(&self) -> Subset {
        self.descents_in(&CoxeterDescriptor::type_b(self.n()))
    }

    pub fn length_and_descents(&self) -> (usize, Subset) {
        (self.length(), self.descents())
    }

    pub fn is_left_ascent(&self, i: usize) -> bool {
        self.left_simple(i).length() > self.length()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch(self.n(), other.n()));
        }
        Ok(())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"2,-3,1"`, optionally wrapped in brackets.
    fn from_str(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        if inner.trim().is_empty() {
            return Self::from_window(&[]);
        }
        let values: std::result::Result<Vec<i32>, _> =
            inner.split(',').map(|p| p.trim().parse::<i32>()).collect();
        let values = values.map_err(|_| Error::Parse(format!("bad window {text:?}")))?;
        Self::from_window(&values)
    }
}

impl Serialize for SignedPermutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.window.serialize(serializer)
    }
}

/// Every element of `B_n` (or `S_n` for a type-A descriptor), sorted by
/// length and then window.
pub fn all_elements(desc: &CoxeterDescriptor) -> Vec<SignedPermutation> {
    let n = desc.n;
    let mut out = Vec::new();
    let mut perm: Vec<i32> = (1..=n as i32).collect();
    let signed = matches!(desc.kind, super::coxeter::CoxeterKind::TypeB);
    permutations(&mut perm, 0, &mut |p| {
        let sign_masks = if signed { 1u32 << n } else { 1 };
        for mask in 0..sign_masks {
            let window = p
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask >> k & 1 == 1 { -v } else { v })
                .collect();
            out.push(SignedPermutation { window });
        }
    });
    out.sort_by_key(|w| (w.length(), w.window.clone()));
    out
}

fn permutations(items: &mut Vec<i32>, k: usize, visit: &mut impl FnMut(&[i32])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for j in k..items.len() {
        items.swap(k, j);
        permutations(items, k + 1, visit);
        items.swap(k, j);
    }
}

/// Word lengths by breadth-first search on the left Cayley graph. This is the
/// reference definition of length.
pub fn bfs_lengths(desc: &CoxeterDescriptor) -> BTreeMap<SignedPermutation, usize> {
    let mut dist = BTreeMap::new();
    let start = SignedPermutation::identity(desc.n);
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for i in desc.generators() {
            let next = w.left_simple(i);
            if !dist.contains_key(&next) {
                dist.insert(next.clone(), d + 1);
                queue.push_back(next);
            }
        }
    }
    dist
}
