use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{CoxeterDescriptor, SignedPermutation};
use crate::subset::Subset;

/// A finite set `X` with descent labels `L(y)` and partial maps `f_i`.
///
/// `transitions[i][y]` is `Some(z)` when `f_i(y)` is the element `z` of `X`
/// and `None` when it falls outside `X`. Rows exist for every index
/// `0..n`; rows of non-generators are ignored.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LabeledBasis {
    pub descriptor: CoxeterDescriptor,
    pub labels: Vec<String>,
    pub descents: Vec<Subset>,
    pub transitions: Vec<Vec<Option<usize>>>,
}

impl LabeledBasis {
    pub fn new(
        descriptor: CoxeterDescriptor,
        labels: Vec<String>,
        descents: Vec<Subset>,
        transitions: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        let size = labels.len();
        let range = Subset::zero_based(descriptor.n);
        if descents.len() != size {
            return Err(Error::InvalidFamily(format!(
                "{} labels but {} descent sets",
                size,
                descents.len()
            )));
        }
        if let Some(bad) = descents.iter().find(|d| !d.is_subset(range)) {
            return Err(Error::SubsetOutOfRange {
                subset: bad.to_string(),
                range: range.to_string(),
            });
        }
        if transitions.len() != descriptor.n
            || transitions
                .iter()
                .any(|row| row.len() != size || row.iter().flatten().any(|&z| z >= size))
        {
            return Err(Error::InvalidFamily("malformed transition table".into()));
        }
        Ok(LabeledBasis {
            descriptor,
            labels,
            descents,
            transitions,
        })
    }

    /// `X ⊆ B_n` with `L = Des` and `f_i(x) = s_i x`.
    pub fn from_permutations(
        set: &[SignedPermutation],
        descriptor: CoxeterDescriptor,
    ) -> Result<Self> {
        if let Some(bad) = set.iter().find(|x| x.n() != descriptor.n) {
            return Err(Error::RankMismatch(bad.n(), descriptor.n));
        }
        let index: std::collections::HashMap<&SignedPermutation, usize> =
            set.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let transitions = (0..descriptor.n)
            .map(|i| {
                set.iter()
                    .map(|x| index.get(&x.left_simple(i)).copied())
                    .collect()
            })
            .collect();
        Self::new(
            descriptor,
            set.iter().map(|x| x.to_string()).collect(),
            set.iter().map(|x| x.descents_in(&descriptor)).collect(),
            transitions,
        )
    }

    /// One element with label `L`, no transitions; spans the simple module.
    pub fn singleton(descriptor: CoxeterDescriptor, label: &str, descent: Subset) -> Result<Self> {
        Self::new(
            descriptor,
            vec![label.to_string()],
            vec![descent],
            vec![vec![None]; descriptor.n],
        )
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn n(&self) -> usize {
        self.descriptor.n
    }
}
