use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::basis::LabeledBasis;
use super::family::{build_from_labeled_basis, OperatorFamily};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::perm::{CoxeterDescriptor, CoxeterKind, SignedPermutation};
use crate::qsym::{Basis, QSymElement};
use crate::subset::Subset;

/// How ties between simultaneously available basis elements are broken.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum TieBreak {
    /// Smallest label first.
    #[default]
    Canonical,
    /// Largest label first; gives a second linear extension for comparison.
    Reversed,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CompositionSeries {
    /// Basis indices in series order; each prefix spans a submodule.
    pub order: Vec<usize>,
    pub labels: Vec<String>,
    /// `K_k`, the descent set of the `k`-th simple factor.
    pub factors: Vec<Subset>,
}

fn qsym_basis(desc: &CoxeterDescriptor) -> Basis {
    match desc.kind {
        CoxeterKind::TypeA => Basis::F,
        CoxeterKind::TypeB => Basis::FB,
    }
}

/// Orders the basis so that `π_i(y)` only involves `y` and earlier elements.
fn linear_extension<S: Scalar>(fam: &OperatorFamily<S>, tie: TieBreak) -> Result<Vec<usize>> {
    let size = fam.dim();
    let gens = fam.descriptor.generators();
    // successors[y]: elements other than y that occur in some π_i(y).
    let mut successors = vec![Vec::new(); size];
    for &i in &gens {
        for (r, c, _) in fam.pi(i).iter() {
            if r != c {
                successors[c].push(r);
            }
        }
    }
    let mut pending = vec![0usize; size];
    let mut predecessors = vec![Vec::new(); size];
    for (y, succ) in successors.iter_mut().enumerate() {
        succ.sort_unstable();
        succ.dedup();
        pending[y] = succ.len();
        for &z in succ.iter() {
            predecessors[z].push(y);
        }
    }
    let key = |y: usize| (fam.labels[y].clone(), y);
    let mut ready_min = BinaryHeap::new();
    let mut ready_max = BinaryHeap::new();
    let push = |y: usize,
                min: &mut BinaryHeap<Reverse<(String, usize)>>,
                max: &mut BinaryHeap<(String, usize)>| match tie {
        TieBreak::Canonical => min.push(Reverse(key(y))),
        TieBreak::Reversed => max.push(key(y)),
    };
    for y in (0..size).filter(|&y| pending[y] == 0) {
        push(y, &mut ready_min, &mut ready_max);
    }
    let mut order = Vec::with_capacity(size);
    loop {
        let next = match tie {
            TieBreak::Canonical => ready_min.pop().map(|Reverse((_, y))| y),
            TieBreak::Reversed => ready_max.pop().map(|(_, y)| y),
        };
        let Some(y) = next else { break };
        order.push(y);
        for &p in &predecessors[y] {
            pending[p] -= 1;
            if pending[p] == 0 {
                push(p, &mut ready_min, &mut ready_max);
            }
        }
    }
    if order.len() < size {
        let stuck = (0..size)
            .find(|&y| pending[y] > 0)
            .expect("some element is unplaced");
        return Err(Error::CyclicSupport(fam.labels[stuck].clone()));
    }
    Ok(order)
}

/// Characteristic read off a composition series built from the support
/// digraph of the family.
pub fn characteristic_by_composition_series<S: Scalar>(
    fam: &OperatorFamily<S>,
    tie: TieBreak,
) -> Result<(QSymElement, CompositionSeries)> {
    let order = linear_extension(fam, tie)?;
    let mut position = vec![0usize; order.len()];
    for (k, &y) in order.iter().enumerate() {
        position[y] = k;
    }
    let gens = fam.descriptor.generators();
    let n = fam.descriptor.n;
    let mut factors = Vec::with_capacity(order.len());
    for (k, &y) in order.iter().enumerate() {
        let mut set = Subset::EMPTY;
        for &i in &gens {
            let column = fam.pi(i).column(y);
            if column.iter().any(|&(r, _)| position[r] > k) {
                return Err(Error::NotTriangular {
                    generator: i,
                    label: fam.labels[y].clone(),
                });
            }
            let diag = fam.pi(i).get(y, y);
            if diag.is_minus_one() {
                set = set.with(i);
            } else if !diag.is_zero() {
                return Err(Error::BadDiagonal {
                    generator: i,
                    label: fam.labels[y].clone(),
                });
            }
        }
        factors.push(set);
    }
    let mut ch = QSymElement::zero(n, qsym_basis(&fam.descriptor));
    for &set in &factors {
        ch.add_basis(set, BigInt::one())?;
    }
    let labels = order.iter().map(|&y| fam.labels[y].clone()).collect();
    Ok((
        ch,
        CompositionSeries {
            order,
            labels,
            factors,
        },
    ))
}

/// `Σ_{x∈X} F^B_{Des(x)}`.
pub fn characteristic_by_descent_sum(set: &[SignedPermutation], n: usize) -> Result<QSymElement> {
    let desc = CoxeterDescriptor::type_b(n);
    let mut out = QSymElement::zero(n, Basis::FB);
    for x in set {
        if x.n() != n {
            return Err(Error::RankMismatch(x.n(), n));
        }
        out.add_basis(x.descents_in(&desc), BigInt::one())?;
    }
    Ok(out)
}

/// `Σ_{x∈X} F^B_{Des(x^{-1})}`.
pub fn qx(set: &[SignedPermutation], n: usize) -> Result<QSymElement> {
    let inverses: Vec<SignedPermutation> = set.iter().map(|x| x.inverse()).collect();
    characteristic_by_descent_sum(&inverses, n)
}

/// The family of `ℂX` for `X ⊆ B_n` acting by left multiplication.
pub fn permutation_family<S: Scalar>(
    set: &[SignedPermutation],
    n: usize,
) -> Result<OperatorFamily<S>> {
    let basis = LabeledBasis::from_permutations(set, CoxeterDescriptor::type_b(n))?;
    Ok(build_from_labeled_basis(&basis))
}
