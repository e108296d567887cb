use num_traits::One;
use serde::Serialize;

use super::algebra::{multiply, sign_scalar};
use super::characteristic::iso_predicate;
use super::module::{build_mi, right_multiplication, InducedModule};
use crate::algebra::{GaussianRational, SparseMatrix};
use crate::error::{Error, Result};
use crate::qsym::peak_set;
use crate::subset::Subset;
use crate::GaussianMatrix;

/// `f : M_I → M_J`, `x ε_I ↦ x (c_k c_{k+1} - 1) ε_J` with `J = I ⊔ {k}`.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub k: usize,
    pub source: InducedModule,
    pub target: InducedModule,
    pub matrix: GaussianMatrix,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct IntertwinerCheck {
    pub commutes_with_pi: bool,
    pub commutes_with_c: bool,
    pub invertible: bool,
}

impl IntertwinerCheck {
    pub fn is_ok(&self) -> bool {
        self.commutes_with_pi && self.commutes_with_c && self.invertible
    }
}

pub fn build_intertwiner(set: Subset, k: usize, n: usize) -> Result<Intertwiner> {
    let full = Subset::zero_based(n);
    let bad = |why: &str| {
        Err(Error::IntertwinerHypothesis(format!(
            "I = {set}, k = {k}, n = {n}: {why}"
        )))
    };
    if !set.is_subset(full) {
        return bad("I is not a subset of [0, n-1]");
    }
    if k == 0 || k >= n {
        return bad("k must lie in [n-1]");
    }
    if set.contains(k) {
        return bad("k already in I");
    }
    let target_set = set.with(k);
    if peak_set(full.difference(set), n) != peak_set(full.difference(target_set), n) {
        return bad("peak sets of the complements differ");
    }
    debug_assert!(iso_predicate(set, target_set, n));
    let source = build_mi(set, n)?;
    let target = build_mi(target_set, n)?;
    let ckk1 = Subset::EMPTY.with(k).with(k + 1);
    let mut matrix = SparseMatrix::zeros(target.dim(), source.dim());
    for (col, &(d, _)) in source.basis.iter().enumerate() {
        let (sign, e) = multiply(d, ckk1);
        matrix.add_to(target.index(e, 0), col, sign_scalar(sign));
        matrix.add_to(target.index(d, 0), col, -GaussianRational::one());
    }
    Ok(Intertwiner {
        k,
        source,
        target,
        matrix,
    })
}

fn intertwines(f: &GaussianMatrix, source: &[GaussianMatrix], target: &[GaussianMatrix]) -> bool {
    source.iter().zip(target).all(|(a, b)| {
        f.mul(a).expect("square matrices of one size")
            == b.mul(f).expect("square matrices of one size")
    })
}

pub fn verify_intertwiner(f: &Intertwiner) -> IntertwinerCheck {
    IntertwinerCheck {
        commutes_with_pi: intertwines(&f.matrix, &f.source.pi, &f.target.pi),
        commutes_with_c: intertwines(&f.matrix, &f.source.c, &f.target.c),
        invertible: f.matrix.is_invertible(),
    }
}

/// The `D ⊆ [n]` for which right multiplication by `c_D` is an endomorphism
/// of `M_I`.
pub fn centralizer_check(set: Subset, n: usize) -> Result<Vec<Subset>> {
    let m = build_mi(set, n)?;
    Ok(Subset::one_based(n)
        .subsets()
        .filter(|&d| {
            let r = right_multiplication(&m, d);
            intertwines(&r, &m.pi, &m.pi) && intertwines(&r, &m.c, &m.c)
        })
        .collect())
}
