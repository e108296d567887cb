use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::basis::LabeledBasis;
use crate::algebra::{Scalar, SparseMatrix};
use crate::error::{Error, Result};
use crate::perm::CoxeterDescriptor;

/// Matrices for `π_i`, one per index `0..n`, acting on column vectors.
///
/// For type A the slot at index 0 is an unused zero matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct OperatorFamily<S: Scalar> {
    pub descriptor: CoxeterDescriptor,
    pub labels: Vec<String>,
    pub basis: Option<LabeledBasis>,
    matrices: Vec<SparseMatrix<S>>,
}

impl<S: Scalar> OperatorFamily<S> {
    /// A family from explicit matrices, indexed `0..n`.
    pub fn from_matrices(
        descriptor: CoxeterDescriptor,
        labels: Vec<String>,
        matrices: Vec<SparseMatrix<S>>,
    ) -> Result<Self> {
        let size = labels.len();
        if matrices.len() != descriptor.n {
            return Err(Error::InvalidFamily(format!(
                "expected {} matrices, got {}",
                descriptor.n,
                matrices.len()
            )));
        }
        if let Some(m) = matrices.iter().find(|m| m.shape() != (size, size)) {
            return Err(Error::ShapeMismatch {
                left: m.shape(),
                right: (size, size),
            });
        }
        Ok(OperatorFamily {
            descriptor,
            labels,
            basis: None,
            matrices,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn pi(&self, i: usize) -> &SparseMatrix<S> {
        &self.matrices[i]
    }

    pub fn matrices(&self) -> &[SparseMatrix<S>] {
        &self.matrices
    }

    /// Replaces the matrix of `π_i`; used for fault injection in tests.
    pub fn set_pi(&mut self, i: usize, matrix: SparseMatrix<S>) {
        self.matrices[i] = matrix;
    }
}

/// Column `y` of `π_i` is `-y` when `i ∈ L(y)`, zero when `f_i(y)` is
/// undefined, and the unit vector at `f_i(y)` otherwise.
pub fn build_from_labeled_basis<S: Scalar>(basis: &LabeledBasis) -> OperatorFamily<S> {
    let size = basis.len();
    let matrices = (0..basis.n())
        .map(|i| {
            let mut m = SparseMatrix::zeros(size, size);
            if !basis.descriptor.is_generator(i) {
                return m;
            }
            for y in 0..size {
                if basis.descents[y].contains(i) {
                    m.set(y, y, -S::one());
                } else if let Some(z) = basis.transitions[i][y] {
                    m.add_to(z, y, S::one());
                }
            }
            m
        })
        .collect();
    OperatorFamily {
        descriptor: basis.descriptor,
        labels: basis.labels.clone(),
        basis: Some(basis.clone()),
        matrices,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationKind {
    Quadratic,
    Braid,
}

impl RelationKind {
    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Quadratic => "quadratic",
            RelationKind::Braid => "braid",
        }
    }
}

/// First relation that fails, or `Ok`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationReport {
    Ok,
    Failed {
        kind: RelationKind,
        i: usize,
        j: usize,
    },
}

impl RelationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, RelationReport::Ok)
    }
}

impl Serialize for RelationReport {
    fn serialize<Ser: Serializer>(
        &self,
        serializer: Ser,
    ) -> std::result::Result<Ser::Ok, Ser::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        match self {
            RelationReport::Ok => map.serialize_entry("relations", "ok")?,
            RelationReport::Failed { kind, i, j } => {
                #[derive(Serialize)]
                struct Body {
                    kind: &'static str,
                    i: usize,
                    j: usize,
                }
                let body = Body {
                    kind: kind.name(),
                    i: *i,
                    j: *j,
                };
                map.serialize_entry("failed", &body)?
            }
        }
        map.end()
    }
}

/// The word `... δ γ δ` of length `r` ending in `δ`, as a matrix product.
fn alternating<S: Scalar>(
    size: usize,
    gamma: &SparseMatrix<S>,
    delta: &SparseMatrix<S>,
    r: usize,
) -> SparseMatrix<S> {
    let word = (0..r).map(|k| {
        if (r - 1 - k).is_multiple_of(2) {
            delta
        } else {
            gamma
        }
    });
    SparseMatrix::product(size, word).expect("square matrices of one size")
}

/// Checks `π_i² = -π_i` for every generator, then every braid relation, in
/// generator order.
pub fn verify_relations<S: Scalar>(fam: &OperatorFamily<S>) -> RelationReport {
    let gens = fam.descriptor.generators();
    let size = fam.dim();
    for &i in &gens {
        let p = fam.pi(i);
        let sq = p.mul(p).expect("square");
        if sq != p.neg() {
            return RelationReport::Failed {
                kind: RelationKind::Quadratic,
                i,
                j: i,
            };
        }
    }
    for (a, &i) in gens.iter().enumerate() {
        for &j in &gens[a + 1..] {
            let m = fam.descriptor.m(i, j);
            let left = alternating(size, fam.pi(i), fam.pi(j), m);
            let right = alternating(size, fam.pi(j), fam.pi(i), m);
            if left != right {
                return RelationReport::Failed {
                    kind: RelationKind::Braid,
                    i,
                    j,
                };
            }
        }
    }
    RelationReport::Ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_elements;
    use crate::subset::Subset;
    use num_bigint::BigInt;

    fn b1() -> LabeledBasis {
        let d = CoxeterDescriptor::type_b(1);
        LabeledBasis::from_permutations(&all_elements(&d), d).unwrap()
    }

    #[test]
    fn b1_matrix() {
        let fam = build_from_labeled_basis::<BigInt>(&b1());
        let want = SparseMatrix::from_triplets(
            2,
            2,
            vec![(1, 0, BigInt::from(1)), (1, 1, BigInt::from(-1))],
        );
        assert_eq!(fam.pi(0), &want);
        assert!(verify_relations(&fam).is_ok());
    }

    #[test]
    fn singleton() {
        let d = CoxeterDescriptor::type_b(1);
        let basis = LabeledBasis::singleton(d, "x", Subset::from_elements([0])).unwrap();
        let fam = build_from_labeled_basis::<BigInt>(&basis);
        assert_eq!(fam.pi(0).get(0, 0), BigInt::from(-1));
    }

    #[test]
    fn whole_group_satisfies_relations() {
        for n in 1..=3 {
            let d = CoxeterDescriptor::type_b(n);
            let basis = LabeledBasis::from_permutations(&all_elements(&d), d).unwrap();
            assert!(verify_relations(&build_from_labeled_basis::<BigInt>(&basis)).is_ok());
        }
    }

    #[test]
    fn sign_flip_is_reported() {
        let d = CoxeterDescriptor::type_b(2);
        let basis = LabeledBasis::from_permutations(&all_elements(&d), d).unwrap();
        let mut fam = build_from_labeled_basis::<BigInt>(&basis);
        let flip = |m: &SparseMatrix<BigInt>, diagonal: bool| {
            let mut bad = m.clone();
            let (r, c, v) = m
                .iter()
                .find(|(r, c, _)| (r == c) == diagonal)
                .map(|(r, c, v)| (r, c, v.clone()))
                .unwrap();
            bad.set(r, c, -v);
            bad
        };
        fam.set_pi(1, flip(fam.pi(1), true));
        assert_eq!(
            verify_relations(&fam),
            RelationReport::Failed {
                kind: RelationKind::Quadratic,
                i: 1,
                j: 1
            }
        );
        // An off-diagonal sign flip keeps π_1² = -π_1 but breaks the braid.
        let mut fam = build_from_labeled_basis::<BigInt>(&basis);
        fam.set_pi(1, flip(fam.pi(1), false));
        assert_eq!(
            verify_relations(&fam),
            RelationReport::Failed {
                kind: RelationKind::Braid,
                i: 0,
                j: 1
            }
        );
    }

    #[test]
    fn report_json() {
        assert_eq!(
            serde_json::to_string(&RelationReport::Ok).unwrap(),
            r#"{"relations":"ok"}"#
        );
        let f = RelationReport::Failed {
            kind: RelationKind::Braid,
            i: 0,
            j: 1,
        };
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"failed":{"kind":"braid","i":0,"j":1}}"#
        );
    }
}
