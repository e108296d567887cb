use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::scalar::{FieldScalar, Scalar};
use crate::error::{Error, Result};

/// Sparse matrix with exact entries. Zero entries are never stored, so derived
/// equality is entrywise equality over all positions.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<S> {
    nrows: usize,
    ncols: usize,
    entries: BTreeMap<(usize, usize), S>,
}

impl<S: Scalar> SparseMatrix<S> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for k in 0..size {
            m.entries.insert((k, k), S::one());
        }
        m
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, S)>,
    ) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (r, c, v) in triplets {
            m.add_to(r, c, v);
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> S {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        assert!(row < self.nrows && col < self.ncols, "index out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Adds `value` to the entry at `(row, col)`.
    pub fn add_to(&mut self, row: usize, col: usize, value: S) {
        let current = self.get(row, col);
        self.set(row, col, current + value);
    }

    /// Nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Nonzero entries of one column, by row.
    pub fn column(&self, col: usize) -> Vec<(usize, S)> {
        self.entries
            .iter()
            .filter(|(&(_, c), _)| c == col)
            .map(|(&(r, _), v)| (r, v.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, factor: &S) -> Self {
        let mut out = Self::zeros(self.nrows, self.ncols);
        if factor.is_zero() {
            return out;
        }
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.clone() * factor.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.ncols != other.nrows {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut rows_of_other: BTreeMap<usize, Vec<(usize, &S)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            rows_of_other.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), S> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = rows_of_other.get(&k) {
                for &(j, b) in row {
                    let slot = acc.entry((i, j)).or_insert_with(S::zero);
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            entries: acc,
        })
    }

    /// Product of a sequence of square matrices, applied right to left as
    /// written (`mats[0] * mats[1] * ...`).
    pub fn product<'a>(size: usize, mats: impl IntoIterator<Item = &'a Self>) -> Result<Self>
    where
        S: 'a,
    {
        let mut acc = Self::identity(size);
        for m in mats {
            acc = acc.mul(m)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    /// Image of a sparse vector (index → coefficient).
    pub fn apply(&self, vector: &BTreeMap<usize, S>) -> BTreeMap<usize, S> {
        let mut out: BTreeMap<usize, S> = BTreeMap::new();
        for (&(r, c), v) in &self.entries {
            if let Some(x) = vector.get(&c) {
                let slot = out.entry(r).or_insert_with(S::zero);
                *slot = slot.clone() + v.clone() * x.clone();
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Entrywise equality; shapes must agree.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other)?;
        Ok(self.entries == other.entries)
    }

    /// Applies `f` to every stored entry; results that vanish are dropped.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        let mut out = SparseMatrix::zeros(self.nrows, self.ncols);
        for (&(r, c), v) in &self.entries {
            out.set(r, c, f(v));
        }
        out
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }
}

impl<S: FieldScalar> SparseMatrix<S> {
    /// Rank by Gaussian elimination over the field.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<BTreeMap<usize, S>> = vec![BTreeMap::new(); self.nrows];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        let mut rank = 0;
        let mut remaining: Vec<BTreeMap<usize, S>> =
            rows.into_iter().filter(|r| !r.is_empty()).collect();
        while let Some(pos) = remaining
            .iter()
            .enumerate()
            .filter_map(|(k, row)| row.keys().next().map(|&c| (c, k)))
            .min()
            .map(|(_, k)| k)
        {
            let pivot_row = remaining.swap_remove(pos);
            let (&pivot_col, pivot_val) = pivot_row.iter().next().expect("nonempty row");
            let pivot_inv = pivot_val.try_inv().expect("stored entries are nonzero");
            rank += 1;
            for row in remaining.iter_mut() {
                if let Some(factor) = row.get(&pivot_col).cloned() {
                    let factor = factor * pivot_inv.clone();
                    for (&c, v) in &pivot_row {
                        let slot = row.entry(c).or_insert_with(S::zero);
                        *slot = slot.clone() - factor.clone() * v.clone();
                    }
                    row.retain(|_, v| !v.is_zero());
                }
            }
            remaining.retain(|r| !r.is_empty());
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.nrows == self.ncols && self.rank() == self.nrows
    }
}

impl<S: Scalar + fmt::Display> fmt::Display for SparseMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols)
                .map(|c| self.get(r, c).to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Serialized as `{"nrows":..,"ncols":..,"entries":[[r,c,value],..]}`.
impl<S: Scalar + Serialize> Serialize for SparseMatrix<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Repr<'a, S> {
            nrows: usize,
            ncols: usize,
            entries: Vec<(usize, usize, &'a S)>,
        }
        Repr {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.iter().collect(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;
    use num_rational::BigRational;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn sample() -> SparseMatrix<BigRational> {
        SparseMatrix::from_triplets(2, 3, [(0, 0, q(1)), (0, 2, q(-2)), (1, 1, q(5))])
    }

    #[test]
    fn identity_is_neutral() {
        let a = sample();
        assert_eq!(SparseMatrix::identity(2).mul(&a).unwrap(), a);
        assert_eq!(a.mul(&SparseMatrix::identity(3)).unwrap(), a);
    }

    #[test]
    fn times_zero_is_zero() {
        let a = sample();
        assert!(a.mul(&SparseMatrix::zeros(3, 4)).unwrap().is_zero());
    }

    #[test]
    fn shape_mismatch_is_error() {
        let a = sample();
        assert!(matches!(a.mul(&a), Err(Error::ShapeMismatch { .. })));
        assert!(a.add(&SparseMatrix::zeros(3, 2)).is_err());
        assert!(a.try_eq(&SparseMatrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = sample();
        let sum = a.add(&a.neg()).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.nnz(), 0);
    }

    #[test]
    fn pi0_on_vertical_module_squares_to_minus_itself() {
        // Basis (ε, c_1ε) of M_{{0}} at n=1: π_0 ε = −ε and π_0 c_1ε = −√−1 ε.
        let i = GaussianRational::i();
        let pi0 =
            SparseMatrix::from_triplets(2, 2, [(0, 0, GaussianRational::from(-1)), (0, 1, -i)]);
        assert_eq!(pi0.mul(&pi0).unwrap(), pi0.neg());
        // On M_∅ every entry vanishes and the identity holds trivially.
        let zero = SparseMatrix::<GaussianRational>::zeros(2, 2);
        assert_eq!(zero.mul(&zero).unwrap(), zero.neg());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(sample().rank(), 2);
        let dependent = SparseMatrix::from_triplets(
            2,
            2,
            [(0, 0, q(1)), (0, 1, q(2)), (1, 0, q(2)), (1, 1, q(4))],
        );
        assert_eq!(dependent.rank(), 1);
        assert!(SparseMatrix::<BigRational>::identity(4).is_invertible());
    }

    #[test]
    fn apply_vector() {
        let a = sample();
        let v: BTreeMap<usize, BigRational> = [(0, q(1)), (2, q(1))].into_iter().collect();
        let image = a.apply(&v);
        assert_eq!(image.get(&0), Some(&q(-1)));
        assert_eq!(image.get(&1), None);
    }
}
