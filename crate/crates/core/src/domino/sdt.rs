use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::partition::Partition;
use super::tiling::{
    descents_of, enumerate_tilings, flip_northwest, strictly_increasing, tiles_exactly, Domino,
};
use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::hecke::{build_from_labeled_basis, LabeledBasis, OperatorFamily};
use crate::perm::CoxeterDescriptor;
use crate::qsym::{Basis, QSymElement};
use crate::subset::Subset;

/// A standard domino tableau; `dominoes[k]` holds the entry `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct StandardDominoTableau {
    pub shape: Partition,
    pub dominoes: Vec<Domino>,
}

impl StandardDominoTableau {
    pub fn new(shape: Partition, dominoes: Vec<Domino>) -> Result<Self> {
        let t = StandardDominoTableau { shape, dominoes };
        if !t.is_valid() {
            return Err(Error::InvalidFamily(format!(
                "not a standard domino tableau:\n{t}"
            )));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_valid(&self) -> bool {
        let entries: Vec<Option<usize>> = (0..self.n()).map(Some).collect();
        tiles_exactly(&self.shape, &self.dominoes) && strictly_increasing(&self.dominoes, &entries)
    }

    pub fn descents(&self) -> Subset {
        descents_of(&self.dominoes)
    }

    /// `s_i(T)` as a filling, valid or not; `None` only when `s_0` has no
    /// northwest square to flip.
    pub fn simple_raw(&self, i: usize) -> Option<Self> {
        let dominoes = if i == 0 {
            flip_northwest(&self.dominoes)?
        } else {
            let mut d = self.dominoes.clone();
            d.swap(i - 1, i);
            d
        };
        Some(StandardDominoTableau {
            shape: self.shape.clone(),
            dominoes,
        })
    }

    /// `s_i(T)` when it is again a standard domino tableau.
    pub fn simple(&self, i: usize) -> Option<Self> {
        self.simple_raw(i).filter(|t| t.is_valid())
    }

    /// One-line form used as a basis label.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .dominoes
            .iter()
            .enumerate()
            .map(|(k, d)| format!("{}:{}", k + 1, d))
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for StandardDominoTableau {
    /// One `entry:(r,c)-(r,c)` line per domino.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.dominoes.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{}:{}", k + 1, d)?;
        }
        Ok(())
    }
}

fn half_size(shape: &Partition) -> Result<usize> {
    if shape.size() % 2 == 1 {
        return Err(Error::OddSize(shape.parts().to_vec()));
    }
    Ok(shape.size() / 2)
}

/// All standard domino tableaux of `shape`, grown one domino at a time
/// through a chain of sub-shapes; sorted.
pub fn enumerate_sdt(shape: &Partition) -> Result<Vec<StandardDominoTableau>> {
    let n = half_size(shape)?;
    let rows = shape.len();
    let mut out = Vec::new();
    fn go(
        shape: &Partition,
        n: usize,
        inner: &mut Vec<usize>,
        cur: &mut Vec<Domino>,
        out: &mut Vec<StandardDominoTableau>,
    ) {
        if cur.len() == n {
            out.push(StandardDominoTableau {
                shape: shape.clone(),
                dominoes: cur.clone(),
            });
            return;
        }
        let row_above =
            |inner: &Vec<usize>, r: usize| if r == 0 { usize::MAX } else { inner[r - 1] };
        for r in 0..inner.len() {
            let len = inner[r];
            // Horizontal in row r + 1.
            if len + 2 <= shape.row(r + 1) && row_above(inner, r) >= len + 2 {
                inner[r] += 2;
                cur.push(Domino::horizontal(r + 1, len + 1));
                go(shape, n, inner, cur, out);
                cur.pop();
                inner[r] -= 2;
            }
            // Vertical in rows r + 1, r + 2.
            if r + 1 < inner.len()
                && inner[r + 1] == len
                && len < shape.row(r + 2)
                && row_above(inner, r) > len
            {
                inner[r] += 1;
                inner[r + 1] += 1;
                cur.push(Domino::vertical(r + 1, len + 1));
                go(shape, n, inner, cur, out);
                cur.pop();
                inner[r] -= 1;
                inner[r + 1] -= 1;
            }
        }
    }
    go(shape, n, &mut vec![0; rows], &mut Vec::new(), &mut out);
    out.sort();
    Ok(out)
}

/// Oracle: every tiling with every bijective filling, filtered by the
/// row and column conditions. Exponential; meant for small shapes.
pub fn brute_force_sdt(shape: &Partition) -> Result<Vec<StandardDominoTableau>> {
    half_size(shape)?;
    let mut out = Vec::new();
    for tiling in enumerate_tilings(shape)? {
        let mut order: Vec<usize> = (0..tiling.len()).collect();
        permute(&mut order, 0, &mut |perm| {
            let t = StandardDominoTableau {
                shape: shape.clone(),
                dominoes: perm.iter().map(|&k| tiling[k]).collect(),
            };
            if t.is_valid() {
                out.push(t);
            }
        });
    }
    out.sort();
    Ok(out)
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for j in k..items.len() {
        items.swap(k, j);
        permute(items, k + 1, visit);
        items.swap(k, j);
    }
}

/// `G_λ = Σ_{T ∈ SDT(λ)} F^B_{Des(T)}`.
pub fn g_lambda(shape: &Partition) -> Result<QSymElement> {
    let n = half_size(shape)?;
    let mut out = QSymElement::zero(n, Basis::FB);
    for t in enumerate_sdt(shape)? {
        out.add_basis(t.descents(), BigInt::one())?;
    }
    Ok(out)
}

pub fn sdt_labeled_basis(shape: &Partition) -> Result<LabeledBasis> {
    let n = half_size(shape)?;
    let tableaux = enumerate_sdt(shape)?;
    let index: std::collections::HashMap<&StandardDominoTableau, usize> =
        tableaux.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let transitions = (0..n)
        .map(|i| {
            tableaux
                .iter()
                .map(|t| t.simple(i).and_then(|s| index.get(&s).copied()))
                .collect()
        })
        .collect();
    LabeledBasis::new(
        CoxeterDescriptor::type_b(n),
        tableaux.iter().map(|t| t.label()).collect(),
        tableaux.iter().map(|t| t.descents()).collect(),
        transitions,
    )
}

/// The `H^B_n(0)` action on `ℂSDT(λ)`.
pub fn sdt_operator_family<S: Scalar>(shape: &Partition) -> Result<OperatorFamily<S>> {
    Ok(build_from_labeled_basis(&sdt_labeled_basis(shape)?))
}
