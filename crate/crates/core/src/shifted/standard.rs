use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::quotient::two_quotient;
use crate::domino::{
    cell_index, descents_of, enumerate_tilings, flip_northwest, strictly_increasing, tiles_exactly,
    Domino, Partition,
};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Some cell `(r, c)` of the domino has `c ≥ r`.
pub fn weakly_above_diagonal(d: &Domino) -> bool {
    d.cells().iter().any(|&(r, c)| c >= r)
}

fn strictly_below_diagonal(d: &Domino) -> bool {
    d.cells().iter().all(|&(r, c)| r > c)
}

/// No vertical domino meets the diagonal while every domino immediately to
/// its left lies strictly below the diagonal. With no left neighbours the
/// condition holds vacuously, so such a domino is forbidden.
pub fn is_shifted_tiling(tiling: &[Domino]) -> bool {
    let map = cell_index(tiling);
    tiling.iter().enumerate().all(|(k, d)| {
        if !d.is_vertical() || !d.cells().iter().any(|&(r, c)| r == c) {
            return true;
        }
        let left: Vec<usize> = d
            .cells()
            .iter()
            .filter_map(|&(r, c)| map.get(&(r, c.wrapping_sub(1))).copied())
            .filter(|&j| j != k)
            .collect();
        !left.iter().all(|&j| strictly_below_diagonal(&tiling[j]))
    })
}

pub(crate) fn check_quotient(shape: &Partition) -> Result<()> {
    if !two_quotient(shape).valid {
        return Err(Error::InvalidQuotient(shape.parts().to_vec()));
    }
    if shape.size() % 2 == 1 {
        return Err(Error::OddSize(shape.parts().to_vec()));
    }
    Ok(())
}

pub fn shifted_tilings(shape: &Partition) -> Result<Vec<Vec<Domino>>> {
    check_quotient(shape)?;
    Ok(enumerate_tilings(shape)?
        .into_iter()
        .filter(|t| is_shifted_tiling(t))
        .collect())
}

/// A standard shifted domino tableau. `tiling` is the whole shifted tiling,
/// sorted; `dominoes[k]` is the domino holding entry `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct ShiftedStandardTableau {
    pub shape: Partition,
    pub tiling: Vec<Domino>,
    pub dominoes: Vec<Domino>,
}

impl ShiftedStandardTableau {
    pub fn m(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_valid(&self) -> bool {
        if !tiles_exactly(&self.shape, &self.tiling) || !is_shifted_tiling(&self.tiling) {
            return false;
        }
        let mut filled: Vec<Domino> = self
            .tiling
            .iter()
            .copied()
            .filter(weakly_above_diagonal)
            .collect();
        let mut mine = self.dominoes.clone();
        filled.sort();
        mine.sort();
        if filled != mine {
            return false;
        }
        let pos: HashMap<Domino, usize> = self
            .dominoes
            .iter()
            .enumerate()
            .map(|(k, &d)| (d, k))
            .collect();
        let entries: Vec<Option<usize>> = self.tiling.iter().map(|d| pos.get(d).copied()).collect();
        strictly_increasing(&self.tiling, &entries)
    }

    pub fn descents(&self) -> Subset {
        descents_of(&self.dominoes)
    }

    /// `s_i(Q)` when it is again a standard shifted domino tableau of the
    /// same shape.
    pub fn simple(&self, i: usize) -> Option<Self> {
        let (dominoes, tiling) = if i == 0 {
            let flipped = flip_northwest(&self.dominoes)?;
            let mut tiling: Vec<Domino> = self
                .tiling
                .iter()
                .copied()
                .filter(|d| *d != self.dominoes[0] && *d != self.dominoes[1])
                .chain([flipped[0], flipped[1]])
                .collect();
            tiling.sort();
            (flipped, tiling)
        } else {
            let mut d = self.dominoes.clone();
            d.swap(i - 1, i);
            (d, self.tiling.clone())
        };
        let t = ShiftedStandardTableau {
            shape: self.shape.clone(),
            tiling,
            dominoes,
        };
        t.is_valid().then_some(t)
    }

    /// Reflection across the main diagonal, as `(shape, dom_1, dom_2, ...)`.
    pub fn conjugate(&self) -> (Partition, Vec<Domino>) {
        (
            self.shape.conjugate(),
            self.dominoes.iter().map(|d| d.transpose()).collect(),
        )
    }

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

impl fmt::Display for ShiftedStandardTableau {
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

/// Linear extensions of the filled dominoes of one tiling under "left of or
/// above an adjacent cell".
fn fillings(shape: &Partition, tiling: &[Domino], out: &mut Vec<ShiftedStandardTableau>) {
    let map = cell_index(tiling);
    let filled: Vec<usize> = (0..tiling.len())
        .filter(|&k| weakly_above_diagonal(&tiling[k]))
        .collect();
    let mut preds = vec![Vec::new(); tiling.len()];
    for &k in &filled {
        for (r, c) in tiling[k].cells() {
            for prev in [(r, c.wrapping_sub(1)), (r.wrapping_sub(1), c)] {
                if let Some(&j) = map.get(&prev) {
                    if j != k && weakly_above_diagonal(&tiling[j]) && !preds[k].contains(&j) {
                        preds[k].push(j);
                    }
                }
            }
        }
    }
    let mut placed = vec![false; tiling.len()];
    let mut cur = Vec::new();
    fn go(
        shape: &Partition,
        tiling: &[Domino],
        filled: &[usize],
        preds: &[Vec<usize>],
        placed: &mut Vec<bool>,
        cur: &mut Vec<Domino>,
        out: &mut Vec<ShiftedStandardTableau>,
    ) {
        if cur.len() == filled.len() {
            let mut t = tiling.to_vec();
            t.sort();
            out.push(ShiftedStandardTableau {
                shape: shape.clone(),
                tiling: t,
                dominoes: cur.clone(),
            });
            return;
        }
        for &k in filled {
            if placed[k] || preds[k].iter().any(|&j| !placed[j]) {
                continue;
            }
            placed[k] = true;
            cur.push(tiling[k]);
            go(shape, tiling, filled, preds, placed, cur, out);
            cur.pop();
            placed[k] = false;
        }
    }
    go(shape, tiling, &filled, &preds, &mut placed, &mut cur, out);
}

/// `SShDT(λ)`, sorted.
pub fn enumerate_sshdt(shape: &Partition) -> Result<Vec<ShiftedStandardTableau>> {
    let mut out = Vec::new();
    for tiling in shifted_tilings(shape)? {
        fillings(shape, &tiling, &mut out);
    }
    out.sort();
    Ok(out)
}

/// A standard shifted tableau with a set of primed entries (`⊆ [m]`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct MarkedTableau {
    pub base: ShiftedStandardTableau,
    pub primed: Subset,
}

impl MarkedTableau {
    pub fn m(&self) -> usize {
        self.base.m()
    }

    pub fn is_primed(&self, entry: usize) -> bool {
        self.primed.contains(entry)
    }

    /// All `2^m` markings of `base`.
    pub fn markings(base: &ShiftedStandardTableau) -> Vec<MarkedTableau> {
        Subset::interval(1, base.m())
            .subsets()
            .map(|primed| MarkedTableau {
                base: base.clone(),
                primed,
            })
            .collect()
    }

    pub fn descents(&self) -> Subset {
        marked_descents(self)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .base
            .dominoes
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let prime = if self.is_primed(k + 1) { "'" } else { "" };
                format!("{}{}:{}", k + 1, prime, d)
            })
            .collect();
        parts.join(" ")
    }
}

/// `0` when `1'` occurs or `dom_1` is vertical; `i > 0` when `i` is unprimed
/// and a descent of the underlying tableau, or `(i+1)'` occurs and `i` is
/// not such a descent.
pub fn marked_descents(s: &MarkedTableau) -> Subset {
    let base = s.base.descents();
    let mut out = Subset::EMPTY;
    if s.m() == 0 {
        return out;
    }
    if s.is_primed(1) || s.base.dominoes[0].is_vertical() {
        out = out.with(0);
    }
    for i in 1..s.m() {
        let unprimed_descent = !s.is_primed(i) && base.contains(i);
        let primed_next = s.is_primed(i + 1) && !base.contains(i);
        if unprimed_descent || primed_next {
            out = out.with(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn small_standard() {
        let one = enumerate_sshdt(&p(&[2])).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].descents(), Subset::EMPTY);
        let two = enumerate_sshdt(&p(&[2, 2])).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(
            two[0].dominoes,
            vec![Domino::horizontal(1, 1), Domino::horizontal(2, 1)]
        );
        assert_eq!(two[0].descents(), s(&[1]));
        assert!(shifted_tilings(&p(&[1, 1])).unwrap().is_empty());
    }

    #[test]
    fn vacuous_vertical_is_forbidden() {
        assert!(!is_shifted_tiling(&[Domino::vertical(1, 1)]));
        assert!(!is_shifted_tiling(&[
            Domino::vertical(1, 1),
            Domino::vertical(1, 2)
        ]));
        // A diagonal vertical whose only left neighbour is strictly below.
        assert!(!is_shifted_tiling(&[
            Domino::horizontal(1, 1),
            Domino::vertical(2, 1),
            Domino::vertical(2, 2)
        ]));
        // A left neighbour touching the diagonal makes it allowed.
        assert!(is_shifted_tiling(&[
            Domino::horizontal(1, 1),
            Domino::horizontal(1, 3),
            Domino::horizontal(2, 1),
            Domino::vertical(2, 3),
            Domino::horizontal(3, 1)
        ]));
    }

    #[test]
    fn marked_examples() {
        let base = enumerate_sshdt(&p(&[2])).unwrap().remove(0);
        let unprimed = MarkedTableau {
            base: base.clone(),
            primed: Subset::EMPTY,
        };
        assert_eq!(unprimed.descents(), Subset::EMPTY);
        let primed = MarkedTableau {
            base,
            primed: s(&[1]),
        };
        assert_eq!(primed.descents(), s(&[0]));
        let base = enumerate_sshdt(&p(&[2, 2])).unwrap().remove(0);
        let both = MarkedTableau {
            base: base.clone(),
            primed: s(&[1, 2]),
        };
        assert_eq!(both.descents(), s(&[0]));
        let second = MarkedTableau {
            base,
            primed: s(&[2]),
        };
        assert_eq!(second.descents(), s(&[1]));
    }

    #[test]
    fn filled_count_is_constant_per_shape() {
        for size in (2..=12).step_by(2) {
            for shape in Partition::all(size) {
                let Ok(all) = enumerate_sshdt(&shape) else {
                    continue;
                };
                if let Some(first) = all.first() {
                    assert!(
                        all.iter().all(|t| t.m() == first.m() && t.is_valid()),
                        "{shape}"
                    );
                }
            }
        }
    }
}
