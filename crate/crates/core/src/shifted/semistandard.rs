use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::standard::{
    shifted_tilings, weakly_above_diagonal, MarkedTableau, ShiftedStandardTableau,
};
use crate::domino::{cell_index, Domino, Partition};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// A letter of `0 < 1' < 1 < 2' < 2 < ...`, coded as `0, 1, 2, 3, 4, ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(pub u32);

impl Letter {
    pub fn unprimed(value: u32) -> Self {
        Letter(2 * value)
    }

    pub fn primed(value: u32) -> Self {
        assert!(value > 0, "0 has no primed form");
        Letter(2 * value - 1)
    }

    pub fn value(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse(format!("bad entry {text:?}"));
        match t.strip_suffix('\'') {
            Some(v) => {
                let v: u32 = v.parse().map_err(|_| bad())?;
                if v == 0 {
                    return Err(bad());
                }
                Ok(Letter::primed(v))
            }
            None => Ok(Letter::unprimed(t.parse().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// A semistandard shifted domino tableau: a shifted tiling with a letter on
/// each domino weakly above the diagonal. `filled` is sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SemistandardTableau {
    pub shape: Partition,
    pub tiling: Vec<Domino>,
    pub filled: Vec<Domino>,
    pub entries: Vec<Letter>,
}

impl SemistandardTableau {
    /// `wt_i` counts entries equal to `i` or `i'`.
    pub fn weight(&self) -> Vec<u32> {
        let top = self
            .entries
            .iter()
            .map(|l| l.value())
            .max()
            .map_or(0, |v| v + 1);
        let mut wt = vec![0; top as usize];
        for l in &self.entries {
            wt[l.value() as usize] += 1;
        }
        wt
    }

    /// Checks the three filling rules on the stored tiling.
    pub fn is_valid(&self) -> bool {
        let pos: HashMap<Domino, usize> = self
            .filled
            .iter()
            .enumerate()
            .map(|(k, &d)| (d, k))
            .collect();
        let entries: Vec<Option<Letter>> = self
            .tiling
            .iter()
            .map(|d| pos.get(d).map(|&k| self.entries[k]))
            .collect();
        let map = cell_index(&self.tiling);
        let weakly = map.iter().all(|(&(r, c), &k)| {
            [(r, c + 1), (r + 1, c)]
                .iter()
                .all(|next| match map.get(next) {
                    Some(&j) if j != k => match (entries[k], entries[j]) {
                        (Some(a), Some(b)) => a <= b,
                        _ => true,
                    },
                    _ => true,
                })
        });
        weakly && lines_ok(&self.filled, &self.entries) && northwest_ok(&self.filled, &self.entries)
    }

    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .filled
            .iter()
            .zip(&self.entries)
            .map(|(d, l)| format!("{l}:{d}"))
            .collect();
        parts.join(" ")
    }
}

/// At most one `i'` per row and at most one unprimed `i` per column.
fn lines_ok(filled: &[Domino], entries: &[Letter]) -> bool {
    let mut rows: HashMap<(usize, Letter), usize> = HashMap::new();
    let mut cols: HashMap<(usize, Letter), usize> = HashMap::new();
    for (d, &l) in filled.iter().zip(entries) {
        if l.is_primed() {
            for r in d.min_row()..=d.max_row() {
                *rows.entry((r, l)).or_default() += 1;
            }
        } else {
            for c in d.min_col()..=d.max_col() {
                *cols.entry((c, l)).or_default() += 1;
            }
        }
    }
    rows.values().chain(cols.values()).all(|&k| k <= 1)
}

fn northwest_ok(filled: &[Domino], entries: &[Letter]) -> bool {
    filled
        .iter()
        .zip(entries)
        .all(|(d, l)| !(d.row == 1 && d.col == 1 && d.is_vertical() && l.0 == 0))
}

/// `SSShDT(λ)` with entries at most `max_value` (and `max_value'`). When
/// `weight` is given, only tableaux of exactly that weight are produced.
pub fn enumerate_ssshdt(
    shape: &Partition,
    max_value: u32,
    weight: Option<&[u32]>,
) -> Result<Vec<SemistandardTableau>> {
    let mut out = Vec::new();
    for tiling in shifted_tilings(shape)? {
        fill_tiling(shape, &tiling, max_value, weight, &mut out);
    }
    out.sort();
    Ok(out)
}

struct Search<'a> {
    shape: &'a Partition,
    tiling: &'a [Domino],
    filled: Vec<Domino>,
    /// Positions (in `filled`, which is in search order) of dominoes left of
    /// or above an adjacent cell.
    preds: Vec<Vec<usize>>,
    max_code: u32,
    weight: Option<&'a [u32]>,
    counts: Vec<u32>,
    row_primes: HashMap<(usize, Letter), ()>,
    col_plain: HashMap<(usize, Letter), ()>,
    entries: Vec<Letter>,
}

fn fill_tiling(
    shape: &Partition,
    tiling: &[Domino],
    max_value: u32,
    weight: Option<&[u32]>,
    out: &mut Vec<SemistandardTableau>,
) {
    let mut sorted = tiling.to_vec();
    sorted.sort();
    let cells_filled: Vec<Domino> = sorted
        .iter()
        .copied()
        .filter(weakly_above_diagonal)
        .collect();
    if let Some(w) = weight {
        if w.iter().sum::<u32>() as usize != cells_filled.len() {
            return;
        }
    }
    let map = cell_index(&cells_filled);
    let before: Vec<Vec<usize>> = cells_filled
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let mut p: Vec<usize> = d
                .cells()
                .iter()
                .flat_map(|&(r, c)| [(r, c.wrapping_sub(1)), (r.wrapping_sub(1), c)])
                .filter_map(|cell| map.get(&cell).copied())
                .filter(|&j| j != k)
                .collect();
            p.sort_unstable();
            p.dedup();
            p
        })
        .collect();
    // Search order: a linear extension of "left of or above".
    let mut order = Vec::with_capacity(cells_filled.len());
    let mut done = vec![false; cells_filled.len()];
    while order.len() < cells_filled.len() {
        let k = (0..cells_filled.len())
            .find(|&k| !done[k] && before[k].iter().all(|&j| done[j]))
            .expect("adjacency order is acyclic");
        done[k] = true;
        order.push(k);
    }
    let mut rank = vec![0; order.len()];
    for (pos, &k) in order.iter().enumerate() {
        rank[k] = pos;
    }
    let filled: Vec<Domino> = order.iter().map(|&k| cells_filled[k]).collect();
    let preds = order
        .iter()
        .map(|&k| before[k].iter().map(|&j| rank[j]).collect())
        .collect();
    let mut search = Search {
        shape,
        tiling: &sorted,
        filled,
        preds,
        max_code: 2 * max_value,
        weight,
        counts: vec![0; max_value as usize + 1],
        row_primes: HashMap::new(),
        col_plain: HashMap::new(),
        entries: Vec::new(),
    };
    search.go(out);
}

impl Search<'_> {
    fn go(&mut self, out: &mut Vec<SemistandardTableau>) {
        let k = self.entries.len();
        if k == self.filled.len() {
            if self.weight.is_none_or(|w| {
                w.iter()
                    .enumerate()
                    .all(|(i, &x)| self.counts.get(i).copied().unwrap_or(0) == x)
                    && self.counts.iter().skip(w.len()).all(|&x| x == 0)
            }) {
                let mut pairs: Vec<(Domino, Letter)> = self
                    .filled
                    .iter()
                    .copied()
                    .zip(self.entries.iter().copied())
                    .collect();
                pairs.sort();
                out.push(SemistandardTableau {
                    shape: self.shape.clone(),
                    tiling: self.tiling.to_vec(),
                    filled: pairs.iter().map(|p| p.0).collect(),
                    entries: pairs.iter().map(|p| p.1).collect(),
                });
            }
            return;
        }
        let d = self.filled[k];
        let low = self.preds[k]
            .iter()
            .map(|&j| self.entries[j].0)
            .max()
            .unwrap_or(0);
        for code in low..=self.max_code {
            let l = Letter(code);
            let v = l.value() as usize;
            if let Some(w) = self.weight {
                if self.counts[v] + 1 > w.get(v).copied().unwrap_or(0) {
                    continue;
                }
            }
            if code == 0 && d.row == 1 && d.col == 1 && d.is_vertical() {
                continue;
            }
            let keys: Vec<(usize, Letter)> = if l.is_primed() {
                (d.min_row()..=d.max_row()).map(|r| (r, l)).collect()
            } else {
                (d.min_col()..=d.max_col()).map(|c| (c, l)).collect()
            };
            let table = if l.is_primed() {
                &mut self.row_primes
            } else {
                &mut self.col_plain
            };
            if keys.iter().any(|key| table.contains_key(key)) {
                continue;
            }
            for key in &keys {
                table.insert(*key, ());
            }
            self.counts[v] += 1;
            self.entries.push(l);
            self.go(out);
            self.entries.pop();
            self.counts[v] -= 1;
            let table = if l.is_primed() {
                &mut self.row_primes
            } else {
                &mut self.col_plain
            };
            for key in &keys {
                table.remove(key);
            }
        }
    }
}

/// `std(T)`: zeros numbered left to right, then for each value the primed
/// entries top to bottom followed by the unprimed entries left to right.
pub fn standardize(t: &SemistandardTableau) -> MarkedTableau {
    let mut order: Vec<usize> = (0..t.filled.len()).collect();
    order.sort_by_key(|&k| {
        let d = t.filled[k];
        let l = t.entries[k];
        let place = if l.0 == 0 || !l.is_primed() {
            (d.min_col(), d.min_row())
        } else {
            (d.min_row(), d.min_col())
        };
        (l.value(), !l.is_primed(), place)
    });
    let dominoes: Vec<Domino> = order.iter().map(|&k| t.filled[k]).collect();
    let primed = Subset::from_elements(
        order
            .iter()
            .enumerate()
            .filter(|(_, &k)| t.entries[k].is_primed())
            .map(|(pos, _)| pos + 1),
    );
    MarkedTableau {
        base: ShiftedStandardTableau {
            shape: t.shape.clone(),
            tiling: t.tiling.clone(),
            dominoes,
        },
        primed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts).unwrap()
    }

    #[test]
    fn letters() {
        assert_eq!(Letter::primed(2).to_string(), "2'");
        assert_eq!("3'".parse::<Letter>().unwrap(), Letter::primed(3));
        assert!("0'".parse::<Letter>().is_err());
        assert!(Letter::unprimed(0) < Letter::primed(1));
        assert!(Letter::primed(1) < Letter::unprimed(1));
    }

    #[test]
    fn one_domino() {
        let all = enumerate_ssshdt(&p(&[2]), 2, None).unwrap();
        let labels: Vec<String> = all.iter().map(|t| t.entries[0].to_string()).collect();
        assert_eq!(labels, vec!["0", "1'", "1", "2'", "2"]);
        let zero = &all[0];
        assert_eq!(standardize(zero).primed, Subset::EMPTY);
        assert_eq!(standardize(&all[3]).primed, Subset::from_elements([1]));
    }

    #[test]
    fn two_by_two_standardization() {
        let all = enumerate_ssshdt(&p(&[2, 2]), 1, None).unwrap();
        // Column rule forbids two unprimed equal letters stacked.
        for t in &all {
            assert!(t.is_valid());
            assert!(!(t.entries[0] == t.entries[1] && !t.entries[0].is_primed()));
        }
        let t = all
            .iter()
            .find(|t| t.entries == vec![Letter::primed(1), Letter::unprimed(1)])
            .unwrap();
        let s = standardize(t);
        assert_eq!(s.primed, Subset::from_elements([1]));
        assert_eq!(s.base.dominoes[0], Domino::horizontal(1, 1));
        let t = all
            .iter()
            .find(|t| t.entries == vec![Letter::unprimed(0), Letter::unprimed(1)])
            .unwrap();
        assert_eq!(standardize(t).primed, Subset::EMPTY);
    }

    #[test]
    fn weight_filter() {
        let all = enumerate_ssshdt(&p(&[4, 2]), 2, None).unwrap();
        let only = enumerate_ssshdt(&p(&[4, 2]), 2, Some(&[0, 2, 1])).unwrap();
        let expected: Vec<_> = all
            .into_iter()
            .filter(|t| t.weight() == vec![0, 2, 1])
            .collect();
        assert_eq!(only, expected);
    }
}
