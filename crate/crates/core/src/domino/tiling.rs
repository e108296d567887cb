use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::partition::Partition;
use crate::error::{Error, Result};
use crate::subset::Subset;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// A 1×2 or 2×1 rectangle, stored by its northwest cell (1-indexed).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Domino {
    pub row: usize,
    pub col: usize,
    pub orientation: Orientation,
}

impl Domino {
    pub fn horizontal(row: usize, col: usize) -> Self {
        Domino {
            row,
            col,
            orientation: Orientation::Horizontal,
        }
    }

    pub fn vertical(row: usize, col: usize) -> Self {
        Domino {
            row,
            col,
            orientation: Orientation::Vertical,
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation == Orientation::Vertical
    }

    pub fn cells(&self) -> [(usize, usize); 2] {
        match self.orientation {
            Orientation::Horizontal => [(self.row, self.col), (self.row, self.col + 1)],
            Orientation::Vertical => [(self.row, self.col), (self.row + 1, self.col)],
        }
    }

    pub fn min_row(&self) -> usize {
        self.row
    }

    pub fn max_row(&self) -> usize {
        self.row + self.is_vertical() as usize
    }

    pub fn min_col(&self) -> usize {
        self.col
    }

    pub fn max_col(&self) -> usize {
        self.col + !self.is_vertical() as usize
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> Self {
        match self.orientation {
            Orientation::Horizontal => Domino::vertical(self.col, self.row),
            Orientation::Vertical => Domino::horizontal(self.col, self.row),
        }
    }

    /// Every cell of `other` lies in a row below every cell of `self`.
    pub fn strictly_above(&self, other: &Domino) -> bool {
        other.min_row() > self.max_row()
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(a, b), (c, d)] = self.cells();
        write!(f, "({a},{b})-({c},{d})")
    }
}

impl Serialize for Domino {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Domino", 2)?;
        st.serialize_field("cells", &self.cells())?;
        let o = if self.is_vertical() {
            "vertical"
        } else {
            "horizontal"
        };
        st.serialize_field("orientation", o)?;
        st.end()
    }
}

/// Every domino tiling of `shape`, each sorted by northwest cell, listed in
/// lexicographic order.
pub fn enumerate_tilings(shape: &Partition) -> Result<Vec<Vec<Domino>>> {
    if shape.size() % 2 == 1 {
        return Err(Error::OddSize(shape.parts().to_vec()));
    }
    let cells = shape.cells();
    let mut covered: HashMap<(usize, usize), bool> = cells.iter().map(|&c| (c, false)).collect();
    let mut out = Vec::new();
    fn go(
        cells: &[(usize, usize)],
        k: usize,
        covered: &mut HashMap<(usize, usize), bool>,
        cur: &mut Vec<Domino>,
        out: &mut Vec<Vec<Domino>>,
    ) {
        let Some(pos) = (k..cells.len()).find(|&p| !covered[&cells[p]]) else {
            out.push(cur.clone());
            return;
        };
        let (r, c) = cells[pos];
        for d in [Domino::horizontal(r, c), Domino::vertical(r, c)] {
            let [_, other] = d.cells();
            if covered.get(&other) != Some(&false) {
                continue;
            }
            covered.insert((r, c), true);
            covered.insert(other, true);
            cur.push(d);
            go(cells, pos + 1, covered, cur, out);
            cur.pop();
            covered.insert((r, c), false);
            covered.insert(other, false);
        }
    }
    go(&cells, 0, &mut covered, &mut Vec::new(), &mut out);
    for t in &mut out {
        t.sort();
    }
    out.sort();
    Ok(out)
}

/// Maps each covered cell to the index of its domino.
pub fn cell_index(dominoes: &[Domino]) -> HashMap<(usize, usize), usize> {
    let mut map = HashMap::new();
    for (k, d) in dominoes.iter().enumerate() {
        for cell in d.cells() {
            map.insert(cell, k);
        }
    }
    map
}

/// True when the dominoes cover exactly the cells of `shape`.
pub fn tiles_exactly(shape: &Partition, dominoes: &[Domino]) -> bool {
    let map = cell_index(dominoes);
    map.len() == 2 * dominoes.len()
        && map.len() == shape.size()
        && map.keys().all(|&(r, c)| shape.contains(r, c))
}

/// Entries (given per domino) increase strictly across every pair of
/// horizontally or vertically adjacent cells lying in different dominoes.
/// Cells without an entry are skipped.
pub fn strictly_increasing<T: Ord>(dominoes: &[Domino], entries: &[Option<T>]) -> bool {
    let map = cell_index(dominoes);
    map.iter().all(|(&(r, c), &k)| {
        [(r, c + 1), (r + 1, c)]
            .iter()
            .all(|next| match map.get(next) {
                Some(&j) if j != k => match (&entries[k], &entries[j]) {
                    (Some(a), Some(b)) => a < b,
                    _ => true,
                },
                _ => true,
            })
    })
}

/// Descents of a sequence `dom_1, dom_2, ...`: `0` when `dom_1` is vertical,
/// `i > 0` when `dom_{i+1}` lies strictly lower than `dom_i`.
pub fn descents_of(sequence: &[Domino]) -> Subset {
    let mut out = Subset::EMPTY;
    if sequence.first().is_some_and(|d| d.is_vertical()) {
        out = out.with(0);
    }
    for i in 1..sequence.len() {
        if sequence[i - 1].strictly_above(&sequence[i]) {
            out = out.with(i);
        }
    }
    out
}

/// `s_0` on the first two dominoes of a sequence: defined when they tile the
/// northwest 2×2 square, and swaps both orientations. If `dom_1` was above
/// `dom_2` it ends up to the left of it, and vice versa.
pub fn flip_northwest(sequence: &[Domino]) -> Option<Vec<Domino>> {
    if sequence.len() < 2 {
        return None;
    }
    let (a, b) = (sequence[0], sequence[1]);
    let (new_a, new_b) = if a == Domino::horizontal(1, 1) && b == Domino::horizontal(2, 1) {
        (Domino::vertical(1, 1), Domino::vertical(1, 2))
    } else if a == Domino::vertical(1, 1) && b == Domino::vertical(1, 2) {
        (Domino::horizontal(1, 1), Domino::horizontal(2, 1))
    } else {
        return None;
    };
    let mut out = sequence.to_vec();
    out[0] = new_a;
    out[1] = new_b;
    Some(out)
}
