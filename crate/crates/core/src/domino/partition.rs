use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts.to_vec()));
        }
        Ok(Partition {
            parts: parts.to_vec(),
        })
    }

    /// Drops trailing zeros first; used by the 2-quotient procedure.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `r` (1-indexed); zero past the last row.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && c <= self.row(r)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (1..=len).map(move |c| (k + 1, c)))
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (1..=width)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// Every partition of `size`, in reverse lexicographic order.
    pub fn all(size: usize) -> Vec<Partition> {
        fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(cap)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// `5,4,4,1`; the empty partition prints as `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::default());
        }
        let parts: std::result::Result<Vec<usize>, _> = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        Partition::new(&parts.map_err(|_| Error::Parse(format!("bad partition {text:?}")))?)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let p: Partition = "5,4,4,1".parse().unwrap();
        assert_eq!(p.size(), 14);
        assert_eq!(p.conjugate().parts(), &[4, 3, 3, 3, 1]);
        assert!(p.contains(4, 1) && !p.contains(4, 2));
        assert!(Partition::new(&[1, 2]).is_err());
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(8).len(), 22);
        assert_eq!("".parse::<Partition>().unwrap().to_string(), "∅");
    }
}
