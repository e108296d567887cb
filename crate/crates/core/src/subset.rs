use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Finite set of small nonnegative integers, stored as a bitmask.
///
/// Ordered by the mask value, which gives every map keyed by subsets a
/// deterministic iteration order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Subset(u32);

pub const MAX_ELEMENT: usize = 31;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_elements(elements: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Subset::EMPTY;
        for e in elements {
            s = s.with(e);
        }
        s
    }

    /// `{lo, lo+1, ..., hi}`; empty when `hi < lo`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        Subset::from_elements(lo..=hi)
    }

    /// `[0, n-1]`.
    pub fn zero_based(n: usize) -> Self {
        if n == 0 {
            Subset::EMPTY
        } else {
            Subset::interval(0, n - 1)
        }
    }

    /// `[n] = {1..n}`.
    pub fn one_based(n: usize) -> Self {
        Subset::interval(1, n)
    }

    pub fn contains(self, e: usize) -> bool {
        e <= MAX_ELEMENT && self.0 >> e & 1 == 1
    }

    pub fn with(self, e: usize) -> Self {
        assert!(e <= MAX_ELEMENT, "subset element {e} too large");
        Subset(self.0 | 1 << e)
    }

    pub fn without(self, e: usize) -> Self {
        if e > MAX_ELEMENT {
            return self;
        }
        Subset(self.0 & !(1 << e))
    }

    pub fn toggle(self, e: usize) -> Self {
        assert!(e <= MAX_ELEMENT, "subset element {e} too large");
        Subset(self.0 ^ 1 << e)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Subset) -> Self {
        Subset(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// `{x + 1 : x ∈ self}`.
    pub fn shift_up(self) -> Self {
        assert!(!self.contains(MAX_ELEMENT), "shift overflows");
        Subset(self.0 << 1)
    }

    /// `{x - 1 : x ∈ self, x ≥ 1}`.
    pub fn shift_down(self) -> Self {
        Subset(self.0 >> 1)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..=MAX_ELEMENT).filter(move |&e| self.contains(e))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max(self) -> Option<usize> {
        self.iter().last()
    }

    /// Every subset of `self`, in increasing mask order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(Subset(cur))
        })
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Accepts `{0,3}`, `0,3`, `{}` and the empty string.
    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let inner = match (trimmed.strip_prefix('{'), trimmed.ends_with('}')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => trimmed,
            _ => return Err(Error::Parse(format!("unbalanced braces in {text:?}"))),
        };
        let mut s = Subset::EMPTY;
        for piece in inner.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                if inner.trim().is_empty() {
                    continue;
                }
                return Err(Error::Parse(format!("empty element in {text:?}")));
            }
            let e: usize = piece
                .parse()
                .map_err(|_| Error::Parse(format!("bad element {piece:?} in {text:?}")))?;
            if e > MAX_ELEMENT {
                return Err(Error::Parse(format!("element {e} too large")));
            }
            if s.contains(e) {
                return Err(Error::Parse(format!("repeated element {e} in {text:?}")));
            }
            s = s.with(e);
        }
        Ok(s)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse() {
        let s = Subset::from_elements([3, 0]);
        assert_eq!(s.to_string(), "{0,3}");
        assert_eq!("{0,3}".parse::<Subset>().unwrap(), s);
        assert_eq!(" 3, 0 ".parse::<Subset>().unwrap(), s);
        assert_eq!("{}".parse::<Subset>().unwrap(), Subset::EMPTY);
        assert_eq!(Subset::EMPTY.to_string(), "{}");
        assert!("{0,,1}".parse::<Subset>().is_err());
        assert!("{a}".parse::<Subset>().is_err());
        assert!("{1".parse::<Subset>().is_err());
        assert!("{1,1}".parse::<Subset>().is_err());
    }

    #[test]
    fn shifts() {
        let s = Subset::from_elements([0, 2]);
        assert_eq!(s.shift_up(), Subset::from_elements([1, 3]));
        assert_eq!(s.shift_down(), Subset::from_elements([1]));
    }

    #[test]
    fn subsets_enumeration() {
        let all: Vec<Subset> = Subset::from_elements([1, 3]).subsets().collect();
        assert_eq!(
            all,
            vec![
                Subset::EMPTY,
                Subset::from_elements([1]),
                Subset::from_elements([3]),
                Subset::from_elements([1, 3])
            ]
        );
        assert_eq!(Subset::zero_based(4).subsets().count(), 16);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }
}
