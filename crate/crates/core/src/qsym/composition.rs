use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Composition of `n`: positive parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
}

/// Type-B composition: the first part may be zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct TypeBComposition {
    parts: Vec<usize>,
}

fn partial_sums(parts: &[usize]) -> Subset {
    let mut acc = 0;
    let mut out = Subset::EMPTY;
    for &p in &parts[..parts.len().saturating_sub(1)] {
        acc += p;
        out = out.with(acc);
    }
    out
}

fn parts_from_descents(set: Subset, n: usize) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut prev = 0;
    for d in set.iter() {
        parts.push(d - prev);
        prev = d;
    }
    parts.push(n - prev);
    parts
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::Parse(format!(
                "composition parts must be positive: {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `{α_1, α_1+α_2, ...}` without the total.
    pub fn descent_set(&self) -> Subset {
        partial_sums(&self.parts)
    }

    /// Inverse of [`Composition::descent_set`]; `set` must lie in `[n-1]`.
    pub fn from_descent_set(set: Subset, n: usize) -> Result<Self> {
        if n == 0 || !set.is_subset(Subset::interval(1, n - 1)) {
            return Err(Error::SubsetOutOfRange {
                subset: set.to_string(),
                range: format!("[1,{}]", n.saturating_sub(1)),
            });
        }
        Ok(Composition {
            parts: parts_from_descents(set, n),
        })
    }

    /// All compositions of `n`, ordered by descent-set mask.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return Vec::new();
        }
        Subset::interval(1, n - 1)
            .subsets()
            .map(|s| Composition::from_descent_set(s, n).expect("in range"))
            .collect()
    }
}

impl TypeBComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts[1..].contains(&0) {
            return Err(Error::Parse(format!(
                "type-B composition needs positive parts after the first: {parts:?}"
            )));
        }
        Ok(TypeBComposition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn descent_set(&self) -> Subset {
        partial_sums(&self.parts)
    }

    /// Inverse of [`TypeBComposition::descent_set`]; `set` must lie in `[0,n-1]`.
    pub fn from_descent_set(set: Subset, n: usize) -> Result<Self> {
        if !set.is_subset(Subset::zero_based(n)) {
            return Err(Error::SubsetOutOfRange {
                subset: set.to_string(),
                range: format!("[0,{}]", n.saturating_sub(1)),
            });
        }
        Ok(TypeBComposition {
            parts: parts_from_descents(set, n),
        })
    }

    pub fn all(n: usize) -> Vec<TypeBComposition> {
        Subset::zero_based(n)
            .subsets()
            .map(|s| TypeBComposition::from_descent_set(s, n).expect("in range"))
            .collect()
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let text: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", text.join(","))
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl fmt::Display for TypeBComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_bijection_examples() {
        let a = Composition::new(vec![2, 1, 1]).unwrap();
        assert_eq!(a.descent_set(), Subset::from_elements([2, 3]));
        let b = TypeBComposition::new(vec![0, 3, 1]).unwrap();
        assert_eq!(b.descent_set(), Subset::from_elements([0, 3]));
        assert_eq!(
            Composition::from_descent_set(Subset::EMPTY, 4)
                .unwrap()
                .parts(),
            &[4]
        );
        assert!(Composition::from_descent_set(Subset::from_elements([0]), 4).is_err());
        assert!(TypeBComposition::from_descent_set(Subset::from_elements([4]), 4).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
        assert!(TypeBComposition::new(vec![0, 0]).is_err());
    }

    #[test]
    fn round_trips() {
        for n in 1..=8 {
            let all = Composition::all(n);
            assert_eq!(all.len(), 1 << (n - 1));
            for c in all {
                assert_eq!(c.size(), n);
                assert_eq!(
                    Composition::from_descent_set(c.descent_set(), n).unwrap(),
                    c
                );
            }
            let all_b = TypeBComposition::all(n);
            assert_eq!(all_b.len(), 1 << n);
            for c in all_b {
                assert_eq!(c.size(), n);
                assert_eq!(
                    TypeBComposition::from_descent_set(c.descent_set(), n).unwrap(),
                    c
                );
            }
        }
    }
}
