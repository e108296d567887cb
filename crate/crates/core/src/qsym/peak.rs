use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use super::element::{Basis, QSymElement};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Type-B peak and valley data of a set `I ⊆ [0,n-1]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PeakDataB {
    /// `{p ∈ [n-1] : p ∈ I, p-1 ∉ I}`.
    pub peak: Subset,
    /// `{v ∈ [n] : v ∉ I, v-1 ∈ I}`.
    pub valley: Subset,
    /// 1 when `0 ∈ I`.
    pub zeta: u8,
}

pub fn peak_set(set: Subset, n: usize) -> Subset {
    set.difference(set.shift_up())
        .intersection(Subset::interval(1, n.saturating_sub(1)))
}

pub fn valley_set(set: Subset, n: usize) -> Subset {
    set.shift_up()
        .difference(set)
        .intersection(Subset::one_based(n))
}

pub fn zeta(set: Subset) -> u8 {
    set.contains(0) as u8
}

pub fn peak_data(set: Subset, n: usize) -> PeakDataB {
    PeakDataB {
        peak: peak_set(set, n),
        valley: valley_set(set, n),
        zeta: zeta(set),
    }
}

/// Reading of the side condition on `J` in `K_(1,P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Sum over `J` with `0 ∈ J`, as the formula is printed.
    Literal,
    /// Sum over `J` with `0 ∉ J`.
    Complemented,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::Literal, Variant::Complemented];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Literal => "literal",
            Variant::Complemented => "complemented",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        match text {
            "literal" => Ok(Variant::Literal),
            "complemented" => Ok(Variant::Complemented),
            _ => Err(Error::Parse(format!("unknown variant {text:?}"))),
        }
    }
}

fn check_peak_set(peaks: Subset, n: usize, bit: u8) -> Result<()> {
    let bad = |reason: &str| Error::InvalidPeakSet {
        peaks: peaks.to_string(),
        n,
        reason: reason.to_string(),
    };
    if !peaks.is_subset(Subset::interval(1, n.saturating_sub(1))) {
        return Err(bad("not contained in [n-1]"));
    }
    if !peaks.intersection(peaks.shift_up()).is_empty() {
        return Err(bad("contains two consecutive integers"));
    }
    match bit {
        0 => Ok(()),
        1 if peaks.contains(1) => Err(bad("K_(1,P) needs 1 ∉ P")),
        1 => Ok(()),
        _ => Err(bad("bit must be 0 or 1")),
    }
}

/// `K_(bit,P)` in degree `n` in the `F^B` basis.
pub fn peak_function_b(bit: u8, peaks: Subset, n: usize, variant: Variant) -> Result<QSymElement> {
    check_peak_set(peaks, n, bit)?;
    let mut out = QSymElement::zero(n, Basis::FB);
    let weight = BigInt::from(1) << (peaks.len() + bit as usize);
    for j in Subset::zero_based(n).subsets() {
        if bit == 1 {
            let keep = match variant {
                Variant::Literal => j.contains(0),
                Variant::Complemented => !j.contains(0),
            };
            if !keep {
                continue;
            }
        }
        if peaks.is_subset(j.symmetric_difference(j.shift_up())) {
            out.add_basis(j, weight.clone())?;
        }
    }
    Ok(out)
}

/// `Δ^B(I) = K_(ζ(I), Peak^B(I))`.
pub fn delta_b(set: Subset, n: usize, variant: Variant) -> Result<QSymElement> {
    if !set.is_subset(Subset::zero_based(n)) {
        return Err(Error::SubsetOutOfRange {
            subset: set.to_string(),
            range: Subset::zero_based(n).to_string(),
        });
    }
    let data = peak_data(set, n);
    peak_function_b(data.zeta, data.peak, n, variant)
}

/// Type-A peak function `K_P` in the `F` basis; `P ⊆ [2, n-1]` with no two
/// consecutive members.
pub fn peak_function_a(peaks: Subset, n: usize) -> Result<QSymElement> {
    check_peak_set(peaks, n, 0)?;
    if peaks.contains(1) {
        return Err(Error::InvalidPeakSet {
            peaks: peaks.to_string(),
            n,
            reason: "type-A peak sets exclude 1".into(),
        });
    }
    let mut out = QSymElement::zero(n, Basis::F);
    let weight = BigInt::from(1) << (peaks.len() + 1);
    for j in Basis::F.range(n).subsets() {
        if peaks.is_subset(j.symmetric_difference(j.shift_up())) {
            out.add_basis(j, weight.clone())?;
        }
    }
    Ok(out)
}
