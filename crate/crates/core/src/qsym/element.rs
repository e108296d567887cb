use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{bigint_json, TruncatedPolynomial};
use crate::error::{Error, Result};
use crate::subset::Subset;
use crate::IntPolynomial;

/// Which fundamental basis the coefficients refer to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Basis {
    /// `F_I`, `I ⊆ [n-1]`.
    F,
    /// `F^B_I`, `I ⊆ [0,n-1]`.
    FB,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::F => "F",
            Basis::FB => "FB",
        }
    }

    /// The index range of the basis in degree `n`.
    pub fn range(self, n: usize) -> Subset {
        match self {
            Basis::F if n == 0 => Subset::EMPTY,
            Basis::F => Subset::interval(1, n - 1),
            Basis::FB => Subset::zero_based(n),
        }
    }
}

/// Homogeneous degree-`n` quasisymmetric function with integer coordinates
/// in a fundamental basis. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<Subset, BigInt>,
}

impl QSymElement {
    pub fn zero(n: usize, basis: Basis) -> Self {
        QSymElement {
            n,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    /// `F^B_I` in degree `n`.
    pub fn fb(n: usize, set: Subset) -> Result<Self> {
        let mut out = Self::zero(n, Basis::FB);
        out.add_basis(set, BigInt::one())?;
        Ok(out)
    }

    /// `F_I` in degree `n`.
    pub fn f(n: usize, set: Subset) -> Result<Self> {
        let mut out = Self::zero(n, Basis::F);
        out.add_basis(set, BigInt::one())?;
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn coeffs(&self) -> &BTreeMap<Subset, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, set: Subset) -> BigInt {
        self.coeffs.get(&set).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of the coefficients, i.e. the dimension of a module with this
    /// characteristic.
    pub fn total(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Adds `coeff` times the basis element indexed by `set`.
    pub fn add_basis(&mut self, set: Subset, coeff: BigInt) -> Result<()> {
        let range = self.basis.range(self.n);
        if !set.is_subset(range) {
            return Err(Error::SubsetOutOfRange {
                subset: set.to_string(),
                range: range.to_string(),
            });
        }
        let sum = self.coeff(set) + coeff;
        if sum.is_zero() {
            self.coeffs.remove(&set);
        } else {
            self.coeffs.insert(set, sum);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (&s, c) in &other.coeffs {
            out.add_basis(s, c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.n, self.basis);
        if factor.is_zero() {
            return out;
        }
        for (&s, c) in &self.coeffs {
            out.coeffs.insert(s, c * factor);
        }
        out
    }

    /// Coefficientwise equality; degree and basis must agree.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(self.coeffs == other.coeffs)
    }

    /// Expands into monomials in `x_0..x_{nvars-1}`.
    pub fn to_monomials(&self, nvars: usize) -> IntPolynomial {
        let mut out = TruncatedPolynomial::zero(nvars, self.n as u32);
        for (&s, c) in &self.coeffs {
            let mono = match self.basis {
                Basis::FB => fb_monomials(s, self.n, nvars),
                Basis::F => f_monomials(s, self.n, nvars),
            }
            .expect("stored subsets are in range");
            out = out.add(&mono.scale(c)).expect("same nvars");
        }
        out
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.basis != other.basis {
            return Err(Error::DegreeMismatch(format!(
                "{}/{} vs {}/{}",
                self.n,
                self.basis.name(),
                other.n,
                other.basis.name()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for QSymElement {
    /// `2*FB{0} + FB{1}`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .map(|(s, c)| {
                if c.is_one() {
                    format!("{}{}", self.basis.name(), s)
                } else {
                    format!("{}*{}{}", c, self.basis.name(), s)
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// `{"n": 4, "basis": "FB", "coeffs": [["{0,3}", 2], ...]}`.
impl Serialize for QSymElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs: Vec<(String, serde_json::Value)> = self
            .coeffs
            .iter()
            .map(|(s, c)| (s.to_string(), bigint_json(c)))
            .collect();
        let mut st = serializer.serialize_struct("QSymElement", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("basis", self.basis.name())?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

/// Chains `first ≤ i_1 ≤ ... ≤ i_n < nvars` (with `i_0 = first`) rising
/// strictly after every position in `strict`, accumulated as monomials.
fn chain_monomials(strict: Subset, n: usize, nvars: usize, start: usize) -> IntPolynomial {
    let mut out = TruncatedPolynomial::zero(nvars, n as u32);
    let mut exp = vec![0u32; nvars];
    fn go(
        pos: usize,
        prev: usize,
        strict: Subset,
        n: usize,
        nvars: usize,
        exp: &mut Vec<u32>,
        out: &mut IntPolynomial,
    ) {
        if pos > n {
            out.add_term(exp.clone(), BigInt::one());
            return;
        }
        let lo = if strict.contains(pos - 1) {
            prev + 1
        } else {
            prev
        };
        for v in lo..nvars {
            exp[v] += 1;
            go(pos + 1, v, strict, n, nvars, exp, out);
            exp[v] -= 1;
        }
    }
    go(1, start, strict, n, nvars, &mut exp, &mut out);
    out
}

/// Monomial expansion of `F^B_I` in degree `n`, restricted to `x_0..x_{nvars-1}`.
pub fn fb_monomials(set: Subset, n: usize, nvars: usize) -> Result<IntPolynomial> {
    let range = Basis::FB.range(n);
    if !set.is_subset(range) {
        return Err(Error::SubsetOutOfRange {
            subset: set.to_string(),
            range: range.to_string(),
        });
    }
    Ok(chain_monomials(set, n, nvars, 0))
}

/// Monomial expansion of `F_I` (indices start at 1, `x_0` unused).
pub fn f_monomials(set: Subset, n: usize, nvars: usize) -> Result<IntPolynomial> {
    let range = Basis::F.range(n);
    if !set.is_subset(range) {
        return Err(Error::SubsetOutOfRange {
            subset: set.to_string(),
            range: range.to_string(),
        });
    }
    // i_1 ≥ 1 is the same as a strict rise after an imaginary i_0 = 0.
    Ok(chain_monomials(set.with(0), n, nvars, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(e: &[usize]) -> Subset {
        Subset::from_elements(e.iter().copied())
    }

    #[test]
    fn fb_small_cases() {
        assert_eq!(fb_monomials(s(&[]), 1, 2).unwrap().to_string(), "x0 + x1");
        assert_eq!(fb_monomials(s(&[0]), 1, 2).unwrap().to_string(), "x1");
        assert!(fb_monomials(s(&[1]), 1, 2).is_err());
    }

    #[test]
    fn fb_matches_displayed_sums() {
        // F^B_{{2,3}}: 0 ≤ i1 ≤ i2 < i3 < i4; F^B_{{0,3}}: 0 < i1 ≤ i2 ≤ i3 < i4.
        let nvars = 5;
        let mut want23 = TruncatedPolynomial::zero(nvars, 4);
        let mut want03 = TruncatedPolynomial::zero(nvars, 4);
        for a in 0..nvars {
            for b in a..nvars {
                for c in b..nvars {
                    for d in c..nvars {
                        let mut e = vec![0u32; nvars];
                        for v in [a, b, c, d] {
                            e[v] += 1;
                        }
                        if b < c && c < d {
                            want23.add_term(e.clone(), BigInt::one());
                        }
                        if a > 0 && c < d {
                            want03.add_term(e, BigInt::one());
                        }
                    }
                }
            }
        }
        assert!(fb_monomials(s(&[2, 3]), 4, nvars)
            .unwrap()
            .try_eq(&want23)
            .unwrap());
        assert!(fb_monomials(s(&[0, 3]), 4, nvars)
            .unwrap()
            .try_eq(&want03)
            .unwrap());
    }

    #[test]
    fn f_small_cases() {
        assert_eq!(f_monomials(s(&[]), 1, 2).unwrap().to_string(), "x1");
        // Σ_{1≤i1<i2} with three variables: only x1*x2.
        assert_eq!(f_monomials(s(&[1]), 2, 3).unwrap().to_string(), "x1*x2");
        // F_{{2,3}} = Σ_{1≤i1≤i2<i3<i4}; with x1..x3 only i=(1,1,2,3).
        assert_eq!(
            f_monomials(s(&[2, 3]), 4, 4).unwrap().to_string(),
            "x1^2*x2*x3"
        );
    }

    #[test]
    fn element_tools() {
        let a = QSymElement::fb(1, Subset::EMPTY).unwrap();
        let two = a.add(&a).unwrap();
        assert_eq!(two.coeff(Subset::EMPTY), BigInt::from(2));
        assert_eq!(
            QSymElement::fb(1, s(&[0]))
                .unwrap()
                .to_monomials(2)
                .to_string(),
            "x1"
        );
        assert!(a.add(&QSymElement::fb(2, Subset::EMPTY).unwrap()).is_err());
        assert!(a
            .try_eq(&QSymElement::f(1, Subset::EMPTY).unwrap())
            .is_err());
        assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let mut x = QSymElement::zero(4, Basis::FB);
        x.add_basis(s(&[0, 3]), 2.into()).unwrap();
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            r#"{"n":4,"basis":"FB","coeffs":[["{0,3}",2]]}"#
        );
        assert_eq!(x.to_string(), "2*FB{0,3}");
    }
}
