use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Polynomial in `x_0..x_{nvars-1}` with every term of total degree at most
/// `degree_cap`. Terms are kept in lexicographic exponent order.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedPolynomial<C> {
    nvars: usize,
    degree_cap: u32,
    terms: BTreeMap<Vec<u32>, C>,
    truncated: bool,
}

impl<C: Scalar> TruncatedPolynomial<C> {
    pub fn zero(nvars: usize, degree_cap: u32) -> Self {
        TruncatedPolynomial {
            nvars,
            degree_cap,
            terms: BTreeMap::new(),
            truncated: false,
        }
    }

    pub fn one(nvars: usize, degree_cap: u32) -> Self {
        let mut p = Self::zero(nvars, degree_cap);
        p.add_term(vec![0; nvars], C::one());
        p
    }

    /// The variable `x_k`.
    pub fn var(k: usize, nvars: usize, degree_cap: u32) -> Self {
        let mut exp = vec![0; nvars];
        exp[k] = 1;
        let mut p = Self::zero(nvars, degree_cap);
        p.add_term(exp, C::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    /// True when some operation producing this value dropped terms above the cap.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, C> {
        &self.terms
    }

    pub fn coeff(&self, exp: &[u32]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff * x^exp`. Terms above the cap are dropped and flagged.
    pub fn add_term(&mut self, exp: Vec<u32>, coeff: C) {
        assert_eq!(exp.len(), self.nvars, "exponent length must equal nvars");
        if exp.iter().sum::<u32>() > self.degree_cap {
            if !coeff.is_zero() {
                self.truncated = true;
            }
            return;
        }
        let sum = self.coeff(&exp) + coeff;
        if sum.is_zero() {
            self.terms.remove(&exp);
        } else {
            self.terms.insert(exp, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = self.clone();
        out.degree_cap = self.degree_cap.min(other.degree_cap);
        out.truncated |= other.truncated;
        if out.degree_cap < self.degree_cap {
            out.terms.clear();
            for (e, c) in &self.terms {
                out.add_term(e.clone(), c.clone());
            }
        }
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = Self::zero(self.nvars, self.degree_cap);
        out.truncated = self.truncated;
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Product truncated at the smaller of the two caps.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_nvars(other)?;
        let mut out = Self::zero(self.nvars, self.degree_cap.min(other.degree_cap));
        out.truncated = self.truncated || other.truncated;
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Equality of the term maps. Caps and the truncation flag are metadata
    /// and do not take part.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_nvars(other)?;
        Ok(self.terms == other.terms)
    }

    fn check_nvars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }
}

impl<C: Scalar + fmt::Display> fmt::Display for TruncatedPolynomial<C> {
    /// Renders terms by increasing total degree, then lexicographically
    /// descending exponent (so `x0` precedes `x1`), e.g. `x0 + 2*x1 + x0^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Vec<u32>, &C)> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        for (k, (exp, coeff)) in ordered.into_iter().enumerate() {
            let mut mono = Vec::new();
            for (v, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(format!("x{v}")),
                    _ => mono.push(format!("x{v}^{e}")),
                }
            }
            let mono = mono.join("*");
            let text = coeff.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mono.is_empty(), magnitude == "1") {
                (true, _) => write!(f, "{magnitude}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{magnitude}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// JSON coefficient for an exact integer: a number when it fits in `i64`,
/// otherwise its decimal string.
pub fn bigint_json(value: &BigInt) -> serde_json::Value {
    match value.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(value.to_string()),
    }
}

/// Serialized as a list of `[exponent-vector, coefficient]` pairs in
/// lexicographic exponent order.
impl Serialize for TruncatedPolynomial<BigInt> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (exp, coeff) in &self.terms {
            seq.serialize_element(&(exp, bigint_json(coeff)))?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = TruncatedPolynomial<BigInt>;

    #[test]
    fn square_of_variable() {
        let x0 = P::var(0, 2, 4);
        let sq = x0.mul(&x0).unwrap();
        assert_eq!(sq.coeff(&[2, 0]), BigInt::from(1));
        assert_eq!(sq.len(), 1);
        assert_eq!(sq.to_string(), "x0^2");
    }

    #[test]
    fn cancellation() {
        let x0 = P::var(0, 2, 4);
        let x1 = P::var(1, 2, 4);
        let s = x0.add(&x1).unwrap().add(&x0.neg()).unwrap();
        assert!(s.try_eq(&x1).unwrap());
    }

    #[test]
    fn truncation_is_flagged() {
        let x0 = P::var(0, 1, 1);
        let sq = x0.mul(&x0).unwrap();
        assert!(sq.is_zero());
        assert!(sq.truncated());
        assert!(!x0.truncated());
    }

    #[test]
    fn nvars_mismatch() {
        assert_eq!(
            P::var(0, 1, 2).add(&P::var(0, 2, 2)),
            Err(Error::NvarsMismatch(1, 2))
        );
    }

    #[test]
    fn display_and_json() {
        let mut p = P::zero(3, 3);
        p.add_term(vec![1, 0, 0], 1.into());
        p.add_term(vec![0, 1, 0], 2.into());
        p.add_term(vec![0, 0, 1], (-2).into());
        assert_eq!(p.to_string(), "x0 + 2*x1 - 2*x2");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[[0,0,1],-2],[[0,1,0],2],[[1,0,0],1]]");
    }
}
