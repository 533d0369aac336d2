use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A polynomial in `L` with exact integer coefficients; `coeffs[i]` is the
/// coefficient of `L^i`. Trailing zeros are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LPoly {
    coeffs: Vec<BigInt>,
}

impl LPoly {
    pub fn zero() -> Self {
        LPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        LPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        LPoly::from_coeffs(vec![c.into()])
    }

    /// The variable `L` itself.
    pub fn var() -> Self {
        LPoly::monomial(1, 1)
    }

    /// `c · L^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        LPoly::from_coeffs(coeffs)
    }

    /// Coefficients in ascending order; trailing zeros are stripped.
    pub fn from_coeffs<T: Into<BigInt>>(coeffs: Vec<T>) -> Self {
        let mut p = LPoly {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `L^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term; `None` for the zero polynomial.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: impl Into<BigInt>) -> BigInt {
        let x = x.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    pub fn pow(&self, e: u32) -> LPoly {
        let mut result = LPoly::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    pub fn scale(&self, c: &BigInt) -> LPoly {
        LPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect::<Vec<_>>())
    }

    /// Multiplication by `L^k`.
    pub fn shift(&self, k: usize) -> LPoly {
        if self.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        LPoly { coeffs }
    }

    /// Whether every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient symmetry `c_k = c_{d-k}` about the degree `d`.
    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Exact division `self / divisor` in `Z[L]`; `None` when the quotient
    /// is not an integer polynomial.
    pub fn div_exact(&self, divisor: &LPoly) -> Option<LPoly> {
        let dd = divisor.degree()?;
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(LPoly::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| LPoly::from_coeffs(quot))
    }

    /// Renders in descending powers using `var` as the variable name, e.g.
    /// `L^9 + 4L^8 - 2L + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Display for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("L"))
    }
}

impl fmt::Debug for LPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LPoly({self})")
    }
}

impl Add for &LPoly {
    type Output = LPoly;

    fn add(self, rhs: &LPoly) -> LPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LPoly::from_coeffs(
            (0..n)
                .map(|i| self.coeff(i) + rhs.coeff(i))
                .collect::<Vec<_>>(),
        )
    }
}

impl Sub for &LPoly {
    type Output = LPoly;

    fn sub(self, rhs: &LPoly) -> LPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LPoly::from_coeffs(
            (0..n)
                .map(|i| self.coeff(i) - rhs.coeff(i))
                .collect::<Vec<_>>(),
        )
    }
}

impl Mul for &LPoly {
    type Output = LPoly;

    fn mul(self, rhs: &LPoly) -> LPoly {
        if self.is_zero() || rhs.is_zero() {
            return LPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LPoly::from_coeffs(coeffs)
    }
}

impl Neg for &LPoly {
    type Output = LPoly;

    fn neg(self) -> LPoly {
        LPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for LPoly {
            type Output = LPoly;
            fn $method(self, rhs: LPoly) -> LPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LPoly> for LPoly {
            type Output = LPoly;
            fn $method(self, rhs: &LPoly) -> LPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LPoly {
    type Output = LPoly;

    fn neg(self) -> LPoly {
        -&self
    }
}

impl Zero for LPoly {
    fn zero() -> Self {
        LPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LPoly {
    fn one() -> Self {
        LPoly::one()
    }
}

impl Sum for LPoly {
    fn sum<I: Iterator<Item = LPoly>>(iter: I) -> LPoly {
        iter.fold(LPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a LPoly> for LPoly {
    fn sum<I: Iterator<Item = &'a LPoly>>(iter: I) -> LPoly {
        iter.fold(LPoly::zero(), |acc, p| acc + p)
    }
}

// Coefficients serialize as JSON integers when they fit in i64 and as
// decimal strings otherwise.
impl Serialize for LPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct CoeffsVisitor;

        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }

        impl<'de> Visitor<'de> for CoeffsVisitor {
            type Value = LPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<LPoly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(match c {
                        Coeff::Int(v) => BigInt::from(v),
                        Coeff::Text(s) => s.parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(LPoly::from_coeffs(coeffs))
            }
        }

        deserializer.deserialize_seq(CoeffsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn p(c: &[i64]) -> LPoly {
        LPoly::from_coeffs(c.to_vec())
    }

    #[test]
    fn binomial_cube() {
        let one_plus_l = p(&[1, 1]);
        assert_eq!(one_plus_l.pow(3), p(&[1, 3, 3, 1]));
    }

    #[test]
    fn untwisted_shape_at_two() {
        // L^{n+2} (1+L)^{n-1} at n = 2
        let v = p(&[1, 1]).pow(1).shift(4);
        assert_eq!(v, p(&[0, 0, 0, 0, 1, 1]));
        let total = LPoly::monomial(1, 5) + LPoly::monomial(2, 4) + LPoly::monomial(1, 3);
        assert_eq!(p(&[1, 1]).pow(2).shift(3), total);
    }

    #[test]
    fn zero_is_additive_identity_and_canonical() {
        let a = p(&[3, 0, -2]);
        assert_eq!(&LPoly::zero() + &a, a);
        assert_eq!(p(&[0, 0, 0]), LPoly::zero());
        assert_eq!(LPoly::zero().degree(), None);
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn rendering() {
        assert_eq!(p(&[0, 0, 0, 0, 0, 4, 14, 11, 4, 1]).to_string(),
            "L^9 + 4L^8 + 11L^7 + 14L^6 + 4L^5");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "L^2 - 1");
        assert_eq!(p(&[1, -1]).to_string(), "-L + 1");
        assert_eq!(p(&[2]).to_string(), "2");
        assert_eq!(LPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 1, 1]).render("q"), "q^2 + q + 1");
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[0, 0, 0, 1, 2, 1]).eval(1), BigInt::from(4));
        assert_eq!(p(&[1, 2, 3]).eval(-2), BigInt::from(9));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(p(&[1, 0, 1]).div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
        assert_eq!(p(&[1, 4]).div_exact(&p(&[2])), None);
        assert_eq!(LPoly::zero().div_exact(&p(&[1, 1])), Some(LPoly::zero()));
    }

    #[test]
    fn large_coefficients_serialize_as_strings() {
        let big = LPoly::constant(BigInt::from(i64::MAX) * 4);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, format!("[\"{}\"]", BigInt::from(i64::MAX) * 4));
        assert_eq!(serde_json::from_str::<LPoly>(&json).unwrap(), big);
    }

    fn arb_poly() -> impl Strategy<Value = LPoly> {
        prop::collection::vec(-50i64..50, 0..7).prop_map(LPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<LPoly>(&s).unwrap(), a);
        }
    }
}
