//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` is the coefficient of
//! `q^i`. The representation is canonical: the highest stored coefficient is
//! nonzero, and the zero polynomial stores no coefficients at all. Every
//! constructor funnels through [`Polynomial::from_coeffs`], which trims and
//! asserts this in debug builds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let p = Polynomial { coeffs };
        debug_assert!(p.is_canonical());
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    /// `q^degree`.
    pub fn q_pow(degree: usize) -> Self {
        Self::monomial(1, degree)
    }

    /// `1 - q^t`.
    pub fn one_minus_q_pow(t: usize) -> Self {
        if t == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); t + 1];
        coeffs[0] = BigInt::one();
        coeffs[t] = -BigInt::one();
        Self::from_coeffs(coeffs)
    }

    /// `q^lo + q^(lo+1) + ... + q^hi`; zero when `lo > hi`.
    pub fn geometric(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); hi + 1];
        for c in &mut coeffs[lo..=hi] {
            *c = BigInt::one();
        }
        Self::from_coeffs(coeffs)
    }

    /// `q^2 + ... + q^(t+1)`, the geometric block attached to index `t`.
    pub fn psi(t: usize) -> Self {
        Self::geometric(2, t + 1)
    }

    fn is_canonical(&self) -> bool {
        self.coeffs.last().is_none_or(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^d` (zero beyond the degree).
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Returns `r` with `r * d == self`, or an error if no such integer
    /// polynomial exists.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        let dd = d.degree().ok_or(Error::DivideByZero)?;
        let Some(dp) = self.degree() else {
            return Ok(Self::zero());
        };
        if dp < dd {
            return Err(Error::NonExactDivision);
        }
        let lead = &d.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dd + 1];
        for i in (0..=dp - dd).rev() {
            let c = &rem[i + dd];
            if c.is_zero() {
                continue;
            }
            if !(c % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let qc = c / lead;
            for (t, dc) in d.coeffs.iter().enumerate() {
                rem[i + t] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::from_coeffs(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval_int(&BigInt::from(x))
    }

    /// Polynomial whose coefficient of `q^d` is `counts[d]`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// JSON rendering: an array of decimal coefficient strings, index = degree.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial {
            coeffs: vec![BigInt::one()],
        }
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::from_coeffs(add_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(mut self) -> Polynomial {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.coeffs.clone();
        if out.len() < rhs.coeffs.len() {
            out.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in out.iter_mut().zip(&rhs.coeffs) {
            *o -= r;
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Polynomial::from_coeffs(out)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (o, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *o += r;
        }
        *self = Polynomial::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        *self = &*self - rhs;
    }
}

impl SubAssign<Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

/// Ascending-degree text: `1 + 3*q - q^2`; unit coefficients are elided.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            match d {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => f.write_str("q")?,
                _ => write!(f, "{mag}*q")?,
            }
            if d > 1 {
                write!(f, "^{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(p(&[1, 1]) + p(&[1, -1]), p(&[2]));
        let x = p(&[3, 0, -2]);
        assert_eq!(&x + &Polynomial::zero(), x);
        assert_eq!(p(&[0, 1, 1]) + p(&[0, 0, 1]), p(&[0, 1, 2]));
        assert!((p(&[0, 1]) + p(&[0, -1])).is_zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(&[1, 0, -1]) * p(&[1, 0, 0, -1]), p(&[1, 0, -1, -1, 0, 1]));
        let x = p(&[4, -1, 7]);
        assert_eq!(&x * &Polynomial::one(), x);
        assert_eq!(p(&[1, 1]) * p(&[1, 1]), p(&[1, 2, 1]));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[0, 0, 1, 1]).exact_div(&p(&[0, 0, 1])), Ok(p(&[1, 1])));
        assert_eq!(p(&[1, 0, 0, 0, -1]).exact_div(&p(&[1, 0, -1])), Ok(p(&[1, 0, 1])));
        assert_eq!(p(&[1, 1]).exact_div(&p(&[0, 1])), Err(Error::NonExactDivision));
        assert_eq!(p(&[1, 1]).exact_div(&Polynomial::zero()), Err(Error::DivideByZero));
        assert_eq!(Polynomial::zero().exact_div(&p(&[0, 1])), Ok(Polynomial::zero()));
        // 2q / (2+q) has no integer quotient
        assert_eq!(p(&[0, 2]).exact_div(&p(&[2, 1])), Err(Error::NonExactDivision));
        assert_eq!(p(&[2, 4]).exact_div(&p(&[2])), Ok(p(&[1, 2])));
        assert_eq!(p(&[1]).exact_div(&p(&[1, 1])), Err(Error::NonExactDivision));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 3, 5, 4, 1]).eval_i64(1), BigInt::from(14));
        assert_eq!(p(&[7, 3, 5]).eval_i64(0), BigInt::from(7));
        assert_eq!(p(&[1, 0, -1]).eval_i64(2), BigInt::from(-3));
        assert_eq!(Polynomial::zero().eval_i64(5), BigInt::zero());
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(Polynomial::geometric(1, 3), p(&[0, 1, 1, 1]));
        assert_eq!(Polynomial::geometric(2, 2), p(&[0, 0, 1]));
        assert!(Polynomial::geometric(5, 4).is_zero());
        assert_eq!(Polynomial::psi(1), Polynomial::geometric(2, 2));
        assert_eq!(Polynomial::one_minus_q_pow(3), p(&[1, 0, 0, -1]));
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(Polynomial::one().degree(), Some(0));
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert_eq!(p(&[0, 0]), Polynomial::zero());
    }

    #[test]
    fn text_rendering() {
        assert_eq!(p(&[1, 3, 5, 4, 1]).to_string(), "1 + 3*q + 5*q^2 + 4*q^3 + q^4");
        assert_eq!(p(&[1, 0, -1, -1]).to_string(), "1 - q^2 - q^3");
        assert_eq!(p(&[0, 0, -1, 0, 1]).to_string(), "-q^2 + q^4");
        assert_eq!(p(&[0, -2]).to_string(), "-2*q");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_rendering() {
        assert_eq!(p(&[1, 3, 5, 4, 1]).to_json(), r#"["1","3","5","4","1"]"#);
        assert_eq!(Polynomial::zero().to_json(), "[]");
        let big = Polynomial::constant(BigInt::from(u64::MAX) * BigInt::from(u64::MAX));
        let s = big.to_json();
        assert_eq!(s, r#"["340282366920938463426481119284349108225"]"#);
        assert_eq!(Polynomial::from_json(&s).unwrap(), big);
        assert!(Polynomial::from_json(r#"["1","x"]"#).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-1_000_000i64..=1_000_000, 0..=31).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a - &b, &a + &(-&b));
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            prop_assert_eq!((&a * &d).exact_div(&d), Ok(a));
        }

        #[test]
        fn eval_is_homomorphism(a in arb_poly(), b in arb_poly(), x in -5i64..=5) {
            prop_assert_eq!((&a * &b).eval_i64(x), a.eval_i64(x) * b.eval_i64(x));
            prop_assert_eq!((&a + &b).eval_i64(x), a.eval_i64(x) + b.eval_i64(x));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = a.to_json();
            let back = Polynomial::from_json(&s).unwrap();
            prop_assert_eq!(back.to_json(), s);
            prop_assert_eq!(back, a);
        }
    }
}
