//! Exact Laurent polynomials in a single variable `q` with integer coefficients.
//!
//! Every polynomial quantity in the crate (partition functions, Kostka-Foulkes
//! polynomials, q-multiplicities, one-dimension sums) is a [`LaurentPoly`].
//! Coefficients are arbitrary precision and zero coefficients are never stored,
//! so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Substitutions supported by [`LaurentPoly::substitute`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Substitution {
    /// `q -> q^2`
    Square,
    /// `q -> q^-1`
    Invert,
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^exp`.
    pub fn monomial(exp: i64, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Iterates over `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn substitute(&self, kind: Substitution) -> Self {
        let map = |e: i64| match kind {
            Substitution::Square => 2 * e,
            Substitution::Invert => -e,
        };
        Self {
            coeffs: self.coeffs.iter().map(|(e, c)| (map(*e), c.clone())).collect(),
        }
    }

    /// Value at `q = 1`, the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn all_exponents_even(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.coeffs {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.coeffs {
            self.add_term(e, c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += p;
        }
        acc
    }
}

/// Renders as `q^8 + 2q^6 - q + 3 + q^-2`, highest exponent first.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if *e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if *e == 1 {
                f.write_str("q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.coeffs.len()))?;
        for (e, c) in &self.coeffs {
            let num: serde_json::Number = c
                .to_string()
                .parse()
                .map_err(|_| serde::ser::Error::custom("unrepresentable coefficient"))?;
            map.serialize_entry(&e.to_string(), &num)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: BTreeMap<String, serde_json::Number> = BTreeMap::deserialize(d)?;
        let mut coeffs = BTreeMap::new();
        for (k, v) in raw {
            let e: i64 = k
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid exponent key {k:?}")))?;
            let c: BigInt = v
                .to_string()
                .parse()
                .map_err(|_| D::Error::custom(format!("non-integer coefficient {v}")))?;
            if c.is_zero() {
                return Err(D::Error::custom(format!("zero coefficient at exponent {e}")));
            }
            coeffs.insert(e, c);
        }
        Ok(LaurentPoly { coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn addition_examples() {
        assert_eq!(&p(&[(1, 1), (0, 1)]) + &p(&[(1, 1), (0, -1)]), p(&[(1, 2)]));
        let x = p(&[(3, 4), (-2, 1)]);
        assert_eq!(&x + &LaurentPoly::zero(), x);
        assert_eq!(&p(&[(2, 1)]) + &p(&[(2, 1)]), p(&[(2, 2)]));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p(&[(0, 1), (1, 1)]) * &p(&[(0, 1), (1, -1)]), p(&[(0, 1), (2, -1)]));
        let x = p(&[(5, -3), (1, 2)]);
        assert_eq!(&x * &LaurentPoly::one(), x);
        assert_eq!(&p(&[(-1, 1)]) * &p(&[(1, 1)]), LaurentPoly::one());
    }

    #[test]
    fn substitution_and_shift() {
        let x = p(&[(1, 1), (3, 1)]);
        assert_eq!(x.substitute(Substitution::Square), p(&[(2, 1), (6, 1)]));
        assert_eq!(x.substitute(Substitution::Invert), p(&[(-1, 1), (-3, 1)]));
        assert_eq!(x.eval_one(), BigInt::from(2));
        assert_eq!(p(&[(0, 1), (1, 1)]).shift(2), p(&[(2, 1), (3, 1)]));
        assert_eq!(x.shift(0), x);
        assert_eq!(p(&[(-1, 1)]).shift(1), LaurentPoly::one());
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[(8, 1), (6, 2), (4, 2), (2, 1)]).to_string(), "q^8 + 2q^6 + 2q^4 + q^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(p(&[(1, -1), (0, 3), (-2, 1)]).to_string(), "-q + 3 + q^-2");
    }

    #[test]
    fn json_roundtrip_and_rejection() {
        let x = p(&[(8, 1), (-3, -7)]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"-3":-7,"8":1}"#);
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"1":0}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"x":1}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"1":1.5}"#).is_err());
        let big = LaurentPoly::monomial(1, BigInt::from(u64::MAX) * BigInt::from(u64::MAX));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), big);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn substitution_laws(a in arb_poly(), k in -4i64..4) {
            let inv = a.substitute(Substitution::Invert);
            prop_assert_eq!(inv.substitute(Substitution::Invert), a.clone());
            prop_assert_eq!(a.eval_one(), a.terms().map(|(_, c)| c.clone()).sum::<BigInt>());
            prop_assert_eq!(a.shift(k).shift(-k), a.clone());
            let s: LaurentPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
            prop_assert_eq!(s, a);
        }
    }
}
