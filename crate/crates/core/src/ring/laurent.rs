use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use super::golden::{Coord, Golden};
use super::Scalar;

/// A Laurent polynomial in `v` with coefficients in `R`.
///
/// Terms are kept in a sorted map from exponent to coefficient; zero
/// coefficients are never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Laurent<R> {
    terms: BTreeMap<i32, R>,
}

impl<R: Scalar> Laurent<R> {
    pub fn monomial(exp: i32, c: R) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(0, c)
    }

    pub fn from_int(i: i64) -> Self {
        Self::constant(R::from_int(i))
    }

    pub fn v() -> Self {
        Self::monomial(1, R::one())
    }

    pub fn v_inv() -> Self {
        Self::monomial(-1, R::one())
    }

    /// The loop value `δ = [2] = v + v⁻¹`.
    pub fn delta() -> Self {
        Self::v() + Self::v_inv()
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i32, R)>) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &R)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> R {
        self.terms.get(&exp).cloned().unwrap_or_else(R::zero)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Multiply by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Laurent::zero();
        }
        Laurent::from_terms(self.terms.iter().map(|(e, x)| (*e, x.clone() * c.clone())))
    }

    pub fn add_term(&mut self, exp: i32, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exp) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(exp, s);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add_term(*e, c.clone());
        }
    }

    pub fn map_coeffs<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// in `R[v, v⁻¹]`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let d_max = d.max_exp()?;
        let d_min = d.min_exp()?;
        let lead = &d.terms[&d_max];
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        // Long division from the top; the remainder must vanish before its
        // span becomes narrower than the divisor's.
        while let Some(r_max) = rem.max_exp() {
            let r_min = rem.min_exp()?;
            if r_max - r_min < d_max - d_min {
                return None;
            }
            let c = rem.terms[&r_max].try_div(lead)?;
            let e = r_max - d_max;
            let sub = d.shift(e).scale(&c);
            rem = &rem - &sub;
            quot.add_term(e, c);
        }
        Some(quot)
    }

    /// Evaluates the polynomial at `v = x` for an invertible `x`.
    pub fn evaluate(&self, x: &R) -> Option<R> {
        let inv = x.try_inv();
        let mut acc = R::zero();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { x.clone() } else { inv.clone()? };
            let mut p = R::one();
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc + c.clone() * p;
        }
        Some(acc)
    }
}

impl<R: Scalar> Zero for Laurent<R> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Scalar> One for Laurent<R> {
    fn one() -> Self {
        Laurent::constant(R::one())
    }
}

impl<R: Scalar> Add<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn add(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<R: Scalar> Sub<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn sub(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl<R: Scalar> Mul<&Laurent<R>> for &Laurent<R> {
    type Output = Laurent<R>;
    fn mul(self, rhs: &Laurent<R>) -> Laurent<R> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<R: Scalar> Neg for &Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        Laurent {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<R: Scalar> $tr for Laurent<R> {
            type Output = Laurent<R>;
            fn $m(self, rhs: Laurent<R>) -> Laurent<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<R: Scalar> Neg for Laurent<R> {
    type Output = Laurent<R>;
    fn neg(self) -> Laurent<R> {
        -&self
    }
}

impl<R: Scalar> Scalar for Laurent<R> {
    fn from_integer(i: BigInt) -> Self {
        Laurent::constant(R::from_integer(i))
    }

    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Laurent::monomial(-e, c.try_inv()?))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.exact_div(d)
    }
}

impl<R: Scalar> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mut cs = c.to_string();
            let neg = cs.starts_with('-');
            if neg {
                cs.remove(0);
            }
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = cs == "1";
            match *e {
                0 => write!(f, "{cs}")?,
                _ => {
                    if !unit {
                        write!(f, "{cs}·")?;
                    }
                    if *e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: Scalar> fmt::Debug for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as `[[exponent, a, b], ...]` with strictly increasing exponents.
impl<T: Coord + Scalar> Serialize for Laurent<Golden<T>> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.a.to_json(), c.b.to_json()))?;
        }
        seq.end()
    }
}

impl<'de, T: Coord + Scalar> Deserialize<'de> for Laurent<Golden<T>> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw: Vec<(i32, serde_json::Value, serde_json::Value)> = Vec::deserialize(d)?;
        let mut out = Laurent::zero();
        let mut last: Option<i32> = None;
        for (e, a, b) in raw {
            if last.is_some_and(|l| l >= e) {
                return Err(de::Error::custom("exponents must be strictly increasing"));
            }
            last = Some(e);
            let c = Golden::new(
                T::from_json(&a).map_err(de::Error::custom)?,
                T::from_json(&b).map_err(de::Error::custom)?,
            );
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ZPhi;

    type L = Laurent<ZPhi>;

    #[test]
    fn delta_squared() {
        let d = L::delta();
        let expect = L::from_terms([(2, ZPhi::one()), (0, ZPhi::from_int(2)), (-2, ZPhi::one())]);
        assert_eq!(&d * &d, expect);
    }

    #[test]
    fn additive_inverse_is_empty() {
        let x = L::from_terms([(3, ZPhi::phi()), (-1, ZPhi::from_int(7))]);
        let s = &x + &(-&x);
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn difference_of_squares() {
        let a = L::v() + L::v_inv();
        let b = L::v() - L::v_inv();
        let expect = L::from_terms([(2, ZPhi::one()), (-2, -ZPhi::one())]);
        assert_eq!(a * b, expect);
    }

    #[test]
    fn delta_is_integral() {
        for (_, c) in L::delta().terms() {
            assert!(c.is_rational());
        }
    }

    #[test]
    fn exact_division() {
        let d = L::delta();
        let x = &(&d * &d) * &L::from_int(3);
        assert_eq!(x.exact_div(&d).unwrap(), &d * &L::from_int(3));
        assert!(L::from_int(3).exact_div(&d).is_none());
        assert!(L::v().exact_div(&d).is_none());
    }

    #[test]
    fn display() {
        let x = L::from_terms([(2, ZPhi::one()), (0, ZPhi::from_int(-2)), (-1, ZPhi::phi())]);
        assert_eq!(x.to_string(), "v^2 - 2 + φ·v^-1");
    }

    #[test]
    fn json_triples() {
        let x = L::from_terms([(1, ZPhi::one()), (-1, ZPhi::phi())]);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[[-1,0,1],[1,1,0]]");
        let back: L = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<L>("[[1,1,0],[0,1,0]]").is_err());
    }
}
