use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use super::Scalar;

/// An element `a + bφ` of the golden-ratio ring, with `φ² = φ + 1`.
///
/// With `T = BigInt` this is `Z[φ]`; with `T = BigRational` it is the field
/// `Q(φ)`. Only the field version implements `Div`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Golden<T> {
    pub a: T,
    pub b: T,
}

/// `Z[φ]`, the coefficient ring of the diagram algebra.
pub type ZPhi = Golden<BigInt>;
/// `Q(φ)`, needed once `1 - 2φ` has to be inverted.
pub type QPhi = Golden<BigRational>;

impl<T> Golden<T> {
    pub fn new(a: T, b: T) -> Self {
        Golden { a, b }
    }
}

impl<T: Scalar> Golden<T> {
    pub fn phi() -> Self {
        Golden::new(T::zero(), T::one())
    }

    /// First root of `x² - x - 1`, i.e. `φ`.
    pub fn gamma1() -> Self {
        Self::phi()
    }

    /// Second root of `x² - x - 1`, i.e. `1 - φ`.
    pub fn gamma2() -> Self {
        Golden::new(T::one(), -T::one())
    }

    pub fn from_scalar(a: T) -> Self {
        Golden::new(a, T::zero())
    }

    /// Galois conjugate, `φ ↦ 1 - φ`.
    pub fn conj(&self) -> Self {
        Golden::new(self.a.clone() + self.b.clone(), -self.b.clone())
    }

    /// `x · conj(x) = a² + ab - b²`.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() + self.a.clone() * self.b.clone()
            - self.b.clone() * self.b.clone()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

/// `γ^r` written as `F_{r-1} + F_r γ` (with `F_0 = 0`, `F_1 = 1`).
///
/// The `a` coordinate is the weight of the undecorated strand and `b` the
/// weight of the singly decorated one.
pub fn fib_reduce(r: u32) -> ZPhi {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero()); // F_{-1}, F_0
    for _ in 0..r {
        let next = &prev + &cur;
        prev = cur;
        cur = next;
    }
    Golden::new(prev, cur)
}

/// `F_{r-1}` as an integer, with `F_{-1} = 1`.
pub fn fib_prev(r: u32) -> BigInt {
    fib_reduce(r).a
}

impl<T: Scalar> Add for Golden<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Golden::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<T: Scalar> Sub for Golden<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Golden::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<T: Scalar> Neg for Golden<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Golden::new(-self.a, -self.b)
    }
}

impl<T: Scalar> Mul for Golden<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bφ)(c + dφ) = (ac + bd) + (ad + bc + bd)φ
        let bd = self.b.clone() * rhs.b.clone();
        let a = self.a.clone() * rhs.a.clone() + bd.clone();
        let b = self.a * rhs.b + self.b * rhs.a + bd;
        Golden::new(a, b)
    }
}

impl Div for QPhi {
    type Output = QPhi;
    fn div(self, rhs: QPhi) -> QPhi {
        self * rhs.try_inv().expect("division by zero in Q(φ)")
    }
}

impl<T: Scalar> Zero for Golden<T> {
    fn zero() -> Self {
        Golden::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<T: Scalar> One for Golden<T> {
    fn one() -> Self {
        Golden::new(T::one(), T::zero())
    }
}

impl<T: Scalar> Scalar for Golden<T> {
    fn from_integer(i: BigInt) -> Self {
        Golden::from_scalar(T::from_integer(i))
    }

    fn try_inv(&self) -> Option<Self> {
        let inv_norm = self.norm().try_inv()?;
        let c = self.conj();
        Some(Golden::new(c.a * inv_norm.clone(), c.b * inv_norm))
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        let norm = d.norm();
        let num = self.clone() * d.conj();
        Some(Golden::new(num.a.try_div(&norm)?, num.b.try_div(&norm)?))
    }
}

impl From<&ZPhi> for QPhi {
    fn from(x: &ZPhi) -> QPhi {
        Golden::new(
            BigRational::from_integer(x.a.clone()),
            BigRational::from_integer(x.b.clone()),
        )
    }
}

impl<T: Scalar> fmt::Display for Golden<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = phi_term(&self.b);
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{b}"),
            (false, false) => match b.strip_prefix('-') {
                Some(rest) => write!(f, "({} - {rest})", self.a),
                None => write!(f, "({} + {b})", self.a),
            },
        }
    }
}

fn phi_term<T: Scalar>(b: &T) -> String {
    if b.is_one() {
        "φ".to_string()
    } else if (-b.clone()).is_one() {
        "-φ".to_string()
    } else {
        format!("{b}φ")
    }
}

impl<T: Scalar> fmt::Debug for Golden<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON representation of a single coordinate: a number when it fits in an
/// `i64`, otherwise a decimal string (`"p"` or `"p/q"`).
pub trait Coord: Sized {
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, String>;
}

impl Coord for BigInt {
    fn to_json(&self) -> serde_json::Value {
        match self.to_i64() {
            Some(i) => serde_json::Value::from(i),
            None => serde_json::Value::String(self.to_string()),
        }
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        match v {
            serde_json::Value::Number(n) => n
                .as_i64()
                .map(BigInt::from)
                .ok_or_else(|| format!("expected integer, got {n}")),
            serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
            other => Err(format!("expected integer, got {other}")),
        }
    }
}

impl Coord for BigRational {
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            self.to_integer().to_json()
        } else {
            serde_json::Value::String(format!("{}/{}", self.numer(), self.denom()))
        }
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        if let serde_json::Value::String(s) = v {
            if let Some((p, q)) = s.split_once('/') {
                let p: BigInt = p.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
                let q: BigInt = q.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
                if q.is_zero() {
                    return Err(format!("zero denominator in {s:?}"));
                }
                return Ok(BigRational::new(p, q));
            }
        }
        BigInt::from_json(v).map(BigRational::from_integer)
    }
}

impl<T: Coord> Serialize for Golden<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut t = s.serialize_tuple(2)?;
        t.serialize_element(&self.a.to_json())?;
        t.serialize_element(&self.b.to_json())?;
        t.end()
    }
}

impl<'de, T: Coord> Deserialize<'de> for Golden<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V<T>(std::marker::PhantomData<T>);
        impl<'de, T: Coord> Visitor<'de> for V<T> {
            type Value = Golden<T>;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a pair [a, b]")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let a: serde_json::Value =
                    seq.next_element()?.ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let b: serde_json::Value =
                    seq.next_element()?.ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<serde_json::Value>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(Golden::new(
                    T::from_json(&a).map_err(de::Error::custom)?,
                    T::from_json(&b).map_err(de::Error::custom)?,
                ))
            }
        }
        d.deserialize_seq(V(std::marker::PhantomData))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(a: i64, b: i64) -> ZPhi {
        Golden::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn phi_squared() {
        assert_eq!(ZPhi::phi() * ZPhi::phi(), z(1, 1));
    }

    #[test]
    fn one_minus_two_phi_squared_is_five() {
        let x = z(1, -2);
        assert_eq!(x.clone() * x, z(5, 0));
    }

    #[test]
    fn product_of_roots() {
        assert_eq!(ZPhi::gamma1() * ZPhi::gamma2(), z(-1, 0));
        assert_eq!(ZPhi::gamma1() + ZPhi::gamma2(), z(1, 0));
    }

    #[test]
    fn fibonacci_reduction() {
        assert_eq!(fib_reduce(0), z(1, 0));
        assert_eq!(fib_reduce(1), z(0, 1));
        assert_eq!(fib_reduce(2), z(1, 1));
        assert_eq!(fib_reduce(5), z(3, 5));
        let g = ZPhi::phi();
        for r in 0..=30 {
            assert_eq!(fib_reduce(r) * g.clone(), fib_reduce(r + 1));
        }
    }

    #[test]
    fn identities_in_gamma() {
        // (γ - γ_i)² = (1 - 2γ_i)(γ - γ_i), with γ_i scalars embedded in Γ.
        // Γ = R[x]/(x² - x - 1) is itself the golden ring over R = Q(φ), so
        // model γ as a formal variable over Q(φ) by using pairs of QPhi.
        type G2 = Golden<QPhi>;
        let gamma: G2 = Golden::phi();
        for gi in [QPhi::gamma1(), QPhi::gamma2()] {
            let d = gamma.clone() - G2::from_scalar(gi.clone());
            let lhs = d.clone() * d.clone();
            let k = QPhi::one() - QPhi::from_int(2) * gi.clone();
            let rhs = G2::from_scalar(k.clone()) * d.clone();
            assert_eq!(lhs, rhs);
            assert!(!k.is_zero());
        }
        let k1 = QPhi::one() - QPhi::from_int(2) * QPhi::gamma1();
        let k2 = QPhi::one() - QPhi::from_int(2) * QPhi::gamma2();
        assert_eq!(k1 * k2, QPhi::from_int(-5));
    }

    #[test]
    fn inverse_in_field() {
        let x: QPhi = (&z(1, -2)).into();
        let inv = x.try_inv().unwrap();
        assert_eq!(x * inv, QPhi::one());
        assert!(QPhi::zero().try_inv().is_none());
    }

    #[test]
    fn integer_ring_only_inverts_units() {
        assert!(z(1, -2).try_inv().is_none());
        let phi = ZPhi::phi();
        assert_eq!(phi.clone() * phi.try_inv().unwrap(), ZPhi::one());
    }

    #[test]
    fn json_pair() {
        let x = z(3, -5);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[3,-5]");
        let back: ZPhi = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        let q: QPhi = serde_json::from_str(r#"["1/5", 2]"#).unwrap();
        assert_eq!(q.a, BigRational::new(1.into(), 5.into()));
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["1/5",2]"#);
    }

    #[test]
    fn exact_division() {
        // (2 + 2φ) / 2φ = φ, but 1 / 2 is not in Z[φ]
        assert_eq!(z(2, 2).try_div(&z(0, 2)), Some(z(0, 1)));
        assert_eq!(z(1, 0).try_div(&z(2, 0)), None);
        assert_eq!(z(1, 0).try_div(&z(0, 0)), None);
        let five = z(5, 0);
        let s5 = z(-1, 2); // √5 = 2φ − 1
        assert_eq!(five.try_div(&s5), Some(s5.clone()));
    }
}
