use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraElement;
use crate::diagram::generator_u;
use crate::error::{Error, Result};
use crate::ring::Poly;

/// A letter of a generator word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    U(usize),
    Alpha,
    Beta,
    Zeta,
    Epsilon,
}

impl Letter {
    /// Image under the top-bottom reflection.
    pub fn star(self) -> Letter {
        match self {
            Letter::Alpha => Letter::Beta,
            Letter::Beta => Letter::Alpha,
            other => other,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::U(i) => write!(f, "U{i}"),
            Letter::Alpha => write!(f, "alpha"),
            Letter::Beta => write!(f, "beta"),
            Letter::Zeta => write!(f, "zeta"),
            Letter::Epsilon => write!(f, "eps"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let l = s.trim();
        Ok(match l {
            "alpha" | "α" => Letter::Alpha,
            "beta" | "β" => Letter::Beta,
            "zeta" | "ζ" => Letter::Zeta,
            "eps" | "epsilon" | "ε" => Letter::Epsilon,
            _ => {
                let rest = l
                    .strip_prefix('U')
                    .or_else(|| l.strip_prefix('u'))
                    .or_else(|| l.strip_prefix('E'))
                    .ok_or_else(|| Error::Parse(format!("unknown letter {l:?}")))?;
                let rest = rest.strip_prefix('_').unwrap_or(rest);
                let i: usize = rest.parse().map_err(|_| Error::Parse(format!("unknown letter {l:?}")))?;
                Letter::U(i)
            }
        })
    }
}

/// A product of letters, read left to right. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GeneratorWord(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word whose value is the reflection of this word's value.
    pub fn star(&self) -> Self {
        GeneratorWord(self.0.iter().rev().map(|l| l.star()).collect())
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c == '*' || c == '·' || c == ',' || c.is_whitespace()) {
            if tok.is_empty() || tok == "1" || tok == "id" {
                continue;
            }
            letters.push(tok.parse()?);
        }
        Ok(GeneratorWord(letters))
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GeneratorWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<String> = Vec::deserialize(d)?;
        let letters = v.iter().map(|s| s.parse()).collect::<Result<Vec<_>>>().map_err(D::Error::custom)?;
        Ok(GeneratorWord(letters))
    }
}

/// The elements `α = U1U2 − 1`, `β = U2U1 − 1`, `ε = U1U2U1 − 2U1` and
/// `ζ = U2U1U2 − 2U2`.
#[derive(Clone, Debug)]
pub struct SpecialElements {
    pub alpha: AlgebraElement,
    pub beta: AlgebraElement,
    pub epsilon: AlgebraElement,
    pub zeta: AlgebraElement,
}

impl SpecialElements {
    /// Builds the four elements from given `U1`, `U2` using `mul`.
    pub fn from_generators(
        u1: &AlgebraElement,
        u2: &AlgebraElement,
        mul: impl Fn(&AlgebraElement, &AlgebraElement) -> Result<AlgebraElement>,
    ) -> Result<Self> {
        let m = u1.m();
        let one = AlgebraElement::one(m);
        let two = Poly::from_int(2);
        let u12 = mul(u1, u2)?;
        let u21 = mul(u2, u1)?;
        Ok(SpecialElements {
            alpha: u12.sub(&one)?,
            beta: u21.sub(&one)?,
            epsilon: mul(&u12, u1)?.sub(&u1.scale(&two))?,
            zeta: mul(&u21, u2)?.sub(&u2.scale(&two))?,
        })
    }
}

pub fn special_elements(m: usize) -> Result<SpecialElements> {
    if m < 3 {
        return Err(Error::Domain(format!("special elements need m >= 3, got {m}")));
    }
    let u1 = AlgebraElement::from_diagram(generator_u(1, m)?);
    let u2 = AlgebraElement::from_diagram(generator_u(2, m)?);
    SpecialElements::from_generators(&u1, &u2, |a, b| a.multiply(b))
}

/// The values of every letter on `m` strands.
#[derive(Clone, Debug)]
pub struct Alphabet {
    m: usize,
    values: HashMap<Letter, AlgebraElement>,
}

impl Alphabet {
    pub fn new(m: usize) -> Result<Self> {
        let mut values = HashMap::new();
        for i in 1..m {
            values.insert(Letter::U(i), AlgebraElement::from_diagram(generator_u(i, m)?));
        }
        if m >= 3 {
            let s = special_elements(m)?;
            values.insert(Letter::Alpha, s.alpha);
            values.insert(Letter::Beta, s.beta);
            values.insert(Letter::Epsilon, s.epsilon);
            values.insert(Letter::Zeta, s.zeta);
        }
        Ok(Alphabet { m, values })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn letter(&self, l: Letter) -> Result<&AlgebraElement> {
        self.values
            .get(&l)
            .ok_or_else(|| Error::Domain(format!("letter {l} is not defined on {} strands", self.m)))
    }

    pub fn evaluate(&self, w: &GeneratorWord) -> Result<AlgebraElement> {
        let mut acc = AlgebraElement::one(self.m);
        for &l in w.letters() {
            acc = acc.multiply(self.letter(l)?)?;
        }
        Ok(acc)
    }
}

/// Left-to-right product of the letters of `w` on `m` strands.
pub fn evaluate_word(w: &GeneratorWord, m: usize) -> Result<AlgebraElement> {
    Alphabet::new(m)?.evaluate(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: GeneratorWord = "U1*U2 beta, eps ζ".parse().unwrap();
        assert_eq!(
            w.letters(),
            &[Letter::U(1), Letter::U(2), Letter::Beta, Letter::Epsilon, Letter::Zeta]
        );
        assert_eq!(w.to_string(), "U1*U2*beta*eps*zeta");
        assert!("U1*X".parse::<GeneratorWord>().is_err());
        assert!("1".parse::<GeneratorWord>().unwrap().is_empty());
    }

    #[test]
    fn eps_beta_is_u1() {
        let w: GeneratorWord = "eps*beta".parse().unwrap();
        let x = evaluate_word(&w, 3).unwrap();
        assert!(x.is_diagram(&generator_u(1, 3).unwrap()));
    }

    #[test]
    fn empty_word_is_identity() {
        assert_eq!(evaluate_word(&GeneratorWord::default(), 4).unwrap(), AlgebraElement::one(4));
    }

    #[test]
    fn braid_relation() {
        let a = Alphabet::new(3).unwrap();
        let lhs = a.evaluate(&"U1 U2 U1 U2 U1".parse().unwrap()).unwrap();
        let u121 = a.evaluate(&"U1 U2 U1".parse().unwrap()).unwrap();
        let rhs = u121.scale(&Poly::from_int(3)).sub(a.letter(Letter::U(1)).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn epsilon_three_strands() {
        // ε = |h•⟩⟨h•|• − |h•⟩⟨h•|
        let s = special_elements(3).unwrap();
        let u1 = generator_u(1, 3).unwrap();
        assert_eq!(s.epsilon.len(), 2);
        assert_eq!(s.epsilon.coeff(&u1), Poly::from_int(-1));
        let other = s.epsilon.terms().find(|(d, _)| **d != u1).unwrap();
        assert!(other.0.form().bullet);
        assert_eq!(other.0.form().d1, u1.form().d1);
        assert_eq!(other.0.form().d2, u1.form().d2);
        assert_eq!(*other.1, Poly::from_int(1));
    }

    #[test]
    fn unknown_letter_on_small_m() {
        assert!(evaluate_word(&"U3".parse().unwrap(), 3).is_err());
    }
}
