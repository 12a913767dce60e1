use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of the cell poset for `n` (strand count `m = n + 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CellLabel {
    Zero,
    Plain(usize),
    Bullet(usize),
    /// `k = m/2`, present only when `m` is even.
    Middle(usize),
}

impl CellLabel {
    /// `|λ|`: the number of caps on each face.
    pub fn size(self) -> usize {
        match self {
            CellLabel::Zero => 0,
            CellLabel::Plain(k) | CellLabel::Bullet(k) | CellLabel::Middle(k) => k,
        }
    }

    /// The poset order: `λ < μ` iff `|λ| > |μ|`.
    pub fn lt(self, other: CellLabel) -> bool {
        self.size() > other.size()
    }

    pub fn comparable(self, other: CellLabel) -> bool {
        self == other || self.lt(other) || other.lt(self)
    }

    /// Shell-safe selector: `0`, `k`, `kb` or `mid`.
    pub fn selector(self) -> String {
        match self {
            CellLabel::Zero => "0".into(),
            CellLabel::Plain(k) => k.to_string(),
            CellLabel::Bullet(k) => format!("{k}b"),
            CellLabel::Middle(_) => "mid".into(),
        }
    }

    /// Parses a selector for the poset of `n`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let m = n + 1;
        let bad = || Error::Parse(format!("no cell label {s:?} for n = {n}"));
        let label = match s.trim() {
            "0" => CellLabel::Zero,
            "mid" if m.is_multiple_of(2) => CellLabel::Middle(m / 2),
            t => {
                let (num, bullet) = match t.strip_suffix('b').or_else(|| t.strip_suffix('•')) {
                    Some(x) => (x, true),
                    None => (t, false),
                };
                let k: usize = num.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                if 2 * k == m && !bullet {
                    CellLabel::Middle(k)
                } else if 2 * k < m {
                    if bullet {
                        CellLabel::Bullet(k)
                    } else {
                        CellLabel::Plain(k)
                    }
                } else {
                    return Err(bad());
                }
            }
        };
        Ok(label)
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellLabel::Zero => write!(f, "0"),
            CellLabel::Plain(k) | CellLabel::Middle(k) => write!(f, "{k}"),
            CellLabel::Bullet(k) => write!(f, "{k}•"),
        }
    }
}

impl FromStr for CellLabel {
    type Err = Error;

    /// Parses without a poset: `k` is always read as a plain label.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "0" => Ok(CellLabel::Zero),
            t => {
                let (num, bullet) = match t.strip_suffix('b').or_else(|| t.strip_suffix('•')) {
                    Some(x) => (x, true),
                    None => (t, false),
                };
                let k: usize = num.parse().map_err(|_| Error::Parse(format!("bad label {s:?}")))?;
                Ok(if bullet { CellLabel::Bullet(k) } else { CellLabel::Plain(k) })
            }
        }
    }
}

impl Serialize for CellLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.selector())
    }
}

/// The labels for `n` in a fixed order: `0, 1, 1•, 2, 2•, …` and the middle
/// label last when `n` is odd.
pub fn lambda_poset(n: usize) -> Vec<CellLabel> {
    let m = n + 1;
    let mut out = vec![CellLabel::Zero];
    for k in 1..=m / 2 {
        if 2 * k < m {
            out.push(CellLabel::Plain(k));
            out.push(CellLabel::Bullet(k));
        } else {
            out.push(CellLabel::Middle(k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use CellLabel::*;

    #[test]
    fn posets() {
        assert_eq!(lambda_poset(2), vec![Zero, Plain(1), Bullet(1)]);
        assert_eq!(lambda_poset(3), vec![Zero, Plain(1), Bullet(1), Middle(2)]);
        assert_eq!(lambda_poset(4), vec![Zero, Plain(1), Bullet(1), Plain(2), Bullet(2)]);
    }

    #[test]
    fn order() {
        assert!(Plain(1).lt(Zero));
        assert!(Bullet(1).lt(Zero));
        assert!(!Plain(1).comparable(Bullet(1)));
        assert!(Middle(2).lt(Plain(1)));
        assert!(Middle(2).lt(Bullet(1)));
    }

    #[test]
    fn selectors() {
        assert_eq!(CellLabel::parse("mid", 3).unwrap(), Middle(2));
        assert_eq!(CellLabel::parse("2", 3).unwrap(), Middle(2));
        assert_eq!(CellLabel::parse("1b", 3).unwrap(), Bullet(1));
        assert!(CellLabel::parse("mid", 4).is_err());
        assert!(CellLabel::parse("2b", 3).is_err());
        for n in 2..7 {
            for l in lambda_poset(n) {
                assert_eq!(CellLabel::parse(&l.selector(), n).unwrap(), l);
            }
        }
    }
}
