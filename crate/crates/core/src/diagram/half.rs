use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One face of a diagram with its propagating edges cut off: a non-crossing
/// partial matching of `1..=m` whose pairs carry 0 or 1 decoration.
///
/// Unmatched ("free") points are the stubs of propagating edges, so no pair
/// may enclose a free point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HalfDiagram {
    m: usize,
    /// Pairs `(a, b)` with `a < b`, sorted by `a`.
    pairs: Vec<(usize, usize)>,
    /// Bit `i` set iff `pairs[i]` is decorated.
    dec_mask: u64,
}

impl HalfDiagram {
    /// Builds a half-diagram, checking planarity and that decorated pairs
    /// are exposed. Clause (ii) admissibility is not required.
    pub fn new(m: usize, pairs: &[(usize, usize, bool)]) -> Result<Self> {
        if pairs.len() > 64 {
            return Err(Error::Domain("too many pairs".into()));
        }
        let mut ps: Vec<(usize, usize, bool)> =
            pairs.iter().map(|&(a, b, d)| (a.min(b), a.max(b), d)).collect();
        ps.sort_unstable();
        let mut seen = vec![false; m + 1];
        for &(a, b, _) in &ps {
            if a == 0 || b > m || a == b || seen[a] || seen[b] {
                return Err(Error::Domain(format!("bad pair {{{a},{b}}} on {m} points")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        let h = HalfDiagram {
            m,
            pairs: ps.iter().map(|&(a, b, _)| (a, b)).collect(),
            dec_mask: ps
                .iter()
                .enumerate()
                .filter(|(_, p)| p.2)
                .fold(0, |acc, (i, _)| acc | (1 << i)),
        };
        if !h.is_planar() {
            return Err(Error::Domain(format!("{h} is not planar")));
        }
        if let Some(i) = (0..h.k()).find(|&i| h.is_decorated(i) && !h.is_exposed(i)) {
            return Err(Error::Domain(format!(
                "decorated pair {{{},{}}} is not exposed",
                h.pairs[i].0, h.pairs[i].1
            )));
        }
        Ok(h)
    }

    pub(crate) fn from_raw(m: usize, pairs: Vec<(usize, usize)>, dec_mask: u64) -> Self {
        HalfDiagram { m, pairs, dec_mask }
    }

    pub fn empty(m: usize) -> Self {
        HalfDiagram { m, pairs: Vec::new(), dec_mask: 0 }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of pairs.
    pub fn k(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn dec_mask(&self) -> u64 {
        self.dec_mask
    }

    pub fn is_decorated(&self, i: usize) -> bool {
        self.dec_mask >> i & 1 == 1
    }

    /// Pairs with their decoration flags.
    pub fn pairs_with_dec(&self) -> impl Iterator<Item = (usize, usize, bool)> + '_ {
        self.pairs.iter().enumerate().map(|(i, &(a, b))| (a, b, self.is_decorated(i)))
    }

    pub fn free_points(&self) -> Vec<usize> {
        let mut used = vec![false; self.m + 1];
        for &(a, b) in &self.pairs {
            used[a] = true;
            used[b] = true;
        }
        (1..=self.m).filter(|&p| !used[p]).collect()
    }

    pub fn free_count(&self) -> usize {
        self.m - 2 * self.k()
    }

    /// Index of the pair containing point `p`, if any.
    pub fn pair_of(&self, p: usize) -> Option<usize> {
        self.pairs.iter().position(|&(a, b)| a == p || b == p)
    }

    fn is_planar(&self) -> bool {
        let free = self.free_points();
        for (i, &(a, b)) in self.pairs.iter().enumerate() {
            if free.iter().any(|&f| a < f && f < b) {
                return false;
            }
            for &(c, d) in &self.pairs[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return false;
                }
            }
        }
        true
    }

    /// A pair is exposed iff it is not nested in another pair and no free
    /// point lies west of it.
    pub fn is_exposed(&self, i: usize) -> bool {
        let (a, b) = self.pairs[i];
        let nested = self.pairs.iter().any(|&(c, d)| c < a && b < d);
        let free_west = self.free_points().first().is_some_and(|&f| f < a);
        !nested && !free_west
    }

    /// The per-face admissibility condition: when pairs exist there must be
    /// a decorated `{1,2}` or an undecorated `{i,i+1}` with `i > 1`.
    pub fn satisfies_face_condition(&self) -> bool {
        self.pairs.is_empty()
            || self.pairs_with_dec().any(|(a, b, d)| b == a + 1 && ((a == 1 && d) || (a > 1 && !d)))
    }

    pub fn is_admissible(&self) -> bool {
        self.satisfies_face_condition()
    }

    /// Same matching with decoration flags replaced.
    pub fn with_dec_mask(&self, mask: u64) -> Self {
        HalfDiagram { m: self.m, pairs: self.pairs.clone(), dec_mask: mask }
    }
}

impl PartialOrd for HalfDiagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: pair count, then the sorted pair list, then the
/// decoration bitmask.
impl Ord for HalfDiagram {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.pairs.len(), &self.pairs, self.dec_mask).cmp(&(
            other.m,
            other.pairs.len(),
            &other.pairs,
            other.dec_mask,
        ))
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs_with_dec()
            .map(|(a, b, d)| format!("{{{a},{b}}}{}", if d { "*" } else { "" }))
            .collect();
        write!(f, "({}; {})", self.m, parts.join(" "))
    }
}

impl fmt::Debug for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct HalfRepr {
    m: usize,
    pairs: Vec<(usize, usize, u8)>,
}

impl Serialize for HalfDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HalfRepr {
            m: self.m,
            pairs: self.pairs_with_dec().map(|(a, b, d)| (a, b, u8::from(d))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HalfDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = HalfRepr::deserialize(d)?;
        if r.pairs.iter().any(|p| p.2 > 1) {
            return Err(D::Error::custom("pair decoration must be 0 or 1"));
        }
        let pairs: Vec<_> = r.pairs.iter().map(|&(a, b, x)| (a, b, x == 1)).collect();
        HalfDiagram::new(r.m, &pairs).map_err(D::Error::custom)
    }
}

/// All planar half-diagrams on `m` points with `k` pairs, with every
/// admissible decoration pattern but without the face condition.
pub fn enumerate_generalized_half(m: usize, k: usize) -> Result<Vec<HalfDiagram>> {
    if 2 * k > m {
        return Err(Error::Domain(format!("k = {k} exceeds m/2 for m = {m}")));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    matchings(m, k, 1, &mut stack, &mut pairs, &mut |pairs: &[(usize, usize)]| {
        let mut sorted = pairs.to_vec();
        sorted.sort_unstable();
        let base = HalfDiagram::from_raw(m, sorted, 0);
        let exposed: Vec<usize> = (0..base.k()).filter(|&i| base.is_exposed(i)).collect();
        for sub in 0u64..(1 << exposed.len()) {
            let mask = exposed
                .iter()
                .enumerate()
                .filter(|(j, _)| sub >> j & 1 == 1)
                .fold(0u64, |acc, (_, &i)| acc | (1 << i));
            out.push(base.with_dec_mask(mask));
        }
    });
    out.sort();
    Ok(out)
}

/// Admissible half-diagrams on `m` points with `k` pairs.
pub fn enumerate_half(m: usize, k: usize) -> Result<Vec<HalfDiagram>> {
    Ok(enumerate_generalized_half(m, k)?
        .into_iter()
        .filter(HalfDiagram::is_admissible)
        .collect())
}

// Scans points west to east keeping a stack of open pairs; a point may stay
// free only when nothing is open, since a pair may not enclose a free point.
fn matchings(
    m: usize,
    k: usize,
    p: usize,
    stack: &mut Vec<usize>,
    pairs: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let remaining = m + 1 - p;
    let opened = pairs.len() + stack.len();
    if p > m {
        if stack.is_empty() && pairs.len() == k {
            emit(pairs);
        }
        return;
    }
    if stack.len() > remaining {
        return;
    }
    if opened < k {
        stack.push(p);
        matchings(m, k, p + 1, stack, pairs, emit);
        stack.pop();
    }
    if let Some(a) = stack.pop() {
        pairs.push((a, p));
        matchings(m, k, p + 1, stack, pairs, emit);
        pairs.pop();
        stack.push(a);
    } else {
        matchings(m, k, p + 1, stack, pairs, emit);
    }
}
