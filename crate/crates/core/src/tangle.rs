//! Raw decorated tangles: planar matchings of boundary nodes with per-arc
//! decoration counts, plus a multiset of closed loops.
//!
//! Nodes are addressed either as [`NodeRef`]s (`N3`, `S1`, ...) or by their
//! position in the west-cut linearization `N1, ..., N_top, S_bottom, ..., S1`,
//! i.e. the boundary of the rectangle read clockwise starting just above the
//! west wall. Planarity is "no two arcs interleave" in this order, and an arc
//! touches the west wall iff it is not nested inside another arc.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Face {
    North,
    South,
}

/// A boundary node; `index` is 1-based from the west.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct NodeRef {
    pub face: Face,
    pub index: usize,
}

impl NodeRef {
    pub fn north(index: usize) -> Self {
        NodeRef { face: Face::North, index }
    }

    pub fn south(index: usize) -> Self {
        NodeRef { face: Face::South, index }
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.face {
            Face::North => 'N',
            Face::South => 'S',
        };
        write!(f, "{c}{}", self.index)
    }
}

impl FromStr for NodeRef {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad node reference {s:?}"));
        let mut chars = s.chars();
        let face = match chars.next() {
            Some('N') | Some('n') => Face::North,
            Some('S') | Some('s') => Face::South,
            _ => return Err(bad()),
        };
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(NodeRef { face, index })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    pub from: NodeRef,
    pub to: NodeRef,
    pub dec: u32,
}

impl Arc {
    pub fn new(from: NodeRef, to: NodeRef, dec: u32) -> Self {
        Arc { from, to, dec }
    }

    pub fn is_propagating(&self) -> bool {
        self.from.face != self.to.face
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.from, self.to)?;
        for _ in 0..self.dec {
            write!(f, "*")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    OutOfRange(NodeRef),
    Reused(NodeRef),
    Unmatched(NodeRef),
    Crossing(Arc, Arc),
    HiddenDecoration { arc: Arc, outer: Arc },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfRange(n) => write!(f, "node {n} out of range"),
            Violation::Reused(n) => write!(f, "node {n} used by more than one arc"),
            Violation::Unmatched(n) => write!(f, "node {n} unmatched"),
            Violation::Crossing(a, b) => write!(f, "arcs {a} and {b} cross"),
            Violation::HiddenDecoration { arc, outer } => {
                write!(f, "decorated arc {arc} is nested inside {outer}")
            }
        }
    }
}

/// Result of [`validate_arcs`]; empty iff the arcs form a valid decorated tangle.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn linear_pos(n_top: usize, n_bottom: usize, node: NodeRef) -> Option<usize> {
    match node.face {
        Face::North if (1..=n_top).contains(&node.index) => Some(node.index - 1),
        Face::South if (1..=n_bottom).contains(&node.index) => Some(n_top + n_bottom - node.index),
        _ => None,
    }
}

/// Checks a list of arcs against every decorated-tangle invariant and reports
/// each violation found.
pub fn validate_arcs(n_top: usize, n_bottom: usize, arcs: &[Arc]) -> ValidationReport {
    let total = n_top + n_bottom;
    let mut violations = Vec::new();
    let mut used = vec![false; total];
    let mut spans = Vec::new();
    for arc in arcs {
        let mut ends = [0usize; 2];
        let mut ok = true;
        for (slot, node) in [arc.from, arc.to].into_iter().enumerate() {
            match linear_pos(n_top, n_bottom, node) {
                None => {
                    violations.push(Violation::OutOfRange(node));
                    ok = false;
                }
                Some(p) => {
                    if used[p] {
                        violations.push(Violation::Reused(node));
                        ok = false;
                    }
                    used[p] = true;
                    ends[slot] = p;
                }
            }
        }
        if ok && ends[0] == ends[1] {
            violations.push(Violation::Reused(arc.from));
            ok = false;
        }
        if ok {
            spans.push((ends[0].min(ends[1]), ends[0].max(ends[1]), *arc));
        }
    }
    for (p, u) in used.iter().enumerate() {
        if !u {
            let node = if p < n_top {
                NodeRef::north(p + 1)
            } else {
                NodeRef::south(total - p)
            };
            violations.push(Violation::Unmatched(node));
        }
    }
    for (i, &(a, b, x)) in spans.iter().enumerate() {
        for &(c, d, y) in &spans[i + 1..] {
            let interleaved = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if interleaved {
                violations.push(Violation::Crossing(x, y));
            }
        }
    }
    for &(a, b, x) in &spans {
        if x.dec == 0 {
            continue;
        }
        if let Some(&(_, _, y)) = spans.iter().find(|&&(c, d, _)| c < a && b < d) {
            violations.push(Violation::HiddenDecoration { arc: x, outer: y });
        }
    }
    ValidationReport { violations }
}

/// A decorated tangle with `n_top` north and `n_bottom` south nodes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedTangle {
    n_top: usize,
    n_bottom: usize,
    /// Partner of each node in west-cut order.
    partner: Vec<usize>,
    /// Decoration count of the arc through each node (stored at both ends).
    dec: Vec<u32>,
    /// Decoration counts of the closed loops, sorted.
    loops: Vec<u32>,
}

impl DecoratedTangle {
    pub fn identity(m: usize) -> Self {
        let arcs: Vec<Arc> = (1..=m)
            .map(|i| Arc::new(NodeRef::north(i), NodeRef::south(i), 0))
            .collect();
        Self::from_arcs(m, m, &arcs, Vec::new()).expect("identity is valid")
    }

    /// Builds a tangle, rejecting anything [`validate_arcs`] complains about.
    pub fn from_arcs(n_top: usize, n_bottom: usize, arcs: &[Arc], loops: Vec<u32>) -> Result<Self> {
        let report = validate_arcs(n_top, n_bottom, arcs);
        if !report.is_valid() {
            return Err(Error::InvalidTangle(report.violations));
        }
        Self::from_arcs_unchecked(n_top, n_bottom, arcs, loops)
    }

    /// Builds a tangle requiring only that the arcs form a perfect matching;
    /// crossings and hidden decorations are left for [`Self::validate`].
    pub fn from_arcs_unchecked(
        n_top: usize,
        n_bottom: usize,
        arcs: &[Arc],
        mut loops: Vec<u32>,
    ) -> Result<Self> {
        let total = n_top + n_bottom;
        let mut partner = vec![usize::MAX; total];
        let mut dec = vec![0; total];
        let mut bad = Vec::new();
        for arc in arcs {
            let (Some(p), Some(q)) = (
                linear_pos(n_top, n_bottom, arc.from),
                linear_pos(n_top, n_bottom, arc.to),
            ) else {
                bad.push(Violation::OutOfRange(arc.from));
                continue;
            };
            if p == q || partner[p] != usize::MAX || partner[q] != usize::MAX {
                bad.push(Violation::Reused(arc.from));
                continue;
            }
            partner[p] = q;
            partner[q] = p;
            dec[p] = arc.dec;
            dec[q] = arc.dec;
        }
        for (p, &q) in partner.iter().enumerate() {
            if q == usize::MAX {
                let node = if p < n_top {
                    NodeRef::north(p + 1)
                } else {
                    NodeRef::south(total - p)
                };
                bad.push(Violation::Unmatched(node));
            }
        }
        if !bad.is_empty() {
            return Err(Error::InvalidTangle(bad));
        }
        loops.sort_unstable();
        Ok(DecoratedTangle { n_top, n_bottom, partner, dec, loops })
    }

    pub(crate) fn from_parts(
        n_top: usize,
        n_bottom: usize,
        partner: Vec<usize>,
        dec: Vec<u32>,
        mut loops: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(partner.len(), n_top + n_bottom);
        loops.sort_unstable();
        DecoratedTangle { n_top, n_bottom, partner, dec, loops }
    }

    pub fn n_top(&self) -> usize {
        self.n_top
    }

    pub fn n_bottom(&self) -> usize {
        self.n_bottom
    }

    pub fn is_square(&self) -> bool {
        self.n_top == self.n_bottom
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub(crate) fn partner_slice(&self) -> &[usize] {
        &self.partner
    }

    pub(crate) fn dec_slice(&self) -> &[u32] {
        &self.dec
    }

    pub fn pos(&self, node: NodeRef) -> Option<usize> {
        linear_pos(self.n_top, self.n_bottom, node)
    }

    pub fn node(&self, pos: usize) -> NodeRef {
        if pos < self.n_top {
            NodeRef::north(pos + 1)
        } else {
            NodeRef::south(self.n_top + self.n_bottom - pos)
        }
    }

    pub fn partner(&self, node: NodeRef) -> Option<NodeRef> {
        self.pos(node).map(|p| self.node(self.partner[p]))
    }

    pub fn decoration(&self, node: NodeRef) -> Option<u32> {
        self.pos(node).map(|p| self.dec[p])
    }

    /// Every arc once, ordered by its west-most endpoint in west-cut order.
    pub fn arcs(&self) -> Vec<Arc> {
        (0..self.partner.len())
            .filter(|&p| p < self.partner[p])
            .map(|p| Arc::new(self.node(p), self.node(self.partner[p]), self.dec[p]))
            .collect()
    }

    pub fn propagating_count(&self) -> usize {
        (0..self.n_top).filter(|&p| self.partner[p] >= self.n_top).count()
    }

    pub fn validate(&self) -> ValidationReport {
        validate_arcs(self.n_top, self.n_bottom, &self.arcs())
    }

    /// True iff the arc through `node` is not nested inside another arc.
    pub fn west_exposed(&self, node: NodeRef) -> Option<bool> {
        let p = self.pos(node)?;
        let (a, b) = (p.min(self.partner[p]), p.max(self.partner[p]));
        Some(!(0..a).any(|c| {
            let d = self.partner[c];
            d > b
        }))
    }

    /// Linear-time planarity and exposure check for tangles produced
    /// internally.
    pub(crate) fn is_planar_and_exposed(&self) -> bool {
        let mut stack: Vec<usize> = Vec::new();
        for p in 0..self.partner.len() {
            let q = self.partner[p];
            if q > p {
                if self.dec[p] > 0 && !stack.is_empty() {
                    return false;
                }
                stack.push(p);
            } else if stack.pop() != Some(q) {
                return false;
            }
        }
        true
    }

    /// Top-bottom reflection.
    pub fn flip(&self) -> Self {
        let arcs: Vec<Arc> = self
            .arcs()
            .into_iter()
            .map(|a| Arc::new(flip_node(a.from), flip_node(a.to), a.dec))
            .collect();
        Self::from_arcs_unchecked(self.n_bottom, self.n_top, &arcs, self.loops.clone())
            .expect("reflection of a perfect matching is a perfect matching")
    }

    /// Stacks `self` on top of `lower`, gluing `self`'s south face to
    /// `lower`'s north face. Decorations add along composite arcs; closed
    /// components confined to the middle become loops.
    pub fn concat(&self, lower: &DecoratedTangle) -> Result<DecoratedTangle> {
        if self.n_bottom != lower.n_top {
            return Err(Error::WidthMismatch { bottom: self.n_bottom, top: lower.n_top });
        }
        let out = self.concat_unchecked(lower);
        if !out.is_planar_and_exposed() {
            return Err(Error::ExposureViolation);
        }
        Ok(out)
    }

    pub(crate) fn concat_unchecked(&self, lower: &DecoratedTangle) -> DecoratedTangle {
        let (xt, xb) = (self.n_top, self.n_bottom);
        let (yt, yb) = (lower.n_top, lower.n_bottom);
        let mid = xb;
        let rt = xt;
        let rb = yb;
        let mut partner = vec![usize::MAX; rt + rb];
        let mut dec = vec![0u32; rt + rb];
        let mut mid_seen = vec![false; mid + 1];

        // Walks from a boundary node to the other end of its composite arc.
        // `in_upper` says which tangle `pos` lives in.
        let walk = |mut in_upper: bool, mut pos: usize, mid_seen: &mut Vec<bool>| -> (usize, u32) {
            let mut acc = 0u32;
            loop {
                if in_upper {
                    let q = self.partner[pos];
                    acc += self.dec[pos];
                    if q < xt {
                        return (q, acc);
                    }
                    let j = xt + xb - q;
                    mid_seen[j] = true;
                    in_upper = false;
                    pos = j - 1;
                } else {
                    let q = lower.partner[pos];
                    acc += lower.dec[pos];
                    if q >= yt {
                        let j = yt + yb - q;
                        return (rt + rb - j, acc);
                    }
                    let j = q + 1;
                    mid_seen[j] = true;
                    in_upper = true;
                    pos = xt + xb - j;
                }
            }
        };

        for i in 0..rt {
            if partner[i] != usize::MAX {
                continue;
            }
            let (end, d) = walk(true, i, &mut mid_seen);
            partner[i] = end;
            partner[end] = i;
            dec[i] = d;
            dec[end] = d;
        }
        for j in 1..=rb {
            let r = rt + rb - j;
            if partner[r] != usize::MAX {
                continue;
            }
            let (end, d) = walk(false, yt + yb - j, &mut mid_seen);
            partner[r] = end;
            partner[end] = r;
            dec[r] = d;
            dec[end] = d;
        }

        let mut loops: Vec<u32> = self.loops.iter().chain(&lower.loops).copied().collect();
        for start in 1..=mid {
            if mid_seen[start] {
                continue;
            }
            let mut acc = 0u32;
            let mut j = start;
            loop {
                mid_seen[j] = true;
                // upper arc from S_j
                let p = xt + xb - j;
                acc += self.dec[p];
                let j2 = xt + xb - self.partner[p];
                mid_seen[j2] = true;
                // lower arc from N_j2
                let p2 = j2 - 1;
                acc += lower.dec[p2];
                j = lower.partner[p2] + 1;
                if j == start {
                    break;
                }
            }
            loops.push(acc);
        }
        DecoratedTangle::from_parts(rt, rb, partner, dec, loops)
    }

    /// Returns a copy with the decoration of the arc through `node` replaced.
    pub fn with_decoration(&self, node: NodeRef, d: u32) -> Option<Self> {
        let p = self.pos(node)?;
        let mut out = self.clone();
        let q = out.partner[p];
        out.dec[p] = d;
        out.dec[q] = d;
        Some(out)
    }

    pub fn with_loops(&self, loops: Vec<u32>) -> Self {
        let mut out = self.clone();
        out.loops = loops;
        out.loops.sort_unstable();
        out
    }

    /// Multi-line picture: one column per node; propagating edges are
    /// numbered, caps lettered, and each decoration drawn as `*`.
    pub fn render_ascii(&self) -> String {
        let mut labels = vec![String::new(); self.partner.len()];
        let mut next_prop = 1;
        let mut next_cap = b'a';
        for p in 0..self.partner.len() {
            let q = self.partner[p];
            if q < p {
                continue;
            }
            let tag = if (p < self.n_top) != (q < self.n_top) {
                let t = next_prop.to_string();
                next_prop += 1;
                t
            } else {
                let t = (next_cap as char).to_string();
                next_cap = if next_cap == b'z' { b'A' } else { next_cap + 1 };
                t
            };
            let stars = "*".repeat(self.dec[p] as usize);
            labels[p] = format!("{tag}{stars}");
            labels[q] = format!("{tag}{stars}");
        }
        let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1) + 1;
        let mut out = String::from("N ");
        for i in 1..=self.n_top {
            out.push_str(&format!("{:<width$}", labels[i - 1]));
        }
        out.push_str("\nS ");
        for j in 1..=self.n_bottom {
            out.push_str(&format!("{:<width$}", labels[self.n_top + self.n_bottom - j]));
        }
        if !self.loops.is_empty() {
            let ls: Vec<String> = self.loops.iter().map(|d| format!("o{}", "*".repeat(*d as usize))).collect();
            out.push_str(&format!("\nloops: {}", ls.join(" ")));
        }
        out.push('\n');
        out
    }
}

fn flip_node(n: NodeRef) -> NodeRef {
    match n.face {
        Face::North => NodeRef::south(n.index),
        Face::South => NodeRef::north(n.index),
    }
}

impl fmt::Debug for DecoratedTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs().iter().map(|a| a.to_string()).collect();
        write!(f, "[{}", arcs.join(" "))?;
        if !self.loops.is_empty() {
            write!(f, " | loops {:?}", self.loops)?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize, Deserialize)]
struct ArcRepr {
    from: String,
    to: String,
    dec: u32,
}

#[derive(Serialize, Deserialize)]
struct TangleRepr {
    n_top: usize,
    n_bottom: usize,
    arcs: Vec<ArcRepr>,
    #[serde(default)]
    loops: Vec<u32>,
}

impl Serialize for DecoratedTangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TangleRepr {
            n_top: self.n_top,
            n_bottom: self.n_bottom,
            arcs: self
                .arcs()
                .into_iter()
                .map(|a| ArcRepr { from: a.from.to_string(), to: a.to.to_string(), dec: a.dec })
                .collect(),
            loops: self.loops.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DecoratedTangle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = TangleRepr::deserialize(d)?;
        let arcs = repr
            .arcs
            .iter()
            .map(|a| Ok(Arc::new(a.from.parse()?, a.to.parse()?, a.dec)))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        DecoratedTangle::from_arcs(repr.n_top, repr.n_bottom, &arcs, repr.loops).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(i: usize) -> NodeRef {
        NodeRef::north(i)
    }
    fn s(i: usize) -> NodeRef {
        NodeRef::south(i)
    }

    pub(crate) fn u(i: usize, m: usize) -> DecoratedTangle {
        let d = u32::from(i == 1);
        let mut arcs = vec![Arc::new(n(i), n(i + 1), d), Arc::new(s(i), s(i + 1), d)];
        for j in (1..=m).filter(|&j| j != i && j != i + 1) {
            arcs.push(Arc::new(n(j), s(j), 0));
        }
        DecoratedTangle::from_arcs(m, m, &arcs, vec![]).unwrap()
    }

    #[test]
    fn u1_shape_is_valid() {
        assert!(u(1, 3).validate().is_valid());
    }

    #[test]
    fn interleaved_arcs_cross() {
        let arcs = [
            Arc::new(n(1), n(3), 0),
            Arc::new(n(2), s(1), 0),
            Arc::new(s(2), s(3), 0),
        ];
        let r = validate_arcs(3, 3, &arcs);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::Crossing(..))));
    }

    #[test]
    fn decorated_cap_behind_propagating_edge() {
        let arcs = [
            Arc::new(n(1), s(1), 0),
            Arc::new(n(2), n(3), 1),
            Arc::new(s(2), s(3), 0),
        ];
        let r = validate_arcs(3, 3, &arcs);
        assert_eq!(r.violations.len(), 1);
        assert!(matches!(r.violations[0], Violation::HiddenDecoration { .. }));
    }

    #[test]
    fn unmatched_node_reported() {
        let arcs = [Arc::new(n(1), s(1), 0)];
        let r = validate_arcs(2, 2, &arcs);
        assert_eq!(r.violations, vec![Violation::Unmatched(n(2)), Violation::Unmatched(s(2))]);
    }

    #[test]
    fn exposure() {
        let side_by_side = DecoratedTangle::from_arcs(
            4,
            0,
            &[Arc::new(n(1), n(2), 0), Arc::new(n(3), n(4), 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(side_by_side.west_exposed(n(1)), Some(true));
        assert_eq!(side_by_side.west_exposed(n(3)), Some(true));
        let nested = DecoratedTangle::from_arcs(
            4,
            0,
            &[Arc::new(n(1), n(4), 0), Arc::new(n(2), n(3), 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(nested.west_exposed(n(1)), Some(true));
        assert_eq!(nested.west_exposed(n(2)), Some(false));
    }

    #[test]
    fn u1_squared_leaves_doubly_decorated_loop() {
        let t = u(1, 3).concat(&u(1, 3)).unwrap();
        assert_eq!(t.loops(), &[2]);
        assert_eq!(t.with_loops(vec![]), u(1, 3));
    }

    #[test]
    fn u2_squared_leaves_plain_loop() {
        let t = u(2, 3).concat(&u(2, 3)).unwrap();
        assert_eq!(t.loops(), &[0]);
        assert_eq!(t.with_loops(vec![]), u(2, 3));
    }

    #[test]
    fn identity_is_neutral() {
        let t = u(1, 4);
        let id = DecoratedTangle::identity(4);
        assert_eq!(id.concat(&t).unwrap(), t);
        assert_eq!(t.concat(&id).unwrap(), t);
    }

    #[test]
    fn width_mismatch() {
        assert!(matches!(
            u(1, 3).concat(&u(1, 4)),
            Err(Error::WidthMismatch { bottom: 3, top: 4 })
        ));
    }

    #[test]
    fn u1_u2_composite_edge() {
        // U1·U2 on three strands: the propagating edge runs N3 -> S1 and
        // picks up the decoration of U1's south cap.
        let t = u(1, 3).concat(&u(2, 3)).unwrap();
        assert!(t.loops().is_empty());
        assert_eq!(t.partner(n(3)), Some(s(1)));
        assert_eq!(t.decoration(n(3)), Some(1));
        assert_eq!(t.partner(n(1)), Some(n(2)));
        assert_eq!(t.partner(s(2)), Some(s(3)));
    }

    #[test]
    fn rectangular_composition() {
        // cap on top of a 2 -> 0 tangle: 0 -> 2 then 2 -> 0 gives a loop.
        let cup = DecoratedTangle::from_arcs(0, 2, &[Arc::new(s(1), s(2), 1)], vec![]).unwrap();
        let cap = DecoratedTangle::from_arcs(2, 0, &[Arc::new(n(1), n(2), 2)], vec![]).unwrap();
        let t = cup.concat(&cap).unwrap();
        assert_eq!(t.loops(), &[3]);
        assert_eq!(t.n_top(), 0);
        assert_eq!(t.n_bottom(), 0);
    }

    #[test]
    fn json_round_trip() {
        let t = u(1, 3);
        let js = serde_json::to_string(&t).unwrap();
        assert!(js.contains(r#"{"from":"N1","to":"N2","dec":1}"#));
        let back: DecoratedTangle = serde_json::from_str(&js).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn ascii() {
        let pic = u(1, 3).render_ascii();
        assert_eq!(pic, "N a* a* 1  \nS b* b* 1  \n");
    }
}
