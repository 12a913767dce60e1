//! H-admissible diagrams: the basis of the diagram algebra, their dyadic
//! decomposition into half-diagrams, enumeration and the generators `U_i`.

mod half;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tangle::{Arc, DecoratedTangle, Face, NodeRef, Violation};

pub use half::{enumerate_generalized_half, enumerate_half, HalfDiagram};

/// Why a tangle is not an H-admissible diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Inadmissible {
    NotSquare { n_top: usize, n_bottom: usize },
    HasLoops,
    Invalid(Vec<Violation>),
    /// Some arc carries more than one decoration.
    MultipleDecorations,
    /// All edges propagate yet one is decorated.
    DecoratedIdentity,
    /// A face with caps has neither a decorated `{1,2}` nor an undecorated
    /// `{i,i+1}` with `i > 1`.
    FaceCondition(Face),
}

impl fmt::Display for Inadmissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inadmissible::NotSquare { n_top, n_bottom } => {
                write!(f, "not square ({n_top} north, {n_bottom} south nodes)")
            }
            Inadmissible::HasLoops => write!(f, "contains loops"),
            Inadmissible::Invalid(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "invalid tangle: {}", parts.join("; "))
            }
            Inadmissible::MultipleDecorations => write!(f, "an edge carries more than one decoration"),
            Inadmissible::DecoratedIdentity => {
                write!(f, "all edges propagate but one is decorated")
            }
            Inadmissible::FaceCondition(face) => write!(
                f,
                "{} face lacks a decorated {{1,2}} or an undecorated {{i,i+1}} with i > 1",
                match face {
                    Face::North => "north",
                    Face::South => "south",
                }
            ),
        }
    }
}

/// A diagram written as `|d1⟩⟨d2|`, or `|d1⟩⟨d2|•` when the westmost
/// propagating edge is decorated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyadicForm {
    pub d1: HalfDiagram,
    pub d2: HalfDiagram,
    pub bullet: bool,
}

impl DyadicForm {
    pub fn new(d1: HalfDiagram, d2: HalfDiagram, bullet: bool) -> Self {
        DyadicForm { d1, d2, bullet }
    }

    /// The diagram obtained by joining free points of `d1` and `d2` in
    /// west-to-east order, decorating the first join iff `bullet`.
    pub fn join_tangle(&self) -> Result<DecoratedTangle> {
        let m = self.d1.m();
        if self.d2.m() != m {
            return Err(Error::StrandMismatch { left: m, right: self.d2.m() });
        }
        let top = self.d1.free_points();
        let bottom = self.d2.free_points();
        if top.len() != bottom.len() {
            return Err(Error::Domain(format!(
                "free point counts differ: {} vs {}",
                top.len(),
                bottom.len()
            )));
        }
        if self.bullet && top.is_empty() {
            return Err(Error::Domain("bullet without propagating edges".into()));
        }
        let mut arcs = Vec::with_capacity(m);
        for (a, b, d) in self.d1.pairs_with_dec() {
            arcs.push(Arc::new(NodeRef::north(a), NodeRef::north(b), u32::from(d)));
        }
        for (a, b, d) in self.d2.pairs_with_dec() {
            arcs.push(Arc::new(NodeRef::south(a), NodeRef::south(b), u32::from(d)));
        }
        for (t, (&i, &j)) in top.iter().zip(&bottom).enumerate() {
            let d = u32::from(t == 0 && self.bullet);
            arcs.push(Arc::new(NodeRef::north(i), NodeRef::south(j), d));
        }
        DecoratedTangle::from_arcs(m, m, &arcs, Vec::new())
    }
}

impl fmt::Display for DyadicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{}⟩⟨{}|{}", self.d1, self.d2, if self.bullet { "•" } else { "" })
    }
}

impl fmt::Debug for DyadicForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A basis diagram. Equality, hashing and ordering go through the dyadic
/// form; the tangle is cached for composition.
#[derive(Clone)]
pub struct Diagram {
    form: DyadicForm,
    tangle: DecoratedTangle,
}

impl PartialEq for Diagram {
    fn eq(&self, other: &Self) -> bool {
        self.form == other.form
    }
}

impl Eq for Diagram {}

impl Hash for Diagram {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.form.hash(state)
    }
}

impl PartialOrd for Diagram {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Diagram {
    fn cmp(&self, other: &Self) -> Ordering {
        self.form.cmp(&other.form)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.form, f)
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.form, f)
    }
}

impl Diagram {
    /// Checks full H-admissibility.
    pub fn from_tangle(t: &DecoratedTangle) -> std::result::Result<Self, Inadmissible> {
        let d = Self::from_tangle_unchecked(t)?;
        let has_caps = d.form.d1.k() > 0;
        if !has_caps && t.dec_slice().iter().any(|&x| x > 0) {
            return Err(Inadmissible::DecoratedIdentity);
        }
        if !d.form.d1.satisfies_face_condition() {
            return Err(Inadmissible::FaceCondition(Face::North));
        }
        if !d.form.d2.satisfies_face_condition() {
            return Err(Inadmissible::FaceCondition(Face::South));
        }
        Ok(d)
    }

    /// Splits a loop-free, planar, exposed tangle with at most one decoration
    /// per arc, without checking the all-propagating and face conditions.
    pub fn from_tangle_unchecked(t: &DecoratedTangle) -> std::result::Result<Self, Inadmissible> {
        if !t.is_square() {
            return Err(Inadmissible::NotSquare { n_top: t.n_top(), n_bottom: t.n_bottom() });
        }
        if !t.loops().is_empty() {
            return Err(Inadmissible::HasLoops);
        }
        if t.dec_slice().iter().any(|&x| x > 1) {
            return Err(Inadmissible::MultipleDecorations);
        }
        if !t.is_planar_and_exposed() {
            return Err(Inadmissible::Invalid(t.validate().violations));
        }
        Ok(Diagram { form: split(t), tangle: t.clone() })
    }

    pub fn from_dyadic(form: DyadicForm) -> Result<Self> {
        let t = form.join_tangle()?;
        Diagram::from_tangle(&t).map_err(Error::NotAdmissible)
    }

    pub(crate) fn from_dyadic_unchecked(form: DyadicForm) -> Result<Self> {
        let tangle = form.join_tangle()?;
        Ok(Diagram { form, tangle })
    }

    pub fn identity(m: usize) -> Self {
        let form = DyadicForm::new(HalfDiagram::empty(m), HalfDiagram::empty(m), false);
        Diagram { tangle: DecoratedTangle::identity(m), form }
    }

    pub fn m(&self) -> usize {
        self.form.d1.m()
    }

    pub fn form(&self) -> &DyadicForm {
        &self.form
    }

    pub fn tangle(&self) -> &DecoratedTangle {
        &self.tangle
    }

    /// Number of caps on each face.
    pub fn rank(&self) -> usize {
        self.form.d1.k()
    }

    pub fn propagating_count(&self) -> usize {
        self.form.d1.free_count()
    }

    /// Top-bottom reflection, `|d1⟩⟨d2|(•) ↦ |d2⟩⟨d1|(•)`.
    pub fn star(&self) -> Self {
        Diagram {
            form: DyadicForm::new(self.form.d2.clone(), self.form.d1.clone(), self.form.bullet),
            tangle: self.tangle.flip(),
        }
    }

    pub fn render_ascii(&self) -> String {
        self.tangle.render_ascii()
    }
}

fn split(t: &DecoratedTangle) -> DyadicForm {
    let m = t.n_top();
    let partner = t.partner_slice();
    let dec = t.dec_slice();
    let mut north = Vec::new();
    let mut north_mask = 0u64;
    let mut bullet = None;
    for p in 0..m {
        let q = partner[p];
        if q >= m {
            if bullet.is_none() {
                bullet = Some(dec[p] > 0);
            }
        } else if p < q {
            if dec[p] > 0 {
                north_mask |= 1 << north.len();
            }
            north.push((p + 1, q + 1));
        }
    }
    let mut south = Vec::new();
    let mut south_mask = 0u64;
    // South node j sits at position 2m - j; scanning j upward keeps pairs
    // sorted by their west endpoint.
    for j in 1..=m {
        let p = 2 * m - j;
        let q = partner[p];
        if q >= m {
            let j2 = 2 * m - q;
            if j < j2 {
                if dec[p] > 0 {
                    south_mask |= 1 << south.len();
                }
                south.push((j, j2));
            }
        }
    }
    DyadicForm {
        d1: HalfDiagram::from_raw(m, north, north_mask),
        d2: HalfDiagram::from_raw(m, south, south_mask),
        bullet: bullet.unwrap_or(false),
    }
}

/// Checks whether a tangle is an H-admissible diagram.
pub fn is_h_admissible(t: &DecoratedTangle) -> std::result::Result<(), Inadmissible> {
    Diagram::from_tangle(t).map(|_| ())
}

/// The generator `U_i` on `m` strands: caps `{i,i+1}` on both faces,
/// decorated iff `i = 1`, all other strands vertical.
pub fn generator_u(i: usize, m: usize) -> Result<Diagram> {
    if i == 0 || i >= m {
        return Err(Error::Domain(format!("U_{i} needs 1 <= i < {m}")));
    }
    let h = HalfDiagram::new(m, &[(i, i + 1, i == 1)])?;
    Diagram::from_dyadic(DyadicForm::new(h.clone(), h, false))
}

/// Number of admissible diagrams on `m` strands by the closed form
/// `C(2m, m) − 2^{m+1} + m + 2`.
pub fn diagram_count_formula(m: usize) -> u128 {
    binomial(2 * m, m) + m as u128 + 2 - (1u128 << (m + 1))
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Default largest strand count accepted by [`enumerate_diagrams`].
pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// Every admissible diagram on `m` strands in canonical order.
pub fn enumerate_diagrams(m: usize, cap: usize) -> Result<Vec<Diagram>> {
    if m > cap {
        return Err(Error::CapExceeded { what: "strands", value: m, cap });
    }
    if m == 0 {
        return Err(Error::Domain("need at least one strand".into()));
    }
    let mut strata = Vec::new();
    for k in 0..=m / 2 {
        let halves = enumerate_half(m, k)?;
        let bullets: &[bool] = if k == 0 || 2 * k == m { &[false] } else { &[false, true] };
        strata.push((halves, bullets));
    }
    let mut out: Vec<Diagram> = strata
        .par_iter()
        .flat_map_iter(|(halves, bullets)| {
            halves.iter().flat_map(move |d1| {
                halves.iter().flat_map(move |d2| {
                    bullets.iter().map(move |&b| {
                        let form = DyadicForm::new(d1.clone(), d2.clone(), b);
                        let d = Diagram::from_dyadic(form).expect("admissible halves join admissibly");
                        debug_assert!(d.propagating_count() == 0 || d.tangle().west_exposed(NodeRef::north(d.form().d1.free_points()[0])) == Some(true));
                        d
                    })
                })
            })
        })
        .collect();
    out.par_sort();
    Ok(out)
}

/// The generic half-diagram excluded from each admissible stratum:
/// undecorated `{1,2}` followed by decorated `{3,4}`, ... when `k > 1`.
pub fn excluded_half(m: usize, k: usize) -> Option<HalfDiagram> {
    if k == 0 || 2 * k > m {
        return None;
    }
    let pairs: Vec<(usize, usize, bool)> =
        (0..k).map(|s| (2 * s + 1, 2 * s + 2, s > 0)).collect();
    HalfDiagram::new(m, &pairs).ok()
}

impl Serialize for Diagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.tangle.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Diagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let t = DecoratedTangle::deserialize(d)?;
        Diagram::from_tangle(&t).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(m: usize, pairs: &[(usize, usize, bool)]) -> HalfDiagram {
        HalfDiagram::new(m, pairs).unwrap()
    }

    #[test]
    fn u1_three_strands() {
        let u = generator_u(1, 3).unwrap();
        let t = u.tangle();
        assert_eq!(t.partner(NodeRef::north(1)), Some(NodeRef::north(2)));
        assert_eq!(t.decoration(NodeRef::north(1)), Some(1));
        assert_eq!(t.decoration(NodeRef::south(1)), Some(1));
        assert_eq!(t.partner(NodeRef::north(3)), Some(NodeRef::south(3)));
        assert_eq!(t.decoration(NodeRef::north(3)), Some(0));
        let hb = h(3, &[(1, 2, true)]);
        assert_eq!(u.form(), &DyadicForm::new(hb.clone(), hb, false));
    }

    #[test]
    fn u2_seven_strands() {
        let u = generator_u(2, 7).unwrap();
        assert_eq!(u.propagating_count(), 5);
        assert_eq!(u.tangle().decoration(NodeRef::north(2)), Some(0));
        assert_eq!(u.tangle().partner(NodeRef::south(2)), Some(NodeRef::south(3)));
    }

    #[test]
    fn u_out_of_range() {
        assert!(generator_u(0, 3).is_err());
        assert!(generator_u(3, 3).is_err());
    }

    #[test]
    fn decorated_identity_rejected() {
        let t = DecoratedTangle::identity(3).with_decoration(NodeRef::north(1), 1).unwrap();
        assert_eq!(is_h_admissible(&t), Err(Inadmissible::DecoratedIdentity));
    }

    #[test]
    fn excluded_shape_rejected() {
        let d1 = h(6, &[(1, 2, false), (3, 4, true)]);
        let form = DyadicForm::new(d1.clone(), d1, false);
        let t = form.join_tangle().unwrap();
        assert_eq!(is_h_admissible(&t), Err(Inadmissible::FaceCondition(Face::North)));
    }

    #[test]
    fn diagram_counts() {
        for (m, expect) in [(3, 9), (4, 44), (5, 195), (6, 804)] {
            assert_eq!(diagram_count_formula(m), expect);
            assert_eq!(enumerate_diagrams(m, 9).unwrap().len() as u128, expect);
        }
        assert_eq!(diagram_count_formula(7), 3185);
    }

    #[test]
    fn cap_refused() {
        assert!(matches!(enumerate_diagrams(10, 9), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn split_join_round_trip() {
        for d in enumerate_diagrams(5, 9).unwrap() {
            let back = Diagram::from_tangle(d.tangle()).unwrap();
            assert_eq!(back.form(), d.form());
            let again = Diagram::from_dyadic(d.form().clone()).unwrap();
            assert_eq!(again.tangle(), d.tangle());
        }
    }

    #[test]
    fn split_u1() {
        let u = generator_u(1, 3).unwrap();
        let f = u.form();
        assert_eq!(f.d1, h(3, &[(1, 2, true)]));
        assert!(!f.bullet);
    }

    #[test]
    fn join_mismatched_free_counts() {
        let form = DyadicForm::new(HalfDiagram::empty(3), h(3, &[(2, 3, false)]), false);
        assert!(form.join_tangle().is_err());
    }

    #[test]
    fn excluded_is_the_missing_element() {
        for m in 2..=9 {
            for k in 1..=m / 2 {
                let gen = enumerate_generalized_half(m, k).unwrap();
                let adm = enumerate_half(m, k).unwrap();
                let missing: Vec<_> = gen.into_iter().filter(|x| !adm.contains(x)).collect();
                assert_eq!(missing, vec![excluded_half(m, k).unwrap()], "m={m} k={k}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let u = generator_u(1, 4).unwrap();
        let s = serde_json::to_string(&u).unwrap();
        assert_eq!(serde_json::from_str::<Diagram>(&s).unwrap(), u);
    }
}
