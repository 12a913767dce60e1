use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Inadmissible};
use crate::error::{Error, Result};
use crate::ring::{fib_reduce, Coord, Golden, Laurent, Scalar, ZPhi};
use crate::tangle::DecoratedTangle;

/// A linear combination of basis diagrams on `m` strands with Laurent
/// polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement<R = ZPhi> {
    m: usize,
    terms: BTreeMap<Diagram, Laurent<R>>,
}

impl<R: Scalar> AlgebraElement<R> {
    pub fn zero(m: usize) -> Self {
        AlgebraElement { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::from_diagram(Diagram::identity(m))
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::from_term(d, Laurent::one())
    }

    pub fn from_term(d: Diagram, c: Laurent<R>) -> Self {
        let mut x = Self::zero(d.m());
        x.add_term(d, c);
        x
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Laurent<R>)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, d: &Diagram) -> Laurent<R> {
        self.terms.get(d).cloned().unwrap_or_else(Laurent::zero)
    }

    /// The only term, if there is exactly one.
    pub fn single(&self) -> Option<(&Diagram, &Laurent<R>)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// True iff `self` is exactly `1·d`.
    pub fn is_diagram(&self, d: &Diagram) -> bool {
        matches!(self.single(), Some((x, c)) if x == d && c.is_one())
    }

    pub fn add_term(&mut self, d: Diagram, c: Laurent<R>) {
        debug_assert_eq!(d.m(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&d) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(d, s);
                }
            }
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (d, c) in &other.terms {
            self.add_term(d.clone(), c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            m: self.m,
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Laurent<R>) -> Self {
        let mut out = Self::zero(self.m);
        for (d, x) in &self.terms {
            out.add_term(d.clone(), x * c);
        }
        out
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::StrandMismatch { left: self.m, right: other.m });
        }
        Ok(())
    }

    /// `self · other`, with `self` stacked on top.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.multiply_with(other, false)
    }

    /// Like [`Self::multiply`] but accepts products whose reduced diagrams
    /// violate the all-propagating or face conditions. Used to multiply
    /// deliberately corrupted generators.
    pub fn multiply_lenient(&self, other: &Self) -> Result<Self> {
        self.multiply_with(other, true)
    }

    fn multiply_with(&self, other: &Self, lenient: bool) -> Result<Self> {
        self.check_strands(other)?;
        let mut out = Self::zero(self.m);
        for (x, cx) in &self.terms {
            for (y, cy) in &other.terms {
                let t = x.tangle().concat(y.tangle())?;
                let prod = reduce_with::<R>(&t, lenient)?;
                let c = cx * cy;
                for (d, k) in prod.terms {
                    out.add_term(d, &k * &c);
                }
            }
        }
        Ok(out)
    }

    /// Applies the top-bottom reflection to each diagram.
    pub fn star(&self) -> Self {
        AlgebraElement {
            m: self.m,
            terms: self.terms.iter().map(|(d, c)| (d.star(), c.clone())).collect(),
        }
    }

    pub fn map_coeffs<S: Scalar>(&self, f: impl Fn(&R) -> S) -> AlgebraElement<S> {
        let mut out = AlgebraElement::zero(self.m);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c.map_coeffs(&f));
        }
        out
    }
}

/// Rewrites a raw square tangle as a combination of admissible diagrams:
/// a loop carrying `r` decorations becomes the scalar `F_{r-1}·δ`, and an
/// arc carrying `r` decorations becomes `F_{r-1}·(plain) + F_r·(decorated)`.
pub fn reduce<R: Scalar>(t: &DecoratedTangle) -> Result<AlgebraElement<R>> {
    reduce_with(t, false)
}

fn reduce_with<R: Scalar>(t: &DecoratedTangle, lenient: bool) -> Result<AlgebraElement<R>> {
    if !t.is_square() {
        return Err(Error::WidthMismatch { bottom: t.n_bottom(), top: t.n_top() });
    }
    let m = t.n_top();
    let mut scalar = Laurent::<R>::one();
    for &r in t.loops() {
        let f = fib_reduce(r).a;
        if f.is_zero() {
            return Ok(AlgebraElement::zero(m));
        }
        scalar = &scalar * &Laurent::delta().scale(&R::from_integer(f));
    }
    let partner = t.partner_slice();
    let heavy: Vec<(usize, u32)> = t
        .dec_slice()
        .iter()
        .enumerate()
        .filter(|&(p, &r)| r > 0 && p < partner[p])
        .map(|(p, &r)| (p, r))
        .collect();
    let base = t.with_loops(Vec::new());
    let mut out = AlgebraElement::zero(m);
    for choice in 0u64..(1 << heavy.len()) {
        let mut weight = R::one();
        let mut tangle = base.clone();
        for (i, &(p, r)) in heavy.iter().enumerate() {
            let decorated = choice >> i & 1 == 1;
            let g = fib_reduce(r);
            let w = if decorated { g.b } else { g.a };
            weight = weight * R::from_integer(w);
            let node = tangle.node(p);
            tangle = tangle.with_decoration(node, u32::from(decorated)).expect("node in range");
        }
        if weight.is_zero() {
            continue;
        }
        let d = to_diagram(&tangle, lenient)?;
        out.add_term(d, scalar.scale(&weight));
    }
    Ok(out)
}

fn to_diagram(t: &DecoratedTangle, lenient: bool) -> Result<Diagram> {
    let d = if lenient { Diagram::from_tangle_unchecked(t) } else { Diagram::from_tangle(t) };
    d.map_err(|e| match e {
        Inadmissible::Invalid(_) => Error::ExposureViolation,
        other => Error::ClosureViolation(other),
    })
}

/// Reduction by single local rewrites applied in random order:
/// plain loop → δ, singly decorated loop → 0, and `γ^r = γ^{r-1} + γ^{r-2}`
/// on any loop or arc with `r ≥ 2`. Used to test that the normal form does
/// not depend on the order of rewriting.
pub fn reduce_stepwise<R: Scalar, G: Rng>(t: &DecoratedTangle, rng: &mut G) -> Result<AlgebraElement<R>> {
    if !t.is_square() {
        return Err(Error::WidthMismatch { bottom: t.n_bottom(), top: t.n_top() });
    }
    let m = t.n_top();
    let mut pending: Vec<(DecoratedTangle, Laurent<R>)> = vec![(t.clone(), Laurent::one())];
    let mut out = AlgebraElement::zero(m);
    while !pending.is_empty() {
        let idx = rng.gen_range(0..pending.len());
        let (t, c) = pending.swap_remove(idx);
        let loops = t.loops();
        let partner = t.partner_slice();
        let heavy_arcs: Vec<usize> = (0..partner.len())
            .filter(|&p| p < partner[p] && t.dec_slice()[p] >= 2)
            .collect();
        let n_rules = loops.len() + heavy_arcs.len();
        if n_rules == 0 {
            out.add_term(to_diagram(&t, false)?, c);
            continue;
        }
        let pick = rng.gen_range(0..n_rules);
        if pick < loops.len() {
            let r = loops[pick];
            let mut rest = loops.to_vec();
            rest.remove(pick);
            match r {
                0 => pending.push((t.with_loops(rest), &c * &Laurent::delta())),
                1 => {}
                _ => {
                    for r2 in [r - 1, r - 2] {
                        let mut ls = rest.clone();
                        ls.push(r2);
                        pending.push((t.with_loops(ls), c.clone()));
                    }
                }
            }
        } else {
            let p = heavy_arcs[pick - loops.len()];
            let r = t.dec_slice()[p];
            let node = t.node(p);
            for r2 in [r - 1, r - 2] {
                pending.push((t.with_decoration(node, r2).expect("node in range"), c.clone()));
            }
        }
    }
    Ok(out)
}

impl<R: Scalar> fmt::Display for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{d}")?;
            } else {
                write!(f, "({c})·{d}")?;
            }
        }
        Ok(())
    }
}

impl<R: Scalar> fmt::Debug for AlgebraElement<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr<C> {
    diagram: Diagram,
    coeff: C,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr<C> {
    m: usize,
    terms: Vec<TermRepr<C>>,
}

impl<T: Coord + Scalar> Serialize for AlgebraElement<Golden<T>> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermRepr { diagram: d.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Coord + Scalar> Deserialize<'de> for AlgebraElement<Golden<T>> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = ElementRepr::<Laurent<Golden<T>>>::deserialize(d)?;
        let mut out = AlgebraElement::zero(r.m);
        for t in r.terms {
            if t.diagram.m() != r.m {
                return Err(D::Error::custom("diagram strand count differs from m"));
            }
            out.add_term(t.diagram, t.coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::generator_u;
    use crate::ring::Poly;
    use crate::tangle::NodeRef;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type E = AlgebraElement<ZPhi>;

    fn u(i: usize, m: usize) -> E {
        E::from_diagram(generator_u(i, m).unwrap())
    }

    #[test]
    fn u1_with_doubly_decorated_loop() {
        let t = generator_u(1, 3).unwrap().tangle().with_loops(vec![2]);
        let x: E = reduce(&t).unwrap();
        assert_eq!(x, u(1, 3).scale(&Poly::delta()));
    }

    #[test]
    fn singly_decorated_loop_kills() {
        let t = generator_u(2, 4).unwrap().tangle().with_loops(vec![0, 1]);
        assert!(reduce::<ZPhi>(&t).unwrap().is_zero());
    }

    #[test]
    fn triply_decorated_edge() {
        let u2 = generator_u(2, 3).unwrap();
        let t = u2.tangle().with_decoration(NodeRef::north(1), 3).unwrap();
        let x: E = reduce(&t).unwrap();
        let dec = Diagram::from_tangle(&t.with_decoration(NodeRef::north(1), 1).unwrap()).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.coeff(&u2), Poly::one());
        assert_eq!(x.coeff(&dec), Poly::from_int(2));
    }

    #[test]
    fn u_squares() {
        for m in 3..=5 {
            for i in 1..m {
                let x = u(i, m);
                assert_eq!(x.multiply(&x).unwrap(), x.scale(&Poly::delta()));
            }
        }
    }

    #[test]
    fn u1u2u1_three_strands() {
        let p = u(1, 3).multiply(&u(2, 3)).unwrap().multiply(&u(1, 3)).unwrap();
        assert_eq!(p.len(), 2);
        for (d, c) in p.terms() {
            assert!(c.is_one());
            assert_eq!(d.form().d1, generator_u(1, 3).unwrap().form().d1);
        }
    }

    #[test]
    fn strand_mismatch() {
        assert!(matches!(u(1, 3).multiply(&u(1, 4)), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn stepwise_agrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = generator_u(2, 4)
            .unwrap()
            .tangle()
            .with_decoration(NodeRef::north(1), 4)
            .unwrap()
            .with_loops(vec![0, 3, 2]);
        let a: E = reduce(&t).unwrap();
        for _ in 0..20 {
            let b: E = reduce_stepwise(&t, &mut rng).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn json_shape() {
        let x = u(1, 3).scale(&Poly::delta());
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with(r#"{"m":3,"terms":[{"diagram":{"n_top":3"#));
        assert!(s.ends_with(r#""coeff":[[-1,1,0],[1,1,0]]}]}"#));
        let back: E = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
