use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::label::{lambda_poset, CellLabel};
use super::matrix::RingMatrix;
use crate::algebra::AlgebraElement;
use crate::diagram::{enumerate_half, Diagram, DyadicForm, HalfDiagram};
use crate::error::{Error, Result};
use crate::ring::{Poly, QPhi, QPoly, Scalar, ZPhi};

/// Coordinates in the cell basis, keyed by `(λ, index of S, index of T)`.
pub type CellCoords = BTreeMap<(CellLabel, usize, usize), QPoly>;

/// The cell datum for `n` (strand count `m = n + 1`): labels, the
/// half-diagram sets `M(λ)`, and the basis map `C`.
#[derive(Clone, Debug)]
pub struct CellDatum {
    n: usize,
    labels: Vec<CellLabel>,
    halves: BTreeMap<usize, Vec<HalfDiagram>>,
    index: HashMap<HalfDiagram, usize>,
}

impl CellDatum {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("n must be positive".into()));
        }
        let m = n + 1;
        let mut halves = BTreeMap::new();
        let mut index = HashMap::new();
        for k in 0..=m / 2 {
            let hs = enumerate_half(m, k)?;
            for (i, h) in hs.iter().enumerate() {
                index.insert(h.clone(), i);
            }
            halves.insert(k, hs);
        }
        Ok(CellDatum { n, labels: lambda_poset(n), halves, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.n + 1
    }

    pub fn labels(&self) -> &[CellLabel] {
        &self.labels
    }

    /// `M(λ)`: admissible half-diagrams with `|λ|` pairs.
    pub fn tableaux(&self, label: CellLabel) -> &[HalfDiagram] {
        &self.halves[&label.size()]
    }

    pub fn dim(&self, label: CellLabel) -> usize {
        self.tableaux(label).len()
    }

    pub fn index_of(&self, h: &HalfDiagram) -> Option<usize> {
        self.index.get(h).copied()
    }

    fn check_label(&self, label: CellLabel) -> Result<()> {
        if self.labels.contains(&label) {
            Ok(())
        } else {
            Err(Error::Domain(format!("label {label} is not in the poset for n = {}", self.n)))
        }
    }

    /// `C(λ, S, T)` by tableau indices.
    pub fn basis_element(&self, label: CellLabel, s: usize, t: usize) -> Result<AlgebraElement> {
        self.check_label(label)?;
        let hs = self.tableaux(label);
        let (d1, d2) = match (hs.get(s), hs.get(t)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Domain(format!("tableau index out of range for {label}"))),
        };
        self.cell_basis(label, d1, d2)
    }

    /// `C(λ, d1, d2)`: `|d1⟩⟨d2|• − γ_i |d1⟩⟨d2|` with `γ_1` for plain and
    /// `γ_2` for bullet labels, and the plain diagram `|d1⟩⟨d2|` for the
    /// zero and middle labels.
    pub fn cell_basis(&self, label: CellLabel, d1: &HalfDiagram, d2: &HalfDiagram) -> Result<AlgebraElement> {
        self.check_label(label)?;
        let k = label.size();
        if d1.k() != k || d2.k() != k || !d1.is_admissible() || !d2.is_admissible() {
            return Err(Error::Domain(format!("half-diagrams {d1}, {d2} are not in M({label})")));
        }
        let plain = Diagram::from_dyadic(DyadicForm::new(d1.clone(), d2.clone(), false))?;
        let gamma = match label {
            CellLabel::Zero | CellLabel::Middle(_) => return Ok(AlgebraElement::from_diagram(plain)),
            CellLabel::Plain(_) => ZPhi::gamma1(),
            CellLabel::Bullet(_) => ZPhi::gamma2(),
        };
        let dotted = Diagram::from_dyadic(DyadicForm::new(d1.clone(), d2.clone(), true))?;
        let mut x = AlgebraElement::from_diagram(dotted);
        x.add_term(plain, Poly::constant(-gamma));
        Ok(x)
    }

    /// Change of basis from diagrams to the cell basis.
    pub fn expand(&self, x: &AlgebraElement) -> Result<CellCoords> {
        self.expand_rational(&x.map_coeffs(|c| QPhi::from(c)))
    }

    pub fn expand_rational(&self, x: &AlgebraElement<QPhi>) -> Result<CellCoords> {
        let m = self.m();
        if x.m() != m {
            return Err(Error::StrandMismatch { left: x.m(), right: m });
        }
        let g1 = QPhi::gamma1();
        let g2 = QPhi::gamma2();
        let inv = (g2.clone() - g1.clone()).try_inv().expect("nonzero");
        let mut out = CellCoords::new();
        let mut add = |key: (CellLabel, usize, usize), c: QPoly| {
            if c.is_zero() {
                return;
            }
            let e = out.entry(key).or_insert_with(QPoly::zero);
            e.add_assign_ref(&c);
            if e.is_zero() {
                out.remove(&key);
            }
        };
        for (d, c) in x.terms() {
            let f = d.form();
            let k = f.d1.k();
            let s = self.index_of(&f.d1).expect("admissible half");
            let t = self.index_of(&f.d2).expect("admissible half");
            if k == 0 {
                add((CellLabel::Zero, s, t), c.clone());
            } else if 2 * k == m {
                add((CellLabel::Middle(k), s, t), c.clone());
            } else if f.bullet {
                add((CellLabel::Plain(k), s, t), c.scale(&(g2.clone() * inv.clone())));
                add((CellLabel::Bullet(k), s, t), c.scale(&-(g1.clone() * inv.clone())));
            } else {
                add((CellLabel::Plain(k), s, t), c.scale(&inv));
                add((CellLabel::Bullet(k), s, t), c.scale(&-inv.clone()));
            }
        }
        Ok(out)
    }

    /// Recombines cell coordinates into a diagram-basis element.
    pub fn recombine(&self, coords: &CellCoords) -> Result<AlgebraElement<QPhi>> {
        let mut out = AlgebraElement::zero(self.m());
        for (&(label, s, t), c) in coords {
            let b = self.basis_element(label, s, t)?.map_coeffs(|c| QPhi::from(c));
            out.add_assign(&b.scale(c));
        }
        Ok(out)
    }

    /// `r_a(S′, S)` for one fixed `T`: rows are `S′`, columns `S`.
    pub fn action_matrix_at(&self, a: &AlgebraElement, label: CellLabel, t: usize) -> Result<RingMatrix> {
        let dim = self.dim(label);
        let mut r = RingMatrix::zeros(dim, dim);
        for s in 0..dim {
            let y = a.multiply(&self.basis_element(label, s, t)?)?;
            for ((mu, s2, t2), c) in self.expand(&y)? {
                if mu == label {
                    if t2 != t {
                        return Err(Error::IndependenceViolation(format!(
                            "a·C({label},{s},{t}) has a term C({label},{s2},{t2}) with a different right index"
                        )));
                    }
                    r.add_at(s2, s, &c);
                } else if !mu.lt(label) {
                    return Err(Error::IndependenceViolation(format!(
                        "a·C({label},{s},{t}) has a term at {mu}, which is not below {label}"
                    )));
                }
            }
        }
        Ok(r)
    }

    /// `r_a(S′, S)`, checked to be identical for every choice of `T`.
    pub fn action_matrix(&self, a: &AlgebraElement, label: CellLabel) -> Result<RingMatrix> {
        self.check_label(label)?;
        let dim = self.dim(label);
        let mats = (0..dim)
            .into_par_iter()
            .map(|t| self.action_matrix_at(a, label, t))
            .collect::<Result<Vec<_>>>()?;
        for (t, m) in mats.iter().enumerate().skip(1) {
            if *m != mats[0] {
                return Err(Error::IndependenceViolation(format!(
                    "action coefficients for {label} differ between T = 0 and T = {t}"
                )));
            }
        }
        Ok(mats.into_iter().next().unwrap_or_else(|| RingMatrix::zeros(0, 0)))
    }

    /// The form `⟨d1, d2⟩` computed with fixed `(e1, e2)`.
    pub fn gram_matrix_at(&self, label: CellLabel, e1: usize, e2: usize) -> Result<RingMatrix> {
        self.check_label(label)?;
        let dim = self.dim(label);
        let left: Vec<AlgebraElement> =
            (0..dim).map(|d1| self.basis_element(label, e1, d1)).collect::<Result<_>>()?;
        let right: Vec<AlgebraElement> =
            (0..dim).map(|d2| self.basis_element(label, d2, e2)).collect::<Result<_>>()?;
        let entries = (0..dim * dim)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / dim, ij % dim);
                let y = left[i].multiply(&right[j])?;
                let mut val = QPoly::zero();
                for ((mu, s, t), c) in self.expand(&y)? {
                    if mu == label {
                        if (s, t) != (e1, e2) {
                            return Err(Error::IndependenceViolation(format!(
                                "C({label},{e1},{i})·C({label},{j},{e2}) has a term C({label},{s},{t})"
                            )));
                        }
                        val = c;
                    } else if !mu.lt(label) {
                        return Err(Error::IndependenceViolation(format!(
                            "C({label},{e1},{i})·C({label},{j},{e2}) has a term at {mu}"
                        )));
                    }
                }
                Ok(val)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RingMatrix::from_fn(dim, dim, |i, j| entries[i * dim + j].clone()))
    }

    /// The Gram matrix of `λ`, checked to agree for the four choices of
    /// `(e1, e2)` drawn from the first and last tableau.
    pub fn gram_matrix(&self, label: CellLabel) -> Result<RingMatrix> {
        let dim = self.dim(label);
        let last = dim - 1;
        let base = self.gram_matrix_at(label, 0, 0)?;
        for (e1, e2) in [(last, last), (0, last), (last, 0)] {
            if self.gram_matrix_at(label, e1, e2)? != base {
                return Err(Error::IndependenceViolation(format!(
                    "Gram matrix of {label} differs for (e1, e2) = ({e1}, {e2})"
                )));
            }
        }
        Ok(base)
    }
}

/// Result of checking the three cellular axioms.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub n: usize,
    pub basis_size: usize,
    pub diagram_count: usize,
    pub rank: usize,
    pub injective: bool,
    pub star_compatible: bool,
    pub star_failures: Vec<String>,
    pub action_checks: usize,
    pub action_failures: Vec<String>,
    pub round_trip: bool,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.injective
            && self.rank == self.basis_size
            && self.basis_size == self.diagram_count
            && self.star_compatible
            && self.action_failures.is_empty()
            && self.round_trip
    }
}

impl CellDatum {
    /// Checks injectivity and spanning of `C`, compatibility with the
    /// reflection, and the axiom-3 form for every generator `U_i` and label.
    pub fn verify_axioms(&self, basis: &[Diagram]) -> Result<AxiomReport> {
        let m = self.m();
        let col: HashMap<&Diagram, usize> = basis.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let mut rows: Vec<BTreeMap<usize, QPhi>> = Vec::new();
        let mut star_failures = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for &label in &self.labels {
            let dim = self.dim(label);
            for s in 0..dim {
                for t in 0..dim {
                    let c = self.basis_element(label, s, t)?;
                    let back = self.basis_element(label, t, s)?;
                    if c.star() != back {
                        star_failures.push(format!("C({label},{s},{t})"));
                    }
                    let mut row = BTreeMap::new();
                    for (d, coeff) in c.terms() {
                        let j = *col.get(d).ok_or_else(|| Error::Domain(format!("{d} is not in the basis")))?;
                        if coeff.len() != 1 || coeff.min_exp() != Some(0) {
                            return Err(Error::Domain("cell basis coefficient is not a constant".into()));
                        }
                        row.insert(j, QPhi::from(&coeff.coeff(0)));
                    }
                    seen.insert(format!("{c:?}"));
                    rows.push(row);
                }
            }
        }
        let basis_size = rows.len();
        let injective = seen.len() == basis_size;
        let rank = sparse_rank(rows);

        let mut action_checks = 0;
        let mut action_failures = Vec::new();
        for i in 1..m {
            let u = AlgebraElement::from_diagram(crate::diagram::generator_u(i, m)?);
            for &label in &self.labels {
                action_checks += 1;
                if let Err(e) = self.action_matrix(&u, label) {
                    action_failures.push(format!("U{i} on {label}: {e}"));
                }
            }
        }

        let mut round_trip = true;
        for d in basis {
            let x = AlgebraElement::from_diagram(d.clone());
            let back = self.recombine(&self.expand(&x)?)?;
            if back != x.map_coeffs(|c| QPhi::from(c)) {
                round_trip = false;
            }
        }

        Ok(AxiomReport {
            n: self.n,
            basis_size,
            diagram_count: basis.len(),
            rank,
            injective,
            star_compatible: star_failures.is_empty(),
            star_failures,
            action_checks,
            action_failures,
            round_trip,
        })
    }
}

/// Rank of a sparse matrix over `Q(φ)` by elimination.
fn sparse_rank(rows: Vec<BTreeMap<usize, QPhi>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, QPhi>> = BTreeMap::new();
    for mut row in rows {
        while let Some((&lead, lead_c)) = row.iter().next() {
            let Some(p) = pivots.get(&lead) else {
                let inv = lead_c.try_inv().expect("nonzero");
                for v in row.values_mut() {
                    *v = v.clone() * inv.clone();
                }
                pivots.insert(lead, row);
                break;
            };
            let f = lead_c.clone();
            for (&j, v) in p {
                let e = row.entry(j).or_insert_with(QPhi::zero);
                *e = e.clone() - f.clone() * v.clone();
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
    }
    pivots.len()
}



#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::diagram::{enumerate_diagrams, generator_u};

    fn hb() -> HalfDiagram {
        HalfDiagram::new(3, &[(1, 2, true)]).unwrap()
    }
    fn h() -> HalfDiagram {
        HalfDiagram::new(3, &[(2, 3, false)]).unwrap()
    }

    #[test]
    fn plain_one_basis_element() {
        let cd = CellDatum::new(2).unwrap();
        let c = cd.cell_basis(CellLabel::Plain(1), &hb(), &h()).unwrap();
        assert_eq!(c.len(), 2);
        let plain = Diagram::from_dyadic(DyadicForm::new(hb(), h(), false)).unwrap();
        assert_eq!(c.coeff(&plain), Poly::constant(-ZPhi::phi()));
    }

    #[test]
    fn zero_label_is_identity() {
        let cd = CellDatum::new(2).unwrap();
        assert_eq!(cd.basis_element(CellLabel::Zero, 0, 0).unwrap(), AlgebraElement::one(3));
        let coords = cd.expand(&AlgebraElement::one(3)).unwrap();
        assert_eq!(coords.len(), 1);
        assert_eq!(coords[&(CellLabel::Zero, 0, 0)], QPoly::one());
    }

    #[test]
    fn plain_diagram_coordinates() {
        let cd = CellDatum::new(2).unwrap();
        let d = Diagram::from_dyadic(DyadicForm::new(hb(), h(), false)).unwrap();
        let coords = cd.expand(&AlgebraElement::from_diagram(d)).unwrap();
        let inv = (QPhi::gamma2() - QPhi::gamma1()).try_inv().unwrap();
        let s = cd.index_of(&hb()).unwrap();
        let t = cd.index_of(&h()).unwrap();
        assert_eq!(coords[&(CellLabel::Plain(1), s, t)], QPoly::constant(inv.clone()));
        assert_eq!(coords[&(CellLabel::Bullet(1), s, t)], QPoly::constant(-inv));
    }

    #[test]
    fn identity_acts_as_identity() {
        let cd = CellDatum::new(3).unwrap();
        for &l in cd.labels() {
            let r = cd.action_matrix(&AlgebraElement::one(4), l).unwrap();
            assert_eq!(r, RingMatrix::identity(cd.dim(l)));
        }
    }

    #[test]
    fn u1_on_zero_label_vanishes() {
        let cd = CellDatum::new(2).unwrap();
        let u = AlgebraElement::from_diagram(generator_u(1, 3).unwrap());
        let r = cd.action_matrix(&u, CellLabel::Zero).unwrap();
        assert_eq!(r.rows(), 1);
        assert!(r.is_zero());
    }

    #[test]
    fn gram_plain_one_n2() {
        // ⟨h•,h•⟩ = [2](1 − 2γ1), ⟨h•,h⟩ = (1 − 2γ1)(1 − γ1).
        let cd = CellDatum::new(2).unwrap();
        let g = cd.gram_matrix(CellLabel::Plain(1)).unwrap();
        let a = QPhi::one() - QPhi::from_int(2) * QPhi::gamma1();
        let b = QPhi::one() - QPhi::gamma1();
        let i = cd.index_of(&hb()).unwrap();
        let j = cd.index_of(&h()).unwrap();
        assert_eq!(g.get(i, i), &QPoly::delta().scale(&a));
        assert_eq!(g.get(i, j), &QPoly::constant(a.clone() * b.clone()));
        assert!(g.is_symmetric());
        let det = g.det().unwrap();
        let d2 = &QPoly::delta() * &QPoly::delta();
        let expect = (&d2 - &QPoly::constant(b.clone() * b)).scale(&(a.clone() * a));
        assert_eq!(det, expect);
    }

    #[test]
    fn axioms_small() {
        for n in 2..=3 {
            let cd = CellDatum::new(n).unwrap();
            let basis = enumerate_diagrams(n + 1, 9).unwrap();
            let r = cd.verify_axioms(&basis).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }
}
