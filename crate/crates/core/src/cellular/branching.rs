use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::datum::CellDatum;
use super::label::CellLabel;
use super::matrix::RingMatrix;
use crate::algebra::AlgebraElement;
use crate::diagram::{binomial, generator_u, HalfDiagram};
use crate::error::{Error, Result};
use crate::ring::{QPhi, QPoly, Scalar};

/// One composition factor of a restricted cell module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub label: CellLabel,
    pub dim: usize,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingRecord {
    pub label: CellLabel,
    pub dim: usize,
    pub factors: Vec<Factor>,
    pub expected_factors: Vec<CellLabel>,
    pub dimension_identity: bool,
    /// Set if the rule for `λ − 1` ever meets a bullet label of size `n/2`.
    pub guard_triggered: bool,
    pub block_check: bool,
    pub failures: Vec<String>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchingReport {
    pub n: usize,
    pub records: Vec<BranchingRecord>,
}

impl BranchingReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.verdict)
    }
}

/// `λ − 1` in the poset for `n − 1`, with a flag for the excluded bullet case.
pub fn lambda_minus_one(label: CellLabel, n: usize) -> (Option<CellLabel>, bool) {
    match label {
        CellLabel::Zero | CellLabel::Middle(_) => (None, false),
        CellLabel::Plain(1) | CellLabel::Bullet(1) => (Some(CellLabel::Zero), false),
        CellLabel::Plain(k) => (Some(CellLabel::Plain(k - 1)), false),
        CellLabel::Bullet(k) => (Some(CellLabel::Bullet(k - 1)), 2 * (k - 1) == n),
    }
}

/// The same label read in the poset for `n − 1`.
fn shrink(label: CellLabel, n: usize) -> CellLabel {
    match label {
        CellLabel::Plain(k) | CellLabel::Bullet(k) if 2 * k == n => CellLabel::Middle(k),
        other => other,
    }
}

/// Composition factors predicted for the restriction of `W(λ, n)`.
pub fn expected_factors(label: CellLabel, n: usize) -> Vec<CellLabel> {
    let mut out = match label {
        CellLabel::Zero => vec![CellLabel::Zero],
        CellLabel::Middle(k) => vec![CellLabel::Zero, CellLabel::Plain(k - 1), CellLabel::Bullet(k - 1)],
        CellLabel::Plain(1) | CellLabel::Bullet(1) => vec![CellLabel::Zero, shrink(label, n)],
        _ => vec![CellLabel::Zero, lambda_minus_one(label, n).0.unwrap(), shrink(label, n)],
    };
    out.sort();
    out
}

/// Dimension identity for the restriction, as binomial arithmetic.
pub fn dimension_identity(label: CellLabel, n: usize) -> bool {
    let c = |a: usize, b: usize| binomial(a, b) as i128;
    let (m, k) = (n + 1, label.size());
    match label {
        CellLabel::Zero => true,
        CellLabel::Middle(_) => c(m, k) - 1 == 1 + 2 * (c(n, k - 1) - 1),
        _ => c(m, k) - 1 == 1 + (c(n, k - 1) - 1) + (c(n, k) - 1),
    }
}

struct Layout {
    /// Change of basis: new coordinates = `to_new · old`, old = `from_new · new`.
    to_new: RingMatrix,
    from_new: RingMatrix,
    blocks: Vec<(CellLabel, std::ops::Range<usize>)>,
    /// Block pairs `(row, col)` that must vanish.
    zero: Vec<(usize, usize)>,
}

fn permutation(order: &[usize]) -> (RingMatrix, RingMatrix) {
    let d = order.len();
    let p = RingMatrix::from_fn(d, d, |i, j| if order[i] == j { QPoly::one() } else { QPoly::zero() });
    (p.clone(), p.transpose())
}

fn blocks_from(sizes: &[(CellLabel, usize)]) -> Vec<(CellLabel, std::ops::Range<usize>)> {
    let mut at = 0;
    sizes
        .iter()
        .map(|&(l, s)| {
            at += s;
            (l, at - s..at)
        })
        .collect()
}

fn drop_east(h: &HalfDiagram) -> Result<HalfDiagram> {
    let m = h.m();
    let pairs: Vec<_> = h.pairs_with_dec().filter(|&(_, b, _)| b != m).collect();
    HalfDiagram::new(m - 1, &pairs)
}

fn layout(cd: &CellDatum, small: &CellDatum, label: CellLabel, failures: &mut Vec<String>) -> Result<Layout> {
    let n = cd.n();
    let m = cd.m();
    let halves = cd.tableaux(label);
    let dim = halves.len();
    match label {
        CellLabel::Zero => {
            let (p, q) = permutation(&[0]);
            Ok(Layout { to_new: p, from_new: q, blocks: blocks_from(&[(CellLabel::Zero, 1)]), zero: vec![] })
        }
        CellLabel::Plain(_) | CellLabel::Bullet(_) => {
            let upper = shrink(label, n);
            let (lower, _) = lambda_minus_one(label, n);
            let lower = lower.unwrap();
            let mut a = BTreeMap::new();
            let mut q = BTreeMap::new();
            let mut top = Vec::new();
            for (i, h) in halves.iter().enumerate() {
                let img = drop_east(h)?;
                let slot = if h.pair_of(m).is_none() {
                    &mut a
                } else if img.is_admissible() {
                    &mut q
                } else {
                    top.push(i);
                    continue;
                };
                let j = small
                    .index_of(&img)
                    .ok_or_else(|| Error::Domain(format!("image {img} of {h} is not a tableau")))?;
                if slot.insert(j, i).is_some() {
                    failures.push(format!("two basis elements map to {img}"));
                }
            }
            if a.len() != small.dim(upper) {
                failures.push(format!("submodule has dimension {} instead of {}", a.len(), small.dim(upper)));
            }
            if q.len() != small.dim(lower) {
                failures.push(format!("quotient part has dimension {} instead of {}", q.len(), small.dim(lower)));
            }
            let want_top = usize::from(label.size() >= 2);
            if top.len() != want_top {
                failures.push(format!("{} inadmissible images, expected {want_top}", top.len()));
            }
            let order: Vec<usize> = a.values().chain(q.values()).chain(top.iter()).copied().collect();
            let (p, pt) = permutation(&order);
            let mut sizes = vec![(upper, a.len()), (lower, q.len())];
            if !top.is_empty() {
                sizes.push((CellLabel::Zero, top.len()));
            }
            let nb = sizes.len();
            let zero = (0..nb).flat_map(|r| (0..r).map(move |c| (r, c))).collect();
            let _ = dim;
            Ok(Layout { to_new: p, from_new: pt, blocks: blocks_from(&sizes), zero })
        }
        CellLabel::Middle(k) => {
            let plain = CellLabel::Plain(k - 1);
            let bullet = CellLabel::Bullet(k - 1);
            // image -> (dotted index, plain index)
            let mut pairs: BTreeMap<usize, (Option<usize>, Option<usize>)> = BTreeMap::new();
            let mut top = Vec::new();
            for (i, h) in halves.iter().enumerate() {
                let img = drop_east(h)?;
                if !img.is_admissible() {
                    top.push(i);
                    continue;
                }
                let j = small
                    .index_of(&img)
                    .ok_or_else(|| Error::Domain(format!("image {img} of {h} is not a tableau")))?;
                let cap = h.pair_of(m).expect("no free points");
                let e = pairs.entry(j).or_default();
                let slot = if h.is_decorated(cap) { &mut e.0 } else { &mut e.1 };
                if slot.replace(i).is_some() {
                    failures.push(format!("two basis elements map to {img}"));
                }
            }
            if top.len() != 1 {
                failures.push(format!("{} inadmissible images, expected 1", top.len()));
            }
            if pairs.len() != small.dim(plain) {
                failures.push(format!("{} pairs, expected {}", pairs.len(), small.dim(plain)));
            }
            let g1 = QPhi::gamma1();
            let g2 = QPhi::gamma2();
            let inv = (g2.clone() - g1.clone()).try_inv().expect("nonzero");
            let np = pairs.len();
            let mut to_new = RingMatrix::zeros(dim, dim);
            let mut from_new = RingMatrix::zeros(dim, dim);
            for (r, (j, &(dot, pl))) in pairs.iter().enumerate() {
                let (Some(dot), Some(pl)) = (dot, pl) else {
                    failures.push(format!("tableau {j} of the smaller module has no partner"));
                    continue;
                };
                let c = |x: QPhi| QPoly::constant(x);
                // d_i = d• − γ_i d
                from_new.set(dot, r, QPoly::one());
                from_new.set(pl, r, c(-g1.clone()));
                from_new.set(dot, np + r, QPoly::one());
                from_new.set(pl, np + r, c(-g2.clone()));
                // X d• + Y d = c1 d_1 + c2 d_2
                to_new.set(r, dot, c(g2.clone() * inv.clone()));
                to_new.set(r, pl, c(inv.clone()));
                to_new.set(np + r, dot, c(-(g1.clone() * inv.clone())));
                to_new.set(np + r, pl, c(-inv.clone()));
            }
            for (t, &i) in top.iter().enumerate() {
                if 2 * np + t < dim {
                    to_new.set(2 * np + t, i, QPoly::one());
                    from_new.set(i, 2 * np + t, QPoly::one());
                }
            }
            if to_new.mul(&from_new)? != RingMatrix::identity(dim) {
                failures.push("change of basis is not invertible".into());
            }
            let sizes = [(plain, np), (bullet, np), (CellLabel::Zero, top.len())];
            Ok(Layout { to_new, from_new, blocks: blocks_from(&sizes), zero: vec![(0, 1), (1, 0), (2, 0), (2, 1)] })
        }
    }
}

/// Restricts `W(λ, n)` along the embedding that adds a strand on the east,
/// and checks the filtration by cell modules of `n − 1`.
pub fn branching_record(cd: &CellDatum, small: &CellDatum, label: CellLabel) -> Result<BranchingRecord> {
    let n = cd.n();
    let m = cd.m();
    let mut failures = Vec::new();
    let lay = layout(cd, small, label, &mut failures)?;
    let (_, guard_triggered) = lambda_minus_one(label, n);

    let mut block_check = failures.is_empty();
    if block_check {
        for i in 1..m - 1 {
            let u = AlgebraElement::from_diagram(generator_u(i, m)?);
            let r = cd.action_matrix(&u, label)?;
            let r = lay.to_new.mul(&r)?.mul(&lay.from_new)?;
            let u_small = AlgebraElement::from_diagram(generator_u(i, m - 1)?);
            for (bi, (bl, rows)) in lay.blocks.iter().enumerate() {
                let rows: Vec<usize> = rows.clone().collect();
                let want = small.action_matrix(&u_small, *bl)?;
                if r.select(&rows, &rows) != want {
                    block_check = false;
                    failures.push(format!("U{i}: diagonal block {bl} differs from its cell module"));
                }
                for &(zr, zc) in &lay.zero {
                    if zr != bi {
                        continue;
                    }
                    let cols: Vec<usize> = lay.blocks[zc].1.clone().collect();
                    if !r.select(&rows, &cols).is_zero() {
                        block_check = false;
                        failures.push(format!("U{i}: block ({zr}, {zc}) is nonzero"));
                    }
                }
            }
        }
    }

    let mut factors: Vec<Factor> = Vec::new();
    for (l, range) in &lay.blocks {
        if range.is_empty() {
            continue;
        }
        match factors.iter_mut().find(|f| f.label == *l) {
            Some(f) => f.multiplicity += 1,
            None => factors.push(Factor { label: *l, dim: range.len(), multiplicity: 1 }),
        }
    }
    factors.sort_by_key(|f| f.label);
    let expected = expected_factors(label, n);
    let found: Vec<CellLabel> = factors.iter().map(|f| f.label).collect();
    let multiplicities_ok = found == expected && factors.iter().all(|f| f.multiplicity == 1);
    if !multiplicities_ok {
        failures.push(format!("factors {found:?}, expected {expected:?}"));
    }
    let dims_ok = factors.iter().map(|f| f.dim * f.multiplicity).sum::<usize>() == cd.dim(label)
        && factors.iter().all(|f| f.dim == small.dim(f.label));
    if !dims_ok {
        failures.push("factor dimensions do not add up".into());
    }
    let dimension_identity = dimension_identity(label, n);
    let verdict = block_check && multiplicities_ok && dims_ok && dimension_identity && !guard_triggered;
    Ok(BranchingRecord {
        label,
        dim: cd.dim(label),
        factors,
        expected_factors: expected,
        dimension_identity,
        guard_triggered,
        block_check,
        failures,
        verdict,
    })
}

/// Branching records for every label of `n`.
pub fn branching_report(n: usize) -> Result<BranchingReport> {
    if n < 3 {
        return Err(Error::Domain(format!("branching needs n >= 3, got {n}")));
    }
    let cd = CellDatum::new(n)?;
    let small = CellDatum::new(n - 1)?;
    let records = cd
        .labels()
        .par_iter()
        .map(|&l| branching_record(&cd, &small, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(BranchingReport { n, records })
}

#[cfg(test)]
mod tests {
    use super::*;
    use CellLabel::*;

    #[test]
    fn dimension_identities() {
        for n in 2..12 {
            for l in super::super::lambda_poset(n) {
                assert!(dimension_identity(l, n), "{l} n={n}");
            }
        }
    }

    #[test]
    fn lower_labels() {
        assert_eq!(lambda_minus_one(Bullet(2), 5), (Some(Bullet(1)), false));
        assert_eq!(lambda_minus_one(Plain(1), 5), (Some(Zero), false));
        assert_eq!(expected_factors(Middle(2), 3), vec![Zero, Plain(1), Bullet(1)]);
        assert_eq!(expected_factors(Plain(2), 4), vec![Zero, Plain(1), Middle(2)]);
    }

    #[test]
    fn n3() {
        let r = branching_report(3).unwrap();
        for rec in &r.records {
            assert!(rec.verdict, "{rec:#?}");
        }
        let mid = r.records.iter().find(|x| x.label == Middle(2)).unwrap();
        let dims: Vec<usize> = mid.factors.iter().map(|f| f.dim).collect();
        assert_eq!(mid.dim, 5);
        assert_eq!(dims, vec![1, 2, 2]);
    }

    #[test]
    fn n5_bullet_two() {
        let cd = CellDatum::new(5).unwrap();
        let small = CellDatum::new(4).unwrap();
        let rec = branching_record(&cd, &small, Bullet(2)).unwrap();
        assert!(rec.verdict, "{rec:#?}");
        let dims: Vec<(CellLabel, usize)> = rec.factors.iter().map(|f| (f.label, f.dim)).collect();
        assert_eq!(dims, vec![(Zero, 1), (Bullet(1), 4), (Bullet(2), 9)]);
    }
}
