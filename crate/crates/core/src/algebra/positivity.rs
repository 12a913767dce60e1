use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::AlgebraElement;
use crate::diagram::Diagram;
use crate::error::Result;
use crate::ring::{Poly, ZPhi};

/// Writes `p` as `c·[2]^k` with `c` an integer, if possible.
pub fn delta_power_form(p: &Poly) -> Option<(BigInt, u32)> {
    if p.is_zero() {
        return None;
    }
    let delta = Poly::delta();
    let mut rest = p.clone();
    let mut k = 0;
    while let Some(q) = rest.exact_div(&delta) {
        rest = q;
        k += 1;
    }
    if rest.len() != 1 || rest.min_exp() != Some(0) {
        return None;
    }
    let c: ZPhi = rest.coeff(0);
    if !c.is_rational() {
        return None;
    }
    Some((c.a, k))
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityViolation {
    pub left: String,
    pub right: String,
    pub diagram: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    pub m: usize,
    pub products: usize,
    pub coefficients: usize,
    pub max_k: u32,
    pub violations: Vec<PositivityViolation>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that every coefficient of every product of two basis diagrams is
/// `c·[2]^k` with `c` a positive integer and `k` at most the larger cap
/// count of the two factors.
pub fn positivity_check(basis: &[Diagram]) -> Result<PositivityReport> {
    let m = basis.first().map_or(0, Diagram::m);
    let partial: Vec<Result<(usize, usize, u32, Vec<PositivityViolation>)>> = basis
        .par_iter()
        .map(|d1| {
            let x = AlgebraElement::<ZPhi>::from_diagram(d1.clone());
            let mut coeffs = 0;
            let mut max_k = 0;
            let mut bad = Vec::new();
            for d2 in basis {
                let p = x.multiply(&AlgebraElement::from_diagram(d2.clone()))?;
                let bound = d1.rank().max(d2.rank()) as u32;
                for (d, c) in p.terms() {
                    coeffs += 1;
                    match delta_power_form(c) {
                        Some((n, k)) if n.is_positive() && k <= bound => max_k = max_k.max(k),
                        _ => bad.push(PositivityViolation {
                            left: d1.to_string(),
                            right: d2.to_string(),
                            diagram: d.to_string(),
                            coeff: c.to_string(),
                        }),
                    }
                }
            }
            Ok((basis.len(), coeffs, max_k, bad))
        })
        .collect();
    let mut report = PositivityReport { m, products: 0, coefficients: 0, max_k: 0, violations: Vec::new() };
    for r in partial {
        let (n, c, k, bad) = r?;
        report.products += n;
        report.coefficients += c;
        report.max_k = report.max_k.max(k);
        report.violations.extend(bad);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::diagram::enumerate_diagrams;

    #[test]
    fn delta_forms() {
        let d = Poly::delta();
        assert_eq!(delta_power_form(&d), Some((BigInt::one(), 1)));
        let x = &(&d * &d) * &Poly::from_int(3);
        assert_eq!(delta_power_form(&x), Some((BigInt::from(3), 2)));
        assert_eq!(delta_power_form(&Poly::from_int(-1)), Some((BigInt::from(-1), 0)));
        assert_eq!(delta_power_form(&Poly::v()), None);
    }

    #[test]
    fn three_strands() {
        let basis = enumerate_diagrams(3, 9).unwrap();
        let r = positivity_check(&basis).unwrap();
        assert_eq!(r.products, 81);
        assert!(r.passed(), "{:?}", r.violations);
    }
}
