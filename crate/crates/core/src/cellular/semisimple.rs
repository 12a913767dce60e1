use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::datum::CellDatum;
use super::label::CellLabel;
use crate::error::Result;
use crate::ring::{QPhi, QPoly, Scalar};

/// Gram data for one label.
#[derive(Clone, Debug, Serialize)]
pub struct GramRecord {
    pub label: CellLabel,
    pub dim: usize,
    pub gram_det: QPoly,
    pub symmetric: bool,
    /// Every entry has `v`-degree at most `|λ|`.
    pub degree_bounded: bool,
    /// Coefficients of `v^{|λ|}` on the diagonal (all equal when the check passes).
    pub diagonal_top: Option<QPhi>,
    pub expected_top: QPhi,
    pub off_diagonal_top_zero: bool,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemisimplicityReport {
    pub n: usize,
    pub records: Vec<GramRecord>,
}

impl SemisimplicityReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.verdict)
    }
}

/// `v^{|λ|}` coefficient the diagonal of the Gram matrix should carry: `1 − 2γ1`
/// for plain labels, `1 − 2γ2` for bullet labels and `1` for the zero and
/// middle labels.
pub fn expected_top_coefficient(label: CellLabel) -> QPhi {
    let one = QPhi::one();
    let two = QPhi::from_int(2);
    match label {
        CellLabel::Zero | CellLabel::Middle(_) => one,
        CellLabel::Plain(_) => one - two * QPhi::gamma1(),
        CellLabel::Bullet(_) => one - two * QPhi::gamma2(),
    }
}

pub fn gram_record(cd: &CellDatum, label: CellLabel) -> Result<GramRecord> {
    let g = cd.gram_matrix(label)?;
    let dim = g.rows();
    let top = label.size() as i32;
    let gram_det = g.det()?;
    let mut degree_bounded = true;
    let mut off_diagonal_top_zero = true;
    let mut diag = Vec::with_capacity(dim);
    for i in 0..dim {
        for j in 0..dim {
            let e = g.get(i, j);
            if e.max_exp().is_some_and(|d| d > top) {
                degree_bounded = false;
            }
            let c = e.coeff(top);
            if i == j {
                diag.push(c);
            } else if !c.is_zero() {
                off_diagonal_top_zero = false;
            }
        }
    }
    let uniform = diag.windows(2).all(|w| w[0] == w[1]);
    let diagonal_top = if uniform { diag.first().cloned() } else { None };
    let expected_top = expected_top_coefficient(label);
    let top_ok = diagonal_top.as_ref() == Some(&expected_top);
    let symmetric = g.is_symmetric();
    let verdict = !gram_det.is_zero() && symmetric && degree_bounded && off_diagonal_top_zero && top_ok;
    Ok(GramRecord {
        label,
        dim,
        gram_det,
        symmetric,
        degree_bounded,
        diagonal_top,
        expected_top,
        off_diagonal_top_zero,
        verdict,
    })
}

/// Gram determinants and the almost-orthogonality structure for every label.
pub fn semisimplicity_check(n: usize) -> Result<SemisimplicityReport> {
    let cd = CellDatum::new(n)?;
    let records = cd
        .labels()
        .par_iter()
        .map(|&l| gram_record(&cd, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(SemisimplicityReport { n, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_passes() {
        let r = semisimplicity_check(2).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.records.len(), 3);
        assert_eq!(r.records[0].gram_det, QPoly::from_int(1));
    }

    #[test]
    fn n3_and_middle() {
        let r = semisimplicity_check(3).unwrap();
        assert!(r.passed(), "{r:#?}");
        let mid = r.records.iter().find(|x| matches!(x.label, CellLabel::Middle(_))).unwrap();
        assert_eq!(mid.dim, 5);
        assert_eq!(mid.diagonal_top, Some(QPhi::one()));
    }
}
