use serde::Serialize;

use super::words::SpecialElements;
use super::AlgebraElement;
use crate::diagram::{generator_u, Diagram, DyadicForm, HalfDiagram};
use crate::error::{Error, Result};
use crate::ring::Poly;

/// Outcome of one family of defining relations.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
}

impl RelationCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub m: usize,
    pub relations: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(RelationCheck::passed)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.relations.iter().filter(|r| !r.passed()).map(|r| r.name.as_str()).collect()
    }
}

/// Checks the defining relations of the Temperley–Lieb quotient on the
/// diagram generators `U_1, …, U_{m-1}`.
pub fn verify_presentation(m: usize) -> Result<PresentationReport> {
    let us = (1..m)
        .map(|i| generator_u(i, m).map(AlgebraElement::from_diagram))
        .collect::<Result<Vec<_>>>()?;
    verify_relations(m, &us, |a, b| a.multiply(b))
}

/// Same checks with `U_1` replaced by its undecorated shape, a negative
/// control: the products are computed without the admissibility guard.
pub fn verify_presentation_with_fault(m: usize) -> Result<PresentationReport> {
    let mut us = (1..m)
        .map(|i| generator_u(i, m).map(AlgebraElement::from_diagram))
        .collect::<Result<Vec<_>>>()?;
    let plain = HalfDiagram::new(m, &[(1, 2, false)])?;
    let bad = Diagram::from_dyadic_unchecked(DyadicForm::new(plain.clone(), plain, false))?;
    us[0] = AlgebraElement::from_diagram(bad);
    verify_relations(m, &us, |a, b| a.multiply_lenient(b))
}

fn verify_relations(
    m: usize,
    us: &[AlgebraElement],
    mul: impl Fn(&AlgebraElement, &AlgebraElement) -> Result<AlgebraElement> + Copy,
) -> Result<PresentationReport> {
    if m < 3 {
        return Err(Error::Domain(format!("presentation check needs m >= 3, got {m}")));
    }
    let n = m - 1;
    let u = |i: usize| &us[i - 1];
    let prod = |xs: &[usize]| -> Result<AlgebraElement> {
        let mut acc = u(xs[0]).clone();
        for &i in &xs[1..] {
            acc = mul(&acc, u(i))?;
        }
        Ok(acc)
    };
    let delta = Poly::delta();
    let mut relations = Vec::new();

    let mut check = RelationCheck { name: "E_i^2 = [2] E_i".into(), instances: 0, failures: vec![] };
    for i in 1..=n {
        check.instances += 1;
        if prod(&[i, i])? != u(i).scale(&delta) {
            check.failures.push(format!("i={i}"));
        }
    }
    relations.push(check);

    let mut check = RelationCheck {
        name: "E_i E_j = E_j E_i for |i-j| > 1".into(),
        instances: 0,
        failures: vec![],
    };
    for i in 1..=n {
        for j in i + 2..=n {
            check.instances += 1;
            if prod(&[i, j])? != prod(&[j, i])? {
                check.failures.push(format!("i={i} j={j}"));
            }
        }
    }
    relations.push(check);

    let mut check = RelationCheck {
        name: "E_i E_j E_i = E_i for |i-j| = 1, i,j > 1".into(),
        instances: 0,
        failures: vec![],
    };
    for i in 2..=n {
        for j in [i.wrapping_sub(1), i + 1] {
            if j < 2 || j > n {
                continue;
            }
            check.instances += 1;
            if prod(&[i, j, i])? != *u(i) {
                check.failures.push(format!("i={i} j={j}"));
            }
        }
    }
    relations.push(check);

    let mut check = RelationCheck {
        name: "E_i E_j E_i E_j E_i = 3 E_i E_j E_i - E_i for {i,j} = {1,2}".into(),
        instances: 0,
        failures: vec![],
    };
    for (i, j) in [(1, 2), (2, 1)] {
        check.instances += 1;
        let lhs = prod(&[i, j, i, j, i])?;
        let rhs = prod(&[i, j, i])?.scale(&Poly::from_int(3)).sub(u(i))?;
        if lhs != rhs {
            check.failures.push(format!("i={i} j={j}"));
        }
    }
    relations.push(check);

    let s = SpecialElements::from_generators(u(1), u(2), mul)?;
    for (name, lhs, rhs) in [
        ("eps beta = E_1", mul(&s.epsilon, &s.beta)?, u(1).clone()),
        ("zeta alpha = E_2", mul(&s.zeta, &s.alpha)?, u(2).clone()),
        ("E_2 eps = zeta E_1", mul(u(2), &s.epsilon)?, mul(&s.zeta, u(1))?),
    ] {
        relations.push(RelationCheck {
            name: name.into(),
            instances: 1,
            failures: if lhs == rhs { vec![] } else { vec![format!("{lhs} != {rhs}")] },
        });
    }
    Ok(PresentationReport { m, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_strands_pass() {
        let r = verify_presentation(3).unwrap();
        assert!(r.passed(), "{:?}", r.failing());
    }

    #[test]
    fn fault_breaks_braid_relation_only_there() {
        let r = verify_presentation_with_fault(4).unwrap();
        let failing = r.failing();
        assert!(failing.iter().any(|n| n.starts_with("E_i E_j E_i E_j E_i")));
        assert!(!failing.contains(&"E_i^2 = [2] E_i"));
    }
}
