//! Verification suites: each runs a family of exact checks for one `n` and
//! returns a report with one entry per check.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    positivity_check, reduce, reduce_stepwise, verify_presentation, verify_presentation_with_fault, AlgebraElement,
};
use crate::cellular::{branching_report, semisimplicity_check, CellDatum};
use crate::diagram::{enumerate_diagrams, Diagram};
use crate::error::{Error, Result};
use crate::ring::ZPhi;
use crate::tangle::DecoratedTangle;

pub const DEFAULT_SEED: u64 = 20;
/// Random samples drawn when a suite cannot be run exhaustively.
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Presentation,
    Associativity,
    Positivity,
    Cellular,
    Semisimplicity,
    Branching,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Presentation,
        Suite::Associativity,
        Suite::Positivity,
        Suite::Cellular,
        Suite::Semisimplicity,
        Suite::Branching,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Presentation => "presentation",
            Suite::Associativity => "associativity",
            Suite::Positivity => "positivity",
            Suite::Cellular => "cellular",
            Suite::Semisimplicity => "semisimplicity",
            Suite::Branching => "branching",
        }
    }

    /// The statement a passing run of the suite certifies for the given `n`.
    pub fn certifies(self) -> &'static str {
        match self {
            Suite::Presentation => {
                "the diagram generators U_i satisfy the defining relations of the generalized \
                 Temperley-Lieb algebra of type H, including the five-term relation for U_1, U_2"
            }
            Suite::Associativity => {
                "diagram multiplication is associative and the reduction of raw tangles does not \
                 depend on the order of local rewrites"
            }
            Suite::Positivity => {
                "every product of two basis diagrams has coefficients c[2]^k with c a positive \
                 integer and k at most the larger rank"
            }
            Suite::Cellular => {
                "the cell datum is a cellular structure: C is a basis, compatible with the \
                 anti-involution, and the action coefficients do not depend on the right tableau"
            }
            Suite::Semisimplicity => {
                "every cell module has a nondegenerate Gram form, so the algebra is semisimple over \
                 Q(phi)(v), with the almost-orthogonal leading terms"
            }
            Suite::Branching => {
                "each cell module restricted to n-1 has a filtration by cell modules with the \
                 predicted factors"
            }
        }
    }

    /// Largest `n` run by default.
    pub fn default_cap(self) -> usize {
        match self {
            Suite::Presentation => 6,
            Suite::Associativity | Suite::Positivity => 4,
            Suite::Cellular | Suite::Semisimplicity => 5,
            Suite::Branching => 6,
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Suite::Branching => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: Value) -> Self {
        Check { name: name.into(), passed, detail }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub certifies: &'static str,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n = {}): {}", self.suite, self.n, self.certifies)?;
        for c in &self.checks {
            writeln!(f, "  {} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        write!(f, "  {}", if self.passed() { "verdict: pass" } else { "verdict: FAIL" })
    }
}

/// Options shared by all suites.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Overrides every suite's default cap.
    pub cap: Option<usize>,
    /// Replace `U_1` by an inadmissible diagram in the presentation suite.
    pub inject_fault: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: DEFAULT_SEED, samples: DEFAULT_SAMPLES, cap: None, inject_fault: false }
    }
}

pub fn run_suite(suite: Suite, n: usize, opts: &VerifyOptions) -> Result<Report> {
    let cap = opts.cap.unwrap_or(suite.default_cap());
    if n > cap {
        return Err(Error::CapExceeded { what: "n", value: n, cap });
    }
    if n < suite.min_n() {
        return Err(Error::Domain(format!("{suite} suite needs n >= {}", suite.min_n())));
    }
    let m = n + 1;
    let checks = match suite {
        Suite::Presentation => presentation_checks(m, opts.inject_fault)?,
        Suite::Associativity => {
            let basis = enumerate_diagrams(m, m)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            vec![associativity_check(&basis, opts.samples, &mut rng)?, confluence_check(&basis, opts.samples, &mut rng)?]
        }
        Suite::Positivity => {
            let basis = enumerate_diagrams(m, m)?;
            let r = positivity_check(&basis)?;
            let detail = json!({
                "products": r.products,
                "coefficients": r.coefficients,
                "max_k": r.max_k,
                "violations": r.violations,
            });
            vec![Check::new("coefficients are c[2]^k with c > 0 and k <= max rank", r.passed(), detail)]
        }
        Suite::Cellular => {
            let basis = enumerate_diagrams(m, m)?;
            let cd = CellDatum::new(n)?;
            let r = cd.verify_axioms(&basis)?;
            vec![
                Check::new(
                    "C is injective and its image is a basis",
                    r.injective && r.rank == r.basis_size && r.basis_size == r.diagram_count && r.round_trip,
                    json!({"basis_size": r.basis_size, "rank": r.rank, "diagrams": r.diagram_count,
                           "round_trip": r.round_trip}),
                ),
                Check::new(
                    "C(l,S,T)* = C(l,T,S)",
                    r.star_compatible,
                    json!({"failures": r.star_failures}),
                ),
                Check::new(
                    "action coefficients r_a(S',S) independent of T",
                    r.action_failures.is_empty(),
                    json!({"checked": r.action_checks, "failures": r.action_failures}),
                ),
            ]
        }
        Suite::Semisimplicity => semisimplicity_check(n)?
            .records
            .into_iter()
            .map(|r| {
                let name = format!("Gram form of W({})", r.label);
                let passed = r.verdict;
                Check::new(name, passed, serde_json::to_value(&r).expect("serializable"))
            })
            .collect(),
        Suite::Branching => branching_report(n)?
            .records
            .into_iter()
            .map(|r| {
                let name = format!("restriction of W({})", r.label);
                let passed = r.verdict;
                Check::new(name, passed, serde_json::to_value(&r).expect("serializable"))
            })
            .collect(),
    };
    Ok(Report { suite, certifies: suite.certifies(), n, checks })
}

fn presentation_checks(m: usize, fault: bool) -> Result<Vec<Check>> {
    let r = if fault { verify_presentation_with_fault(m)? } else { verify_presentation(m)? };
    Ok(r.relations
        .into_iter()
        .map(|rel| {
            let passed = rel.passed();
            Check::new(rel.name, passed, json!({"instances": rel.instances, "failures": rel.failures}))
        })
        .collect())
}

fn as_element(d: &Diagram) -> AlgebraElement {
    AlgebraElement::from_diagram(d.clone())
}

/// `(xy)z = x(yz)` on all basis triples when there are at most `samples` of
/// them, and on `samples` random triples otherwise.
pub fn associativity_check<G: Rng>(basis: &[Diagram], samples: usize, rng: &mut G) -> Result<Check> {
    let b = basis.len();
    let exhaustive = b.pow(3) <= samples;
    let triples: Vec<(usize, usize, usize)> = if exhaustive {
        (0..b.pow(3)).map(|i| (i / (b * b), i / b % b, i % b)).collect()
    } else {
        (0..samples).map(|_| (rng.gen_range(0..b), rng.gen_range(0..b), rng.gen_range(0..b))).collect()
    };
    let bad: Vec<String> = triples
        .par_iter()
        .map(|&(i, j, k)| {
            let (x, y, z) = (as_element(&basis[i]), as_element(&basis[j]), as_element(&basis[k]));
            let lhs = x.multiply(&y)?.multiply(&z)?;
            let rhs = x.multiply(&y.multiply(&z)?)?;
            Ok((lhs != rhs).then(|| format!("{} {} {}", basis[i], basis[j], basis[k])))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        "(xy)z = x(yz) on basis triples",
        bad.is_empty(),
        json!({"triples": triples.len(), "exhaustive": exhaustive, "discrepancies": bad}),
    ))
}

/// A random raw tangle: a stack of two to four basis diagrams, with a few
/// extra decorated loops.
pub fn random_raw_tangle<G: Rng>(basis: &[Diagram], rng: &mut G) -> Result<DecoratedTangle> {
    let depth = rng.gen_range(2..=4);
    let mut t = basis[rng.gen_range(0..basis.len())].tangle().clone();
    for _ in 1..depth {
        t = t.concat(basis[rng.gen_range(0..basis.len())].tangle())?;
    }
    let mut loops = t.loops().to_vec();
    for _ in 0..rng.gen_range(0..=2) {
        loops.push(rng.gen_range(0..=4));
    }
    Ok(t.with_loops(loops))
}

/// Normal forms of raw tangles agree between the closed-form reduction and
/// randomly scheduled single rewrites.
pub fn confluence_check<G: Rng>(basis: &[Diagram], samples: usize, rng: &mut G) -> Result<Check> {
    let jobs: Vec<(DecoratedTangle, u64)> =
        (0..samples).map(|_| Ok((random_raw_tangle(basis, rng)?, rng.gen()))).collect::<Result<_>>()?;
    let bad: Vec<String> = jobs
        .par_iter()
        .map(|(t, seed)| {
            let a: AlgebraElement<ZPhi> = reduce(t)?;
            let b: AlgebraElement<ZPhi> = reduce_stepwise(t, &mut ChaCha8Rng::seed_from_u64(*seed))?;
            Ok((a != b).then(|| serde_json::to_string(t).expect("serializable")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        "reduction is independent of rewrite order",
        bad.is_empty(),
        json!({"tangles": samples, "discrepancies": bad}),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn n2_exhaustive_associativity() {
        let r = run_suite(Suite::Associativity, 2, &VerifyOptions { samples: 1000, ..Default::default() }).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.checks[0].detail["triples"], 729);
        assert_eq!(r.checks[0].detail["exhaustive"], true);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            run_suite(Suite::Positivity, 5, &VerifyOptions::default()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn fault_fails() {
        let opts = VerifyOptions { inject_fault: true, ..Default::default() };
        let r = run_suite(Suite::Presentation, 3, &opts).unwrap();
        assert!(!r.passed());
    }
}
