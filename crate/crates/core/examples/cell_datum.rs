//! The cell datum: labels, tableaux, cell basis elements and action matrices.

use tlh::algebra::AlgebraElement;
use tlh::cellular::{CellDatum, CellLabel};
use tlh::diagram::{enumerate_diagrams, generator_u};

fn main() {
    let n = 3;
    let cd = CellDatum::new(n).unwrap();
    for &l in cd.labels() {
        let tabs: Vec<String> = cd.tableaux(l).iter().map(|h| h.to_string()).collect();
        println!("M({l}) = {{{}}}", tabs.join(", "));
    }

    let c = cd.basis_element(CellLabel::Plain(1), 0, 1).unwrap();
    println!("C(1, 0, 1) = {c}");
    println!("in cell coordinates: {:?}", cd.expand(&c).unwrap());

    let u1 = AlgebraElement::from_diagram(generator_u(1, n + 1).unwrap());
    for &l in cd.labels() {
        println!("U1 on W({l}):\n{}", cd.action_matrix(&u1, l).unwrap());
    }

    let basis = enumerate_diagrams(n + 1, 9).unwrap();
    let r = cd.verify_axioms(&basis).unwrap();
    println!("axioms: {} (rank {} of {})", if r.passed() { "hold" } else { "FAIL" }, r.rank, r.basis_size);
}
