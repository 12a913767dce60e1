//! Structure constants of the diagram basis are positive multiples of
//! powers of [2].

use tlh::algebra::{delta_power_form, positivity_check, AlgebraElement};
use tlh::diagram::{enumerate_diagrams, generator_u};

fn main() {
    let u = AlgebraElement::from_diagram(generator_u(2, 4).unwrap());
    let x = u.multiply(&u).unwrap().multiply(&u).unwrap();
    for (d, c) in x.terms() {
        let (k, e) = delta_power_form(c).unwrap();
        println!("U2^3: {d} with coefficient {c} = {k}·[2]^{e}");
    }

    for n in 2..=4 {
        let basis = enumerate_diagrams(n + 1, 9).unwrap();
        let r = positivity_check(&basis).unwrap();
        println!(
            "n = {n}: {} products, {} coefficients, max power {}, {} violations",
            r.products,
            r.coefficients,
            r.max_k,
            r.violations.len()
        );
    }
}
