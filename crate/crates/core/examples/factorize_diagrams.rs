//! Writes every basis diagram as a word in U_i, α, β, ε, ζ and evaluates the
//! word back.

use tlh::algebra::{factorize, Alphabet};
use tlh::diagram::enumerate_diagrams;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let m = n + 1;
    let alphabet = Alphabet::new(m).unwrap();
    let basis = enumerate_diagrams(m, 9).unwrap();
    let mut longest = 0;
    for d in &basis {
        let w = factorize(d).unwrap();
        assert!(alphabet.evaluate(&w).unwrap().is_diagram(d));
        longest = longest.max(w.len());
        println!("{d} = {w}");
    }
    println!("{} diagrams, longest word {longest}", basis.len());
}
