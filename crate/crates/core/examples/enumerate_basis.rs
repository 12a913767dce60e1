//! Counts and lists the admissible diagrams on n + 1 strands.

use tlh::diagram::{diagram_count_formula, enumerate_diagrams, enumerate_half, excluded_half};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let m = n + 1;

    for k in 0..=m / 2 {
        let halves = enumerate_half(m, k).unwrap();
        let excluded = excluded_half(m, k).map_or("-".to_string(), |h| h.to_string());
        println!("k = {k}: {} half-diagrams, excluded shape {excluded}", halves.len());
    }

    let basis = enumerate_diagrams(m, 9).unwrap();
    println!("{} diagrams, closed form {}", basis.len(), diagram_count_formula(m));
    if basis.len() <= 12 {
        for d in &basis {
            println!("\n{d}\n{}", d.render_ascii());
        }
    }
}
