//! Gram matrices of the cell modules and their determinants.

use tlh::cellular::{semisimplicity_check, CellDatum, CellLabel};

fn main() {
    let cd = CellDatum::new(2).unwrap();
    let g = cd.gram_matrix(CellLabel::Plain(1)).unwrap();
    println!("Gram matrix of W(1), n = 2:\n{g}det = {}", g.det().unwrap());

    for n in 2..=4 {
        let r = semisimplicity_check(n).unwrap();
        for rec in &r.records {
            println!(
                "n = {n} W({}) dim {:>2} top {:<10} det {}",
                rec.label,
                rec.dim,
                rec.diagonal_top.as_ref().map_or("-".into(), |c| c.to_string()),
                rec.gram_det
            );
        }
        println!("n = {n}: {}", if r.passed() { "semisimple" } else { "FAIL" });
    }
}
