//! Restriction of cell modules from n to n - 1.

use tlh::cellular::branching_report;

fn main() {
    for n in 3..=5 {
        let r = branching_report(n).unwrap();
        for rec in &r.records {
            let parts: Vec<String> = rec.factors.iter().map(|f| format!("W({}) [{}]", f.label, f.dim)).collect();
            println!(
                "n = {n}: W({}) [{}] -> {} {}",
                rec.label,
                rec.dim,
                parts.join(" + "),
                if rec.verdict { "ok" } else { "FAIL" }
            );
        }
    }
}
