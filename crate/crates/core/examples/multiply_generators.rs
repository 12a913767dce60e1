//! Products of generators and the special elements α, β, ε, ζ.

use tlh::algebra::{verify_presentation, Alphabet, GeneratorWord};

fn show(a: &Alphabet, w: &str) {
    let word: GeneratorWord = w.parse().unwrap();
    println!("{w:>16} = {}", a.evaluate(&word).unwrap());
}

fn main() {
    let a = Alphabet::new(3).unwrap();
    for w in ["U1*U1", "U1*U2*U1", "U2*U1*U2", "eps*beta", "zeta*alpha", "U2*eps", "zeta*U1"] {
        show(&a, w);
    }

    let report = verify_presentation(5).unwrap();
    for r in &report.relations {
        println!("{:<60} {} instances, {}", r.name, r.instances, if r.passed() { "ok" } else { "FAILED" });
    }

    let x = a.evaluate(&"U1*U2".parse().unwrap()).unwrap();
    println!("{}", serde_json::to_string_pretty(&x).unwrap());
}
