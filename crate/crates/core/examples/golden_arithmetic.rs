//! Arithmetic in Z[φ] and Laurent polynomials in v over it.

use tlh::ring::{fib_reduce, Poly, Scalar, ZPhi};

fn main() {
    let phi = ZPhi::phi();
    println!("φ² = {}", phi.clone() * phi.clone());
    println!("γ1 = {}, γ2 = {}", ZPhi::gamma1(), ZPhi::gamma2());
    println!("N(φ) = {}", phi.norm());
    println!("conj(2 + 3φ) = {}", ZPhi::new(2.into(), 3.into()).conj());

    // γ^r rewritten as a + bγ
    for r in 0..8 {
        let g = fib_reduce(r);
        println!("γ^{r} = {} + {}γ", g.a, g.b);
    }

    let delta = Poly::delta();
    let d3 = &(&delta * &delta) * &delta;
    println!("[2]^3 = {d3}");
    println!("[2]^3 / [2] = {}", d3.exact_div(&delta).unwrap());
    println!("[2] at v = φ: {}", delta.evaluate(&phi).unwrap());
    println!("is φ a unit: {}", phi.try_inv().is_some());
}
