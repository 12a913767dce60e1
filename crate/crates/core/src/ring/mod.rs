//! Exact coefficient arithmetic: the golden-ratio ring `Z[φ]` / `Q(φ)` and
//! Laurent polynomials in `v` over it.

mod golden;
mod laurent;
mod scalar;

pub use golden::{fib_prev, fib_reduce, Coord, Golden, QPhi, ZPhi};
pub use laurent::Laurent;
pub use scalar::Scalar;

/// Coefficients of the diagram algebra: `Z[φ][v, v⁻¹]`.
pub type Poly = Laurent<ZPhi>;
/// Coefficients of the cellular structure: `Q(φ)[v, v⁻¹]`.
pub type QPoly = Laurent<QPhi>;

/// Embeds `Z[φ][v, v⁻¹]` into `Q(φ)[v, v⁻¹]`.
pub fn to_rational(p: &Poly) -> QPoly {
    p.map_coeffs(|c| QPhi::from(c))
}
