use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use tlh::algebra::{reduce, AlgebraElement};
use tlh::cellular::CellDatum;
use tlh::diagram::{enumerate_diagrams, Diagram};
use tlh::ring::{Poly, QPhi, Scalar, ZPhi};

fn basis4() -> &'static [Diagram] {
    static B: OnceLock<Vec<Diagram>> = OnceLock::new();
    B.get_or_init(|| enumerate_diagrams(4, 9).unwrap())
}

fn zphi() -> impl Strategy<Value = ZPhi> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| ZPhi::new(BigInt::from(a), BigInt::from(b)))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-4i32..5, zphi()), 0..5).prop_map(Poly::from_terms)
}

fn diagram() -> impl Strategy<Value = Diagram> {
    (0..basis4().len()).prop_map(|i| basis4()[i].clone())
}

fn element() -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((diagram(), poly()), 0..4).prop_map(|terms| {
        let mut x = AlgebraElement::zero(4);
        for (d, c) in terms {
            x.add_term(d, c);
        }
        x
    })
}

proptest! {
    #[test]
    fn golden_ring_axioms(a in zphi(), b in zphi(), c in zphi()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * a.conj(), ZPhi::from_scalar(a.norm()));
    }

    #[test]
    fn qphi_inverse(a in zphi()) {
        let q = QPhi::from(&a);
        match q.try_inv() {
            Some(inv) => prop_assert!((q * inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn laurent_ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &p), &Poly::zero());
        if !q.is_zero() {
            prop_assert_eq!((&p * &q).exact_div(&q), Some(p.clone()));
        }
    }

    #[test]
    fn laurent_serde_round_trip(p in poly()) {
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), p);
    }

    #[test]
    fn concat_is_associative(x in diagram(), y in diagram(), z in diagram()) {
        let (a, b, c) = (x.tangle(), y.tangle(), z.tangle());
        let left = a.concat(b).unwrap().concat(c).unwrap();
        let right = a.concat(&b.concat(c).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(reduce::<ZPhi>(&left).unwrap(), reduce::<ZPhi>(&right).unwrap());
    }

    #[test]
    fn star_is_an_involution(d in diagram()) {
        prop_assert_eq!(d.star().star(), d.clone());
        prop_assert_eq!(d.star().form().d1.clone(), d.form().d2.clone());
    }

    #[test]
    fn star_reverses_products(x in element(), y in element()) {
        prop_assert_eq!(x.multiply(&y).unwrap().star(), y.star().multiply(&x.star()).unwrap());
    }

    #[test]
    fn multiplication_is_bilinear(x in element(), y in element(), z in element()) {
        let lhs = x.multiply(&y.add(&z).unwrap()).unwrap();
        let rhs = x.multiply(&y).unwrap().add(&x.multiply(&z).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dyadic_round_trip(d in diagram()) {
        let back = Diagram::from_dyadic(d.form().clone()).unwrap();
        prop_assert_eq!(back.tangle(), d.tangle());
        let t = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<Diagram>(&t).unwrap(), d);
    }

    #[test]
    fn cell_coordinates_round_trip(x in element()) {
        static CD: OnceLock<CellDatum> = OnceLock::new();
        let cd = CD.get_or_init(|| CellDatum::new(3).unwrap());
        let coords = cd.expand(&x).unwrap();
        prop_assert_eq!(cd.recombine(&coords).unwrap(), x.map_coeffs(|c| QPhi::from(c)));
    }

    #[test]
    fn identity_is_neutral(x in element()) {
        let one = AlgebraElement::one(4);
        prop_assert_eq!(one.multiply(&x).unwrap(), x.clone());
        prop_assert_eq!(x.multiply(&one).unwrap(), x);
        prop_assert!(Poly::one().is_one());
    }
}
