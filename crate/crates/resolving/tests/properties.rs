//! Randomized algebraic properties of the computational kernel.

use proptest::prelude::*;
use resolving::groebner::VectorPoly;
use resolving::gring::GradedRing;
use resolving::ideal::{monomials_of_degree, Ideal};
use resolving::module::ModulePresentation;
use resolving::poly::Polynomial;
use resolving::ring::PolyRing;
use std::sync::Arc;

fn ring2() -> PolyRing {
    PolyRing::new(101, vec![("x".into(), 1), ("y".into(), 1)]).unwrap()
}

fn graded2() -> Arc<GradedRing> {
    GradedRing::new(ring2(), vec![]).unwrap()
}

/// Homogeneous polynomial of the given degree from a coefficient vector.
fn hom_poly(ring: &PolyRing, deg: u32, coeffs: &[u32]) -> Polynomial {
    let ctx = ring.ctx();
    let mut acc = Polynomial::zero();
    for (mon, &c) in monomials_of_degree(deg, &ring.weights).into_iter().zip(coeffs) {
        let c = c % ring.p;
        if c != 0 {
            acc = acc.add(&Polynomial::monomial(c, mon), &ctx);
        }
    }
    acc
}

fn hom_poly_strategy(deg: u32) -> impl Strategy<Value = Polynomial> {
    let n = (deg + 1) as usize; // monomial count in two variables
    proptest::collection::vec(0u32..101, n).prop_map(move |cs| hom_poly(&ring2(), deg, &cs))
}

fn ideal_strategy() -> impl Strategy<Value = Ideal> {
    proptest::collection::vec((1u32..=3, proptest::collection::vec(0u32..101, 4)), 1..=3)
        .prop_map(|specs| {
            let r = ring2();
            let gens = specs.iter().map(|(d, cs)| hom_poly(&r, *d, cs)).collect();
            Ideal::new(gens, &r)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn groebner_basis_is_idempotent(i in ideal_strategy()) {
        let r = ring2();
        let again = Ideal::new(i.gb.clone(), &r);
        prop_assert_eq!(again.gb, i.gb);
    }

    #[test]
    fn membership_implies_radical_membership(i in ideal_strategy(), f in hom_poly_strategy(2)) {
        let r = ring2();
        // every element of the ideal lies in its radical
        for g in &i.gb {
            prop_assert!(i.radical_contains(g, &r));
        }
        // radical membership is square-stable
        let f2 = f.mul(&f, &r.ctx());
        prop_assert_eq!(i.radical_contains(&f, &r), i.radical_contains(&f2, &r));
        // and ideal-stable: rad(I) absorbs multiplication
        if i.radical_contains(&f, &r) {
            let x = r.var(0);
            prop_assert!(i.radical_contains(&f.mul(&x, &r.ctx()), &r));
        }
    }

    #[test]
    fn radical_containment_is_monotone(i in ideal_strategy(), extra in hom_poly_strategy(3)) {
        let r = ring2();
        let bigger = i.sum(&Ideal::new(vec![extra], &r), &r);
        for g in &i.gb {
            prop_assert!(bigger.radical_contains(g, &r));
        }
    }

    #[test]
    fn normal_form_detects_membership(i in ideal_strategy(), a in hom_poly_strategy(1), b in hom_poly_strategy(2)) {
        let r = ring2();
        let ctx = r.ctx();
        // explicit combinations always reduce to zero
        if let (Some(g0), g1) = (i.gens.first(), i.gens.get(1)) {
            let mut v = a.mul(g0, &ctx);
            if let Some(g1) = g1 {
                v = v.add(&b.mul(g1, &ctx), &ctx);
            }
            prop_assert!(i.contains(&v, &r));
            // subtracting the normal form lands in the ideal
            let w = v.add(&b, &ctx);
            let nf = i.nf(&w, &r);
            prop_assert!(i.contains(&w.sub(&nf, &ctx), &r));
            // and the normal form is itself reduced
            prop_assert_eq!(i.nf(&nf, &r), nf);
        }
    }

    #[test]
    fn hilbert_numerator_is_additive(d1 in 1u32..=3, d2 in 1u32..=3,
                                     c1 in proptest::collection::vec(1u32..101, 4),
                                     c2 in proptest::collection::vec(1u32..101, 4)) {
        let ring = graded2();
        let f = hom_poly(&ring.poly, d1, &c1);
        let g = hom_poly(&ring.poly, d2, &c2);
        let m1 = ModulePresentation::new(ring.clone(), vec![0], vec![VectorPoly { comps: vec![f] }]).unwrap();
        let m2 = ModulePresentation::new(ring.clone(), vec![1], vec![VectorPoly { comps: vec![g] }]).unwrap();
        let sum = m1.direct_sum(&m2).unwrap();
        let mut expected = m1.hilbert_numerator();
        expected.add_assign(&m2.hilbert_numerator(), 1);
        prop_assert_eq!(sum.hilbert_numerator(), expected);
    }

    #[test]
    fn syzygies_annihilate_generators(i in ideal_strategy()) {
        // first resolution step composes to zero and is minimal
        let ring = graded2();
        let m = ModulePresentation::cyclic(ring.clone(), &i).unwrap();
        let res = m.free_resolution(3);
        assert!(res.is_complex(&ring));
        assert!(res.is_minimal());
    }
}
