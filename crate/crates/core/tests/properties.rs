//! Invariants over seeded random instances.

use gln_boundary::exactla::{rat, Ring};
use gln_boundary::exterior::lambda_cha;
use gln_boundary::hinge::glue;
use gln_boundary::merofam::{exponents, limit_hinge, reparametrize, LaurentPoly, Reparametrization};
use gln_boundary::random::Sampler;
use gln_boundary::relations::{compose, GaMorphism};
use gln_boundary::reps::{build_rep, rho_group, Signature};
use gln_boundary::urchin::{curve_limit, spike_equal, UrchinPoint};
use gln_boundary::wire::{from_json_str, to_json_string};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_reconstructs(seed in any::<u64>(), dv in 0usize..4, dw in 0usize..4) {
        let mut s = Sampler::new(seed);
        let r = s.relation(dv, dw);
        prop_assert_eq!(r.canonical_form().reconstruct(), r.clone());
        let p = r.pseudoinverse();
        prop_assert_eq!(p.kernel(), r.indef());
        prop_assert_eq!(p.domain(), r.image());
        prop_assert_eq!(p.pseudoinverse(), r);
    }

    #[test]
    fn composition_reverses_under_pseudoinverse(seed in any::<u64>(), d in prop::collection::vec(1usize..4, 3)) {
        let mut s = Sampler::new(seed);
        let p = s.relation(d[0], d[1]);
        let q = s.relation(d[1], d[2]);
        let qp = compose(&q.clone().into(), &p.clone().into()).unwrap();
        let pq = compose(&p.pseudoinverse().into(), &q.pseudoinverse().into()).unwrap();
        match (qp, pq) {
            (GaMorphism::Relation(a), GaMorphism::Relation(b)) => prop_assert_eq!(a.pseudoinverse(), b),
            (a, b) => prop_assert!(a.is_null() && b.is_null()),
        }
    }

    #[test]
    fn compound_is_multiplicative(seed in any::<u64>(), n in 1usize..5, k in 0usize..5) {
        prop_assume!(k <= n);
        let mut s = Sampler::new(seed);
        let (a, b) = (s.matrix(n, n, 0.3), s.matrix(n, n, 0.3));
        let ab = lambda_cha(&a.try_mul(&b).unwrap(), k).unwrap();
        let prod = lambda_cha(&a, k).unwrap().compose(&lambda_cha(&b, k).unwrap()).unwrap();
        prop_assert_eq!(ab, prod);
    }

    #[test]
    fn laurent_ring_laws(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (p, q, r) = (s.laurent_poly(-2, 2, 0.5), s.laurent_poly(-2, 2, 0.5), s.laurent_poly(-2, 2, 0.5));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        let unit = LaurentPoly::constant(rat(1)).add(&s.laurent_poly(1, 3, 0.3));
        let inv = unit.series_inverse(6).unwrap();
        prop_assert_eq!(unit.mul(&inv).truncate(6), LaurentPoly::constant(rat(1)));
    }

    #[test]
    fn wire_round_trips(seed in any::<u64>(), n in 1usize..4) {
        let mut s = Sampler::new(seed);
        let h = s.hinge(n);
        prop_assert_eq!(from_json_str::<gln_boundary::hinge::Hinge>(&to_json_string(&h)).unwrap(), h.clone());
        let g = glue(&h);
        prop_assert_eq!(from_json_str::<gln_boundary::hinge::GluedFamily>(&to_json_string(&g)).unwrap(), g);
        let c = s.curve(n);
        prop_assert_eq!(from_json_str::<gln_boundary::merofam::LaurentMatrix>(&to_json_string(&c)).unwrap(), c);
    }

    #[test]
    fn glue_is_equivariant(seed in any::<u64>(), n in 1usize..4) {
        let mut s = Sampler::new(seed);
        let h = s.hinge(n);
        let (g1, g2) = (s.invertible(n), s.invertible(n));
        prop_assert_eq!(glue(&h.act(&g1, &g2).unwrap()), glue(&h).act(&g1, &g2).unwrap());
    }

    #[test]
    fn framed_curves_have_their_exponents(seed in any::<u64>(), n in 1usize..4, p in 1u32..4) {
        let mut s = Sampler::new(seed);
        let m = s.exponent_vector(n, -2, 2);
        let gamma = s.framed(&m, 1);
        prop_assert_eq!(&exponents(&gamma).unwrap().m, &m);
        let slow = reparametrize(&gamma, &Reparametrization::Power(p)).unwrap();
        let scaled: Vec<i64> = m.iter().map(|x| x * p as i64).collect();
        prop_assert_eq!(exponents(&slow).unwrap().m, scaled);
        prop_assert_eq!(limit_hinge(&slow).unwrap().1, limit_hinge(&gamma).unwrap().1);
    }

    #[test]
    fn scalar_reparametrization_gives_equal_spikes(seed in any::<u64>(), n in 1usize..4, c in 1i64..4) {
        let mut s = Sampler::new(seed);
        let gamma = s.curve(n);
        let p = curve_limit(&gamma).unwrap();
        let q = curve_limit(&reparametrize(&gamma, &Reparametrization::Scalar(rat(-c))).unwrap()).unwrap();
        match (&p, &q) {
            (UrchinPoint::Interior(a), UrchinPoint::Interior(b)) => prop_assert_eq!(a, b),
            _ => prop_assert!(spike_equal(&p, &q).unwrap()),
        }
    }

    #[test]
    fn representations_are_homomorphisms(seed in any::<u64>(), which in 0usize..4) {
        let sig: Signature = ["2,0", "1,1", "2,1,0", "1,1,0"][which].parse().unwrap();
        let rep = build_rep(&sig).unwrap();
        let mut s = Sampler::new(seed);
        let (a, b) = (s.invertible(sig.n()), s.invertible(sig.n()));
        let lhs = rho_group(&rep, &a.try_mul(&b).unwrap()).unwrap().matrix;
        let rhs = rho_group(&rep, &a).unwrap().matrix.try_mul(&rho_group(&rep, &b).unwrap().matrix).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
