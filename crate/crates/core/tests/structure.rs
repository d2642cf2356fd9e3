//! Structural invariants of subspaces, Γ(V), hinges, limits and
//! representations over seeded random instances.

use gln_boundary::exactla::{pluecker, RationalMatrix, Subspace};
use gln_boundary::exterior::lambda_gamma;
use gln_boundary::hinge::{glue, glued_product};
use gln_boundary::merofam::{exponents, limit_hinge, limit_relation};
use gln_boundary::random::Sampler;
use gln_boundary::relations::LinearRelation;
use gln_boundary::reps::{build_rep, rho_semigroup, Signature};
use proptest::prelude::*;

fn random_subspace(s: &mut Sampler, ambient: usize) -> Subspace {
    let d = s.range(0, ambient);
    Subspace::row_span(&s.matrix(d, ambient, 0.5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_and_grassmann(seed in any::<u64>(), n in 1usize..6) {
        let mut s = Sampler::new(seed);
        let rows = s.range(1, 5);
        let m = s.matrix(rows, n, 0.4);
        let (r, _) = m.rref();
        prop_assert_eq!(r.rank(), m.rank());
        prop_assert_eq!(r.rref().0, r);
        let (a, b) = (random_subspace(&mut s, n), random_subspace(&mut s, n));
        prop_assert_eq!(a.dim() + b.dim(), a.sum(&b).unwrap().dim() + a.intersect(&b).unwrap().dim());
    }

    #[test]
    fn pluecker_separates_subspaces(seed in any::<u64>(), n in 1usize..5) {
        let mut s = Sampler::new(seed);
        let a = random_subspace(&mut s, n);
        let b = if s.below(2) == 0 {
            // another basis of the same subspace
            let g = s.invertible(a.dim());
            Subspace::row_span(&g.try_mul(a.basis()).unwrap())
        } else {
            random_subspace(&mut s, n)
        };
        prop_assume!(a.dim() == b.dim());
        prop_assert_eq!(pluecker(&a) == pluecker(&b), a == b);
    }

    #[test]
    fn gamma_support_and_endpoints(seed in any::<u64>(), n in 1usize..5) {
        let mut s = Sampler::new(seed);
        let p = s.gamma(n);
        let lambdas = lambda_gamma(&p).unwrap();
        let (lo, hi) = (p.indef().dim(), p.image().dim());
        for (m, op) in lambdas.iter().enumerate() {
            prop_assert_eq!(!op.is_zero(), lo <= m && m <= hi);
        }
        let q = LinearRelation::direct_sum(p.domain(), p.indef());
        let r = LinearRelation::direct_sum(p.kernel(), p.image());
        for (m, other) in [(lo, &q), (hi, &r)] {
            prop_assert_eq!(lambdas[m].rank(), 1);
            let c = lambdas[m].matrix.proportionality(&lambda_gamma(other).unwrap()[m].matrix);
            prop_assert!(c.is_some_and(|c| c != num_traits::Zero::zero()));
        }
    }

    #[test]
    fn hinge_supports_tile(seed in any::<u64>(), n in 1usize..5) {
        let mut s = Sampler::new(seed);
        let h = s.hinge(n);
        let terms = h.terms();
        prop_assert_eq!(terms[0].indef().dim(), 0);
        prop_assert_eq!(terms[terms.len() - 1].image().dim(), n);
        for pair in terms.windows(2) {
            prop_assert_eq!(pair[0].image().dim(), pair[1].indef().dim());
            prop_assert!(pair[0].indef().dim() < pair[0].image().dim());
        }
    }

    #[test]
    fn glued_product_is_associative(seed in any::<u64>(), n in 1usize..4) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (glue(&s.hinge(n)), glue(&s.hinge(n)), glue(&s.hinge(n)));
        let left = glued_product(&glued_product(&a, &b).unwrap(), &c).unwrap();
        let right = glued_product(&a, &glued_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn limits_select_the_exponents(seed in any::<u64>(), n in 1usize..4) {
        let mut s = Sampler::new(seed);
        let gamma = s.curve(n);
        let e = exponents(&gamma).unwrap();
        for k in e.k[e.k.len() - 1] - 2..=e.k[0] + 2 {
            let positive = limit_relation(&gamma, k).unwrap().rank() > 0;
            prop_assert_eq!(positive, e.k.contains(&k), "k = {}", k);
        }
        let (_, h) = limit_hinge(&gamma).unwrap();
        let label = h.orbit_label();
        prop_assert_eq!(label.parts(), e.alpha.as_slice());
    }

    #[test]
    fn rho_is_multiplicative_on_glued_families(seed in any::<u64>(), which in 0usize..3) {
        let sig: Signature = ["2,1", "1,1,0", "2,1,0"][which].parse().unwrap();
        let rep = build_rep(&sig).unwrap();
        let mut s = Sampler::new(seed);
        let (a, b) = (glue(&s.hinge(sig.n())), glue(&s.hinge(sig.n())));
        let lhs = rho_semigroup(&rep, &glued_product(&a, &b).unwrap()).unwrap().matrix;
        let rhs = rho_semigroup(&rep, &a).unwrap().matrix.try_mul(&rho_semigroup(&rep, &b).unwrap().matrix).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn strictly_decreasing_signatures_separate_hinges(seed in any::<u64>(), n in 2usize..4) {
        let sig = Signature::new((0..n).map(|i| n - i).collect()).unwrap();
        let rep = build_rep(&sig).unwrap();
        let mut s = Sampler::new(seed);
        let (h1, h2) = (s.hinge(n), s.hinge(n));
        let r1 = rho_semigroup(&rep, &glue(&h1)).unwrap().matrix;
        let r2 = rho_semigroup(&rep, &glue(&h2)).unwrap().matrix;
        let proportional = r1.proportionality(&r2).is_some();
        prop_assert_eq!(proportional, h1.projectively_equal(&h2));
    }
}

#[test]
fn conjugation_keeps_labels_and_singular_graphs_fail() {
    let mut s = Sampler::new(5);
    for _ in 0..50 {
        let n = s.range(1, 4);
        let h = s.hinge(n);
        let g = s.invertible(n);
        let moved = h.act(&g, &g.inverse().unwrap()).unwrap();
        assert_eq!(moved.orbit_label(), h.orbit_label());
    }
    let singular = LinearRelation::graph(&RationalMatrix::from_i64(&[&[0, 1], &[0, 0]]));
    assert!(gln_boundary::hinge::Hinge::new(vec![singular]).is_err());
}

#[test]
fn random_flag_data_builds_the_moved_canonical_hinge() {
    use gln_boundary::exactla::rat;
    use gln_boundary::hinge::Hinge;
    let mut s = Sampler::new(6);
    let moved = |sub: &Subspace, m: &RationalMatrix| Subspace::row_span(&sub.basis().try_mul(&m.transpose()).unwrap());
    for _ in 0..40 {
        let n = s.range(1, 4);
        let alpha = s.label(n);
        let (g1, g2) = (s.invertible(n), s.invertible(n));
        let g2i = g2.inverse().unwrap();
        let u = alpha.partial_sums();
        let kernels: Vec<Subspace> =
            u.iter().map(|&k| moved(&Subspace::coordinate(n, &(k..n).collect::<Vec<_>>()), &g2i)).collect();
        let images: Vec<Subspace> =
            u.iter().map(|&k| moved(&Subspace::coordinate(n, &(0..k).collect::<Vec<_>>()), &g1)).collect();
        let maps: Vec<RationalMatrix> = (0..alpha.len())
            .map(|j| {
                let diag: Vec<_> = (0..n).map(|i| rat((u[j] <= i && i < u[j + 1]) as i64)).collect();
                g1.try_mul(&RationalMatrix::diagonal(&diag)).unwrap().try_mul(&g2).unwrap()
            })
            .collect();
        let built = Hinge::from_flags(&kernels, &images, &maps).unwrap();
        assert_eq!(built, Hinge::canonical(&alpha).act(&g1, &g2).unwrap());
    }
}
