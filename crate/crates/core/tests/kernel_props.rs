mod common;

use common::*;
use proptest::prelude::*;
use spacecurves::ideal::GradedIdeal;
use spacecurves::module::GradedModule;
use spacecurves::poly::Poly;
use spacecurves::PrimeField;

fn field() -> PrimeField {
    PrimeField::default()
}

fn cfg() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn generators_reduce_to_zero_and_hilbert_matches_rank(seed in any::<u64>(), k in 1usize..5) {
        let i = random_ideal(field(), seed, k);
        for g in i.generators() {
            prop_assert!(i.contains(g));
        }
        for n in 0..6 {
            prop_assert_eq!(i.quotient_dimension(n), quotient_dim(i.generators(), n));
        }
    }

    #[test]
    fn gb_elements_lie_in_the_span(seed in any::<u64>(), k in 1usize..5) {
        let i = random_ideal(field(), seed, k);
        for g in i.groebner_basis() {
            prop_assert!(in_span(i.generators(), &g));
        }
    }

    #[test]
    fn colon_ideals(seed in any::<u64>(), k in 1usize..4, v in 0usize..4) {
        let i = random_ideal(field(), seed, k);
        let other = random_ideal(field(), seed ^ 0xabc, 1);
        for f in [Poly::var(field(), v), other.generators()[0].clone()] {
            let q = i.quotient_by(&f);
            prop_assert!(q.contains_ideal(&i));
            for g in q.generators() {
                prop_assert!(i.contains(&g.mul(&f)));
            }
            for n in 0..4 {
                prop_assert_eq!(q.dimension(n), colon_dim(&i, &f, n));
            }
        }
    }

    #[test]
    fn intersections_by_inclusion_exclusion(s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = random_ideal(field(), s1, 2);
        let b = random_ideal(field(), s2, 2);
        let c = a.intersect(&b);
        let sum = a.sum(&b);
        for n in 0..5 {
            prop_assert_eq!(c.dimension(n), a.dimension(n) + b.dimension(n) - sum.dimension(n));
        }
    }

    #[test]
    fn saturation(seed in any::<u64>(), k in 1usize..5) {
        let i = random_ideal(field(), seed, k);
        let m = GradedIdeal::maximal(field());
        let (sat, _) = i.saturate(&m);
        prop_assert!(sat.contains_ideal(&i));
        prop_assert!(sat.quotient(&m) == sat);
        for n in 0..4 {
            let (a, b) = (saturation_dim(&i, n, 5), saturation_dim(&i, n, 6));
            if a == b {
                prop_assert_eq!(sat.dimension(n), a);
            }
        }
    }

    #[test]
    fn resolutions_are_exact(seed in any::<u64>(), k in 1usize..5) {
        let i = random_ideal(field(), seed, k);
        let m = GradedModule::quotient_ring(&i);
        prop_assert!(m.resolution().is_minimal());
        prop_assert!(m.resolution().length() <= 4);
        for n in 0..8 {
            prop_assert!(resolution_exact_in_degree(&m, n, quotient_dim(i.generators(), n)));
        }
        prop_assert_eq!(m.resolution().hilbert_series(), m.hilbert_series());
    }

    #[test]
    fn ext_matches_brute_force(seed in any::<u64>(), k in 1usize..5) {
        let i = random_ideal(field(), seed, k);
        let m = GradedModule::quotient_ring(&i);
        for e in 0..=4 {
            let ext = m.ext(e);
            for n in -9..3 {
                prop_assert_eq!(ext.hilbert_function(n), ext_dim_brute(&m, e, n), "Ext^{} in degree {}", e, n);
            }
        }
    }
}
