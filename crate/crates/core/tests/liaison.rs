mod common;

use proptest::prelude::*;
use spacecurves::corpus;
use spacecurves::curve::Curve;
use spacecurves::ideal::GradedIdeal;
use spacecurves::koszul::{KoszulData, KoszulType};
use spacecurves::liaison::*;
use spacecurves::module::GradedModule;
use spacecurves::poly::Poly;
use spacecurves::random;
use spacecurves::{parse_poly, PrimeField};

fn field() -> PrimeField {
    PrimeField::default()
}

fn corpus_curve(i: usize) -> Curve {
    let mut all = corpus::all(field());
    all.swap_remove(i % all.len()).1
}

/// Random element of I_C of degree d that is not zero.
fn random_member(c: &Curve, d: u32, seed: u64) -> Poly {
    let mut rng = random::rng(seed);
    loop {
        let q = random::random_element_of_degree(c.ideal(), d, &mut rng);
        if !q.is_zero() {
            return q;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn ascending_biliaison_shifts_rao(i in 0usize..6, seed in any::<u64>(), h in 1u32..3) {
        let c = corpus_curve(i);
        let s = c.s0() as u32;
        let q = FactoredSurface::unfactored(random_member(&c, s, seed)).unwrap();
        let mut rng = random::rng(seed ^ 1);
        let f = Poly::random_form(field(), h, &mut rng);
        let step = elementary_biliaison(&c, &q, &f).unwrap();
        prop_assert!(step.shift_holds);
        prop_assert!(step.degree_holds);
        prop_assert_eq!(step.target.degree(), c.degree() + (h * s) as i64);
    }

    #[test]
    fn linkage_is_an_involution_with_dual_rao(i in 0usize..6, seed in any::<u64>(), extra in 0u32..2) {
        let c = corpus_curve(i);
        let top = c.generators().iter().map(|g| g.degree().unwrap()).max().unwrap();
        let big_f = random_member(&c, top, seed);
        let big_g = random_member(&c, top + extra, seed ^ 7);
        let l = link(&c, &big_f, &big_g);
        prop_assume!(l.is_ok());
        let l = l.unwrap();
        prop_assert!(l.degree_holds);
        prop_assert!(l.duality_holds);
        let back = link(&l.curve, &big_f, &big_g).unwrap();
        prop_assert!(back.curve.same_as(&c));
    }
}

#[test]
fn multipliers_stay_injective_on_subcurves() {
    let f = field();
    let q = corpus::skew_quadric(f);
    let qi = GradedIdeal::new(f, vec![q.equation().clone()]).unwrap();
    let big = corpus::skew_lines(f);
    let small = Curve::parse(f, &["X", "Y"]).unwrap();
    let mut rng = random::rng(3);
    for _ in 0..4 {
        let u = Poly::random_form(f, 1, &mut rng);
        for c in [&big, &small] {
            let m = GradedModule::ideal_quotient(c.ideal(), &qi);
            for n in 0..5 {
                let map = m.multiplication_map(&u, n);
                assert_eq!(map.rank(), map.ncols(), "degree {n}");
            }
        }
    }
}

#[test]
fn witness_gives_strict_descent_and_annihilation_blocks_it() {
    let f = field();
    let c1 = corpus::raised_skew_lines(f);
    let q = corpus::skew_quadric(f);
    let t = injective_hom_exists(&c1, &q, -1, 11).unwrap();
    assert_eq!(t.verdict, Verdict::InjectiveExists);
    assert!(t.witness.is_some() && t.routes_agree());
    let down = execute_descent(&c1, &q, -1, 11).unwrap();
    assert!(down.verified());
    assert_ne!(down.target.rao_dims(), c1.rao_dims());

    let ty = KoszulType::new([1, 1, 1, 2]).unwrap();
    let data = KoszulData::generate(f, ty, 4).unwrap();
    let c = data.minimal_curve(Default::default()).unwrap();
    for surface in data.factored_surfaces(2, 3, 8) {
        let t = injective_hom_exists(&c, &surface, -1, 2).unwrap();
        assert!(matches!(t.verdict, Verdict::AllAnnihilated { .. }), "{t:?}");
        assert!(t.routes_agree());
        assert!(execute_descent(&c, &surface, -1, 2).is_err());
    }
}

#[test]
fn hom_space_matches_omega_route() {
    let f = field();
    for (name, c) in corpus::all(f) {
        let q = FactoredSurface::unfactored(random_member(&c, c.s0() as u32, 5)).unwrap();
        for h in -4..=2 {
            let direct = hom_space(&c, &q, h).dimension() as i64;
            let oq = GradedIdeal::new(f, vec![q.equation().clone()]).unwrap();
            let expected = oq.quotient_dimension(h) + c.h0_omega(4 - q.degree() + h);
            assert_eq!(direct, expected, "{name}, h = {h}");
        }
    }
}

#[test]
fn diagram_checks_on_corpus() {
    let f = field();
    let mut rng = random::rng(17);
    for (name, c) in corpus::all(f) {
        let q = FactoredSurface::unfactored(random_member(&c, c.s0() as u32, 9)).unwrap();
        let u = Poly::random_form(f, 1, &mut rng);
        let d = fundamental_diagram_check(&c, &q, &u, (-4, 4)).unwrap();
        assert!(d.passed, "{name}: {d:?}");
        let d = fundamental_diagram_check(&c, &q, q.equation(), (-2, 2)).unwrap();
        assert!(d.passed, "{name}: {d:?}");
    }
}

#[test]
fn preconditions() {
    let f = field();
    let c = corpus::skew_lines(f);
    let plane = FactoredSurface::irreducible(parse_poly(f, "X").unwrap()).unwrap();
    assert!(injective_hom_exists(&c, &plane, -1, 0).is_err());
    assert!(injective_hom_exists(&c, &corpus::skew_quadric(f), 0, 0).is_err());
    assert!(descending_obstruction_report(&c, &[corpus::skew_quadric(f)], -2..=0, 0).is_err());
}

#[test]
fn report_serializes() {
    let f = field();
    let c1 = corpus::raised_skew_lines(f);
    let r = descending_obstruction_report(&c1, &[corpus::skew_quadric(f)], -2..=-1, 3).unwrap();
    assert_eq!(r.descent, Some((0, -1)));
    let json = serde_json::to_value(&r).unwrap();
    let first = &json["entries"][0];
    assert_eq!(first["s"], 2);
    assert_eq!(first["verdict"]["kind"], "no_nonzero_hom");
    assert_eq!(json["entries"][1]["verdict"]["kind"], "injective_exists");
}
