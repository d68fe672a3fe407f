mod oracles;

use igr_core::bbw::{bbw_weight, EvenSpace};
use igr_core::oddcoh::{
    cohomology_odd, koszul_euler, koszul_page, vanish_odd, vanish_specialized, CohomologyVerdict, GradedDim,
    OddSpace, Space,
};
use igr_core::{GlWeight, TwistedBundle};
use rand::{rngs::StdRng, Rng, SeedableRng};

fn dominant(lo: i64, hi: i64) -> Vec<GlWeight> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=a {
            for c in lo..=b {
                out.push(GlWeight::from_slice(&[a, b, c]));
            }
        }
    }
    out
}

fn x() -> OddSpace {
    OddSpace::igr39()
}

fn bundle(e: [i64; 3], t: i64) -> TwistedBundle {
    TwistedBundle::new(GlWeight::from_slice(&e), t)
}

#[test]
fn plain_criterion_is_sound() {
    let mut fired = 0;
    for w in dominant(-8, 4) {
        if vanish_odd(x(), &w).unwrap() {
            fired += 1;
            let v = cohomology_odd(x(), &TwistedBundle::untwisted(w.clone())).unwrap();
            assert!(v.is_acyclic(), "{w}: {v:?}");
        }
    }
    assert!(fired > 50);
}

#[test]
fn specialized_criteria_are_sound() {
    let even = EvenSpace::new(3, 5).unwrap();
    let (mut odd_fired, mut even_fired) = (0, 0);
    for w in dominant(-8, 4) {
        for l in 0..=6 {
            if vanish_specialized(Space::Odd(x()), &w, l).unwrap() {
                odd_fired += 1;
                let v = cohomology_odd(x(), &TwistedBundle::new(w.clone(), -l)).unwrap();
                assert!(v.is_acyclic(), "{w}({}) on IGr(3,9)", -l);
            }
            if vanish_specialized(Space::Even(even), &w, l).unwrap() {
                even_fired += 1;
                assert!(bbw_weight(even, &w.shift(-l)).unwrap().is_zero(), "{w}({}) on IGr(3,10)", -l);
            }
        }
    }
    assert!(odd_fired > 100 && even_fired > 100);
}

#[test]
fn specialized_criterion_rejects_other_spaces() {
    let w = GlWeight::from_slice(&[0, 0, -1]);
    assert!(vanish_specialized(Space::Odd(OddSpace::new(3, 5).unwrap()), &w, 0).is_err());
}

#[test]
fn page_euler_characteristic_matches_oracle() {
    let mut rng = StdRng::seed_from_u64(9);
    for _ in 0..500 {
        let n = rng.gen_range(3..=4);
        let space = OddSpace::new(3, n).unwrap();
        let mut e: Vec<i64> = (0..3).map(|_| rng.gen_range(-8..=4)).collect();
        e.sort_unstable_by(|a, b| b.cmp(a));
        let w = GlWeight::from_slice(&e);
        let page = koszul_page(space, &TwistedBundle::untwisted(w.clone())).unwrap();
        let want = oracles::chi_odd_oracle(&e, n);
        assert_eq!(page.euler(), want, "{w}");
        assert_eq!(koszul_euler(space, &w).unwrap(), want);
        if let Some(dims) = cohomology_odd(space, &TwistedBundle::untwisted(w)).unwrap().dims() {
            assert_eq!(dims.euler(), want);
        }
    }
}

#[test]
fn exact_verdicts_only_without_possible_differentials() {
    for w in dominant(-8, 4) {
        let page = koszul_page(x(), &TwistedBundle::untwisted(w.clone())).unwrap();
        let v = cohomology_odd(x(), &TwistedBundle::untwisted(w)).unwrap();
        match v {
            CohomologyVerdict::Indeterminate(_) => assert!(!page.degenerates()),
            _ => assert!(page.degenerates()),
        }
    }
}

#[test]
fn golden_values() {
    let even = EvenSpace::new(3, 5).unwrap();
    let deg = |e: [i64; 3]| match bbw_weight(even, &GlWeight::from_slice(&e)).unwrap() {
        igr_core::bbw::CohomologyResult::Nonzero { degree, rep, dim } => {
            assert!(rep.is_trivial());
            (degree, dim)
        }
        other => panic!("{other:?}"),
    };
    assert_eq!(deg([0, 0, -6]), (5, 1));
    assert_eq!(deg([0, -1, -7]), (6, 1));
    for l in 1..=7 {
        assert!(bbw_weight(even, &GlWeight::from_slice(&[-l, -l, -l - 6])).unwrap().is_zero());
    }

    let dims = |e: [i64; 3], t: i64| cohomology_odd(x(), &bundle(e, t)).unwrap().dims().unwrap();
    assert_eq!(dims([0, 0, -5], 0), GradedDim::point(4));
    assert_eq!(dims([0, -1, -6], 0), GradedDim::point(5));
    for l in 1..=6 {
        assert!(dims([0, 0, -5], -l).is_zero());
        assert!(dims([0, -1, -6], -l).is_zero());
    }
    assert_eq!(dims([0, 0, 0], -7), GradedDim::point(15));
}
