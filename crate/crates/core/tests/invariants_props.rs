mod oracles;

use igr_core::bbw::EvenSpace;
use igr_core::invariants::{divisibility_check, invariants, invariants_odd, k0_even};
use igr_core::oddcoh::{cohomology_odd, GradedDim, OddSpace, Space};
use igr_core::TwistedBundle;

#[test]
fn odd_rank_is_an_integer_sum_of_even_ranks() {
    for n in 1..=12i64 {
        for k in 1..=n {
            let num = oracles::choose(n, k - 1) * (1 << (k - 1)) * (2 * n + 2 - k) as i128;
            assert_eq!(num % k as i128, 0, "k={k}, n={n}");
            let r = invariants_odd(OddSpace::new(k as usize, n as usize).unwrap()).k0_rank;
            assert_eq!(r as i128, num / k as i128);
            assert_eq!(r, k0_even(k as u64, n as u64) + k0_even(k as u64 - 1, n as u64));
        }
    }
}

#[test]
fn divisibility_matches_rank_over_index() {
    for n in 3..=40u64 {
        let inv = invariants_odd(OddSpace::new(3, n as usize).unwrap());
        let divides = inv.k0_rank.is_multiple_of(inv.index);
        assert_eq!(divisibility_check(n).is_some(), divides, "n={n}");
        if let Some(p) = divisibility_check(n) {
            assert_eq!(inv.k0_rank, inv.index * p);
            assert_eq!(inv.lefschetz_length, Some(p));
        }
    }
}

#[test]
fn headline_invariants() {
    let x = invariants(Space::from_km(3, 9).unwrap());
    assert_eq!((x.dimension, x.index, x.k0_rank, x.lefschetz_length), (15, 7, 56, Some(8)));
    let y = invariants(Space::from_km(3, 10).unwrap());
    assert_eq!((y.k0_rank, y.index), (80, 8));
    assert_eq!(divisibility_check(4), Some(8));
    assert_eq!(divisibility_check(2), None);
    assert_eq!(divisibility_check(3), Some(4));
    for n in 1..=6 {
        let p = invariants(Space::Even(EvenSpace::new(1, n).unwrap()));
        assert_eq!((p.dimension, p.index, p.k0_rank), (2 * n as u64 - 1, 2 * n as u64, 2 * n as u64));
    }
}

#[test]
fn index_is_the_first_twist_with_cohomology() {
    let x = OddSpace::igr39();
    for t in 1..=6 {
        let v = cohomology_odd(x, &TwistedBundle::line(3, -t)).unwrap();
        assert!(v.is_acyclic(), "O(-{t})");
    }
    let v = cohomology_odd(x, &TwistedBundle::line(3, -7)).unwrap();
    assert_eq!(v.dims(), Some(GradedDim::point(15)));
}

#[test]
fn core_types_are_thread_safe() {
    fn check<T: Send + Sync>() {}
    check::<igr_core::GlWeight>();
    check::<igr_core::TwistedBundle>();
    check::<igr_core::complexes::FormalComplex>();
    check::<igr_core::ext::CollectionReport>();
    check::<igr_core::fullness::ClosureState>();
}
