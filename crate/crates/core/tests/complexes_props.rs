mod oracles;

use igr_core::complexes::{
    dual_complex, euler_pairing, ext_e1_table, object_e, object_f, object_h, restriction_split_check,
    staircase, FormalComplex, TableVerdict, Term,
};
use igr_core::ext::CollectionSpec;
use igr_core::oddcoh::{OddSpace, Space};
use igr_core::{GlWeight, TwistedBundle};

const M: usize = 9;

fn x() -> Space {
    Space::Odd(OddSpace::igr39())
}

/// `(degree, weight, multiplicity)` triples, of the reference resolutions.
type Flat = Vec<(i64, [i64; 3], i64)>;

fn right_e() -> Flat {
    vec![(0, [0, 0, 0], 84), (1, [1, 0, 0], 36), (2, [2, 0, 0], 9), (3, [3, 0, 0], 1)]
}

fn right_f() -> Flat {
    vec![(0, [0, 0, -1], 36), (1, [1, 0, -1], 9), (2, [2, 0, -1], 1)]
}

fn flatten(c: &FormalComplex) -> Flat {
    c.iter()
        .map(|(d, t)| {
            let e = t.bundle.weight().entries();
            (d, [e[0], e[1], e[2]], t.mult as i64)
        })
        .collect()
}

fn oracle_pairing(a: &Flat, b: &Flat) -> i128 {
    let mut total = 0;
    for (i, wa, ma) in a {
        for (j, wb, mb) in b {
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            total += s * (*ma as i128) * (*mb as i128) * oracles::euler_ext_oracle(wa, wb, 4);
        }
    }
    total
}

fn oracle_rank(c: &Flat) -> i128 {
    c.iter().map(|(d, w, m)| if d % 2 == 0 { 1 } else { -1 } * *m as i128 * oracles::dim_gl_oracle(w)).sum()
}

fn single(e: [i64; 3]) -> Flat {
    vec![(0, e, 1)]
}

#[test]
fn resolutions_match_reference_complexes() {
    assert_eq!(flatten(&object_e()), right_e());
    assert_eq!(flatten(&object_f()), right_f());
}

#[test]
fn staircases_match_reference_term_by_term() {
    // (weight before twist, twist, wedge index), leftmost term first.
    let e: [([i64; 3], i64, usize); 8] = [
        ([0, 0, -3], -1, 9),
        ([0, 0, -2], -1, 8),
        ([0, 0, -1], -1, 7),
        ([0, 0, 0], -1, 6),
        ([0, 0, 0], 0, 3),
        ([1, 0, 0], 0, 2),
        ([2, 0, 0], 0, 1),
        ([3, 0, 0], 0, 0),
    ];
    let f: [([i64; 3], i64, usize); 8] = [
        ([1, 0, -3], -2, 9),
        ([1, 0, -2], -2, 8),
        ([1, 0, -1], -2, 7),
        ([1, 0, 0], -2, 6),
        ([0, 0, 0], -1, 4),
        ([0, 0, -1], 0, 2),
        ([1, 0, -1], 0, 1),
        ([2, 0, -1], 0, 0),
    ];
    for ((a, b), expected) in [((3, 0), e), ((2, 1), f)] {
        let c = staircase(a, b, M).unwrap();
        let got: Vec<(i64, &Term)> = c.iter().collect();
        assert_eq!(got.len(), 8);
        for (k, ((d, term), (w, t, nu))) in got.iter().zip(expected).enumerate() {
            assert_eq!(*d, k as i64 - 7);
            assert_eq!(term.bundle, TwistedBundle::new(GlWeight::from_slice(&w), t));
            assert_eq!(term.wedge, Some(nu));
            assert_eq!(term.mult as i128, oracles::choose(M as i64, nu as i64));
        }
    }
}

#[test]
fn weights_decrease_by_inclusion_inside_lambda() {
    for a in 0..=6usize {
        for b in 0..=6 - a {
            let c = staircase(a, b, M).unwrap();
            let lambda = GlWeight::from_slice(&[a as i64, 0, -(b as i64)]);
            let terms: Vec<(i64, &Term)> = c.iter().collect();
            let nus: Vec<usize> = terms.iter().rev().map(|(_, t)| t.wedge.unwrap()).collect();
            assert_eq!(nus[0], 0);
            assert_eq!(*nus.last().unwrap(), M);
            assert!(nus.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(terms[0].1.mult, 1);
            for w in terms.windows(2) {
                let (lo, hi) = (w[0].1.bundle.weight(), w[1].1.bundle.weight());
                assert!(lo.leq_inclusion(hi).unwrap() && lo != hi);
                assert!(hi.leq_inclusion(&lambda).unwrap());
            }
        }
    }
}

#[test]
fn dual_staircase_is_a_staircase() {
    for a in 0..=6usize {
        for b in 0..=6 - a {
            let c = staircase(a, b, M).unwrap();
            let d = dual_complex(&c, -(b as i64) - 1, M).shift(M as i64 - 2);
            assert_eq!(d, staircase(M - 3 - a - b, b, M).unwrap(), "({a},{b})");
            assert_eq!(dual_complex(&dual_complex(&c, 4, M), 4, M), c);
        }
    }
    let e = staircase(3, 0, M).unwrap();
    assert_eq!(dual_complex(&e, -1, M).shift(M as i64 - 2), e);
}

#[test]
fn restriction_splits_by_pascal() {
    assert!(restriction_split_check(3, 0, M).unwrap());
    assert!(restriction_split_check(2, 1, M).unwrap());
    for a in 1..=5usize {
        for b in 0..=5 - a {
            assert!(restriction_split_check(a, b, M).unwrap(), "({a},{b})");
        }
    }
    assert!(restriction_split_check(0, 2, M).is_err());
}

#[test]
fn staircases_vanish_in_k_theory() {
    for a in 0..=6usize {
        for b in 0..=6 - a {
            let c = staircase(a, b, M).unwrap();
            assert_eq!(c.rank(), 0);
            for m in CollectionSpec::b1().members {
                let s = FormalComplex::single(m);
                assert_eq!(euler_pairing(&s, &c, x()).unwrap(), 0);
                assert_eq!(euler_pairing(&c, &s, x()).unwrap(), 0);
            }
        }
    }
}

#[test]
fn euler_pairings_match_oracle() {
    let (e, f) = (right_e(), right_f());
    assert_eq!(oracle_pairing(&f, &e), 1);
    assert_eq!(oracle_pairing(&e, &f), 0);
    assert_eq!(euler_pairing(&object_f(), &object_e(), x()).unwrap(), 1);
    assert_eq!(euler_pairing(&object_e(), &object_f(), x()).unwrap(), 0);
    assert_eq!(oracle_pairing(&e, &e), 1);
    assert_eq!(euler_pairing(&object_e(), &object_e(), x()).unwrap(), 1);

    let h = object_h();
    for m in CollectionSpec::b1().members {
        let w: [i64; 3] = m.weight().entries().try_into().unwrap();
        let want = oracle_pairing(&single(w), &e) - oracle_pairing(&single(w), &f);
        assert_eq!(want, 0, "{m}");
        assert_eq!(euler_pairing(&FormalComplex::single(m), &h, x()).unwrap(), 0);
    }
    assert_eq!(euler_pairing(&h, &h, x()).unwrap(), 1);
    let o = FormalComplex::single(TwistedBundle::line(3, 0));
    assert_eq!(euler_pairing(&o, &o, x()).unwrap(), 1);
}

#[test]
fn ranks_match_oracle() {
    assert_eq!(oracle_rank(&right_e()), 20);
    assert_eq!(oracle_rank(&right_f()), 51);
    assert_eq!(object_e().rank(), 20);
    assert_eq!(object_f().rank(), 51);
    assert_eq!(object_h().rank(), 20 - 51);
}

#[test]
fn orthogonality_of_e_and_f_is_determined() {
    let t = ext_e1_table(&object_e(), &object_f(), x()).unwrap();
    match t.verdict() {
        TableVerdict::Determined(d) => assert!(d.is_zero()),
        v => panic!("{v:?}"),
    }
    assert_eq!(t.euler, 0);
}
