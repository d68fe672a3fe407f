//! Dimension, index and Grothendieck group rank of isotropic Grassmannians.

use crate::bbw::EvenSpace;
use crate::binomial;
use crate::oddcoh::{OddSpace, Space};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpaceInvariants {
    pub dimension: u64,
    pub index: u64,
    pub k0_rank: u64,
    /// `r / w` when the index divides the rank.
    pub lefschetz_length: Option<u64>,
}

impl SpaceInvariants {
    fn new(dimension: u64, index: u64, k0_rank: u64) -> Self {
        let lefschetz_length = (k0_rank.is_multiple_of(index)).then(|| k0_rank / index);
        SpaceInvariants { dimension, index, k0_rank, lefschetz_length }
    }
}

/// `IGr(k, 2n)`: `d = k(4n−3k+1)/2`, `w = 2n+1−k`, `r = C(n,k)·2^k`.
pub fn invariants_even(space: EvenSpace) -> SpaceInvariants {
    let (k, n) = (space.k() as u64, space.n() as u64);
    SpaceInvariants::new(space.dimension() as u64, 2 * n + 1 - k, k0_even(k, n))
}

/// `IGr(k, 2n+1)`: `d = k(4n−3k+3)/2`, `w = 2n+2−k`,
/// `r = C(n,k−1)·2^{k−1}(2n+2−k)/k`.
pub fn invariants_odd(space: OddSpace) -> SpaceInvariants {
    let (k, n) = (space.k() as u64, space.n() as u64);
    let r = binomial(n as i64, k as i64 - 1) * (1 << (k - 1)) * (2 * n + 2 - k) / k;
    SpaceInvariants::new(space.dimension() as u64, space.index() as u64, r)
}

pub fn invariants(space: Space) -> SpaceInvariants {
    match space {
        Space::Even(s) => invariants_even(s),
        Space::Odd(s) => invariants_odd(s),
    }
}

/// `rank K₀(IGr(k, 2n)) = C(n,k)·2^k`, with `IGr(0, 2n)` a point.
pub fn k0_even(k: u64, n: u64) -> u64 {
    binomial(n as i64, k as i64) << k
}

/// Length `p` of a rectangular Lefschetz basis on `IGr(3, 2n+1)`, if the
/// index can divide the rank: `p = 2n(n−1)/3` when `n ≡ 0, 1 (mod 3)`.
pub fn divisibility_check(n: u64) -> Option<u64> {
    matches!(n % 3, 0 | 1).then(|| 2 * n * (n - n.min(1)) / 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_examples() {
        let i = invariants_odd(OddSpace::igr39());
        assert_eq!((i.dimension, i.index, i.k0_rank, i.lefschetz_length), (15, 7, 56, Some(8)));
        assert_eq!(invariants_odd(OddSpace::new(2, 2).unwrap()).index, 4);
    }

    #[test]
    fn even_examples() {
        let i = invariants_even(EvenSpace::new(3, 5).unwrap());
        assert_eq!((i.k0_rank, i.index), (80, 8));
        for n in 1..6 {
            let p = invariants_even(EvenSpace::new(1, n).unwrap());
            let m = 2 * n as u64;
            assert_eq!((p.dimension, p.index, p.k0_rank), (m - 1, m, m));
        }
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divisibility_check(4), Some(8));
        assert_eq!(divisibility_check(2), None);
        assert_eq!(divisibility_check(3), Some(4));
        assert_eq!(divisibility_check(0), Some(0));
    }
}
