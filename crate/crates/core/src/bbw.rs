//! Borel–Bott–Weil on the even isotropic Grassmannian `IGr(k, 2n)`.

use alloc::vec::Vec;
use core::fmt;

use crate::weights::{GlWeight, SpWeight, TwistedBundle};
use crate::{Error, Result};

/// `IGr(k, 2n)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct EvenSpace {
    k: usize,
    n: usize,
}

impl EvenSpace {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidSpace { k: k as u32, n: n as u32 });
        }
        Ok(EvenSpace { k, n })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `k(4n − 3k + 1)/2`.
    pub fn dimension(&self) -> usize {
        self.k * (4 * self.n + 1 - 3 * self.k) / 2
    }
}

impl fmt::Display for EvenSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IGr({},{})", self.k, 2 * self.n)
    }
}

/// Cohomology of a homogeneous bundle: concentrated in one degree or zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CohomologyResult {
    Zero,
    Nonzero { degree: usize, rep: SpWeight, dim: u128 },
}

impl CohomologyResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyResult::Zero)
    }

    /// `Σ (−1)^q dim H^q`.
    pub fn euler(&self) -> i128 {
        match self {
            CohomologyResult::Zero => 0,
            CohomologyResult::Nonzero { degree, dim, .. } => sign(*degree) * *dim as i128,
        }
    }
}

pub(crate) fn sign(degree: usize) -> i128 {
    if degree.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ρ = (n, n−1, …, 1)`.
fn rho(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().collect()
}

/// Number of positive roots of `C_n` sent to negative roots: the length of
/// the Weyl element straightening `v`.
pub fn root_count(v: &[i64]) -> usize {
    let n = v.len();
    let mut len = 0;
    for i in 0..n {
        if v[i] < 0 {
            len += 1;
        }
        for j in i + 1..n {
            if v[i] < v[j] {
                len += 1;
            }
            if v[i] + v[j] < 0 {
                len += 1;
            }
        }
    }
    len
}

/// Cohomology of `U^λ` on `IGr(k, 2n)` via Borel–Bott–Weil.
pub fn bbw_even(space: EvenSpace, bundle: &TwistedBundle) -> Result<CohomologyResult> {
    bbw_weight(space, bundle.weight())
}

/// As [`bbw_even`], for a bare weight.
pub fn bbw_weight(space: EvenSpace, lambda: &GlWeight) -> Result<CohomologyResult> {
    if lambda.rank() != space.k {
        return Err(Error::RankMismatch { expected: space.k, found: lambda.rank() });
    }
    let rho = rho(space.n);
    let mut v: Vec<i64> = rho.clone();
    for (x, l) in v.iter_mut().zip(lambda.entries()) {
        *x += l;
    }
    let mut abs: Vec<i64> = v.iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    if abs.last() == Some(&0) || abs.windows(2).any(|w| w[0] == w[1]) {
        return Ok(CohomologyResult::Zero);
    }
    let degree = root_count(&v);
    let rep: Vec<i64> = abs.iter().zip(&rho).map(|(a, r)| a - r).collect();
    let rep = SpWeight::new(rep).expect("straightened weight is dominant");
    let dim = dim_sp(&rep);
    Ok(CohomologyResult::Nonzero { degree, rep, dim })
}

/// Weyl dimension of the irreducible `Sp_2n` representation `μ`.
pub fn dim_sp(mu: &SpWeight) -> u128 {
    let n = mu.n();
    let rho = rho(n);
    let l: Vec<i64> = mu.entries().iter().zip(&rho).map(|(m, r)| m + r).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let mut step = |a: i64, b: i64| {
        num *= a as u128;
        den *= b as u128;
        let g = crate::schur::gcd(num, den);
        num /= g;
        den /= g;
    };
    for i in 0..n {
        for j in i + 1..n {
            step(l[i] - l[j], rho[i] - rho[j]);
            step(l[i] + l[j], rho[i] + rho[j]);
        }
        step(l[i], rho[i]);
    }
    debug_assert_eq!(den, 1);
    num / den
}

/// Sufficient criterion for `U^λ` to be acyclic on `IGr(k, 2N)`.
///
/// Requires `λ_k < 0`, `λ₁ ≥ −2N + k` and every gap `λᵢ − λᵢ₊₁ ≤ 2(N+1−k) − 1`.
pub fn vanish_even(space: EvenSpace, lambda: &GlWeight) -> Result<bool> {
    if lambda.rank() != space.k {
        return Err(Error::RankMismatch { expected: space.k, found: lambda.rank() });
    }
    let (k, n) = (space.k as i64, space.n as i64);
    Ok(lambda.last() < 0 && lambda.first() >= -2 * n + k && lambda.gaps().all(|g| g < 2 * (n + 1 - k)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(e: &[i64]) -> GlWeight {
        GlWeight::from_slice(e)
    }

    fn sp(e: &[i64]) -> SpWeight {
        SpWeight::new(e.to_vec()).unwrap()
    }

    #[test]
    fn bbw_examples() {
        let x = EvenSpace::new(3, 5).unwrap();
        assert_eq!(
            bbw_weight(x, &w(&[0, 0, -6])).unwrap(),
            CohomologyResult::Nonzero { degree: 5, rep: SpWeight::zero(5), dim: 1 }
        );
        assert_eq!(
            bbw_weight(x, &w(&[0, -1, -7])).unwrap(),
            CohomologyResult::Nonzero { degree: 6, rep: SpWeight::zero(5), dim: 1 }
        );
        assert_eq!(
            bbw_weight(x, &w(&[0, 0, 0])).unwrap(),
            CohomologyResult::Nonzero { degree: 0, rep: SpWeight::zero(5), dim: 1 }
        );
        for l in 1..=7 {
            assert!(bbw_weight(x, &w(&[-l, -l, -l - 6])).unwrap().is_zero(), "l = {l}");
        }
        assert!(bbw_weight(x, &w(&[0, 0])).is_err());
    }

    #[test]
    fn dual_of_tautological_gives_defining_rep() {
        let x = EvenSpace::new(3, 5).unwrap();
        let r = bbw_weight(x, &w(&[1, 0, 0])).unwrap();
        assert_eq!(r, CohomologyResult::Nonzero { degree: 0, rep: sp(&[1, 0, 0, 0, 0]), dim: 10 });
    }

    #[test]
    fn dim_sp_examples() {
        assert_eq!(dim_sp(&SpWeight::zero(3)), 1);
        assert_eq!(dim_sp(&sp(&[1, 0, 0, 0])), 8);
        assert_eq!(dim_sp(&sp(&[1, 1, 0, 0, 0])), 44);
        assert_eq!(dim_sp(&sp(&[2, 0])), 10);
    }

    #[test]
    fn vanish_even_examples() {
        let x = EvenSpace::new(3, 5).unwrap();
        assert!(vanish_even(x, &w(&[0, -1, -5])).unwrap());
        assert!(!vanish_even(x, &w(&[0, 0, 0])).unwrap());
        assert!(!vanish_even(x, &w(&[0, 0, -6])).unwrap());
    }

    #[test]
    fn space_validation() {
        assert!(EvenSpace::new(4, 3).is_err());
        assert!(EvenSpace::new(0, 3).is_err());
        assert_eq!(EvenSpace::new(3, 5).unwrap().dimension(), 18);
    }
}
