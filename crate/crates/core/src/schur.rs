//! Tensor products of Schur functors: Pieri rules, Littlewood–Richardson,
//! and the Weyl dimension formula for `GL_k`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;

use crate::weights::GlWeight;
use crate::{Error, Result};

/// A multiset of dominant weights of a fixed rank.
///
/// Iteration follows the right-to-left lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    rank: usize,
    terms: BTreeMap<GlWeight, u64>,
}

impl Decomposition {
    pub fn new(rank: usize) -> Self {
        Decomposition { rank, terms: BTreeMap::new() }
    }

    pub fn singleton(w: GlWeight) -> Self {
        let mut d = Decomposition::new(w.rank());
        d.add(w, 1);
        d
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `mult` copies of `w`; zero multiplicities are ignored.
    pub fn add(&mut self, w: GlWeight, mult: u64) {
        assert_eq!(w.rank(), self.rank, "weight rank differs from decomposition rank");
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, w: &GlWeight) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn contains(&self, w: &GlWeight) -> bool {
        self.terms.contains_key(w)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, GlWeight, u64> {
        self.terms.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &GlWeight> {
        self.terms.keys()
    }

    /// Number of distinct weights.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total multiplicity.
    pub fn count(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `Σ mult · dim_gl(γ)`.
    pub fn total_dim(&self) -> u128 {
        self.terms.iter().map(|(w, &m)| m as u128 * dim_gl(w)).sum()
    }

    pub fn shift(&self, l: i64) -> Self {
        Decomposition { rank: self.rank, terms: self.terms.iter().map(|(w, &m)| (w.shift(l), m)).collect() }
    }
}

impl<'a> IntoIterator for &'a Decomposition {
    type Item = (&'a GlWeight, &'a u64);
    type IntoIter = btree_map::Iter<'a, GlWeight, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl IntoIterator for Decomposition {
    type Item = (GlWeight, u64);
    type IntoIter = btree_map::IntoIter<GlWeight, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

/// `U^λ ⊗ S^j U*`: all `γ` with `γ₁ ≥ λ₁ ≥ γ₂ ≥ … ≥ λ_k` and `|γ| = |λ| + j`.
pub fn pieri_sym(lambda: &GlWeight, j: u64) -> Decomposition {
    let lam = lambda.entries();
    let mut out = Decomposition::new(lam.len());
    let mut gamma = vec![0; lam.len()];
    fn go(lam: &[i64], i: usize, left: i64, gamma: &mut Vec<i64>, out: &mut Decomposition) {
        if i == lam.len() {
            if left == 0 {
                out.add(GlWeight::from_vec_unchecked(gamma.clone()), 1);
            }
            return;
        }
        let cap = if i == 0 { left } else { left.min(lam[i - 1] - lam[i]) };
        for x in 0..=cap {
            gamma[i] = lam[i] + x;
            go(lam, i + 1, left - x, gamma, out);
        }
    }
    go(lam, 0, j as i64, &mut gamma, &mut out);
    out
}

/// `U^λ ⊗ ∧^j U*`: all dominant `γ` with `λᵢ ≤ γᵢ ≤ λᵢ + 1` and `|γ| = |λ| + j`.
pub fn pieri_wedge(lambda: &GlWeight, j: usize) -> Result<Decomposition> {
    let k = lambda.rank();
    if j > k {
        return Err(Error::Precondition(alloc::format!("∧^{j} of a rank {k} bundle")));
    }
    let lam = lambda.entries();
    let mut out = Decomposition::new(k);
    for mask in 0u64..(1 << k) {
        if mask.count_ones() as usize != j {
            continue;
        }
        let gamma: Vec<i64> = lam.iter().enumerate().map(|(i, &x)| x + ((mask >> i) & 1) as i64).collect();
        if gamma.windows(2).all(|w| w[0] >= w[1]) {
            out.add(GlWeight::from_vec_unchecked(gamma), 1);
        }
    }
    Ok(out)
}

/// Full Littlewood–Richardson decomposition of `U^α ⊗ U^β`.
///
/// Both weights are shifted to partitions, the product is computed by adding
/// the rows of `β` as labeled horizontal strips subject to the lattice
/// condition, and the result is shifted back by `α_k + β_k`.
pub fn lr(alpha: &GlWeight, beta: &GlWeight) -> Result<Decomposition> {
    let k = alpha.rank();
    if beta.rank() != k {
        return Err(Error::RankMismatch { expected: k, found: beta.rank() });
    }
    let (sa, sb) = (alpha.last(), beta.last());
    let a: Vec<i64> = alpha.entries().iter().map(|x| x - sa).collect();
    let b: Vec<i64> = beta.entries().iter().map(|x| x - sb).collect();
    let mut out = Decomposition::new(k);
    let mut counts = vec![vec![0i64; k]; k];
    let mut shape = a;
    lr_label(&b, 0, &mut shape, &mut counts, &mut out);
    Ok(out.shift(sa + sb))
}

/// Places the `b[r]` boxes labeled `r`, then recurses on `r + 1`.
fn lr_label(b: &[i64], r: usize, shape: &mut Vec<i64>, counts: &mut Vec<Vec<i64>>, out: &mut Decomposition) {
    if r == b.len() || b[r] == 0 {
        out.add(GlWeight::from_vec_unchecked(shape.clone()), 1);
        return;
    }
    let old = shape.clone();
    lr_row(b, r, 0, b[r], &old, 0, 0, shape, counts, out);
}

/// Distributes the remaining `left` boxes of label `r` over rows `t..`.
///
/// `cum_r` counts label `r` in rows `< t`, `cum_prev` counts label `r − 1`
/// in rows `< t`.
#[allow(clippy::too_many_arguments)]
fn lr_row(
    b: &[i64],
    r: usize,
    t: usize,
    left: i64,
    old: &[i64],
    cum_r: i64,
    cum_prev: i64,
    shape: &mut Vec<i64>,
    counts: &mut Vec<Vec<i64>>,
    out: &mut Decomposition,
) {
    let k = old.len();
    if left == 0 {
        lr_label(b, r + 1, shape, counts, out);
        return;
    }
    if t == k {
        return;
    }
    // Labels r only live in rows ≥ r.
    let mut cap = if t == 0 { left } else { left.min(old[t - 1] - old[t]) };
    if r > 0 {
        cap = cap.min(cum_prev - cum_r);
    }
    if t < r {
        cap = 0;
    }
    let prev_here = if r > 0 { counts[t][r - 1] } else { 0 };
    for x in (0..=cap.max(0)).rev() {
        shape[t] = old[t] + x;
        counts[t][r] = x;
        lr_row(b, r, t + 1, left - x, old, cum_r + x, cum_prev + prev_here, shape, counts, out);
    }
    shape[t] = old[t];
    counts[t][r] = 0;
}

/// Weyl dimension of the irreducible `GL_k` representation `λ`.
pub fn dim_gl(lambda: &GlWeight) -> u128 {
    let l = lambda.entries();
    let k = l.len();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        for j in i + 1..k {
            num *= (l[i] - l[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num / den
}

pub(crate) fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
