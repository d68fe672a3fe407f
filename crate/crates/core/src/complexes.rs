//! Formal complexes of Schur bundles: staircase complexes on `Gr(3, m)`,
//! their truncations, the objects `E`, `F`, `H`, and Euler pairings.
//!
//! Differentials are never stored. A complex is a graded list of terms
//! `∧^ν V* ⊗ U^μ`, with the multiplicity space recorded by its dimension
//! `C(m, ν)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::ext::{euler_ext, ext_groups, ExtQuery, ExtVerdict};
use crate::oddcoh::{GradedDim, Space};
use crate::schur::dim_gl;
use crate::weights::{GlWeight, TwistedBundle};
use crate::{binomial, Error, Result};

/// One summand `∧^ν V* ⊗ U^μ` (or `mult` copies of `U^μ` when `wedge` is
/// absent).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub bundle: TwistedBundle,
    pub wedge: Option<usize>,
    pub mult: u64,
}

impl Term {
    pub fn plain(bundle: TwistedBundle) -> Self {
        Term { bundle, wedge: None, mult: 1 }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.wedge {
            Some(0) | None if self.mult == 1 => write!(f, "{}", self.bundle),
            Some(1) => write!(f, "V* ⊗ {}", self.bundle),
            Some(nu) => write!(f, "∧^{nu}V* ⊗ {}", self.bundle),
            None => write!(f, "ℂ^{} ⊗ {}", self.mult, self.bundle),
        }
    }
}

/// Graded list of terms indexed by cohomological degree.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FormalComplex {
    terms: BTreeMap<i64, Vec<Term>>,
}

/// Which side of a cut survives a truncation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Keep {
    AtLeast,
    AtMost,
}

impl FormalComplex {
    pub fn new() -> Self {
        FormalComplex::default()
    }

    /// The complex with `b` alone in degree 0.
    pub fn single(b: TwistedBundle) -> Self {
        let mut c = FormalComplex::new();
        c.push(0, Term::plain(b));
        c
    }

    pub fn push(&mut self, degree: i64, term: Term) {
        self.terms.entry(degree).or_default().push(term);
    }

    /// Terms in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Term)> {
        self.terms.iter().flat_map(|(&d, ts)| ts.iter().map(move |t| (d, t)))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms_at(&self, degree: i64) -> &[Term] {
        self.terms.get(&degree).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.terms.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `C[s]`, whose degree `d` part is `C^{d+s}`.
    pub fn shift(&self, s: i64) -> Self {
        FormalComplex { terms: self.terms.iter().map(|(&d, t)| (d - s, t.clone())).collect() }
    }

    /// Alternating rank `Σ (−1)^d mult · rk`.
    pub fn rank(&self) -> i128 {
        self.iter().map(|(d, t)| parity(d) * t.mult as i128 * dim_gl(t.bundle.weight()) as i128).sum()
    }

    /// K-class as a signed multiset of bundles.
    pub fn k_class(&self) -> BTreeMap<TwistedBundle, i128> {
        let mut out = BTreeMap::new();
        for (d, t) in self.iter() {
            *out.entry(t.bundle.clone()).or_insert(0) += parity(d) * t.mult as i128;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

impl fmt::Display for FormalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, t)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" → ")?;
            }
            write!(f, "[{d}] {t}")?;
        }
        Ok(())
    }
}

fn parity(d: i64) -> i128 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Staircase weight `μᵢ` for `λ = (a, 0, −b)`.
fn staircase_weight(a: i64, b: i64, i: i64) -> [i64; 3] {
    if i <= a {
        [a - i, 0, -b]
    } else if i <= a + b {
        [-1, a - i, -b]
    } else {
        [-1, -b - 1, a - i]
    }
}

/// Staircase complex of `U^{a,0,−b}` on `Gr(3, m)`: the term `∧^{νᵢ}V* ⊗ U^{μᵢ}`
/// sits in degree `−i` for `i = 0..m−2`, with `νᵢ = |λ| − |μᵢ|`.
pub fn staircase(a: usize, b: usize, m: usize) -> Result<FormalComplex> {
    if m < 3 || a + b > m - 3 {
        return Err(Error::Precondition(alloc::format!(
            "staircase needs a + b ≤ m − 3, got a = {a}, b = {b}, m = {m}"
        )));
    }
    let (a, b) = (a as i64, b as i64);
    let size = a - b;
    let mut c = FormalComplex::new();
    for i in 0..=(m as i64 - 2) {
        let mu = GlWeight::from_slice(&staircase_weight(a, b, i));
        let nu = size - mu.size();
        c.push(
            -i,
            Term {
                bundle: TwistedBundle::untwisted(mu),
                wedge: Some(nu as usize),
                mult: binomial(m as i64, nu),
            },
        );
    }
    Ok(c)
}

/// Stupid truncation at `cut`.
pub fn truncate(c: &FormalComplex, cut: i64, keep: Keep) -> Result<FormalComplex> {
    let (lo, hi) = match (c.degrees().next(), c.degrees().last()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::Precondition("cannot truncate an empty complex".into())),
    };
    if cut < lo || cut > hi {
        return Err(Error::Precondition(alloc::format!("cut {cut} outside support {lo}..{hi}")));
    }
    let terms = c
        .terms
        .iter()
        .filter(|(&d, _)| match keep {
            Keep::AtLeast => d >= cut,
            Keep::AtMost => d <= cut,
        })
        .map(|(&d, t)| (d, t.clone()))
        .collect();
    Ok(FormalComplex { terms })
}

/// Termwise dual twisted by `O(l)`: degree `d ↦ −d`, `μ ↦ −μ + (l,…,l)`,
/// `∧^ν V* ↦ ∧^{m−ν} V*`.
pub fn dual_complex(c: &FormalComplex, l: i64, m: usize) -> FormalComplex {
    let mut out = FormalComplex::new();
    for (d, t) in c.iter() {
        out.push(
            -d,
            Term { bundle: t.bundle.dual().twist(l), wedge: t.wedge.map(|nu| m - nu), mult: t.mult },
        );
    }
    out
}

/// `Cone(f: A → B)` at the level of terms: degree `d` holds `A^{d+1} ⊕ B^d`.
pub fn cone(a: &FormalComplex, b: &FormalComplex) -> FormalComplex {
    let mut out = a.shift(1);
    for (d, t) in b.iter() {
        out.push(d, t.clone());
    }
    out
}

/// The right resolution of `E`: staircase of `U^{3,0,0}` on `Gr(3,9)` cut to
/// its first four terms, with `∧³V* ⊗ O` in degree 0.
pub fn object_e() -> FormalComplex {
    first_branch(3, 0, 9)
}

/// The right resolution of `F`, cut from the staircase of `U^{2,0,−1}`, with
/// `∧²V* ⊗ U^{0,0,−1}` in degree 0.
pub fn object_f() -> FormalComplex {
    first_branch(2, 1, 9)
}

/// `H = Cone(F → E)`.
pub fn object_h() -> FormalComplex {
    cone(&object_f(), &object_e())
}

/// Terms `i ≤ a` of `staircase(a, b, m)`, shifted so the lowest sits in degree 0.
pub fn first_branch(a: usize, b: usize, m: usize) -> FormalComplex {
    let full = staircase(a, b, m).expect("fixed parameters are valid");
    truncate(&full, -(a as i64), Keep::AtLeast).expect("cut lies in the support").shift(-(a as i64))
}

/// Compares the staircase of `U^{a,0,−b}` on `Gr(3, m+1)` with
/// `staircase(a,b,m) ⊕ staircase(a−1,b,m)[1]` term by term.
///
/// Requires `a ≥ 1` (so that `λ₁ > λ₂`) and `a + b ≤ m − 3`.
pub fn restriction_split_check(a: usize, b: usize, m: usize) -> Result<bool> {
    if a == 0 {
        return Err(Error::Precondition("splitting needs λ₁ > λ₂, i.e. a ≥ 1".into()));
    }
    let big = staircase(a, b, m + 1)?;
    let lhs = tally(&big);
    let mut rhs = tally(&staircase(a, b, m)?);
    for (key, mult) in tally(&staircase(a - 1, b, m)?.shift(1)) {
        *rhs.entry(key).or_insert(0) += mult;
    }
    Ok(lhs == rhs)
}

fn tally(c: &FormalComplex) -> BTreeMap<(i64, TwistedBundle), u64> {
    let mut out = BTreeMap::new();
    for (d, t) in c.iter() {
        *out.entry((d, t.bundle.clone())).or_insert(0) += t.mult;
    }
    out
}

/// `χ(C₁, C₂) = Σ (−1)^{i+j} mᵢ mⱼ χ(C₁^i, C₂^j)`.
pub fn euler_pairing(c1: &FormalComplex, c2: &FormalComplex, space: Space) -> Result<i128> {
    let mut total = 0;
    for (i, s) in c1.iter() {
        for (j, t) in c2.iter() {
            let chi = euler_ext(space, &s.bundle, &t.bundle)?;
            total += parity(i + j) * (s.mult as i128) * (t.mult as i128) * chi;
        }
    }
    Ok(total)
}

/// First page of the hypercohomology spectral sequence for `Ext•(C₁, C₂)`:
/// `E₁^{s,t} = ⊕_{j−i=s} Ext^t(C₁^i, C₂^j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E1Table {
    /// Nonzero dimensions at `(s, t)`.
    pub entries: BTreeMap<(i64, i64), u128>,
    /// Term pairs whose own Ext is undetermined, as `(i, j, query)`.
    pub pending: Vec<(i64, i64, ExtQuery)>,
    pub euler: i128,
}

/// Verdict read off an [`E1Table`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TableVerdict {
    Determined(GradedDim),
    Indeterminate,
}

impl E1Table {
    /// `d_r` maps `(s, t)` to `(s + r, t − r + 1)`; the table is exact only if
    /// no two nonzero entries could be joined by some `d_r`.
    pub fn verdict(&self) -> TableVerdict {
        if !self.pending.is_empty() {
            return TableVerdict::Indeterminate;
        }
        for &(s, t) in self.entries.keys() {
            for &(s2, t2) in self.entries.keys() {
                if s2 > s && s2 + t2 == s + t + 1 {
                    return TableVerdict::Indeterminate;
                }
            }
        }
        let mut g = GradedDim::new();
        for (&(s, t), &v) in &self.entries {
            g.add(s + t, v);
        }
        TableVerdict::Determined(g)
    }
}

pub fn ext_e1_table(c1: &FormalComplex, c2: &FormalComplex, space: Space) -> Result<E1Table> {
    let mut entries: BTreeMap<(i64, i64), u128> = BTreeMap::new();
    let mut pending = Vec::new();
    for (i, s) in c1.iter() {
        for (j, t) in c2.iter() {
            match ext_groups(space, &s.bundle, &t.bundle)? {
                ExtVerdict::Determined(g) => {
                    let m = s.mult as u128 * t.mult as u128;
                    for (q, v) in g.iter() {
                        *entries.entry((j - i, q)).or_insert(0) += v * m;
                    }
                }
                ExtVerdict::Indeterminate { .. } => {
                    pending.push((i, j, ExtQuery { space, from: s.bundle.clone(), to: t.bundle.clone() }))
                }
            }
        }
    }
    Ok(E1Table { entries, pending, euler: euler_pairing(c1, c2, space)? })
}
