//! Cohomology on the odd isotropic Grassmannian `IGr(k, 2n+1)`.
//!
//! `X = IGr(k, 2n+1)` is the zero locus of a section of `Ũ*` on
//! `Y = IGr(k, 2n+2)`. The Koszul resolution gives a spectral sequence with
//! first page `E₁^{−p,q} = H^q(Y, Ũ^λ ⊗ ∧^p Ũ)` abutting to `H^{q−p}(X, U^λ)`.
//! The differential `d_r` goes from `(−p, q)` to `(−p+r, q−r+1)`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::bbw::{bbw_weight, vanish_even, CohomologyResult, EvenSpace};
use crate::schur::{dim_gl, lr};
use crate::weights::{GlWeight, SpWeight, TwistedBundle};
use crate::{Error, Result};

/// `IGr(k, 2n+1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OddSpace {
    k: usize,
    n: usize,
}

impl OddSpace {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidSpace { k: k as u32, n: n as u32 });
        }
        Ok(OddSpace { k, n })
    }

    /// `IGr(3, 9)`.
    pub fn igr39() -> Self {
        OddSpace { k: 3, n: 4 }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The ambient `IGr(k, 2n+2)`.
    pub fn ambient(&self) -> EvenSpace {
        EvenSpace::new(self.k, self.n + 1).expect("k ≤ n < n + 1")
    }

    /// `k(4n − 3k + 3)/2`.
    pub fn dimension(&self) -> usize {
        self.k * (4 * self.n + 3 - 3 * self.k) / 2
    }

    /// Fano index `2n + 2 − k`.
    pub fn index(&self) -> usize {
        2 * self.n + 2 - self.k
    }
}

impl fmt::Display for OddSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IGr({},{})", self.k, 2 * self.n + 1)
    }
}

/// Either kind of isotropic Grassmannian.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Space {
    Even(EvenSpace),
    Odd(OddSpace),
}

impl Space {
    /// `IGr(k, m)`; the parity of `m` selects the kind.
    pub fn from_km(k: usize, m: usize) -> Result<Self> {
        if m.is_multiple_of(2) {
            Ok(Space::Even(EvenSpace::new(k, m / 2)?))
        } else {
            Ok(Space::Odd(OddSpace::new(k, m / 2)?))
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Space::Even(s) => s.k(),
            Space::Odd(s) => s.k(),
        }
    }

    /// Dimension `m` of the vector space.
    pub fn m(&self) -> usize {
        match self {
            Space::Even(s) => 2 * s.n(),
            Space::Odd(s) => 2 * s.n() + 1,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Even(s) => s.fmt(f),
            Space::Odd(s) => s.fmt(f),
        }
    }
}

/// One nonzero first-page term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PageEntry {
    pub p: usize,
    pub q: usize,
    /// Summand of `Ũ^λ ⊗ ∧^p Ũ` that produced the term.
    pub summand: GlWeight,
    pub rep: SpWeight,
    pub mult: u64,
    /// `mult · dim rep`.
    pub dim: u128,
}

impl PageEntry {
    /// Total degree `q − p` of the abutment.
    pub fn total_degree(&self) -> i64 {
        self.q as i64 - self.p as i64
    }
}

/// First page of the Koszul spectral sequence for one bundle.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct E1Page {
    pub space: OddSpace,
    pub source: TwistedBundle,
    /// Sorted by `(p, q, summand)`.
    pub entries: Vec<PageEntry>,
}

impl E1Page {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ (−1)^{q−p} dim` over the page.
    pub fn euler(&self) -> i128 {
        self.entries
            .iter()
            .map(|e| crate::bbw::sign(e.total_degree().unsigned_abs() as usize) * e.dim as i128)
            .sum()
    }

    /// Pairs `(source, target)` of entries that some `d_r` could connect.
    pub fn possible_differentials(&self) -> Vec<(&PageEntry, &PageEntry)> {
        let mut out = Vec::new();
        for s in &self.entries {
            for t in &self.entries {
                if t.p < s.p && t.total_degree() == s.total_degree() + 1 {
                    out.push((s, t));
                }
            }
        }
        out
    }

    pub fn degenerates(&self) -> bool {
        self.possible_differentials().is_empty()
    }
}

/// Dimensions of a graded vector space, indexed by degree.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct GradedDim(BTreeMap<i64, u128>);

impl GradedDim {
    pub fn new() -> Self {
        GradedDim(BTreeMap::new())
    }

    /// `ℂ[−degree]`.
    pub fn point(degree: i64) -> Self {
        let mut g = GradedDim::new();
        g.add(degree, 1);
        g
    }

    pub fn add(&mut self, degree: i64, dim: u128) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn merge(&mut self, other: &GradedDim, times: u128) {
        for (&d, &v) in &other.0 {
            self.add(d, v * times);
        }
    }

    pub fn get(&self, degree: i64) -> u128 {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u128)> + '_ {
        self.0.iter().map(|(&d, &v)| (d, v))
    }

    pub fn euler(&self) -> i128 {
        self.iter().map(|(d, v)| if d % 2 == 0 { v as i128 } else { -(v as i128) }).sum()
    }
}

impl fmt::Display for GradedDim {
    /// `0`, or a sum like `ℂ[-4] + ℂ^3[-5]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            f.write_str("ℂ")?;
            if v != 1 {
                write!(f, "^{v}")?;
            }
            write!(f, "[{}]", -d)?;
        }
        Ok(())
    }
}

/// Outcome of a cohomology computation on an odd Grassmannian.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CohomologyVerdict {
    Acyclic,
    /// The page degenerates for positional reasons; `reps` lists the
    /// `Sp_{2n+2}` labels of the contributing terms per degree.
    Exact {
        dims: GradedDim,
        reps: BTreeMap<i64, Vec<(SpWeight, u64)>>,
    },
    Indeterminate(E1Page),
}

impl CohomologyVerdict {
    /// Graded dimensions when determined.
    pub fn dims(&self) -> Option<GradedDim> {
        match self {
            CohomologyVerdict::Acyclic => Some(GradedDim::new()),
            CohomologyVerdict::Exact { dims, .. } => Some(dims.clone()),
            CohomologyVerdict::Indeterminate(_) => None,
        }
    }

    pub fn is_acyclic(&self) -> bool {
        matches!(self, CohomologyVerdict::Acyclic)
    }
}

/// `∧^p Ũ` as a Schur weight: `(0^{k−p}, (−1)^p)`.
pub fn wedge_taut(k: usize, p: usize) -> GlWeight {
    let mut e = alloc::vec![0; k];
    for x in e.iter_mut().skip(k - p) {
        *x = -1;
    }
    GlWeight::from_vec_unchecked(e)
}

/// Assembles the Koszul first page for `U^λ` on `IGr(k, 2n+1)`.
pub fn koszul_page(space: OddSpace, bundle: &TwistedBundle) -> Result<E1Page> {
    let lambda = bundle.weight();
    if lambda.rank() != space.k {
        return Err(Error::RankMismatch { expected: space.k, found: lambda.rank() });
    }
    let ambient = space.ambient();
    let mut entries = Vec::new();
    for p in 0..=space.k {
        for (gamma, &mult) in &lr(lambda, &wedge_taut(space.k, p))? {
            if let CohomologyResult::Nonzero { degree, rep, dim } = bbw_weight(ambient, gamma)? {
                entries.push(PageEntry {
                    p,
                    q: degree,
                    summand: gamma.clone(),
                    rep,
                    mult,
                    dim: dim * mult as u128,
                });
            }
        }
    }
    entries.sort_by(|a, b| (a.p, a.q, &a.summand).cmp(&(b.p, b.q, &b.summand)));
    Ok(E1Page { space, source: bundle.clone(), entries })
}

/// Reads off the abutment when no differential can be nonzero.
pub fn verdict_from_page(page: E1Page) -> CohomologyVerdict {
    if page.is_empty() {
        return CohomologyVerdict::Acyclic;
    }
    if !page.degenerates() {
        return CohomologyVerdict::Indeterminate(page);
    }
    let mut dims = GradedDim::new();
    let mut reps: BTreeMap<i64, Vec<(SpWeight, u64)>> = BTreeMap::new();
    for e in &page.entries {
        let d = e.total_degree();
        dims.add(d, e.dim);
        reps.entry(d).or_default().push((e.rep.clone(), e.mult));
    }
    CohomologyVerdict::Exact { dims, reps }
}

/// `H•(IGr(k, 2n+1), U^λ)`, exact whenever the page degenerates positionally.
pub fn cohomology_odd(space: OddSpace, bundle: &TwistedBundle) -> Result<CohomologyVerdict> {
    Ok(verdict_from_page(koszul_page(space, bundle)?))
}

/// Sufficient criterion for `U^λ` to be acyclic on `IGr(k, 2n+1)`.
///
/// Requires `λ_k < 0`, `λ₁ ≥ −2n + k − 1` and every gap `≤ 2(n+1−k)`.
pub fn vanish_odd(space: OddSpace, lambda: &GlWeight) -> Result<bool> {
    if lambda.rank() != space.k {
        return Err(Error::RankMismatch { expected: space.k, found: lambda.rank() });
    }
    let (k, n) = (space.k as i64, space.n as i64);
    Ok(lambda.last() < 0 && lambda.first() >= -2 * n + k - 1 && lambda.gaps().all(|g| g <= 2 * (n + 1 - k)))
}

/// Vanishing of `U^λ(−l)` on `IGr(3,9)` or `IGr(3,10)`.
///
/// Either the plain criterion holds for `λ − (l,l,l)`, or `λ` has the right
/// gaps and `λ₃ < 0`, `λ₁ ≥ 0` (resp. `≥ −1` on `IGr(3,10)`), `0 ≤ l ≤ 6`.
pub fn vanish_specialized(space: Space, lambda: &GlWeight, l: i64) -> Result<bool> {
    let (plain, max_gap, floor) = match space {
        Space::Odd(s) if (s.k, s.n) == (3, 4) => (vanish_odd(s, &lambda.shift(-l))?, 4, 0),
        Space::Even(s) if (s.k(), s.n()) == (3, 5) => (vanish_even(s, &lambda.shift(-l))?, 5, -1),
        _ => {
            return Err(Error::Precondition(alloc::format!(
                "specialized vanishing is stated for IGr(3,9) and IGr(3,10), not {space}"
            )))
        }
    };
    let second = lambda.last() < 0
        && lambda.gaps().all(|g| g <= max_gap)
        && lambda.first() >= floor
        && (0..=6).contains(&l);
    Ok(plain || second)
}

/// `Σ_p (−1)^p χ(Y, Ũ^λ ⊗ ∧^p Ũ)`, with each `χ` taken from BBW.
pub fn koszul_euler(space: OddSpace, lambda: &GlWeight) -> Result<i128> {
    let mut total = 0;
    for p in 0..=space.k {
        let decomposition = lr(lambda, &wedge_taut(space.k, p))?;
        debug_assert_eq!(decomposition.total_dim(), dim_gl(lambda) * dim_gl(&wedge_taut(space.k, p)));
        for (gamma, &mult) in &decomposition {
            let chi = bbw_weight(space.ambient(), gamma)?.euler();
            total += crate::bbw::sign(p) * chi * mult as i128;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn b(e: &[i64], t: i64) -> TwistedBundle {
        TwistedBundle::new(GlWeight::from_slice(e), t)
    }

    fn w(e: &[i64]) -> GlWeight {
        GlWeight::from_slice(e)
    }

    #[test]
    fn page_examples() {
        let x = OddSpace::igr39();
        let page = koszul_page(x, &b(&[0, 0, -5], 0)).unwrap();
        assert_eq!(page.entries.len(), 1);
        let e = &page.entries[0];
        assert_eq!((e.p, e.q, &e.summand), (1, 5, &w(&[0, 0, -6])));

        let page = koszul_page(x, &b(&[0, -1, -6], 0)).unwrap();
        assert_eq!(page.entries.len(), 1);
        let e = &page.entries[0];
        assert_eq!((e.p, e.q, &e.summand), (1, 6, &w(&[0, -1, -7])));

        let page = koszul_page(x, &b(&[0, 0, 0], 0)).unwrap();
        assert_eq!(page.entries.len(), 1);
        assert_eq!((page.entries[0].p, page.entries[0].q), (0, 0));
        assert!(page.entries[0].rep.is_trivial());
    }

    #[test]
    fn cohomology_examples() {
        let x = OddSpace::igr39();
        let v = cohomology_odd(x, &b(&[0, 0, -5], 0)).unwrap();
        assert_eq!(v.dims(), Some(GradedDim::point(4)));
        let v = cohomology_odd(x, &b(&[0, -1, -6], 0)).unwrap();
        assert_eq!(v.dims(), Some(GradedDim::point(5)));
        for l in 1..=6 {
            assert!(cohomology_odd(x, &b(&[0, 0, -5], -l)).unwrap().is_acyclic(), "l = {l}");
            assert!(cohomology_odd(x, &b(&[0, -1, -6], -l)).unwrap().is_acyclic(), "l = {l}");
        }
    }

    #[test]
    fn vanish_odd_examples() {
        let x = OddSpace::igr39();
        assert!(vanish_odd(x, &w(&[0, -2, -3])).unwrap());
        assert!(!vanish_odd(x, &w(&[0, 0, -5])).unwrap());
        assert!(!vanish_odd(x, &w(&[3, 1, 0])).unwrap());
    }

    #[test]
    fn vanish_specialized_examples() {
        let odd = Space::Odd(OddSpace::igr39());
        let even = Space::Even(EvenSpace::new(3, 5).unwrap());
        assert!(vanish_specialized(odd, &w(&[0, -1, -4]), 3).unwrap());
        assert!(!vanish_specialized(odd, &w(&[0, 0, -5]), 0).unwrap());
        assert!(vanish_specialized(even, &w(&[2, 0, -3]), 5).unwrap());
        assert!(vanish_specialized(odd, &w(&[4, 0, -4]), 6).unwrap());
        assert!(!vanish_specialized(odd, &w(&[4, 0, -4]), 11).unwrap());
        let other = Space::Odd(OddSpace::new(2, 4).unwrap());
        assert!(vanish_specialized(other, &w(&[0, -1]), 0).is_err());
    }

    #[test]
    fn graded_display() {
        assert_eq!(GradedDim::new().to_string(), "0");
        let mut g = GradedDim::point(4);
        g.add(5, 3);
        assert_eq!(g.to_string(), "ℂ[-4] + ℂ^3[-5]");
    }

    #[test]
    fn space_parsing_by_parity() {
        assert_eq!(Space::from_km(3, 9).unwrap(), Space::Odd(OddSpace::igr39()));
        assert_eq!(Space::from_km(3, 10).unwrap().to_string(), "IGr(3,10)");
        assert_eq!(OddSpace::igr39().dimension(), 15);
        assert_eq!(OddSpace::igr39().index(), 7);
    }
}
