//! Weight arithmetic for `GL_k` and `Sp_2n`.
//!
//! Bundles `U^λ(t)` are stored with the twist absorbed into the weight, since
//! `U^λ ⊗ O(t) = U^{λ + (t,…,t)}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Dominant weight of `GL_k`: a nonincreasing integer vector.
///
/// The `Ord` instance compares ranks first and then reads entries from right
/// to left, which is the order the collections `B₁`, `B₂` are listed in.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GlWeight(Vec<i64>);

impl GlWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition("a GL weight needs at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(format_entries(&entries)));
        }
        Ok(GlWeight(entries))
    }

    /// Builds a weight from a slice; panics if it is not dominant.
    ///
    /// Meant for literals in tests and presets.
    pub fn from_slice(entries: &[i64]) -> Self {
        Self::new(entries.to_vec()).expect("literal weight must be dominant")
    }

    /// `(l, …, l)` of rank `k`.
    pub fn constant(k: usize, l: i64) -> Self {
        GlWeight(alloc::vec![l; k])
    }

    pub fn zero(k: usize) -> Self {
        Self::constant(k, 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn first(&self) -> i64 {
        self.0[0]
    }

    pub fn last(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    /// `|λ| = Σ λᵢ`.
    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `−λ = (−λ_k, …, −λ₁)`, the highest weight of the dual representation.
    pub fn dual(&self) -> Self {
        GlWeight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// `λ + (l, …, l)`.
    pub fn shift(&self, l: i64) -> Self {
        GlWeight(self.0.iter().map(|x| x + l).collect())
    }

    /// Componentwise comparison `μ ⊆ λ`.
    pub fn leq_inclusion(&self, other: &GlWeight) -> Result<bool> {
        check_rank(self.rank(), other.rank())?;
        Ok(self.0.iter().zip(&other.0).all(|(a, b)| a <= b))
    }

    /// Strict right-to-left lexicographic order: `self < other`.
    pub fn lex_less(&self, other: &GlWeight) -> Result<bool> {
        check_rank(self.rank(), other.rank())?;
        Ok(lex_cmp(&self.0, &other.0) == Ordering::Less)
    }

    /// Consecutive differences `λᵢ − λᵢ₊₁`.
    pub fn gaps(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.windows(2).map(|w| w[0] - w[1])
    }

    pub(crate) fn from_vec_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] >= w[1]));
        GlWeight(entries)
    }
}

fn lex_cmp(a: &[i64], b: &[i64]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::RankMismatch { expected, found });
    }
    Ok(())
}

impl Ord for GlWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank()).then_with(|| lex_cmp(&self.0, &other.0))
    }
}

impl PartialOrd for GlWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn format_entries(entries: &[i64]) -> String {
    let mut s = String::from("(");
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&alloc::format!("{e}"));
    }
    s.push(')');
    s
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

/// Dominant weight of `Sp_2n`: nonincreasing and nonnegative.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SpWeight(Vec<i64>);

impl SpWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Precondition("an Sp weight needs at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[0] < w[1]) || entries.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant(format_entries(&entries)));
        }
        Ok(SpWeight(entries))
    }

    pub fn zero(n: usize) -> Self {
        SpWeight(alloc::vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for SpWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_entries(&self.0))
    }
}

/// The bundle `U^λ(t)`, stored in absorbed form `U^{λ+(t,…,t)}`.
///
/// Two bundles are equal iff their absorbed weights agree, so
/// `U^{0,0,-1}(2) == U^{2,2,1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct TwistedBundle {
    weight: GlWeight,
}

impl TwistedBundle {
    pub fn new(weight: GlWeight, twist: i64) -> Self {
        TwistedBundle { weight: weight.shift(twist) }
    }

    pub fn untwisted(weight: GlWeight) -> Self {
        TwistedBundle { weight }
    }

    /// `O(t)` on a Grassmannian of rank-`k` subspaces.
    pub fn line(k: usize, t: i64) -> Self {
        TwistedBundle { weight: GlWeight::constant(k, t) }
    }

    /// The absorbed weight `λ + (t,…,t)`.
    pub fn weight(&self) -> &GlWeight {
        &self.weight
    }

    pub fn into_weight(self) -> GlWeight {
        self.weight
    }

    pub fn rank(&self) -> usize {
        self.weight.rank()
    }

    pub fn twist(&self, l: i64) -> Self {
        TwistedBundle { weight: self.weight.shift(l) }
    }

    pub fn dual(&self) -> Self {
        TwistedBundle { weight: self.weight.dual() }
    }

    /// Display pair `(base, t)`.
    ///
    /// For rank 3 the middle entry is moved into the twist, giving the
    /// `(a,0,−b)(t)` form; other ranks keep the raw weight with `t = 0`.
    pub fn display_parts(&self) -> (GlWeight, i64) {
        if self.rank() == 3 {
            let t = self.weight.0[1];
            (self.weight.shift(-t), t)
        } else {
            (self.weight.clone(), 0)
        }
    }
}

impl From<GlWeight> for TwistedBundle {
    fn from(weight: GlWeight) -> Self {
        TwistedBundle::untwisted(weight)
    }
}

impl fmt::Display for TwistedBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (base, t) = self.display_parts();
        f.write_str("U[")?;
        for (i, e) in base.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")?;
        if t != 0 {
            write!(f, "({t})")?;
        }
        Ok(())
    }
}

impl FromStr for TwistedBundle {
    type Err = Error;

    /// Parses `U[a,b,c]` or `U[a,b,c](t)`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = compact
            .strip_prefix("U[")
            .ok_or_else(|| Error::Parse(alloc::format!("{s:?} must start with 'U['")))?;
        let close = rest.find(']').ok_or_else(|| Error::Parse(alloc::format!("{s:?} is missing ']'")))?;
        let entries = rest[..close]
            .split(',')
            .map(|e| i64::from_str(e).map_err(|_| Error::Parse(alloc::format!("bad entry {e:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        let tail = &rest[close + 1..];
        let twist = if tail.is_empty() {
            0
        } else {
            let inner = tail
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(alloc::format!("bad twist suffix {tail:?}")))?;
            i64::from_str(inner).map_err(|_| Error::Parse(alloc::format!("bad twist {inner:?}")))?
        };
        Ok(TwistedBundle::new(GlWeight::new(entries)?, twist))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(e: &[i64]) -> GlWeight {
        GlWeight::from_slice(e)
    }

    #[test]
    fn dual_examples() {
        assert_eq!(w(&[3, 0, 0]).dual(), w(&[0, 0, -3]));
        assert_eq!(w(&[0, 0, 0]).dual(), w(&[0, 0, 0]));
        assert_eq!(w(&[1, 0, -1]).dual(), w(&[1, 0, -1]));
    }

    #[test]
    fn inclusion_examples() {
        assert!(w(&[2, 0, -1]).leq_inclusion(&w(&[3, 0, 0])).unwrap());
        assert!(w(&[0, 0, 0]).leq_inclusion(&w(&[0, 0, 0])).unwrap());
        assert!(!w(&[3, 0, 0]).leq_inclusion(&w(&[2, 0, 0])).unwrap());
        assert_eq!(
            w(&[1, 0]).leq_inclusion(&w(&[1, 0, 0])),
            Err(Error::RankMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn lex_examples() {
        assert!(w(&[0, 0, -2]).lex_less(&w(&[0, 0, -1])).unwrap());
        assert!(w(&[2, 0, -1]).lex_less(&w(&[0, 0, 0])).unwrap());
        let a = w(&[1, 0, -1]);
        assert!(!a.lex_less(&a).unwrap());
        assert!(w(&[1]).lex_less(&w(&[1, 1])).is_err());
    }

    #[test]
    fn twist_examples() {
        let b = TwistedBundle::new(w(&[0, 0, -1]), 0);
        assert_eq!(b.twist(2), TwistedBundle::untwisted(w(&[2, 2, 1])));
        assert_eq!(b.twist(0), b);
        let c = TwistedBundle::new(w(&[1, 0, -1]), -1);
        assert_eq!(c.twist(1), TwistedBundle::untwisted(w(&[1, 0, -1])));
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(GlWeight::new(alloc::vec![0, 1, 0]), Err(Error::NotDominant(_))));
        assert!(SpWeight::new(alloc::vec![1, 0, -1]).is_err());
        assert!(SpWeight::new(alloc::vec![1, 2]).is_err());
    }

    #[test]
    fn display_normalizes_middle_entry() {
        let b = TwistedBundle::untwisted(w(&[2, 2, 1]));
        assert_eq!(b.to_string(), "U[0,0,-1](2)");
        assert_eq!(TwistedBundle::untwisted(w(&[3, 0, 0])).to_string(), "U[3,0,0]");
        assert_eq!(TwistedBundle::untwisted(w(&[4, 1])).to_string(), "U[4,1]");
    }

    #[test]
    fn parse_accepts_twist_and_whitespace() {
        let b: TwistedBundle = " U[ 0, 0, -3 ] (-1) ".parse().unwrap();
        assert_eq!(b.weight(), &w(&[-1, -1, -4]));
        assert_eq!(b.to_string(), "U[0,0,-3](-1)");
        assert!("U[0,1,0]".parse::<TwistedBundle>().is_err());
        assert!("V[0,0,0]".parse::<TwistedBundle>().is_err());
        assert!("U[0,0,0](x)".parse::<TwistedBundle>().is_err());
        assert!("U[0,0,0".parse::<TwistedBundle>().is_err());
    }
}
