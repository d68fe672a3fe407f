//! Ext-groups between Schur bundles and the collection checkers.
//!
//! `Ext•(U^α, U^β) = H•(U^{−α} ⊗ U^β)`, computed summand by summand after a
//! Littlewood–Richardson decomposition.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::bbw::{bbw_weight, CohomologyResult};
use crate::oddcoh::{koszul_page, verdict_from_page, CohomologyVerdict, E1Page, GradedDim, Space};
use crate::schur::lr;
use crate::weights::{GlWeight, TwistedBundle};
use crate::{Error, Result};

/// Ext-groups, or the pages that could not be resolved.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ExtVerdict {
    Determined(GradedDim),
    /// `partial` collects the determined summands; each pending entry is a
    /// summand `γ` with multiplicity and its non-degenerate page.
    Indeterminate {
        partial: GradedDim,
        pending: Vec<(GlWeight, u64, E1Page)>,
    },
}

impl ExtVerdict {
    pub fn dims(&self) -> Option<&GradedDim> {
        match self {
            ExtVerdict::Determined(d) => Some(d),
            ExtVerdict::Indeterminate { .. } => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtVerdict::Determined(d) if d.is_zero())
    }
}

/// A single Ext computation `Ext•(A, B)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtQuery {
    pub space: Space,
    pub from: TwistedBundle,
    pub to: TwistedBundle,
}

fn check_ranks(space: Space, a: &TwistedBundle, b: &TwistedBundle) -> Result<()> {
    for x in [a, b] {
        if x.rank() != space.k() {
            return Err(Error::RankMismatch { expected: space.k(), found: x.rank() });
        }
    }
    Ok(())
}

/// `Ext•(A, B)` on an isotropic Grassmannian.
pub fn ext_groups(space: Space, a: &TwistedBundle, b: &TwistedBundle) -> Result<ExtVerdict> {
    check_ranks(space, a, b)?;
    let mut partial = GradedDim::new();
    let mut pending = Vec::new();
    for (gamma, &mult) in &lr(a.dual().weight(), b.weight())? {
        match space {
            Space::Even(s) => {
                if let CohomologyResult::Nonzero { degree, dim, .. } = bbw_weight(s, gamma)? {
                    partial.add(degree as i64, dim * mult as u128);
                }
            }
            Space::Odd(s) => {
                let page = koszul_page(s, &TwistedBundle::untwisted(gamma.clone()))?;
                match verdict_from_page(page) {
                    CohomologyVerdict::Acyclic => {}
                    CohomologyVerdict::Exact { dims, .. } => partial.merge(&dims, mult as u128),
                    CohomologyVerdict::Indeterminate(page) => pending.push((gamma.clone(), mult, page)),
                }
            }
        }
    }
    Ok(if pending.is_empty() {
        ExtVerdict::Determined(partial)
    } else {
        ExtVerdict::Indeterminate { partial, pending }
    })
}

/// `χ(A, B) = Σ (−1)^q dim Ext^q(A, B)`; always determined.
pub fn euler_ext(space: Space, a: &TwistedBundle, b: &TwistedBundle) -> Result<i128> {
    check_ranks(space, a, b)?;
    let mut total = 0;
    for (gamma, &mult) in &lr(a.dual().weight(), b.weight())? {
        let chi = match space {
            Space::Even(s) => bbw_weight(s, gamma)?.euler(),
            Space::Odd(s) => koszul_page(s, &TwistedBundle::untwisted(gamma.clone()))?.euler(),
        };
        total += chi * mult as i128;
    }
    Ok(total)
}

/// A named ordered list of bundles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollectionSpec {
    pub name: String,
    pub members: Vec<TwistedBundle>,
}

fn rank3(entries: &[[i64; 3]]) -> Vec<TwistedBundle> {
    entries.iter().map(|e| TwistedBundle::untwisted(GlWeight::from_slice(e))).collect()
}

const B1: [[i64; 3]; 7] = [[0, 0, -2], [0, 0, -1], [1, 0, -1], [2, 0, -1], [0, 0, 0], [1, 0, 0], [2, 0, 0]];
const B2: [[i64; 3]; 7] = [[0, 0, -1], [1, 0, -1], [2, 0, -1], [0, 0, 0], [1, 0, 0], [2, 0, 0], [3, 0, 0]];
const S1: [[i64; 3]; 3] = [[0, 0, 0], [1, 0, 0], [2, 0, 0]];
const S2: [[i64; 3]; 3] = [[0, 0, -2], [0, 0, -1], [1, 0, -1]];

impl CollectionSpec {
    pub fn new(name: impl Into<String>, members: Vec<TwistedBundle>) -> Result<Self> {
        for (i, a) in members.iter().enumerate() {
            if members[..i].contains(a) {
                return Err(Error::Precondition(alloc::format!("{a} listed twice")));
            }
        }
        Ok(CollectionSpec { name: name.into(), members })
    }

    fn preset_unchecked(name: &str, members: Vec<TwistedBundle>) -> Self {
        CollectionSpec { name: name.into(), members }
    }

    pub fn b1() -> Self {
        Self::preset_unchecked("B1", rank3(&B1))
    }

    pub fn b2() -> Self {
        Self::preset_unchecked("B2", rank3(&B2))
    }

    /// `B₁ ∪ B₂` in right-to-left lexicographic order.
    pub fn b1_union_b2() -> Self {
        let mut m = rank3(&B1);
        m.push(TwistedBundle::untwisted(GlWeight::from_slice(&[3, 0, 0])));
        Self::preset_unchecked("B1B2", m)
    }

    pub fn s1() -> Self {
        Self::preset_unchecked("S1", rank3(&S1))
    }

    pub fn s2() -> Self {
        Self::preset_unchecked("S2", rank3(&S2))
    }

    pub fn s() -> Self {
        let mut m = rank3(&S2);
        m.extend(rank3(&S1));
        Self::preset_unchecked("S", m)
    }

    /// Looks up `B1`, `B2`, `B1B2`, `S1`, `S2` or `S`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "B1" => Ok(Self::b1()),
            "B2" => Ok(Self::b2()),
            "B1B2" => Ok(Self::b1_union_b2()),
            "S1" => Ok(Self::s1()),
            "S2" => Ok(Self::s2()),
            "S" => Ok(Self::s()),
            _ => Err(Error::Parse(alloc::format!("unknown preset {name:?}"))),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// What a pair check expects.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Expect {
    Zero,
    /// `ℂ` in degree 0.
    Scalar,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        })
    }
}

/// One checked pair `Ext•(Eⱼ(t), Eᵢ)`, with indices into the collection.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairCheck {
    pub source: usize,
    pub target: usize,
    pub twist: i64,
    pub query: ExtQuery,
    pub expect: Expect,
    pub verdict: ExtVerdict,
}

impl PairCheck {
    pub fn status(&self) -> Status {
        match (&self.verdict, self.expect) {
            (ExtVerdict::Indeterminate { .. }, _) => Status::Indeterminate,
            (ExtVerdict::Determined(d), Expect::Zero) if d.is_zero() => Status::Pass,
            (ExtVerdict::Determined(d), Expect::Scalar) if *d == GradedDim::point(0) => Status::Pass,
            _ => Status::Fail,
        }
    }
}

/// A planned pair check before evaluation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairPlan {
    pub source: usize,
    pub target: usize,
    pub twist: i64,
    pub query: ExtQuery,
    pub expect: Expect,
}

impl PairPlan {
    pub fn evaluate(self) -> Result<PairCheck> {
        let verdict = ext_groups(self.query.space, &self.query.from, &self.query.to)?;
        Ok(PairCheck {
            source: self.source,
            target: self.target,
            twist: self.twist,
            query: self.query,
            expect: self.expect,
            verdict,
        })
    }
}

/// Ordered pair checks with an aggregate status.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollectionReport {
    pub collection: CollectionSpec,
    pub index: usize,
    pub checks: Vec<PairCheck>,
}

impl CollectionReport {
    /// `Indeterminate` dominates `Fail`, which dominates `Pass`.
    pub fn status(&self) -> Status {
        self.checks.iter().map(PairCheck::status).max().unwrap_or(Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairCheck> {
        self.checks.iter().filter(|c| c.status() != Status::Pass)
    }

    pub fn indeterminate_count(&self) -> usize {
        self.checks.iter().filter(|c| c.status() == Status::Indeterminate).count()
    }
}

/// Pairs for the rectangular Lefschetz criterion, ordered by `(twist, j, i)`.
///
/// At `t = 0` it lists `Ext•(Eⱼ, Eᵢ)` for `i ≤ j` (scalars on the diagonal,
/// zero otherwise); for `t = 1..w−1` it lists `Ext•(Eⱼ(t), Eᵢ)` for `i ≤ j`.
pub fn lefschetz_plan(space: Space, c: &CollectionSpec, w: usize) -> Vec<PairPlan> {
    let mut plan = Vec::new();
    for t in 0..w as i64 {
        for j in 0..c.len() {
            for i in 0..=j {
                let expect = if t == 0 && i == j { Expect::Scalar } else { Expect::Zero };
                plan.push(PairPlan {
                    source: j,
                    target: i,
                    twist: t,
                    query: ExtQuery { space, from: c.members[j].twist(t), to: c.members[i].clone() },
                    expect,
                });
            }
        }
    }
    plan
}

/// Pairs for block semiorthogonality: `Ext•(x(l), y) = 0` for all ordered
/// `x, y` and `l = 1..w−1`, ordered by `(l, x, y)`.
pub fn semiorthogonality_plan(space: Space, c: &CollectionSpec, w: usize) -> Vec<PairPlan> {
    let mut plan = Vec::new();
    for t in 1..w as i64 {
        for x in 0..c.len() {
            for y in 0..c.len() {
                plan.push(PairPlan {
                    source: x,
                    target: y,
                    twist: t,
                    query: ExtQuery { space, from: c.members[x].twist(t), to: c.members[y].clone() },
                    expect: Expect::Zero,
                });
            }
        }
    }
    plan
}

fn run(c: &CollectionSpec, w: usize, plan: Vec<PairPlan>) -> Result<CollectionReport> {
    let checks = plan.into_iter().map(PairPlan::evaluate).collect::<Result<Vec<_>>>()?;
    Ok(CollectionReport { collection: c.clone(), index: w, checks })
}

pub fn check_lefschetz_basis(space: Space, c: &CollectionSpec, w: usize) -> Result<CollectionReport> {
    run(c, w, lefschetz_plan(space, c, w))
}

pub fn check_block_semiorthogonality(space: Space, c: &CollectionSpec, w: usize) -> Result<CollectionReport> {
    run(c, w, semiorthogonality_plan(space, c, w))
}
