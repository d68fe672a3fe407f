//! Closure engine for generation arguments on `IGr(3, 2n+1)`.
//!
//! The state is a set of monomial bundles `U^{i,−j}(l) = U^{i,0,−j}(l)`.
//! Two rules add bundles: the staircase rule (the rightmost or leftmost term
//! of a staircase complex whose other terms are present) and the symplectic
//! rule (`∧^p S ≅ ∧^{2(n+1−k)−p} S` for the symplectic quotient bundle).
//! Every addition is logged with its premises so the derivation can be
//! replayed and audited.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::RangeInclusive;

use crate::weights::{GlWeight, TwistedBundle};
use crate::{Error, Result};

/// Rank of the tautological bundle; the engine only handles `IGr(3, 2n+1)`.
const K: i64 = 3;

/// `U^{i,−j}(l)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub i: i64,
    pub j: i64,
    pub l: i64,
}

impl Monomial {
    pub const fn new(i: i64, j: i64, l: i64) -> Self {
        Monomial { i, j, l }
    }

    pub fn twist(self, t: i64) -> Self {
        Monomial { l: self.l + t, ..self }
    }

    /// `U^{i,0,−j}(l)* = U^{j,0,−i}(−l)`.
    pub fn dual(self) -> Self {
        Monomial { i: self.j, j: self.i, l: -self.l }
    }

    pub fn bundle(self) -> TwistedBundle {
        TwistedBundle::new(GlWeight::from_slice(&[self.i, 0, -self.j]), self.l)
    }

    /// Every rank-3 bundle is a monomial: `U^{x,y,z} = U^{x−y,0,z−y}(y)`.
    pub fn from_bundle(b: &TwistedBundle) -> Result<Self> {
        match b.weight().entries() {
            &[x, y, z] => Ok(Monomial { i: x - y, j: y - z, l: y }),
            e => Err(Error::RankMismatch { expected: 3, found: e.len() }),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U[{},0,{}]", self.i, -self.j)?;
        if self.l != 0 {
            write!(f, "({})", self.l)?;
        }
        Ok(())
    }
}

/// `T = {U^{i,−j} : i + j ≤ 2n − 2}` at twist 0.
pub fn universe_t(n: usize) -> Result<BTreeSet<Monomial>> {
    if n < 2 {
        return Err(Error::Precondition(alloc::format!("universe T needs n ≥ 2, got {n}")));
    }
    let top = 2 * n as i64 - 2;
    Ok((0..=top).flat_map(|i| (0..=top - i).map(move |j| Monomial::new(i, j, 0))).collect())
}

/// `P_b = {U^{i,−b} : 0 ≤ i ≤ 2n−2−b}`.
pub fn set_p(b: i64, n: usize) -> BTreeSet<Monomial> {
    (0..=2 * n as i64 - 2 - b).map(|i| Monomial::new(i, b, 0)).collect()
}

/// `N_a = {U^{a,−i} : 0 ≤ i ≤ 2n−2−a}`.
pub fn set_n(a: i64, n: usize) -> BTreeSet<Monomial> {
    (0..=2 * n as i64 - 2 - a).map(|i| Monomial::new(a, i, 0)).collect()
}

fn twisted(set: &BTreeSet<Monomial>, l: i64) -> impl Iterator<Item = Monomial> + '_ {
    set.iter().map(move |m| m.twist(l))
}

/// `S^{a,c}_b(l)`: the `a + b + c + 2` rightmost terms of the staircase of
/// `U^{a,−b}(l)`, extended by `c + 1` terms on the left.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SSet {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub l: i64,
}

impl SSet {
    pub fn new(a: i64, b: i64, c: i64, l: i64) -> Result<Self> {
        if a < -1 || c < -1 || b < 0 {
            return Err(Error::Precondition(alloc::format!(
                "S-set needs a, c ≥ −1 and b ≥ 0, got ({a}, {b}, {c})"
            )));
        }
        Ok(SSet { a, b, c, l })
    }

    pub fn members(&self) -> Vec<Monomial> {
        let SSet { a, b, c, l } = *self;
        let mut out = Vec::with_capacity((a + b + c + 2).max(0) as usize);
        out.extend((0..=a).map(|i| Monomial::new(i, b, l)));
        out.extend((0..b).map(|i| Monomial::new(i, b - 1 - i, l - i - 1)));
        out.extend((0..=c).map(|i| Monomial::new(b, i, l - b - 1)));
        out
    }
}

impl fmt::Display for SSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^{{{},{}}}_{}({})", self.a, self.c, self.b, self.l)
    }
}

/// Which rule produced a log entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    Seed,
    Staircase { a: i64, b: i64, c: i64, l: i64 },
    Chain { a: i64, b: i64, c: i64, l: i64 },
    Symplectic { i: i64, j: i64, l: i64 },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Seed => "seed",
            Rule::Staircase { .. } => "staircase",
            Rule::Chain { .. } => "chain",
            Rule::Symplectic { .. } => "symplectic",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepRecord {
    pub rule: Rule,
    pub premises: Vec<Monomial>,
    pub additions: Vec<Monomial>,
}

/// Result of one rule application; `missing` lists absent premises.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct RuleOutcome {
    pub added: Vec<Monomial>,
    pub missing: Vec<Monomial>,
}

/// Generated bundles within a twist window, with the derivation log.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosureState {
    n: usize,
    window: RangeInclusive<i64>,
    seed: BTreeSet<Monomial>,
    present: BTreeSet<Monomial>,
    log: Vec<StepRecord>,
}

impl ClosureState {
    /// Seeds outside the window are rejected.
    pub fn new(n: usize, window: RangeInclusive<i64>, seed: BTreeSet<Monomial>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Precondition(alloc::format!("closure needs n ≥ 2, got {n}")));
        }
        if let Some(m) = seed.iter().find(|m| !window.contains(&m.l)) {
            return Err(Error::Precondition(alloc::format!("seed member {m} lies outside the window")));
        }
        Ok(ClosureState { n, window, present: seed.clone(), seed, log: Vec::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> RangeInclusive<i64> {
        self.window.clone()
    }

    pub fn seed(&self) -> &BTreeSet<Monomial> {
        &self.seed
    }

    pub fn present(&self) -> &BTreeSet<Monomial> {
        &self.present
    }

    pub fn log(&self) -> &[StepRecord] {
        &self.log
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.present.contains(m)
    }

    fn missing<'a>(&self, premises: impl IntoIterator<Item = &'a Monomial>) -> Vec<Monomial> {
        premises.into_iter().filter(|m| !self.present.contains(m)).copied().collect()
    }

    /// Inserts `m` if it is new and inside the window.
    fn admit(&mut self, m: Monomial, added: &mut Vec<Monomial>) -> bool {
        if self.window.contains(&m.l) && self.present.insert(m) {
            added.push(m);
            true
        } else {
            false
        }
    }

    fn record(&mut self, rule: Rule, premises: Vec<Monomial>, added: &[Monomial]) {
        if !added.is_empty() {
            self.log.push(StepRecord { rule, premises, additions: added.to_vec() });
        }
    }

    fn check_triple(&self, a: i64, b: i64, c: i64) -> Result<()> {
        let top = 2 * self.n as i64 - 2;
        if a + b + c != top - 1 || a < -1 || c < -1 || !(0..=top).contains(&b) {
            return Err(Error::Precondition(alloc::format!(
                "staircase rule needs a + b + c = {}, a, c ≥ −1, 0 ≤ b ≤ {top}; got ({a}, {b}, {c})",
                top - 1
            )));
        }
        Ok(())
    }

    /// Candidates from a present `S^{a,c}_b(l)`, without logging.
    fn staircase_candidates(a: i64, b: i64, c: i64, l: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if c >= 0 {
            out.push(Monomial::new(a + 1, b, l));
        }
        if a >= 0 {
            out.push(Monomial::new(b, c + 1, l - b - 1));
        }
        out
    }

    /// If `S^{a,c}_b(l)` is present (with `a + b + c = 2n − 3`), adds
    /// `U^{a+1,−b}(l)` when `c ≥ 0` and `U^{b,−c−1}(l−b−1)` when `a ≥ 0`.
    pub fn rule_staircase(&mut self, a: i64, b: i64, c: i64, l: i64) -> Result<RuleOutcome> {
        self.check_triple(a, b, c)?;
        let premises = SSet { a, b, c, l }.members();
        let missing = self.missing(&premises);
        if !missing.is_empty() {
            return Ok(RuleOutcome { added: Vec::new(), missing });
        }
        let mut added = Vec::new();
        for m in Self::staircase_candidates(a, b, c, l) {
            self.admit(m, &mut added);
        }
        self.record(Rule::Staircase { a, b, c, l }, premises, &added);
        Ok(RuleOutcome { added, missing })
    }

    /// Repeated staircase steps from `S^{a,c}_b(l)`: sweeping `a` up yields
    /// `P_b(l)`, sweeping it down yields `N_b(l−b−1)`. Logged as one record.
    pub fn rule_chain(&mut self, a: i64, b: i64, c: i64, l: i64) -> Result<RuleOutcome> {
        self.check_triple(a, b, c)?;
        let premises = SSet { a, b, c, l }.members();
        let missing = self.missing(&premises);
        if !missing.is_empty() {
            return Ok(RuleOutcome { added: Vec::new(), missing });
        }
        let mut added = Vec::new();
        let (mut x, mut z) = (a, c);
        while z >= 0 {
            let m = Monomial::new(x + 1, b, l);
            self.admit(m, &mut added);
            if !self.present.contains(&m) {
                break;
            }
            x += 1;
            z -= 1;
        }
        let (mut x, mut z) = (a, c);
        while x >= 0 {
            let m = Monomial::new(b, z + 1, l - b - 1);
            self.admit(m, &mut added);
            if !self.present.contains(&m) {
                break;
            }
            x -= 1;
            z += 1;
        }
        self.record(Rule::Chain { a, b, c, l }, premises, &added);
        Ok(RuleOutcome { added, missing })
    }

    /// Adds `U^{i,−j}(l)` when every other `U^{i',−j'}(l)` with
    /// `i' + j' ≤ i + j` is present; needs `i + j > n + 1 − k`.
    pub fn rule_symplectic(&mut self, i: i64, j: i64, l: i64) -> Result<RuleOutcome> {
        let p = i + j;
        let floor = self.n as i64 + 1 - K;
        if i < 0 || j < 0 || p <= floor || p > 2 * self.n as i64 - 2 {
            return Err(Error::Precondition(alloc::format!(
                "symplectic rule needs {floor} < i + j ≤ {}, got i = {i}, j = {j}",
                2 * self.n - 2
            )));
        }
        let premises: Vec<Monomial> = (0..=p)
            .flat_map(|s| (0..=s).map(move |x| Monomial::new(x, s - x, l)))
            .filter(|m| (m.i, m.j) != (i, j))
            .collect();
        let missing = self.missing(&premises);
        if !missing.is_empty() {
            return Ok(RuleOutcome { added: Vec::new(), missing });
        }
        let mut added = Vec::new();
        self.admit(Monomial::new(i, j, l), &mut added);
        self.record(Rule::Symplectic { i, j, l }, premises, &added);
        Ok(RuleOutcome { added, missing })
    }

    /// One pass of staircase applications, ordered by `(b, l, a)`.
    fn staircase_sweep(&mut self) -> Result<bool> {
        let top = 2 * self.n as i64 - 2;
        let mut progress = false;
        for b in 0..=top {
            for l in self.window.clone() {
                for a in -1..=top - 1 - b {
                    let c = top - 1 - a - b;
                    progress |= !self.rule_staircase(a, b, c, l)?.added.is_empty();
                }
            }
        }
        Ok(progress)
    }

    /// One pass of symplectic applications, ordered by `(p, l, i)`.
    fn symplectic_sweep(&mut self) -> Result<bool> {
        let top = 2 * self.n as i64 - 2;
        let mut progress = false;
        for p in (self.n as i64 + 2 - K)..=top {
            for l in self.window.clone() {
                for i in 0..=p {
                    progress |= !self.rule_symplectic(i, p - i, l)?.added.is_empty();
                }
            }
        }
        Ok(progress)
    }

    /// Applies the symplectic rule alone until nothing changes.
    pub fn symplectic_fixpoint(&mut self) -> Result<()> {
        while self.symplectic_sweep()? {}
        Ok(())
    }

    /// Alternates staircase and symplectic sweeps until nothing changes.
    pub fn saturate(&mut self) -> Result<()> {
        loop {
            let a = self.staircase_sweep()?;
            let b = self.symplectic_sweep()?;
            if !a && !b {
                return Ok(());
            }
        }
    }

    /// `T(l)` present for every `l = 0..2n−2`.
    pub fn final_check(&self) -> bool {
        final_check(&self.present, self.n)
    }

    /// Covered twists per `(i, j)`.
    pub fn coverage(&self) -> BTreeMap<(i64, i64), BTreeSet<i64>> {
        let mut out: BTreeMap<(i64, i64), BTreeSet<i64>> = BTreeMap::new();
        for m in &self.present {
            out.entry((m.i, m.j)).or_default().insert(m.l);
        }
        out
    }
}

/// `T(l) ⊆ present` for `l = 0..2n−2`.
pub fn final_check(present: &BTreeSet<Monomial>, n: usize) -> bool {
    let Ok(t) = universe_t(n) else { return false };
    (0..=2 * n as i64 - 2).all(|l| twisted(&t, l).all(|m| present.contains(&m)))
}

/// `seed(l)` for every `l` in the window.
pub fn seed_from_bundles(
    bundles: &[TwistedBundle],
    window: RangeInclusive<i64>,
) -> Result<BTreeSet<Monomial>> {
    let mut out = BTreeSet::new();
    for b in bundles {
        let m = Monomial::from_bundle(b)?;
        for l in window.clone() {
            out.insert(m.twist(l));
        }
    }
    Ok(out)
}

/// `saturate` as a free function.
pub fn saturate(seed: BTreeSet<Monomial>, n: usize, window: RangeInclusive<i64>) -> Result<ClosureState> {
    let mut s = ClosureState::new(n, window, seed)?;
    s.saturate()?;
    Ok(s)
}

/// Replays a log from its seed with the two rules and checks that every
/// record reproduces exactly and the final state matches.
pub fn audit(state: &ClosureState) -> Result<bool> {
    let mut s = ClosureState::new(state.n, state.window.clone(), state.seed.clone())?;
    for rec in &state.log {
        if rec.premises.iter().any(|m| !s.present.contains(m)) {
            return Ok(false);
        }
        let out = match rec.rule {
            Rule::Seed => return Ok(false),
            Rule::Staircase { a, b, c, l } => s.rule_staircase(a, b, c, l)?,
            Rule::Chain { a, b, c, l } => s.rule_chain(a, b, c, l)?,
            Rule::Symplectic { i, j, l } => s.rule_symplectic(i, j, l)?,
        };
        if out.added != rec.additions {
            return Ok(false);
        }
    }
    Ok(s.present == state.present)
}

/// One scripted step of a generation proof.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScriptStep {
    /// `(a, b, c, l)` for each chain application.
    pub chains: Vec<(i64, i64, i64, i64)>,
    /// `(b, twists)`: claimed `P_b(l)`.
    pub claims_p: Vec<(i64, RangeInclusive<i64>)>,
    /// `(a, twists)`: claimed `N_a(l)`.
    pub claims_n: Vec<(i64, RangeInclusive<i64>)>,
    /// Claimed symplectic additions `(i, j, l)`.
    pub symplectic: Vec<(i64, i64, i64)>,
    /// Finish with the symplectic rule to fixpoint.
    pub symplectic_fixpoint: bool,
}

/// The nine-step schedule for `IGr(3,9)` (`n = 4`).
pub fn nine_step_script() -> Vec<ScriptStep> {
    fn step(
        chains: Vec<(i64, i64, i64, i64)>,
        claims_p: Vec<(i64, RangeInclusive<i64>)>,
        claims_n: Vec<(i64, RangeInclusive<i64>)>,
        symplectic: Vec<(i64, i64, i64)>,
    ) -> ScriptStep {
        ScriptStep { chains, claims_p, claims_n, symplectic, symplectic_fixpoint: false }
    }
    use alloc::vec;
    let mut steps = vec![
        step(
            (1..=6).map(|l| (3, 0, 2, l)).collect(),
            vec![(0, 1..=6)],
            vec![(0, 0..=5)],
            (0..=5).map(|l| (1, 2, l)).collect(),
        ),
        step(
            (2..=6).map(|l| (2, 1, 2, l)).collect(),
            vec![(1, 2..=6)],
            vec![(1, 0..=4)],
            (2..=4).map(|l| (2, 2, l)).collect(),
        ),
        step(
            vec![(1, 2, 2, 5), (2, 2, 1, 3), (2, 2, 1, 4)],
            vec![(2, 3..=5)],
            vec![(2, 0..=2)],
            vec![(3, 1, 1), (1, 3, 5), (3, 2, 2), (2, 3, 3), (2, 3, 4)],
        ),
        step(
            vec![(2, 3, 0, 4), (1, 3, 1, 5)],
            vec![(3, 4..=5)],
            vec![(3, 0..=1)],
            vec![(4, 0, 0), (4, 1, 1), (1, 4, 5), (2, 4, 4)],
        ),
        step(vec![(1, 4, 0, 5)], vec![(4, 5..=5)], vec![(4, 0..=0)], vec![(5, 0, 0), (1, 5, 5)]),
        step(vec![(0, 2, 3, 6)], vec![(2, 6..=6)], vec![(2, 3..=3)], vec![(0, 3, 6), (3, 3, 3)]),
        step(vec![(0, 3, 2, 6)], vec![(3, 6..=6)], vec![(3, 2..=2)], vec![(0, 4, 6), (4, 2, 2)]),
        step(vec![(0, 4, 1, 6)], vec![(4, 6..=6)], vec![(4, 1..=1)], vec![(0, 5, 6), (1, 5, 1)]),
        step(vec![(0, 5, 0, 6)], vec![(5, 6..=6)], vec![(5, 0..=0)], vec![]),
    ];
    steps[8].symplectic_fixpoint = true;
    steps
}

/// Outcome of one scripted step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StepOutcome {
    pub index: usize,
    pub added: usize,
    /// Empty when the step validated.
    pub problems: Vec<String>,
    /// Claimed symplectic additions that an earlier step had already produced.
    pub redundant: Vec<Monomial>,
}

impl StepOutcome {
    pub fn ok(&self) -> bool {
        self.problems.is_empty()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReplayReport {
    pub steps: Vec<StepOutcome>,
    pub state: ClosureState,
    pub final_check: bool,
}

impl ReplayReport {
    pub fn passed(&self) -> bool {
        self.final_check && self.steps.iter().all(StepOutcome::ok)
    }
}

/// Runs a script: each chain premise must be present before use, each new
/// symplectic claim must be derivable within its step, and every claimed
/// `P`/`N` set must be present afterwards. Claims that were already present
/// are reported as redundant rather than rederived.
pub fn replay(state: ClosureState, script: &[ScriptStep]) -> Result<ReplayReport> {
    let mut state = state;
    let n = state.n;
    let mut steps = Vec::new();
    for (idx, st) in script.iter().enumerate() {
        let before = state.present.len();
        let mut problems = Vec::new();
        let (fresh, redundant): (Vec<Monomial>, Vec<Monomial>) =
            st.symplectic.iter().map(|&(i, j, l)| Monomial::new(i, j, l)).partition(|m| !state.contains(m));
        for &(a, b, c, l) in &st.chains {
            let out = state.rule_chain(a, b, c, l)?;
            if !out.missing.is_empty() {
                problems.push(alloc::format!(
                    "premise {} incomplete, missing {}",
                    SSet { a, b, c, l },
                    join(&out.missing)
                ));
            }
        }
        // Claims may depend on one another; retry until nothing changes.
        let mut pending = fresh;
        loop {
            let mut next = Vec::new();
            for m in &pending {
                if state.rule_symplectic(m.i, m.j, m.l)?.added.is_empty() && !state.contains(m) {
                    next.push(*m);
                }
            }
            if next.len() == pending.len() {
                pending = next;
                break;
            }
            pending = next;
        }
        for m in &pending {
            problems.push(alloc::format!("symplectic rule could not derive {m}"));
        }
        if st.symplectic_fixpoint {
            state.symplectic_fixpoint()?;
        }
        for (label, sets) in [("P", &st.claims_p), ("N", &st.claims_n)] {
            for (x, range) in sets {
                let base = if label == "P" { set_p(*x, n) } else { set_n(*x, n) };
                for l in range.clone() {
                    let missing: Vec<Monomial> = twisted(&base, l).filter(|m| !state.contains(m)).collect();
                    if !missing.is_empty() {
                        problems
                            .push(alloc::format!("{label}_{x}({l}) incomplete, missing {}", join(&missing)));
                    }
                }
            }
        }
        steps.push(StepOutcome { index: idx + 1, added: state.present.len() - before, problems, redundant });
    }
    let final_check = state.final_check();
    Ok(ReplayReport { steps, state, final_check })
}

/// The scripted nine steps from `(B₁ ∪ B₂)(0..6)` on `IGr(3,9)`.
pub fn replay_paper_steps() -> Result<ReplayReport> {
    replay(union_seed_state()?, &nine_step_script())
}

/// `(B₁ ∪ B₂)(l)` for `l = 0..6`, `n = 4`, window `0..6`.
pub fn union_seed_state() -> Result<ClosureState> {
    let members = crate::ext::CollectionSpec::b1_union_b2().members;
    ClosureState::new(4, 0..=6, seed_from_bundles(&members, 0..=6)?)
}

fn join(ms: &[Monomial]) -> String {
    let mut s = String::new();
    for (i, m) in ms.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&alloc::format!("{m}"));
    }
    s
}
