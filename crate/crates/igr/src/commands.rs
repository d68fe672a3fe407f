use std::collections::BTreeSet;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use igr_core::bbw::{bbw_even, CohomologyResult};
use igr_core::complexes::{
    euler_pairing, ext_e1_table, first_branch, object_e, object_f, object_h, staircase, truncate,
    FormalComplex, Keep, TableVerdict,
};
use igr_core::ext::{
    lefschetz_plan, semiorthogonality_plan, CollectionReport, CollectionSpec, ExtVerdict, PairPlan, Status,
};
use igr_core::fullness::{
    audit, nine_step_script, replay, seed_from_bundles, universe_t, ClosureState, Rule, StepRecord,
};
use igr_core::invariants::{divisibility_check, invariants};
use igr_core::oddcoh::{cohomology_odd, koszul_page, CohomologyVerdict, GradedDim, Space};
use igr_core::schur::{dim_gl, lr};
use igr_core::{GlWeight, TwistedBundle};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::*;
use crate::diagram;
use crate::dto::{self, graded, schema, BundleDto, DegreeDim, PageRow, ReportDto};

/// Process exit status for a verification outcome.
pub fn exit_code(s: Status) -> u8 {
    match s {
        Status::Pass => 0,
        Status::Fail => 2,
        Status::Indeterminate => 3,
    }
}

pub fn emit<T: Serialize>(doc: &T) -> Result<()> {
    out!("{}", serde_json::to_string_pretty(doc)?)?;
    Ok(())
}

fn core<T>(r: igr_core::Result<T>) -> Result<T> {
    r.map_err(|e| anyhow!("{e}"))
}

fn ensure_igr39(space: Space, what: &str) -> Result<()> {
    if (space.k(), space.m()) != (3, 9) {
        bail!("{what} is only defined on igr:3:9, not {space}");
    }
    Ok(())
}

// decompose

#[derive(Serialize)]
struct DecomposeDoc {
    schema: String,
    left: String,
    right: String,
    twist: i64,
    terms: Vec<DecomposeTerm>,
    total_dim: u128,
}

#[derive(Serialize)]
struct DecomposeTerm {
    weight: String,
    entries: Vec<i64>,
    multiplicity: u64,
    dim: u128,
}

pub fn decompose(a: &DecomposeArgs) -> Result<u8> {
    let d = core(lr(a.left.weight(), a.right.weight()))?.shift(a.twist);
    let terms: Vec<DecomposeTerm> = d
        .iter()
        .map(|(w, &m)| DecomposeTerm {
            weight: TwistedBundle::untwisted(w.clone()).to_string(),
            entries: w.entries().to_vec(),
            multiplicity: m,
            dim: dim_gl(w),
        })
        .collect();
    if a.json {
        emit(&DecomposeDoc {
            schema: schema("decompose"),
            left: a.left.to_string(),
            right: a.right.to_string(),
            twist: a.twist,
            terms,
            total_dim: d.total_dim(),
        })?;
    } else {
        let tw = if a.twist != 0 { format!(" ⊗ O({})", a.twist) } else { String::new() };
        out!("{} ⊗ {}{tw} =", a.left, a.right)?;
        for t in &terms {
            out!("  {:<18} x{}  (dim {})", t.weight, t.multiplicity, t.dim)?;
        }
        out!("total dimension {}", d.total_dim())?;
    }
    Ok(0)
}

// cohomology

#[derive(Serialize)]
struct CohomologyDoc {
    schema: String,
    space: String,
    bundle: BundleDto,
    verdict: &'static str,
    dims: Option<Vec<DegreeDim>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    reps: Vec<RepDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    page: Option<Vec<PageRow>>,
}

#[derive(Serialize)]
struct RepDto {
    degree: i64,
    rep: Vec<i64>,
    mult: u64,
}

pub fn cohomology(a: &CohomologyArgs) -> Result<u8> {
    let b = &a.bundle;
    let mut doc = CohomologyDoc {
        schema: schema("cohomology"),
        space: a.space.to_string(),
        bundle: b.into(),
        verdict: "zero",
        dims: Some(vec![]),
        reps: vec![],
        page: None,
    };
    let mut code = 0;
    match a.space {
        Space::Even(s) => {
            if a.page {
                bail!("--page applies to odd spaces only");
            }
            if let CohomologyResult::Nonzero { degree, rep, dim } = core(bbw_even(s, b))? {
                doc.verdict = "exact";
                doc.dims = Some(vec![DegreeDim { degree: degree as i64, dim }]);
                doc.reps = vec![RepDto { degree: degree as i64, rep: rep.entries().to_vec(), mult: 1 }];
            }
        }
        Space::Odd(s) => {
            if a.page {
                let page = core(koszul_page(s, b))?;
                doc.page = Some(page.entries.iter().map(PageRow::from).collect());
            }
            match core(cohomology_odd(s, b))? {
                CohomologyVerdict::Acyclic => {}
                CohomologyVerdict::Exact { dims, reps } => {
                    doc.verdict = "exact";
                    doc.dims = Some(graded(&dims));
                    doc.reps = reps
                        .iter()
                        .flat_map(|(&d, rs)| {
                            rs.iter().map(move |(r, m)| RepDto {
                                degree: d,
                                rep: r.entries().to_vec(),
                                mult: *m,
                            })
                        })
                        .collect();
                }
                CohomologyVerdict::Indeterminate(page) => {
                    doc.verdict = "indeterminate";
                    doc.dims = None;
                    doc.page.get_or_insert_with(|| page.entries.iter().map(PageRow::from).collect());
                    code = 3;
                }
            }
        }
    }
    if a.json {
        emit(&doc)?;
        return Ok(code);
    }
    let shown = match &doc.dims {
        Some(d) => {
            let mut g = GradedDim::new();
            for x in d {
                g.add(x.degree, x.dim);
            }
            g.to_string()
        }
        None => "indeterminate (first page does not degenerate)".into(),
    };
    out!("H•({}, {}) = {shown}", a.space, b)?;
    for r in &doc.reps {
        out!("  degree {}: Sp representation {:?} x{}", r.degree, r.rep, r.mult)?;
    }
    if let Some(page) = &doc.page {
        out!("first page (p, q, summand, rep, mult, dim):")?;
        for r in page {
            out!("  {} {} {:?} {:?} {} {}", r.p, r.q, r.summand, r.rep, r.mult, r.dim)?;
        }
    }
    Ok(code)
}

// ext

#[derive(Serialize)]
struct ExtDoc {
    schema: String,
    space: String,
    from: String,
    to: String,
    results: Vec<ExtRow>,
}

#[derive(Serialize)]
struct ExtRow {
    twist: i64,
    query_from: String,
    euler: i128,
    #[serde(flatten)]
    ext: dto::ExtDto,
}

pub fn ext(a: &ExtArgs) -> Result<u8> {
    let twists: Vec<i64> = a.twists.clone().collect();
    let rows: Vec<(i64, TwistedBundle, ExtVerdict, i128)> = twists
        .par_iter()
        .map(|&t| {
            let from = a.from.twist(t);
            let v = igr_core::ext::ext_groups(a.space, &from, &a.to)?;
            let chi = igr_core::ext::euler_ext(a.space, &from, &a.to)?;
            Ok((t, from, v, chi))
        })
        .collect::<igr_core::Result<_>>()
        .map_err(|e| anyhow!("{e}"))?;
    let code = if rows.iter().any(|r| matches!(r.2, ExtVerdict::Indeterminate { .. })) { 3 } else { 0 };
    if a.json {
        emit(&ExtDoc {
            schema: schema("ext"),
            space: a.space.to_string(),
            from: a.from.to_string(),
            to: a.to.to_string(),
            results: rows
                .iter()
                .map(|(t, f, v, chi)| ExtRow {
                    twist: *t,
                    query_from: f.to_string(),
                    euler: *chi,
                    ext: v.into(),
                })
                .collect(),
        })?;
        return Ok(code);
    }
    for (t, from, v, chi) in &rows {
        let shown = match v {
            ExtVerdict::Determined(d) => d.to_string(),
            ExtVerdict::Indeterminate { pending, .. } => {
                format!("indeterminate ({} summand(s) unresolved, χ = {chi})", pending.len())
            }
        };
        out!("t={t}: Ext•({from}, {}) = {shown}", a.to)?;
    }
    Ok(code)
}

// staircase

#[derive(Serialize)]
struct StaircaseDoc {
    schema: String,
    m: usize,
    weight: String,
    selection: String,
    rank: i128,
    terms: Vec<dto::TermDto>,
}

fn ab_of(b: &TwistedBundle) -> Result<(usize, usize)> {
    match b.weight().entries() {
        &[a, 0, c] if a >= 0 && c <= 0 => Ok((a as usize, (-c) as usize)),
        _ => bail!("staircase weights must have the form U[a,0,-b] with a, b ≥ 0, got {b}"),
    }
}

pub fn staircase_cmd(a: &StaircaseArgs) -> Result<u8> {
    let weight = match (&a.weight, a.truncate) {
        (Some(w), _) => w.clone(),
        (None, Some(ObjectName::E)) => TwistedBundle::untwisted(GlWeight::from_slice(&[3, 0, 0])),
        (None, Some(ObjectName::F)) => TwistedBundle::untwisted(GlWeight::from_slice(&[2, 0, -1])),
        (None, None) => bail!("--weight is required unless --truncate names an object"),
    };
    let (x, y) = ab_of(&weight)?;
    let full = core(staircase(x, y, a.m))?;
    let (c, selection) = match (a.truncate, a.cut) {
        (Some(o), _) => (first_branch(x, y, a.m), format!("{o:?} (first branch, shifted to degree 0)")),
        (None, Some(cut)) => {
            let keep = match a.keep {
                KeepSide::Above => Keep::AtLeast,
                KeepSide::Below => Keep::AtMost,
            };
            let side = if keep == Keep::AtLeast { "≥" } else { "≤" };
            (core(truncate(&full, cut, keep))?, format!("degrees {side} {cut}"))
        }
        (None, None) => (full, "full".into()),
    };
    if a.json {
        emit(&StaircaseDoc {
            schema: schema("staircase"),
            m: a.m,
            weight: weight.to_string(),
            selection,
            rank: c.rank(),
            terms: dto::terms(&c),
        })?;
        return Ok(0);
    }
    out!("staircase of {weight} on Gr(3,{}), {selection}:", a.m)?;
    for (d, t) in c.iter() {
        out!("  {d:>3}  {t}   (mult {})", t.mult)?;
    }
    out!("alternating rank {}", c.rank())?;
    Ok(0)
}

// pairing

pub fn named_object(name: &str) -> Result<FormalComplex> {
    Ok(match name.trim() {
        "E" | "e" => object_e(),
        "F" | "f" => object_f(),
        "H" | "h" => object_h(),
        "O" | "o" => FormalComplex::single(TwistedBundle::line(3, 0)),
        other => FormalComplex::single(parse_bundle(other)?),
    })
}

#[derive(Serialize)]
struct PairingDoc {
    schema: String,
    space: String,
    left: String,
    right: String,
    euler: i128,
    rank_left: i128,
    rank_right: i128,
    table: TableDoc,
}

#[derive(Serialize)]
struct TableDoc {
    status: &'static str,
    dims: Option<Vec<DegreeDim>>,
    entries: Vec<TableEntry>,
    pending: Vec<PendingPair>,
}

#[derive(Serialize)]
struct TableEntry {
    s: i64,
    t: i64,
    dim: u128,
}

#[derive(Serialize)]
struct PendingPair {
    i: i64,
    j: i64,
    from: String,
    to: String,
}

pub fn pairing(a: &PairingArgs) -> Result<u8> {
    let (l, r) = (named_object(&a.left)?, named_object(&a.right)?);
    let chi = core(euler_pairing(&l, &r, a.space))?;
    let table = core(ext_e1_table(&l, &r, a.space))?;
    let verdict = table.verdict();
    let doc = PairingDoc {
        schema: schema("pairing"),
        space: a.space.to_string(),
        left: a.left.clone(),
        right: a.right.clone(),
        euler: chi,
        rank_left: l.rank(),
        rank_right: r.rank(),
        table: TableDoc {
            status: match verdict {
                TableVerdict::Determined(_) => "determined",
                TableVerdict::Indeterminate => "indeterminate",
            },
            dims: match &verdict {
                TableVerdict::Determined(d) => Some(graded(d)),
                TableVerdict::Indeterminate => None,
            },
            entries: table.entries.iter().map(|(&(s, t), &dim)| TableEntry { s, t, dim }).collect(),
            pending: table
                .pending
                .iter()
                .map(|(i, j, q)| PendingPair { i: *i, j: *j, from: q.from.to_string(), to: q.to.to_string() })
                .collect(),
        },
    };
    if a.json {
        emit(&doc)?;
        return Ok(0);
    }
    out!("χ({}, {}) = {chi} on {}", a.left, a.right, a.space)?;
    out!("ranks: {} = {}, {} = {}", a.left, doc.rank_left, a.right, doc.rank_right)?;
    match verdict {
        TableVerdict::Determined(d) => out!("Ext• from the first page: {d}")?,
        TableVerdict::Indeterminate => out!(
            "first page not conclusive ({} unresolved term pair(s)); Euler pairing above is exact",
            doc.table.pending.len()
        )?,
    }
    Ok(0)
}

// check-collection

pub fn run_plans(plans: Vec<PairPlan>) -> Result<Vec<igr_core::ext::PairCheck>> {
    plans
        .into_par_iter()
        .map(PairPlan::evaluate)
        .collect::<igr_core::Result<Vec<_>>>()
        .map_err(|e| anyhow!("{e}"))
}

pub fn lefschetz_report(space: Space, c: &CollectionSpec, w: usize) -> Result<CollectionReport> {
    let checks = run_plans(lefschetz_plan(space, c, w))?;
    Ok(CollectionReport { collection: c.clone(), index: w, checks })
}

pub fn semiortho_report(space: Space, c: &CollectionSpec, w: usize) -> Result<CollectionReport> {
    let checks = run_plans(semiorthogonality_plan(space, c, w))?;
    Ok(CollectionReport { collection: c.clone(), index: w, checks })
}

#[derive(Serialize, Clone)]
pub struct PairingRow {
    pub left: String,
    pub right: String,
    pub euler: i128,
    pub expected: i128,
    pub status: String,
}

/// `χ(b, H)` for each member of `B₁`; must vanish.
pub fn b1_h_pairings(space: Space) -> Result<Vec<PairingRow>> {
    let h = object_h();
    CollectionSpec::b1()
        .members
        .par_iter()
        .map(|m| {
            let chi = core(euler_pairing(&FormalComplex::single(m.clone()), &h, space))?;
            Ok(PairingRow {
                left: m.to_string(),
                right: "H".into(),
                euler: chi,
                expected: 0,
                status: if chi == 0 { Status::Pass } else { Status::Fail }.to_string(),
            })
        })
        .collect()
}

#[derive(Serialize)]
struct CheckDoc {
    schema: String,
    space: String,
    preset: String,
    index: usize,
    status: String,
    reports: Vec<ReportDto>,
    pairings: Vec<PairingRow>,
}

pub fn check_collection(a: &CheckArgs) -> Result<u8> {
    ensure_igr39(a.space, "collection presets")?;
    let mut reports = Vec::new();
    let mut pairings = Vec::new();
    if a.preset == "B" {
        reports.push(("lefschetz", lefschetz_report(a.space, &CollectionSpec::b1(), a.index)?));
        let union = CollectionSpec::b1_union_b2();
        reports.push(("semiorthogonality", semiortho_report(a.space, &union, a.index)?));
        pairings = b1_h_pairings(a.space)?;
    } else {
        let c = core(CollectionSpec::preset(&a.preset))?;
        reports.push(match a.mode {
            CheckMode::Lefschetz => ("lefschetz", lefschetz_report(a.space, &c, a.index)?),
            CheckMode::Semiortho => ("semiorthogonality", semiortho_report(a.space, &c, a.index)?),
        });
    }
    let mut status = reports.iter().map(|(_, r)| r.status()).max().unwrap_or(Status::Pass);
    if pairings.iter().any(|p| p.euler != p.expected) {
        status = status.max(Status::Fail);
    }
    if a.json {
        emit(&CheckDoc {
            schema: schema("check-collection"),
            space: a.space.to_string(),
            preset: a.preset.clone(),
            index: a.index,
            status: status.to_string(),
            reports: reports.iter().map(|(k, r)| ReportDto::new(k, r)).collect(),
            pairings,
        })?;
        return Ok(exit_code(status));
    }
    for (kind, r) in &reports {
        out!(
            "{} {kind} on {} with index {}: {} ({} pairs, {} failing, {} indeterminate)",
            r.collection.name,
            a.space,
            r.index,
            r.status(),
            r.checks.len(),
            r.failures().count(),
            r.indeterminate_count()
        )?;
        for c in r.checks.iter().filter(|c| c.status() != Status::Pass) {
            let shown = match &c.verdict {
                ExtVerdict::Determined(d) => d.to_string(),
                ExtVerdict::Indeterminate { .. } => "indeterminate".into(),
            };
            out!("  {}  Ext•({}, {}) at t={}: {shown}", c.status(), c.query.from, c.query.to, c.twist)?;
        }
    }
    for p in &pairings {
        out!("χ({}, {}) = {}  {}", p.left, p.right, p.euler, p.status)?;
    }
    out!("overall: {status}")?;
    Ok(exit_code(status))
}

// fullness

fn seed_collection(seed: &str) -> Result<CollectionSpec> {
    let name = seed
        .strip_prefix("preset:")
        .ok_or_else(|| anyhow!("seed must be given as preset:NAME, got {seed:?}"))?;
    core(CollectionSpec::preset(name))
}

#[derive(Serialize)]
struct StepDoc {
    index: usize,
    added: usize,
    ok: bool,
    problems: Vec<String>,
    already_present: Vec<String>,
}

#[derive(Serialize)]
struct FullnessDoc {
    schema: String,
    space: String,
    mode: &'static str,
    seed: String,
    window: [i64; 2],
    seed_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<Vec<StepDoc>>,
    rule_applications: usize,
    present: usize,
    target: usize,
    final_check: bool,
    audit: bool,
    status: String,
}

fn log_records(state: &ClosureState) -> Vec<dto::RecordDto> {
    let seed =
        StepRecord { rule: Rule::Seed, premises: vec![], additions: state.seed().iter().copied().collect() };
    std::iter::once(&seed).chain(state.log()).map(dto::RecordDto::from).collect()
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

pub fn fullness(a: &FullnessArgs) -> Result<u8> {
    ensure_igr39(a.space, "the fullness engine")?;
    let n = 4usize;
    let top = 2 * n as i64 - 2;
    let window = 0..=top;
    let coll = seed_collection(&a.seed)?;
    let seed = core(seed_from_bundles(&coll.members, window.clone()))?;
    let mut state = core(ClosureState::new(n, window.clone(), seed))?;
    let mut steps = None;
    let final_check;
    match a.mode {
        FullnessMode::Saturate => {
            core(state.saturate())?;
            final_check = state.final_check();
        }
        FullnessMode::Replay => {
            let report = core(replay(state, &nine_step_script()))?;
            final_check = report.final_check;
            steps = Some(
                report
                    .steps
                    .iter()
                    .map(|s| StepDoc {
                        index: s.index,
                        added: s.added,
                        ok: s.ok(),
                        problems: s.problems.clone(),
                        already_present: s.redundant.iter().map(ToString::to_string).collect(),
                    })
                    .collect::<Vec<_>>(),
            );
            state = report.state;
        }
    }
    let audited = core(audit(&state))?;
    let target = core(universe_t(n))?.len() * window.clone().count();
    let steps_ok = steps.as_ref().is_none_or(|s: &Vec<StepDoc>| s.iter().all(|x| x.ok));
    let status = if final_check && audited && steps_ok { Status::Pass } else { Status::Fail };

    if let Some(path) = &a.log {
        write_file(path, &(serde_json::to_string_pretty(&log_records(&state))? + "\n"))?;
    }
    if let Some(path) = &a.diagram {
        let win: BTreeSet<i64> = window.clone().collect();
        let cov = state.coverage();
        let body = match path.extension().and_then(|e| e.to_str()) {
            Some("svg") => diagram::svg(&cov, top, &win),
            _ => diagram::ascii(&cov, top, &win),
        };
        write_file(path, &body)?;
    }

    let doc = FullnessDoc {
        schema: schema("fullness"),
        space: a.space.to_string(),
        mode: match a.mode {
            FullnessMode::Saturate => "saturate",
            FullnessMode::Replay => "replay",
        },
        seed: a.seed.clone(),
        window: [0, top],
        seed_size: state.seed().len(),
        steps,
        rule_applications: state.log().len(),
        present: state.present().len(),
        target,
        final_check,
        audit: audited,
        status: status.to_string(),
    };
    if a.json {
        emit(&doc)?;
        return Ok(exit_code(status));
    }
    out!("{} from {} on {}, twists 0..{top}", doc.mode, a.seed, a.space)?;
    if let Some(steps) = &doc.steps {
        for s in steps {
            let mut line = format!("  step {}: +{} {}", s.index, s.added, if s.ok { "ok" } else { "FAILED" });
            if !s.already_present.is_empty() {
                line += &format!(" (claimed but already present: {})", s.already_present.join(", "));
            }
            out!("{line}")?;
            for p in &s.problems {
                out!("      {p}")?;
            }
        }
    }
    out!(
        "present {}/{} (seed {}, {} rule applications); final check {}; audit {}",
        doc.present,
        doc.target,
        doc.seed_size,
        doc.rule_applications,
        if final_check { "pass" } else { "fail" },
        if audited { "pass" } else { "fail" }
    )?;
    out!("overall: {status}")?;
    Ok(exit_code(status))
}

// k0

#[derive(Serialize)]
struct K0Doc {
    schema: String,
    space: String,
    kind: &'static str,
    dimension: u64,
    index: u64,
    k0_rank: u64,
    lefschetz_length: Option<u64>,
    divisibility_p: Option<u64>,
}

pub fn k0(a: &K0Args) -> Result<u8> {
    let inv = invariants(a.space);
    let divisibility_p = match a.space {
        Space::Odd(s) if s.k() == 3 => divisibility_check(s.n() as u64),
        _ => None,
    };
    let doc = K0Doc {
        schema: schema("k0"),
        space: a.space.to_string(),
        kind: if matches!(a.space, Space::Odd(_)) { "odd" } else { "even" },
        dimension: inv.dimension,
        index: inv.index,
        k0_rank: inv.k0_rank,
        lefschetz_length: inv.lefschetz_length,
        divisibility_p,
    };
    if a.json {
        emit(&doc)?;
        return Ok(0);
    }
    out!("{}: d = {}, w = {}, rank K0 = {}", doc.space, doc.dimension, doc.index, doc.k0_rank)?;
    match doc.lefschetz_length {
        Some(p) => out!("rectangular Lefschetz basis length p = {p} (r = w·p)")?,
        None => out!("index does not divide the rank")?,
    }
    Ok(0)
}
