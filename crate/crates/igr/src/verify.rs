//! The end-to-end verification pipeline for `IGr(3,9)`.

use anyhow::{anyhow, Result};
use igr_core::complexes::{
    dual_complex, euler_pairing, object_e, object_f, object_h, restriction_split_check, staircase,
};
use igr_core::ext::{ext_groups, CollectionReport, CollectionSpec, ExtVerdict, Status};
use igr_core::fullness::{replay_paper_steps, union_seed_state};
use igr_core::invariants::{divisibility_check, invariants};
use igr_core::oddcoh::{GradedDim, OddSpace, Space};
use igr_core::{GlWeight, TwistedBundle};
use serde::Serialize;

use crate::args::VerifyArgs;
use crate::commands::{b1_h_pairings, emit, exit_code, lefschetz_report, semiortho_report};
use crate::dto::schema;

#[derive(Serialize)]
struct Item {
    id: usize,
    name: &'static str,
    status: String,
    details: Vec<String>,
}

#[derive(Serialize)]
struct Doc {
    schema: String,
    space: String,
    force_union_basis: bool,
    status: String,
    items: Vec<Item>,
}

struct Check {
    status: Status,
    details: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { status: Status::Pass, details: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: String) {
        if !ok {
            self.status = self.status.max(Status::Fail);
            self.details.push(format!("mismatch: {what}"));
        } else {
            self.details.push(what);
        }
    }

    fn absorb(&mut self, label: &str, r: &CollectionReport) {
        let s = r.status();
        self.status = self.status.max(s);
        self.details.push(format!(
            "{label} {}: {s} ({} pairs, {} indeterminate)",
            r.collection.name,
            r.checks.len(),
            r.indeterminate_count()
        ));
        for c in r.checks.iter().filter(|c| c.status() != Status::Pass) {
            let shown = match &c.verdict {
                ExtVerdict::Determined(d) => d.to_string(),
                ExtVerdict::Indeterminate { .. } => "indeterminate".into(),
            };
            self.details.push(format!(
                "  {} at Ext•({}, {}), t={}: {shown}",
                c.status(),
                c.query.from,
                c.query.to,
                c.twist
            ));
        }
    }
}

fn opt(p: Option<u64>) -> String {
    p.map_or("none".into(), |p| p.to_string())
}

fn u(e: [i64; 3], t: i64) -> TwistedBundle {
    TwistedBundle::new(GlWeight::from_slice(&e), t)
}

/// Expected staircase complexes: `(weight, twist, wedge)` from the leftmost term.
const EXPECTED_E: [([i64; 3], i64, usize); 8] = [
    ([0, 0, -3], -1, 9),
    ([0, 0, -2], -1, 8),
    ([0, 0, -1], -1, 7),
    ([0, 0, 0], -1, 6),
    ([0, 0, 0], 0, 3),
    ([1, 0, 0], 0, 2),
    ([2, 0, 0], 0, 1),
    ([3, 0, 0], 0, 0),
];
const EXPECTED_F: [([i64; 3], i64, usize); 8] = [
    ([1, 0, -3], -2, 9),
    ([1, 0, -2], -2, 8),
    ([1, 0, -1], -2, 7),
    ([1, 0, 0], -2, 6),
    ([0, 0, 0], -1, 4),
    ([0, 0, -1], 0, 2),
    ([1, 0, -1], 0, 1),
    ([2, 0, -1], 0, 0),
];

fn staircase_golden(c: &mut Check) -> Result<()> {
    for ((a, b), expected) in [((3usize, 0usize), EXPECTED_E), ((2, 1), EXPECTED_F)] {
        let s = staircase(a, b, 9).map_err(|e| anyhow!("{e}"))?;
        let got: Vec<(i64, TwistedBundle, Option<usize>)> =
            s.iter().map(|(d, t)| (d, t.bundle.clone(), t.wedge)).collect();
        let want: Vec<(i64, TwistedBundle, Option<usize>)> =
            expected.iter().enumerate().map(|(i, (w, t, nu))| (i as i64 - 7, u(*w, *t), Some(*nu))).collect();
        let top = u([a as i64, 0, -(b as i64)], 0);
        c.expect(got == want, format!("staircase of {top} on Gr(3,9) matches the expected 8 terms"));
        let split = restriction_split_check(a, b, 9).map_err(|e| anyhow!("{e}"))?;
        c.expect(split, format!("restriction of {top} from Gr(3,10) splits (Pascal)"));
    }
    let e = staircase(3, 0, 9).map_err(|e| anyhow!("{e}"))?;
    c.expect(dual_complex(&e, -1, 9).shift(7) == e, "staircase of U[3,0,0] is self-dual up to O(-1)".into());
    Ok(())
}

pub fn verify_paper(a: &VerifyArgs) -> Result<u8> {
    let x = Space::Odd(OddSpace::igr39());
    let mut items = Vec::new();
    let mut push = |id, name, c: Check| {
        items.push(Item { id, name, status: c.status.to_string(), details: c.details });
    };

    let mut c = Check::new();
    if a.force_union_basis {
        c.absorb("lefschetz", &lefschetz_report(x, &CollectionSpec::b1_union_b2(), 7)?);
    } else {
        c.absorb("lefschetz", &lefschetz_report(x, &CollectionSpec::b1(), 7)?);
        c.absorb("lefschetz", &lefschetz_report(x, &CollectionSpec::b2(), 7)?);
    }
    push(1, "Lefschetz bases", c);

    let mut c = Check::new();
    for t in 0..=6 {
        let v = ext_groups(x, &u([3, 0, 0], t), &u([0, 0, -2], 0)).map_err(|e| anyhow!("{e}"))?;
        let want = if t == 0 { GradedDim::point(4) } else { GradedDim::new() };
        match v.dims() {
            Some(d) => c.expect(*d == want, format!("Ext•(U[3,0,0]({t}), U[0,0,-2]) = {d}")),
            None => {
                c.status = c.status.max(Status::Indeterminate);
                c.details.push(format!("Ext•(U[3,0,0]({t}), U[0,0,-2]) indeterminate"));
            }
        }
    }
    push(2, "extremal pair", c);

    let mut c = Check::new();
    c.absorb("semiorthogonality", &semiortho_report(x, &CollectionSpec::b1_union_b2(), 7)?);
    push(3, "block semiorthogonality", c);

    let mut c = Check::new();
    staircase_golden(&mut c)?;
    push(4, "staircase complexes", c);

    let mut c = Check::new();
    let pair = |l, r| euler_pairing(l, r, x).map_err(|e| anyhow!("{e}"));
    let (e, f, h) = (object_e(), object_f(), object_h());
    let fe = pair(&f, &e)?;
    c.expect(fe == 1, format!("χ(F, E) = {fe}"));
    let ef = pair(&e, &f)?;
    c.expect(ef == 0, format!("χ(E, F) = {ef}"));
    for p in b1_h_pairings(x)? {
        c.expect(p.euler == 0, format!("χ({}, H) = {}", p.left, p.euler));
    }
    let ranks = (e.rank(), f.rank(), h.rank());
    c.expect(ranks == (20, 51, -31), format!("ranks E, F, H = {}, {}, {}", ranks.0, ranks.1, ranks.2.abs()));
    push(5, "Euler pairings", c);

    let mut c = Check::new();
    let report = replay_paper_steps().map_err(|e| anyhow!("{e}"))?;
    for s in &report.steps {
        let note = if s.redundant.is_empty() {
            String::new()
        } else {
            let r: Vec<String> = s.redundant.iter().map(ToString::to_string).collect();
            format!(", claimed but already present: {}", r.join(", "))
        };
        c.expect(s.ok(), format!("replay step {}: +{}{note}", s.index, s.added));
        for p in &s.problems {
            c.details.push(format!("  {p}"));
        }
    }
    c.expect(report.final_check, "replay ends with T(0..6) present".into());
    let mut sat = union_seed_state().map_err(|e| anyhow!("{e}"))?;
    sat.saturate().map_err(|e| anyhow!("{e}"))?;
    c.expect(
        sat.present().len() == 196 && sat.final_check(),
        format!("saturation reaches {} of 196 monomials", sat.present().len()),
    );
    push(6, "fullness", c);

    let mut c = Check::new();
    let i39 = invariants(x);
    c.expect(
        (i39.dimension, i39.index, i39.k0_rank, i39.lefschetz_length) == (15, 7, 56, Some(8)),
        format!(
            "IGr(3,9): d = {}, w = {}, r = {}, p = {}",
            i39.dimension,
            i39.index,
            i39.k0_rank,
            opt(i39.lefschetz_length)
        ),
    );
    let i310 = invariants(Space::from_km(3, 10).map_err(|e| anyhow!("{e}"))?);
    c.expect(i310.k0_rank == 80, format!("IGr(3,10): r = {}", i310.k0_rank));
    c.expect(divisibility_check(4) == Some(8), format!("divisibility(4) = {}", opt(divisibility_check(4))));
    push(7, "invariants", c);

    let status = items
        .iter()
        .map(|i| match i.status.as_str() {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            _ => Status::Indeterminate,
        })
        .max()
        .unwrap_or(Status::Pass);

    if a.json {
        emit(&Doc {
            schema: schema("verify-paper"),
            space: x.to_string(),
            force_union_basis: a.force_union_basis,
            status: status.to_string(),
            items,
        })?;
        return Ok(exit_code(status));
    }
    for i in &items {
        out!("[{}] {}. {}", i.status, i.id, i.name)?;
        for d in &i.details {
            out!("      {d}")?;
        }
    }
    out!("overall: {status}")?;
    Ok(exit_code(status))
}
