//! Serializable output records. Every top-level document carries a
//! `schema` tag of the form `igr.<command>/v1`.

use igr_core::complexes::{FormalComplex, Term};
use igr_core::ext::{CollectionReport, Expect, ExtVerdict, PairCheck};
use igr_core::fullness::{Monomial, StepRecord};
use igr_core::oddcoh::{GradedDim, PageEntry};
use igr_core::TwistedBundle;
use serde::Serialize;

pub fn schema(cmd: &str) -> String {
    format!("igr.{cmd}/v1")
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct DegreeDim {
    pub degree: i64,
    pub dim: u128,
}

pub fn graded(d: &GradedDim) -> Vec<DegreeDim> {
    d.iter().map(|(degree, dim)| DegreeDim { degree, dim }).collect()
}

#[derive(Serialize, Debug)]
pub struct BundleDto {
    pub bundle: String,
    pub entries: Vec<i64>,
}

impl From<&TwistedBundle> for BundleDto {
    fn from(b: &TwistedBundle) -> Self {
        BundleDto { bundle: b.to_string(), entries: b.weight().entries().to_vec() }
    }
}

#[derive(Serialize, Debug)]
pub struct PageRow {
    pub p: usize,
    pub q: usize,
    pub summand: Vec<i64>,
    pub rep: Vec<i64>,
    pub mult: u64,
    pub dim: u128,
}

impl From<&PageEntry> for PageRow {
    fn from(e: &PageEntry) -> Self {
        PageRow {
            p: e.p,
            q: e.q,
            summand: e.summand.entries().to_vec(),
            rep: e.rep.entries().to_vec(),
            mult: e.mult,
            dim: e.dim,
        }
    }
}

#[derive(Serialize, Debug)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ExtDto {
    Determined { dims: Vec<DegreeDim> },
    Indeterminate { partial: Vec<DegreeDim>, pending: Vec<PendingDto> },
}

#[derive(Serialize, Debug)]
pub struct PendingDto {
    pub summand: Vec<i64>,
    pub mult: u64,
    pub page: Vec<PageRow>,
}

impl From<&ExtVerdict> for ExtDto {
    fn from(v: &ExtVerdict) -> Self {
        match v {
            ExtVerdict::Determined(d) => ExtDto::Determined { dims: graded(d) },
            ExtVerdict::Indeterminate { partial, pending } => ExtDto::Indeterminate {
                partial: graded(partial),
                pending: pending
                    .iter()
                    .map(|(g, m, page)| PendingDto {
                        summand: g.entries().to_vec(),
                        mult: *m,
                        page: page.entries.iter().map(PageRow::from).collect(),
                    })
                    .collect(),
            },
        }
    }
}

#[derive(Serialize, Debug)]
pub struct PairDto {
    pub from: String,
    pub to: String,
    pub source: usize,
    pub target: usize,
    pub twist: i64,
    pub expect: &'static str,
    pub status: String,
    pub ext: ExtDto,
}

impl From<&PairCheck> for PairDto {
    fn from(c: &PairCheck) -> Self {
        PairDto {
            from: c.query.from.to_string(),
            to: c.query.to.to_string(),
            source: c.source,
            target: c.target,
            twist: c.twist,
            expect: match c.expect {
                Expect::Zero => "zero",
                Expect::Scalar => "scalar",
            },
            status: c.status().to_string(),
            ext: ExtDto::from(&c.verdict),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ReportDto {
    pub collection: String,
    pub members: Vec<String>,
    pub kind: &'static str,
    pub index: usize,
    pub status: String,
    pub total: usize,
    pub failures: usize,
    pub indeterminate: usize,
    pub checks: Vec<PairDto>,
}

impl ReportDto {
    pub fn new(kind: &'static str, r: &CollectionReport) -> Self {
        ReportDto {
            collection: r.collection.name.clone(),
            members: r.collection.members.iter().map(ToString::to_string).collect(),
            kind,
            index: r.index,
            status: r.status().to_string(),
            total: r.checks.len(),
            failures: r.failures().count(),
            indeterminate: r.indeterminate_count(),
            checks: r.checks.iter().map(PairDto::from).collect(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct TermDto {
    pub degree: i64,
    pub bundle: String,
    pub weight: Vec<i64>,
    pub twist: i64,
    pub wedge: Option<usize>,
    pub multiplicity: u64,
}

impl TermDto {
    pub fn new(degree: i64, t: &Term) -> Self {
        let (w, twist) = t.bundle.display_parts();
        TermDto {
            degree,
            bundle: t.bundle.to_string(),
            weight: w.entries().to_vec(),
            twist,
            wedge: t.wedge,
            multiplicity: t.mult,
        }
    }
}

pub fn terms(c: &FormalComplex) -> Vec<TermDto> {
    c.iter().map(|(d, t)| TermDto::new(d, t)).collect()
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialDto {
    pub i: i64,
    pub j: i64,
    pub l: i64,
}

impl From<&Monomial> for MonomialDto {
    fn from(m: &Monomial) -> Self {
        MonomialDto { i: m.i, j: m.j, l: m.l }
    }
}

#[derive(Serialize, Debug)]
pub struct RecordDto {
    pub rule: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<Vec<i64>>,
    pub premises: Vec<MonomialDto>,
    pub additions: Vec<MonomialDto>,
}

impl From<&StepRecord> for RecordDto {
    fn from(r: &StepRecord) -> Self {
        use igr_core::fullness::Rule;
        let params = match r.rule {
            Rule::Seed => None,
            Rule::Staircase { a, b, c, l } | Rule::Chain { a, b, c, l } => Some(vec![a, b, c, l]),
            Rule::Symplectic { i, j, l } => Some(vec![i, j, l]),
        };
        RecordDto {
            rule: r.rule.name(),
            params,
            premises: r.premises.iter().map(MonomialDto::from).collect(),
            additions: r.additions.iter().map(MonomialDto::from).collect(),
        }
    }
}
