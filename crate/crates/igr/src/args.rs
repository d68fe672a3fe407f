use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use igr_core::oddcoh::Space;
use igr_core::TwistedBundle;

#[derive(Parser, Debug)]
#[command(
    name = "igr",
    version,
    about = "Cohomology, Ext groups and Lefschetz collections on isotropic Grassmannians"
)]
pub struct Cli {
    /// Cap on worker threads for pair matrices (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose a tensor product of two Schur bundles.
    Decompose(DecomposeArgs),
    /// Cohomology of a Schur bundle.
    Cohomology(CohomologyArgs),
    /// Ext groups between two Schur bundles over a range of twists.
    Ext(ExtArgs),
    /// Staircase complex of U[a,0,-b] on Gr(3,m) and its truncations.
    Staircase(StaircaseArgs),
    /// Euler pairing and first-page Ext table between two formal complexes.
    Pairing(PairingArgs),
    /// Lefschetz-basis and semiorthogonality checks for preset collections.
    CheckCollection(CheckArgs),
    /// Generation closure on IGr(3,9): saturation or scripted replay.
    Fullness(FullnessArgs),
    /// Dimension, index and Grothendieck-group rank.
    K0(K0Args),
    /// Run the full verification pipeline for IGr(3,9).
    VerifyPaper(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(value_parser = parse_bundle)]
    pub left: TwistedBundle,
    #[arg(value_parser = parse_bundle)]
    pub right: TwistedBundle,
    /// Extra twist applied to the product.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Space as igr:k:m, e.g. igr:3:9 or igr:3:10.
    #[arg(long, value_parser = parse_space)]
    pub space: Space,
    #[arg(value_parser = parse_bundle)]
    pub bundle: TwistedBundle,
    #[arg(long)]
    pub json: bool,
    /// Include the Koszul first page (odd spaces only).
    #[arg(long)]
    pub page: bool,
}

#[derive(Args, Debug)]
pub struct ExtArgs {
    #[arg(value_parser = parse_bundle)]
    pub from: TwistedBundle,
    #[arg(value_parser = parse_bundle)]
    pub to: TwistedBundle,
    #[arg(long, value_parser = parse_space, default_value = "igr:3:9")]
    pub space: Space,
    /// Twists applied to the first argument: `t`, `a..b` or `a..=b` (both inclusive).
    #[arg(long, value_parser = parse_range, default_value = "0", allow_hyphen_values = true)]
    pub twists: RangeInclusive<i64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ObjectName {
    E,
    F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KeepSide {
    Above,
    Below,
}

#[derive(Args, Debug)]
pub struct StaircaseArgs {
    #[arg(long, default_value_t = 9)]
    pub m: usize,
    /// Weight U[a,0,-b]; defaults to the defining weight of `--truncate`.
    #[arg(long, value_parser = parse_bundle)]
    pub weight: Option<TwistedBundle>,
    /// Keep the terms up to the first corner, shifted to start in degree 0.
    #[arg(long, value_enum, ignore_case = true)]
    pub truncate: Option<ObjectName>,
    /// Stupid truncation at this degree.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "truncate")]
    pub cut: Option<i64>,
    /// Side of `--cut` to keep.
    #[arg(long, value_enum, default_value = "above")]
    pub keep: KeepSide,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct PairingArgs {
    /// E, F, H, O or a bundle literal.
    #[arg(long)]
    pub left: String,
    #[arg(long)]
    pub right: String,
    #[arg(long, value_parser = parse_space, default_value = "igr:3:9")]
    pub space: Space,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckMode {
    Lefschetz,
    Semiortho,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long, value_parser = parse_space, default_value = "igr:3:9")]
    pub space: Space,
    /// B1, B2, B1B2, S1, S2, S, or the composite B.
    #[arg(long)]
    pub preset: String,
    #[arg(long, default_value_t = 7)]
    pub index: usize,
    /// Check kind for single presets (B always runs its fixed bundle of checks).
    #[arg(long, value_enum, default_value = "lefschetz")]
    pub mode: CheckMode,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FullnessMode {
    Saturate,
    Replay,
}

#[derive(Args, Debug)]
pub struct FullnessArgs {
    #[arg(long, value_parser = parse_space, default_value = "igr:3:9")]
    pub space: Space,
    #[arg(long, value_enum)]
    pub mode: FullnessMode,
    /// Seed collection, as preset:NAME.
    #[arg(long, default_value = "preset:B1B2")]
    pub seed: String,
    /// Write the derivation log as JSON.
    #[arg(long)]
    pub log: Option<PathBuf>,
    /// Write the coverage diagram (.svg or .txt).
    #[arg(long)]
    pub diagram: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct K0Args {
    #[arg(long, value_parser = parse_space)]
    pub space: Space,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub json: bool,
    /// Treat B1 ∪ B2 as the Lefschetz basis in the first check.
    #[arg(long)]
    pub force_union_basis: bool,
}

pub fn parse_bundle(s: &str) -> anyhow::Result<TwistedBundle> {
    s.trim().parse::<TwistedBundle>().map_err(|e| anyhow!("{e}"))
}

pub fn parse_space(s: &str) -> anyhow::Result<Space> {
    let parts: Vec<&str> = s.split(':').collect();
    let [tag, k, m] = parts[..] else { bail!("space must look like igr:k:m, got {s:?}") };
    if !tag.eq_ignore_ascii_case("igr") {
        bail!("space must look like igr:k:m, got {s:?}");
    }
    let k: usize = k.parse().with_context(|| format!("bad k in {s:?}"))?;
    let m: usize = m.parse().with_context(|| format!("bad m in {s:?}"))?;
    Space::from_km(k, m).map_err(|e| anyhow!("{e}"))
}

pub fn parse_range(s: &str) -> anyhow::Result<RangeInclusive<i64>> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: i64 = lo.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    let hi: i64 = hi.trim().parse().with_context(|| format!("bad range {s:?}"))?;
    if lo > hi {
        bail!("empty range {s:?}");
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..6").unwrap(), 0..=6);
        assert_eq!(parse_range("0..=6").unwrap(), 0..=6);
        assert_eq!(parse_range("-3").unwrap(), -3..=-3);
        assert!(parse_range("4..1").is_err());
    }

    #[test]
    fn spaces() {
        assert_eq!(parse_space("igr:3:9").unwrap().m(), 9);
        assert!(parse_space("gr:3:9").is_err());
        assert!(parse_space("igr:5:9").is_err());
    }
}
