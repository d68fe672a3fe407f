//! Triangular coverage diagrams: one cell per `(i, j)` with `i + j ≤ top`,
//! labelled by the twists present.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

pub type Coverage = BTreeMap<(i64, i64), BTreeSet<i64>>;

/// Compresses twists into runs: `{0,1,2,4}` with separator `-` becomes `0-2,4`.
pub fn runs(ls: &BTreeSet<i64>, sep: &str) -> String {
    let mut out = Vec::new();
    let mut it = ls.iter().copied().peekable();
    while let Some(start) = it.next() {
        let mut end = start;
        while it.peek() == Some(&(end + 1)) {
            end = it.next().unwrap();
        }
        out.push(if start == end { start.to_string() } else { format!("{start}{sep}{end}") });
    }
    if out.is_empty() {
        ".".into()
    } else {
        out.join(",")
    }
}

/// Rows are `j` from the top, columns `i`; cells hold `l1-l2` run labels.
pub fn ascii(cov: &Coverage, top: i64, window: &BTreeSet<i64>) -> String {
    let width = cov.values().map(|s| runs(s, "-").len()).max().unwrap_or(1).max(3) + 2;
    let mut s = String::new();
    let _ = writeln!(s, "twists covered per U[i,0,-j]; full window {}", runs(window, "-"));
    for j in (0..=top).rev() {
        let _ = write!(s, "j={j:<2}|");
        for i in 0..=top - j {
            let label = cov.get(&(i, j)).map_or(".".into(), |l| runs(l, "-"));
            let mark = if cov.get(&(i, j)).is_some_and(|l| window.is_subset(l)) { ' ' } else { '*' };
            let _ = write!(s, "{:>w$}{mark}", label, w = width - 1);
        }
        s.push('\n');
    }
    let _ = write!(s, "    +");
    for i in 0..=top {
        let _ = write!(s, "{:>w$} ", format!("i={i}"), w = width - 1);
    }
    s.push('\n');
    let _ = writeln!(s, "(* marks cells missing part of the window)");
    s
}

/// Hand-rolled SVG with the same triangle; complete cells are shaded.
pub fn svg(cov: &Coverage, top: i64, window: &BTreeSet<i64>) -> String {
    let (cw, ch, pad) = (64i64, 40i64, 24i64);
    let w = pad * 2 + (top + 1) * cw;
    let h = pad * 2 + (top + 1) * ch + 20;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
    for j in 0..=top {
        for i in 0..=top - j {
            let x = pad + i * cw + j * cw / 2;
            let y = pad + (top - j) * ch;
            let set = cov.get(&(i, j));
            let full = set.is_some_and(|l| window.is_subset(l));
            let fill = if full {
                "#cde8cd"
            } else if set.is_some() {
                "#f4e3b5"
            } else {
                "#eeeeee"
            };
            let label = set.map_or(".".into(), |l| runs(l, "÷"));
            let _ = writeln!(
                s,
                r##"<rect x="{x}" y="{y}" width="{}" height="{}" fill="{fill}" stroke="#555"/>"##,
                cw - 4,
                ch - 4
            );
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}" text-anchor="middle"><tspan x="{}" dy="0">{i},{j}</tspan><tspan x="{}" dy="14">{label}</tspan></text>"#,
                x + (cw - 4) / 2,
                y + 14,
                x + (cw - 4) / 2,
                x + (cw - 4) / 2
            );
        }
    }
    let _ =
        writeln!(s, r#"<text x="{pad}" y="{}">cell i,j = U[i,0,-j]; label = twists present</text>"#, h - 8);
    s.push_str("</svg>\n");
    s
}
