//! Brute-force reference implementations used only by tests.
//!
//! None of these call into the LR, Pieri, BBW or dimension code under test.
//! They are slow and deliberately naive.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

/// Exact binomial coefficient by Pascal's triangle.
pub fn choose(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// All `γ` obtained from `λ` by adding a horizontal strip of `m` boxes,
/// by scanning every vector in the box `λᵢ ≤ γᵢ ≤ λᵢ + m`.
pub fn horizontal_strips(lam: &[i64], m: i64) -> Vec<Vec<i64>> {
    let k = lam.len();
    let mut out = Vec::new();
    let mut g = lam.to_vec();
    fn scan(lam: &[i64], m: i64, i: usize, g: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == lam.len() {
            let added: i64 = g.iter().zip(lam).map(|(a, b)| a - b).sum();
            let dominant = g.windows(2).all(|w| w[0] >= w[1]);
            let interleaves = (1..lam.len()).all(|t| g[t] <= lam[t - 1]);
            if added == m && dominant && interleaves {
                out.push(g.clone());
            }
            return;
        }
        for x in lam[i]..=lam[i] + m {
            g[i] = x;
            scan(lam, m, i + 1, g, out);
        }
        g[i] = lam[i];
    }
    if m >= 0 && k > 0 {
        scan(lam, m, 0, &mut g, &mut out);
    }
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    if k == 0 {
        return vec![(vec![], 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            // Inserting the largest element at `pos` adds `len − pos` inversions.
            let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// `U^α ⊗ U^β` through the Jacobi–Trudi determinant
/// `s_β = det(h_{βᵢ − i + j})` and iterated horizontal strips.
pub fn lr_oracle(alpha: &[i64], beta: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let k = beta.len();
    let s = beta[k - 1];
    let b: Vec<i64> = beta.iter().map(|x| x - s).collect();
    let mut total: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (sigma, sign) in permutations(k) {
        let degrees: Vec<i64> = (0..k).map(|i| b[i] - i as i64 + sigma[i] as i64).collect();
        if degrees.iter().any(|&d| d < 0) {
            continue;
        }
        let mut current: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        current.insert(alpha.to_vec(), 1);
        for &d in &degrees {
            let mut next = BTreeMap::new();
            for (g, c) in &current {
                for h in horizontal_strips(g, d) {
                    *next.entry(h).or_insert(0) += c;
                }
            }
            current = next;
        }
        for (g, c) in current {
            *total.entry(g).or_insert(0) += sign * c;
        }
    }
    total.into_iter().filter(|(_, c)| *c != 0).map(|(g, c)| (g.iter().map(|x| x + s).collect(), c)).collect()
}

/// `dim` of the `GL_k` irrep `λ` by counting semistandard tableaux.
pub fn dim_gl_oracle(lam: &[i64]) -> i128 {
    let k = lam.len();
    let shape: Vec<usize> = lam.iter().map(|x| (x - lam[k - 1]) as usize).collect();
    let cells: Vec<(usize, usize)> = (0..k).flat_map(|r| (0..shape[r]).map(move |c| (r, c))).collect();
    let mut fill = vec![vec![0usize; shape.first().copied().unwrap_or(0)]; k];
    fn go(idx: usize, cells: &[(usize, usize)], fill: &mut Vec<Vec<usize>>, k: usize) -> i128 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { fill[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { fill[r - 1][c] + 1 } else { 1 };
        let mut n = 0;
        for v in lo_row.max(lo_col)..=k {
            fill[r][c] = v;
            n += go(idx + 1, cells, fill, k);
        }
        fill[r][c] = 0;
        n
    }
    go(0, &cells, &mut fill, k)
}

/// Weyl dimension polynomial of `C_n` evaluated at an arbitrary `v = γ + ρ`,
/// giving `χ(IGr(k,2n), U^λ)` by Borel–Bott–Weil.
pub fn chi_even_oracle(lambda: &[i64], n: usize) -> i128 {
    let mut v: Vec<i128> = (1..=n as i128).rev().collect();
    let rho = v.clone();
    for (x, l) in v.iter_mut().zip(lambda) {
        *x += *l as i128;
    }
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (v[i] - v[j]) * (v[i] + v[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        num *= v[i];
        den *= rho[i];
    }
    assert_eq!(num % den, 0);
    num / den
}

/// `χ(IGr(k,2n+1), U^λ)` through the Koszul complex, using the oracles above.
pub fn chi_odd_oracle(lambda: &[i64], n: usize) -> i128 {
    let k = lambda.len();
    let mut total = 0;
    for p in 0..=k {
        let wedge: Vec<i64> = (0..k).map(|i| if i + p >= k { -1 } else { 0 }).collect();
        for (g, c) in lr_oracle(lambda, &wedge) {
            let s = if p % 2 == 0 { 1 } else { -1 };
            total += s * c as i128 * chi_even_oracle(&g, n + 1);
        }
    }
    total
}

/// `χ(U^α, U^β)` on `IGr(k,2n+1)`.
pub fn euler_ext_oracle(alpha: &[i64], beta: &[i64], n: usize) -> i128 {
    let dual: Vec<i64> = alpha.iter().rev().map(|x| -x).collect();
    lr_oracle(&dual, beta).into_iter().map(|(g, c)| c as i128 * chi_odd_oracle(&g, n)).sum()
}

/// Word lengths in the hyperoctahedral group `C_n` by breadth-first search,
/// keyed by the image `w(ρ)` of `ρ = (n, …, 1)`. Generators swap adjacent
/// coordinates or negate the last one.
pub fn bfs_lengths(n: usize) -> HashMap<Vec<i64>, usize> {
    let start: Vec<i64> = (1..=n as i64).rev().collect();
    let mut dist = HashMap::new();
    dist.insert(start.clone(), 0);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        let mut nbrs = Vec::new();
        for i in 0..n.saturating_sub(1) {
            let mut w = v.clone();
            w.swap(i, i + 1);
            nbrs.push(w);
        }
        let mut w = v.clone();
        w[n - 1] = -w[n - 1];
        nbrs.push(w);
        for w in nbrs {
            if !dist.contains_key(&w) {
                dist.insert(w.clone(), d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
