//! Exact cycle counting: closed forms for complete bipartite and complete
//! graphs, and a brute-force enumerator for arbitrary small graphs that
//! everything else is validated against.

use crate::graph::Graph;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

pub(crate) fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= k as u64;
    }
    f
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut num = BigUint::one();
    for j in 0..k {
        num *= (n - j) as u64;
    }
    num / factorial(k)
}

/// Number of cycles (of any length ≥ 3) in `g`, each counted once.
///
/// Enumeration roots every cycle at its smallest vertex and fixes a
/// direction by requiring the second vertex on the path to precede the last.
/// Practical up to roughly 10⁸ cycles; always runs to completion.
pub fn count_cycles(g: &Graph) -> BigUint {
    per_root_counts(g)
        .into_iter()
        .map(|c| {
            let mut total = BigUint::zero();
            for (_, cnt) in c {
                total += cnt;
            }
            total
        })
        .sum()
}

/// Cycle counts broken down by cycle length.
pub fn count_cycles_by_length(g: &Graph) -> BTreeMap<usize, BigUint> {
    let mut out = BTreeMap::new();
    for per_root in per_root_counts(g) {
        for (len, cnt) in per_root {
            *out.entry(len).or_insert_with(BigUint::zero) += cnt;
        }
    }
    out
}

fn per_root_counts(g: &Graph) -> Vec<Vec<(usize, u128)>> {
    let n = g.n();
    if n <= 64 {
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).fold(0u64, |m, w| m | 1 << w))
            .collect();
        (0..n)
            .into_par_iter()
            .map(|root| {
                let mut counts = vec![0u128; n + 1];
                // Only vertices above the root may appear on the path.
                let above = if root + 1 >= 64 {
                    0
                } else {
                    u64::MAX << (root + 1)
                };
                let mut start = adj[root] & above;
                while start != 0 {
                    let second = start.trailing_zeros() as usize;
                    start &= start - 1;
                    dfs_mask(
                        &adj,
                        root,
                        second,
                        second,
                        1 << root | 1 << second,
                        2,
                        above,
                        &mut counts,
                    );
                }
                counts
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .collect()
            })
            .collect()
    } else {
        (0..n)
            .into_par_iter()
            .map(|root| {
                let mut counts = vec![0u128; n + 1];
                let mut visited = vec![false; n];
                visited[root] = true;
                for second in g.neighbors(root) {
                    if second > root {
                        visited[second] = true;
                        dfs_slow(g, root, second, second, &mut visited, 2, &mut counts);
                        visited[second] = false;
                    }
                }
                counts
                    .into_iter()
                    .enumerate()
                    .filter(|&(_, c)| c != 0)
                    .collect()
            })
            .collect()
    }
}

#[allow(clippy::too_many_arguments)]
fn dfs_mask(
    adj: &[u64],
    root: usize,
    second: usize,
    v: usize,
    visited: u64,
    len: usize,
    above: u64,
    counts: &mut [u128],
) {
    let mut cand = adj[v] & above & !visited;
    while cand != 0 {
        let w = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if adj[w] & (1 << root) != 0 && len >= 2 && second < w {
            counts[len + 1] += 1;
        }
        dfs_mask(
            adj,
            root,
            second,
            w,
            visited | 1 << w,
            len + 1,
            above,
            counts,
        );
    }
}

fn dfs_slow(
    g: &Graph,
    root: usize,
    second: usize,
    v: usize,
    visited: &mut [bool],
    len: usize,
    counts: &mut [u128],
) {
    let neigh: Vec<usize> = g.neighbors(v).filter(|&w| w > root && !visited[w]).collect();
    for w in neigh {
        if len >= 2 && second < w && g.has_edge(w, root) {
            counts[len + 1] += 1;
        }
        visited[w] = true;
        dfs_slow(g, root, second, w, visited, len + 1, counts);
        visited[w] = false;
    }
}

/// Exact cycle count of the balanced complete bipartite graph on n vertices.
pub fn turan_cycle_count(n: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "balanced bipartite count needs n >= 2".into(),
        ));
    }
    complete_bipartite_cycle_count(n / 2, n - n / 2)
}

/// Exact cycle count of K_{a,b} for 1 ≤ a ≤ b: cycles alternate sides, so
/// a 2k-cycle chooses and orders k vertices per side, divided by the 2k
/// rotations and reflections that fix the cycle.
pub fn complete_bipartite_cycle_count(a: usize, b: usize) -> Result<BigUint> {
    if a < 1 || a > b {
        return Err(Error::InvalidArgument(
            "complete bipartite count needs 1 <= a <= b".into(),
        ));
    }
    let fa = factorial(a);
    let fb = factorial(b);
    let mut total = BigUint::zero();
    for k in 2..=a {
        let denom = factorial(a - k) * factorial(b - k) * (2 * k) as u64;
        total += (&fa * &fb) / denom;
    }
    Ok(total)
}

/// Exact cycle count of the complete graph: each i-subset carries
/// (i−1)!/2 distinct cycles.
pub fn complete_graph_cycle_count(n: usize) -> BigUint {
    let mut total = BigUint::zero();
    for i in 3..=n {
        total += binomial(n, i) * factorial(i - 1) / 2u32;
    }
    total
}
