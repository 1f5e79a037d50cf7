//! Staged elimination pipelines over candidate families of triangle-free
//! graphs, plus a small-n exhaustive verifier.  Every stage compares an
//! upper bound on the cycle count of a candidate against the exact count of
//! the balanced complete bipartite graph on the same number of vertices,
//! and records the verdict so each elimination can be re-checked from the
//! record alone.

use crate::bounds::{
    edge_bound_degree_capped, edge_bound_log, edge_bound_with_form, hmorph_bound_log,
    regular_perm_cycle_bound_log, turan_log_exact, turan_log_lower, EdgeBoundForm, LogBound,
};
use crate::cycles::{count_cycles, turan_cycle_count};
use crate::graph::{make_blowup, make_gamma, BlowupSpec};
use crate::permanent::{cycle_bound_blowup, BlockMatrixSpec};
use crate::{Error, Result};
use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// One named bound evaluation.  Exact integers are decimal strings; log
/// estimates are rendered as "ln=<value>".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundApplied {
    pub name: String,
    pub value: String,
}

/// Audit record for one candidate considered by a screen.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRecord {
    pub family: String,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sizes: Option<Vec<u64>>,
    pub bounds: Vec<BoundApplied>,
    pub turan: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub comparison: Option<String>,
}

impl CandidateRecord {
    fn new(family: &str, n: usize, turan: &BigUint) -> Self {
        CandidateRecord {
            family: family.into(),
            n: n as u64,
            i: None,
            t: None,
            delta: None,
            m: None,
            sizes: None,
            bounds: Vec::new(),
            turan: turan.to_string(),
            verdict: "survivor".into(),
            comparison: None,
        }
    }

    fn push_exact(&mut self, name: &str, value: &BigUint) {
        self.bounds.push(BoundApplied {
            name: name.into(),
            value: value.to_string(),
        });
    }

    fn push_log(&mut self, name: &str, value: &LogBound) {
        self.bounds.push(BoundApplied {
            name: name.into(),
            value: format!("ln={:.6}", value.ln_value()),
        });
    }

    fn eliminate_exact(&mut self, name: &str, value: &BigUint) {
        self.verdict = format!("eliminated-by-{name}");
        self.comparison = Some(format!("{} < {}", value, self.turan));
    }

    fn eliminate_log(&mut self, name: &str, value: &LogBound, turan_ln: f64) {
        self.verdict = format!("eliminated-by-{name}");
        self.comparison = Some(format!(
            "ln={:.6} < ln={:.6}",
            value.ln_value(),
            turan_ln
        ));
    }
}

/// The minimum-degree thresholds that force structure on a maximal
/// triangle-free graph, as fractions of n.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeThresholds {
    /// (i, numerator, denominator): δ > i·n/(3i−1) forces a homomorphism
    /// into the (i−1)-th circulant.
    pub gamma_hom: Vec<(u64, u64, u64)>,
    /// δ > 2n/5 forces bipartite.
    pub bipartite: (u64, u64),
    /// δ > 10n/29 forces 3-colourable.
    pub three_colourable: (u64, u64),
    /// δ > n/3 forces 4-colourable.
    pub four_colourable: (u64, u64),
}

pub fn thresholds() -> DegreeThresholds {
    DegreeThresholds {
        gamma_hom: (2..=10).map(|i| (i, i, 3 * i - 1)).collect(),
        bipartite: (2, 5),
        three_colourable: (10, 29),
        four_colourable: (1, 3),
    }
}

fn turan_exact(n: usize) -> BigUint {
    turan_cycle_count(n).expect("n >= 2")
}

/// Staged screen of the uniform circulant blowups Γᵢ(t), i = 2..9.
///
/// Stage A compares closed-form log estimates (the blowup bound, and the
/// dense-regime edge bound where applicable) against the exact log of the
/// balanced bipartite count.  Stage B applies the exact integer
/// successor-product bound, stage C the exact block-permanent bound, and
/// stage D exact counting; each stage only sees the survivors of the
/// previous one.
pub fn regular_gamma_screen() -> Vec<CandidateRecord> {
    let mut records = Vec::new();
    for i in 2..=9usize {
        let p = 3 * i - 1;
        for t in 1..=12usize {
            let n = p * t;
            let degree = i * t;
            let m = n * degree / 2;
            let turan = turan_exact(n);
            let turan_ln = turan_log_exact(n).unwrap();
            let exact_lower = LogBound::lower(turan_ln);
            let mut rec = CandidateRecord::new("gamma-blowup", n, &turan);
            rec.i = Some(i as u64);
            rec.t = Some(t as u64);
            rec.m = Some(m as u64);

            // Stage A.
            let blowup_log = hmorph_bound_log(n, p, i, 4).unwrap();
            rec.push_log("blowup-log-bound", &blowup_log);
            let mut decisive: Option<(&str, LogBound)> = None;
            if blowup_log.decisively_below(&exact_lower).unwrap() {
                decisive = Some(("blowup-log-bound", blowup_log));
            }
            if let Ok(edge_log) = edge_bound_log(n, m, 4) {
                rec.push_log("edge-log-bound", &edge_log);
                if edge_log.decisively_below(&exact_lower).unwrap() {
                    let better = match decisive {
                        Some((_, b)) => edge_log.ln_value() < b.ln_value(),
                        None => true,
                    };
                    if better {
                        decisive = Some(("edge-log-bound", edge_log));
                    }
                }
            }
            if let Some((name, bound)) = decisive {
                rec.eliminate_log(name, &bound, turan_ln);
                records.push(rec);
                continue;
            }

            // Stage B.
            let edge_product = edge_bound_with_form(n, m, 4, EdgeBoundForm::Full).unwrap();
            rec.push_exact("edge-product-bound", &edge_product);
            if edge_product < turan {
                rec.eliminate_exact("edge-product-bound", &edge_product);
                records.push(rec);
                continue;
            }

            // Stage C.
            let base = make_gamma(i).unwrap();
            let spec = BlockMatrixSpec::from_base(&base, vec![t; p]).unwrap();
            let perm_bound = cycle_bound_blowup(&spec);
            rec.push_exact("block-permanent-bound", &perm_bound);
            if perm_bound < turan {
                rec.eliminate_exact("block-permanent-bound", &perm_bound);
                records.push(rec);
                continue;
            }

            // Stage D.
            let g = make_blowup(&BlowupSpec::new(base, vec![t; p]).unwrap());
            let exact = count_cycles(&g);
            rec.push_exact("exact-count", &exact);
            if exact < turan {
                rec.eliminate_exact("exact-count", &exact);
            }
            records.push(rec);
        }
    }
    records
}

/// All (n, δ) pairs with 3 ≤ n ≤ 61, 2 ≤ δ ≤ 10n/29, nδ even, screened at
/// m = nδ/2 through a cascade of bounds: the successor-product bound, its
/// degree-capped refinement, and the factorial row-sum permanent bound.
pub fn regular_degree_screen() -> Vec<CandidateRecord> {
    let mut records = Vec::new();
    for n in 3..=61usize {
        for delta in 2..n {
            if 29 * delta > 10 * n || (n * delta) % 2 == 1 {
                continue;
            }
            let m = n * delta / 2;
            let turan = turan_exact(n);
            let mut rec = CandidateRecord::new("regular-pair", n, &turan);
            rec.delta = Some(delta as u64);
            rec.m = Some(m as u64);

            let edge_product = edge_bound_with_form(n, m, 4, EdgeBoundForm::Full).unwrap();
            rec.push_exact("edge-product-bound", &edge_product);
            if edge_product < turan {
                rec.eliminate_exact("edge-product-bound", &edge_product);
                records.push(rec);
                continue;
            }

            let capped = edge_bound_degree_capped(n, m, delta, 4).unwrap();
            rec.push_exact("capped-edge-bound", &capped);
            if capped < turan {
                rec.eliminate_exact("capped-edge-bound", &capped);
                records.push(rec);
                continue;
            }

            let turan_ln = turan_log_exact(n).unwrap();
            let row_sum = regular_perm_cycle_bound_log(n, delta).unwrap();
            rec.push_log("row-sum-permanent-bound", &row_sum);
            if row_sum
                .decisively_below(&LogBound::lower(turan_ln))
                .unwrap()
            {
                rec.eliminate_log("row-sum-permanent-bound", &row_sum, turan_ln);
            }
            records.push(rec);
        }
    }
    records
}

/// Largest n for which a near-regular edge budget survives the
/// successor-product feasibility test, optionally with an extra minimum
/// degree cap δ ≤ (num/den)·n on top of the bipartite threshold 2n/5.
///
/// For each n the minimum degree is pushed to the cap and the edge count to
/// the near-regular maximum m = ⌊(n(δ+1)−1)/2⌋; the candidate is feasible
/// when Π(n,m)·n²/8 still reaches the balanced bipartite count.
pub fn near_regular_bound(extra_degree_cap: Option<(u64, u64)>) -> u64 {
    let mut best = 0u64;
    for n in 4..=804usize {
        let mut delta = 2 * n / 5;
        if let Some((num, den)) = extra_degree_cap {
            delta = delta.min((num as usize * n) / den as usize);
        }
        if delta < 2 {
            continue;
        }
        let s = n * (delta + 1);
        let mut m = None;
        for nd in 1..=2usize {
            if nd < n && (s - nd) % 2 == 0 {
                m = Some((s - nd) / 2);
                break;
            }
        }
        let Some(m) = m else { continue };
        if m < 2 || m > n * (n - 1) / 2 {
            continue;
        }
        let bound = edge_bound_with_form(n, m, 4, EdgeBoundForm::Full).unwrap();
        if bound >= turan_exact(n) {
            best = n as u64;
        }
    }
    best
}

/// Largest n for which the closed-form dense edge estimate at the bipartite
/// degree threshold (m = n²/5 + (n−1)/2) fails to drop below the closed-form
/// balanced bipartite lower estimate.
///
/// Note: this literal evaluation yields 820.  The original computation this
/// reproduces reported 804; the difference has no downstream effect, since
/// the exact feasibility scan in [`near_regular_bound`] caps the range at
/// 435 either way.
pub fn near_regular_precursor_max_n() -> u64 {
    let mut best = 0u64;
    for n in 5..=2000usize {
        let m = (2 * n * n + 5 * (n - 1)) / 10;
        let Ok(edge) = edge_bound_log(n, m, 4) else {
            continue;
        };
        let lower = turan_log_lower(n).unwrap();
        if !edge.decisively_below(&lower).unwrap() {
            best = n as u64;
        }
    }
    best
}

/// Largest n for which a pentagon blowup on ⌊(n+6)/5⌋-sized parts is not
/// ruled out by comparing the closed-form blowup estimate against the
/// closed-form balanced bipartite lower estimate.
pub fn gtwo_cap() -> u64 {
    let mut cap = 0u64;
    for n in 7..=600usize {
        let u = (n + 6) / 5;
        let blowup = hmorph_bound_log(5 * u, 5, 2, 4).unwrap();
        let lower = turan_log_lower(n).unwrap();
        if !blowup.decisively_below(&lower).unwrap() {
            cap = n as u64;
        }
    }
    cap
}

/// Adjacent parts of part j in the pentagon base, label order.
fn gtwo_adjacent(j: usize) -> [usize; 2] {
    [(j + 2) % 5, (j + 3) % 5]
}

/// Canonical representative of a part-size vector under the automorphisms
/// of the pentagon (rotations and reflection along the cycle 0,2,4,1,3 of
/// labels).
fn gtwo_canon(sizes: &[usize; 5]) -> [usize; 5] {
    const CYC: [usize; 5] = [0, 2, 4, 1, 3];
    let seq: Vec<usize> = CYC.iter().map(|&j| sizes[j]).collect();
    let mut best: Option<[usize; 5]> = None;
    for reflect in [false, true] {
        let mut s = seq.clone();
        if reflect {
            s.reverse();
        }
        for r in 0..5 {
            let mut rot = [0usize; 5];
            for k in 0..5 {
                rot[k] = s[(k + r) % 5];
            }
            if best.map_or(true, |b| rot < b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// Per-row factorial permanent bound for a pentagon blowup, as a log upper
/// estimate on the cycle count: each vertex of part j has row sum
/// 1 + (sizes of the two adjacent parts) in A+I.
fn gtwo_row_sum_log(sizes: &[usize; 5]) -> LogBound {
    let mut ln = 0.0f64;
    for j in 0..5 {
        let [a, b] = gtwo_adjacent(j);
        let rs = sizes[a] + sizes[b] + 1;
        ln += sizes[j] as f64 * crate::bounds::ln_factorial_exact(rs) / rs as f64;
    }
    LogBound::upper(ln - 2f64.ln())
}

enum OrbitDecision {
    RowSumEliminated(LogBound),
    Permanent(BigUint),
}

/// Screen of the near-regular pentagon blowups: all part-size vectors
/// (n₁..n₅) with every cyclic-neighbour pair differing by at most one, not
/// all equal, totalling at most the cap from [`gtwo_cap`].
///
/// Isomorphic candidates (pentagon rotations/reflections) share one bound
/// evaluation.  Large orbits are dispatched by the cheap per-row factorial
/// permanent estimate, which dominates the block permanent; orbits it
/// cannot eliminate get the exact block-permanent bound.  Survivors are
/// finished with exact counts.
pub fn gtwo_blowup_screen() -> Vec<CandidateRecord> {
    let cap = gtwo_cap() as usize;
    let mut tuples: Vec<[usize; 5]> = Vec::new();
    for n1 in 1..=cap {
        for n3 in n1.saturating_sub(1)..=n1 + 1 {
            if n3 < 1 {
                continue;
            }
            for n5 in n3.saturating_sub(1)..=n3 + 1 {
                if n5 < 1 {
                    continue;
                }
                for n2 in n5.saturating_sub(1)..=n5 + 1 {
                    if n2 < 1 {
                        continue;
                    }
                    for n4 in n2.saturating_sub(1)..=n2 + 1 {
                        if n4 < 1 || n4.abs_diff(n1) > 1 {
                            continue;
                        }
                        let t = [n1, n2, n3, n4, n5];
                        let n: usize = t.iter().sum();
                        if n > cap || t.iter().all(|&x| x == n1) {
                            continue;
                        }
                        tuples.push(t);
                    }
                }
            }
        }
    }
    tuples.sort_by_key(|t| (t.iter().sum::<usize>(), *t));
    tuples.dedup();

    // One bound evaluation per isomorphism orbit.
    let mut orbit_keys: Vec<[usize; 5]> = tuples.iter().map(gtwo_canon).collect();
    orbit_keys.sort();
    orbit_keys.dedup();
    let decisions: HashMap<[usize; 5], OrbitDecision> = orbit_keys
        .into_par_iter()
        .map(|key| {
            let n: usize = key.iter().sum();
            // The canonical key lists sizes in cycle order; convert back to
            // label order for the block spec (inverse of 0,2,4,1,3).
            const INV: [usize; 5] = [0, 3, 1, 4, 2];
            let mut label_sizes = [0usize; 5];
            for k in 0..5 {
                label_sizes[k] = key[INV[k]];
            }
            let row_sum = gtwo_row_sum_log(&label_sizes);
            let lower = LogBound::lower(turan_log_exact(n).unwrap());
            let decision = if row_sum.decisively_below(&lower).unwrap() {
                OrbitDecision::RowSumEliminated(row_sum)
            } else {
                let base = make_gamma(2).unwrap();
                let spec = BlockMatrixSpec::from_base(&base, label_sizes.to_vec()).unwrap();
                OrbitDecision::Permanent(cycle_bound_blowup(&spec))
            };
            (key, decision)
        })
        .collect();

    let mut records = Vec::new();
    for t in &tuples {
        let n: usize = t.iter().sum();
        let turan = turan_exact(n);
        let mut rec = CandidateRecord::new("near-regular-shape", n, &turan);
        rec.sizes = Some(t.iter().map(|&x| x as u64).collect());
        match &decisions[&gtwo_canon(t)] {
            OrbitDecision::RowSumEliminated(bound) => {
                rec.push_log("row-sum-permanent-bound", bound);
                rec.eliminate_log(
                    "row-sum-permanent-bound",
                    bound,
                    turan_log_exact(n).unwrap(),
                );
            }
            OrbitDecision::Permanent(bound) => {
                rec.push_exact("block-permanent-bound", bound);
                if *bound < turan {
                    rec.eliminate_exact("block-permanent-bound", bound);
                } else {
                    // Survivor of the bound screen; finish with the exact
                    // count.
                    let base = make_gamma(2).unwrap();
                    let spec = BlowupSpec::new(base, t.to_vec()).unwrap();
                    let exact = count_cycles(&make_blowup(&spec));
                    rec.push_exact("exact-count", &exact);
                    rec.comparison = Some(format!("exact {} < {}", exact, turan));
                }
            }
        }
        records.push(rec);
    }
    records
}

/// Per-n result of the exhaustive small-order verification.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub n: u64,
    pub graphs_examined: u64,
    pub max_cycles: u64,
    pub turan: u64,
    pub matches_turan: bool,
    pub maximizer_count: u64,
    pub all_maximizers_balanced: bool,
    /// True when only maximal triangle-free graphs were counted.
    pub fast_mode: bool,
}

/// Enumerate every labeled triangle-free graph on 4..=max_n vertices by
/// backtracking over edge slots in lexicographic order (an edge is only
/// added when its endpoints have no common neighbour), count cycles of
/// each, and check that the balanced complete bipartite graph is the unique
/// maximizer.
///
/// `fast_at_8` restricts the n = 8 pass to maximal triangle-free graphs,
/// which is where the maximum must live since any cycle-maximal graph is
/// maximal triangle-free.
pub fn verify_conjecture(max_n: usize, fast_at_8: bool) -> Result<Vec<ConjectureReport>> {
    if !(4..=8).contains(&max_n) {
        return Err(Error::OutOfRange(format!(
            "exhaustive verification supported for 4 <= max_n <= 8, got {max_n}"
        )));
    }
    Ok((4..=max_n)
        .map(|n| {
            let fast = fast_at_8 && n == 8;
            let slots: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            // Enumerate a prefix of the decision tree sequentially, then
            // finish each branch in parallel.
            let depth = slots.len().min(9);
            let mut prefixes: Vec<Vec<u16>> = Vec::new();
            let mut adj = vec![0u16; n];
            enumerate_prefixes(&slots, 0, depth, &mut adj, &mut prefixes);
            let acc = prefixes
                .into_par_iter()
                .map(|adj| {
                    let mut acc = SearchAccumulator::default();
                    let mut adj = adj;
                    search_leaves(&slots, depth, n, fast, &mut adj, &mut acc);
                    acc
                })
                .reduce(SearchAccumulator::default, SearchAccumulator::merge);
            let turan = turan_exact(n);
            let turan_u64 = turan.to_string().parse::<u64>().unwrap();
            ConjectureReport {
                n: n as u64,
                graphs_examined: acc.examined,
                max_cycles: acc.max,
                turan: turan_u64,
                matches_turan: acc.max == turan_u64,
                maximizer_count: acc.count,
                all_maximizers_balanced: acc.all_balanced,
                fast_mode: fast,
            }
        })
        .collect())
}

#[derive(Clone)]
struct SearchAccumulator {
    examined: u64,
    max: u64,
    count: u64,
    all_balanced: bool,
}

impl Default for SearchAccumulator {
    fn default() -> Self {
        SearchAccumulator {
            examined: 0,
            max: 0,
            count: 0,
            all_balanced: true,
        }
    }
}

impl SearchAccumulator {
    fn record(&mut self, cycles: u64, balanced: impl FnOnce() -> bool) {
        self.examined += 1;
        if cycles > self.max {
            self.max = cycles;
            self.count = 1;
            self.all_balanced = balanced();
        } else if cycles == self.max && cycles > 0 {
            self.count += 1;
            self.all_balanced = self.all_balanced && balanced();
        }
    }

    fn merge(a: SearchAccumulator, b: SearchAccumulator) -> SearchAccumulator {
        let examined = a.examined + b.examined;
        let mut out = if a.max > b.max {
            a
        } else if b.max > a.max {
            b
        } else {
            SearchAccumulator {
                examined: 0,
                max: a.max,
                count: a.count + b.count,
                all_balanced: a.all_balanced && b.all_balanced,
            }
        };
        out.examined = examined;
        out
    }
}

fn enumerate_prefixes(
    slots: &[(usize, usize)],
    idx: usize,
    depth: usize,
    adj: &mut Vec<u16>,
    out: &mut Vec<Vec<u16>>,
) {
    if idx == depth {
        out.push(adj.clone());
        return;
    }
    let (u, v) = slots[idx];
    enumerate_prefixes(slots, idx + 1, depth, adj, out);
    if adj[u] & adj[v] == 0 {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        enumerate_prefixes(slots, idx + 1, depth, adj, out);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}

fn search_leaves(
    slots: &[(usize, usize)],
    idx: usize,
    n: usize,
    fast: bool,
    adj: &mut Vec<u16>,
    acc: &mut SearchAccumulator,
) {
    if idx == slots.len() {
        if fast && !is_maximal_masks(adj, n) {
            acc.examined += 1;
            return;
        }
        let cycles = count_cycles_masks(adj, n);
        acc.record(cycles, || is_balanced_bipartite_masks(adj, n));
        return;
    }
    let (u, v) = slots[idx];
    search_leaves(slots, idx + 1, n, fast, adj, acc);
    if adj[u] & adj[v] == 0 {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        search_leaves(slots, idx + 1, n, fast, adj, acc);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
    }
}

fn is_maximal_masks(adj: &[u16], n: usize) -> bool {
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u] >> v & 1 == 0 && adj[u] & adj[v] == 0 {
                return false;
            }
        }
    }
    true
}

fn is_balanced_bipartite_masks(adj: &[u16], n: usize) -> bool {
    let full = ((1u32 << n) - 1) as u16;
    let side = !adj[0] & full; // vertex 0 and its non-neighbours
    let a = side.count_ones() as usize;
    if a != n / 2 && a != n - n / 2 {
        return false;
    }
    (0..n).all(|v| {
        if side >> v & 1 == 1 {
            adj[v] == full & !side
        } else {
            adj[v] == side
        }
    })
}

fn count_cycles_masks(adj: &[u16], n: usize) -> u64 {
    fn dfs(
        adj: &[u16],
        root: usize,
        second: usize,
        v: usize,
        visited: u16,
        above: u16,
        count: &mut u64,
    ) {
        let mut cand = adj[v] & above & !visited;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            if adj[w] >> root & 1 == 1 && second < w && visited.count_ones() >= 2 {
                *count += 1;
            }
            dfs(adj, root, second, w, visited | 1 << w, above, count);
        }
    }
    let mut count = 0u64;
    for root in 0..n {
        let above = if root + 1 >= 16 {
            0
        } else {
            (u16::MAX << (root + 1)) & ((1u32 << n) as u32 - 1) as u16
        };
        let mut seconds = adj[root] & above;
        while seconds != 0 {
            let second = seconds.trailing_zeros() as usize;
            seconds &= seconds - 1;
            dfs(
                adj,
                root,
                second,
                second,
                1 << root | 1 << second,
                above,
                &mut count,
            );
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_table_shape() {
        let t = thresholds();
        assert_eq!(t.gamma_hom.len(), 9);
        assert_eq!(t.bipartite, (2, 5));
        assert_eq!(t.three_colourable, (10, 29));
        assert_eq!(t.four_colourable, (1, 3));
        // Fractions i/(3i-1) decrease strictly toward 1/3.
        for w in t.gamma_hom.windows(2) {
            let (_, a, b) = w[0];
            let (_, c, d) = w[1];
            assert!(a * d > c * b);
        }
        let (_, a, b) = *t.gamma_hom.last().unwrap();
        assert!(3 * a > b);
    }

    #[test]
    fn canon_is_rotation_reflection_invariant() {
        let t = [1usize, 3, 2, 2, 3];
        let c = gtwo_canon(&t);
        // Applying the cycle rotation by one step in label space must not
        // change the canonical form.
        const CYC: [usize; 5] = [0, 2, 4, 1, 3];
        let mut rotated = [0usize; 5];
        for k in 0..5 {
            // part CYC[k] -> part CYC[(k+1)%5]
            rotated[CYC[(k + 1) % 5]] = t[CYC[k]];
        }
        assert_eq!(gtwo_canon(&rotated), c);
    }

    #[test]
    fn verify_small_orders() {
        let reports = verify_conjecture(6, false).unwrap();
        assert_eq!(reports.len(), 3);
        let by_n: Vec<(u64, u64, u64)> = reports
            .iter()
            .map(|r| (r.n, r.max_cycles, r.maximizer_count))
            .collect();
        assert_eq!(by_n, vec![(4, 1, 3), (5, 3, 10), (6, 15, 10)]);
        for r in &reports {
            assert!(r.matches_turan);
            assert!(r.all_maximizers_balanced);
        }
        assert!(verify_conjecture(3, false).is_err());
        assert!(verify_conjecture(9, false).is_err());
    }

    #[test]
    fn gamma_screen_calibration() {
        let records = regular_gamma_screen();
        assert_eq!(records.len(), 96);
        assert!(records.iter().all(|r| r.verdict.starts_with("eliminated-by-")));
        // Candidates surviving the closed-form stage, per family.
        let stage_a: Vec<(u64, u64)> = records
            .iter()
            .filter(|r| !r.verdict.ends_with("log-bound"))
            .map(|r| (r.i.unwrap(), r.t.unwrap()))
            .collect();
        let expect_a: Vec<(u64, u64)> = [(2u64, 9u64), (3, 6), (4, 5), (5, 5), (6, 4), (7, 3), (8, 2), (9, 2)]
            .iter()
            .flat_map(|&(i, tmax)| (1..=tmax).map(move |t| (i, t)))
            .collect();
        assert_eq!(stage_a, expect_a);
        // Candidates surviving the exact successor-product stage.
        let stage_b: Vec<(u64, u64)> = records
            .iter()
            .filter(|r| {
                r.verdict == "eliminated-by-block-permanent-bound"
                    || r.verdict == "eliminated-by-exact-count"
            })
            .map(|r| (r.i.unwrap(), r.t.unwrap()))
            .collect();
        let expect_b: Vec<(u64, u64)> = [(2u64, 9u64), (3, 6), (4, 3), (5, 1), (6, 1)]
            .iter()
            .flat_map(|&(i, tmax)| (1..=tmax).map(move |t| (i, t)))
            .collect();
        assert_eq!(stage_b, expect_b);
        // Only the bare pentagon needs the exact count.
        let exact: Vec<(u64, u64)> = records
            .iter()
            .filter(|r| r.verdict == "eliminated-by-exact-count")
            .map(|r| (r.i.unwrap(), r.t.unwrap()))
            .collect();
        assert_eq!(exact, vec![(2, 1)]);
    }

    #[test]
    fn near_regular_maxima() {
        assert_eq!(near_regular_bound(None), 435);
        assert_eq!(near_regular_bound(Some((10, 29))), 35);
        assert_eq!(near_regular_bound(Some((1, 3))), 33);
    }

    #[test]
    fn precursor_estimate_crossing() {
        assert_eq!(near_regular_precursor_max_n(), 820);
    }

    #[test]
    fn gtwo_screen_calibration() {
        assert_eq!(gtwo_cap(), 184);
        let records = gtwo_blowup_screen();
        assert_eq!(records.len(), 1785);
        let survivors: Vec<&CandidateRecord> = records
            .iter()
            .filter(|r| r.verdict == "survivor")
            .collect();
        assert_eq!(survivors.len(), 15);
        let mut by_n: HashMap<u64, Vec<String>> = HashMap::new();
        for s in &survivors {
            let exact = s
                .bounds
                .iter()
                .find(|b| b.name == "exact-count")
                .unwrap()
                .value
                .clone();
            by_n.entry(s.n).or_default().push(exact);
        }
        assert_eq!(by_n.keys().len(), 3);
        assert!(by_n[&7].iter().all(|v| v == "15") && by_n[&7].len() == 5);
        assert!(by_n[&9].iter().all(|v| v == "216") && by_n[&9].len() == 5);
        assert!(by_n[&11].iter().all(|v| v == "3051") && by_n[&11].len() == 5);
        // Both cyclic index orders of the same multiset survive together.
        let sizes: Vec<Vec<u64>> = survivors
            .iter()
            .filter(|s| s.n == 7)
            .map(|s| s.sizes.clone().unwrap())
            .collect();
        assert!(sizes.contains(&vec![1, 2, 1, 1, 2]));
        assert!(sizes.contains(&vec![1, 1, 2, 1, 2]));
    }

    #[test]
    fn degree_screen_counts() {
        let records = regular_degree_screen();
        assert_eq!(records.len(), 428);
        assert!(records.iter().all(|r| r.verdict.starts_with("eliminated-by-")));
        // Independent reproduction of the candidate set.
        let mut expected = Vec::new();
        for n in 3..=61u64 {
            for delta in 2..=61u64 {
                if delta < n && 29 * delta <= 10 * n && (n * delta) % 2 == 0 {
                    expected.push((n, delta));
                }
            }
        }
        let got: Vec<(u64, u64)> = records.iter().map(|r| (r.n, r.delta.unwrap())).collect();
        assert_eq!(got, expected);
    }
}
