//! Brute-force ground truth.
//!
//! The graph is materialized as a dense bit-set adjacency matrix and its
//! maximal cliques are enumerated with Bron–Kerbosch (Tomita pivoting).
//! Nothing here uses the closed-form results; [`verify`] compares the two.

use std::collections::HashMap;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::cliques::{
    all_maximal_cliques, clique_number, clique_partition, clique_partition_number, intersection_of,
};
use crate::combinat::{binomial, VertexLabel};
use crate::error::{Error, Result};
use crate::graph::{are_adjacent, JohnsonParams, Regime};

/// Vertex cap for [`materialize`] unless the caller passes another one.
pub const DEFAULT_MATERIALIZE_CAP: u64 = 2000;

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * WORD + b)
        })
    })
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn and_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

/// Undirected simple graph on `0..vertex_count` with bit-set rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseGraph {
    vertex_count: usize,
    rows: Vec<Vec<u64>>,
}

impl DenseGraph {
    pub fn new(vertex_count: usize) -> Self {
        DenseGraph {
            vertex_count,
            rows: vec![vec![0; words_for(vertex_count)]; vertex_count],
        }
    }

    /// Adds the edge `{i, j}`. Self-loops are ignored.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.rows[i][j / WORD] |= 1 << (j % WORD);
        self.rows[j][i / WORD] |= 1 << (i % WORD);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / WORD] >> (j % WORD) & 1 == 1
    }

    pub fn degree(&self, i: usize) -> usize {
        self.rows[i].iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count)
            .map(|i| self.degree(i))
            .sum::<usize>()
            / 2
    }

    /// Adjacent pairs `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count).flat_map(move |i| {
            bits(&self.rows[i])
                .filter(move |&j| j > i)
                .map(move |j| (i, j))
        })
    }

    /// Whether `members` is a clique that no outside vertex extends.
    pub fn is_maximal_clique(&self, members: &[usize]) -> bool {
        for (k, &a) in members.iter().enumerate() {
            if members[k + 1..].iter().any(|&b| !self.is_adjacent(a, b)) {
                return false;
            }
        }
        !(0..self.vertex_count)
            .filter(|v| !members.contains(v))
            .any(|v| members.iter().all(|&u| self.is_adjacent(u, v)))
    }

    /// All maximal cliques, each sorted ascending, the list sorted
    /// lexicographically.
    pub fn maximal_cliques(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.vertex_count == 0 {
            return out;
        }
        let mut all = vec![0u64; words_for(self.vertex_count)];
        for v in 0..self.vertex_count {
            all[v / WORD] |= 1 << (v % WORD);
        }
        let mut r = Vec::new();
        self.expand(&mut r, all, vec![0; words_for(self.vertex_count)], &mut out);
        for c in &mut out {
            c.sort_unstable();
        }
        out.sort();
        out
    }

    fn expand(
        &self,
        r: &mut Vec<usize>,
        mut p: Vec<u64>,
        mut x: Vec<u64>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if is_zero(&p) {
            if is_zero(&x) {
                out.push(r.clone());
            }
            return;
        }
        // Pivot: vertex of P ∪ X with the most neighbours in P, lowest
        // index on ties.
        let union: Vec<u64> = p.iter().zip(&x).map(|(a, b)| a | b).collect();
        let mut pivot = usize::MAX;
        let mut best = 0;
        for u in bits(&union) {
            let score = and_count(&p, &self.rows[u]);
            if pivot == usize::MAX || score > best {
                pivot = u;
                best = score;
            }
        }
        let branch: Vec<usize> = bits(&p).filter(|&v| !self.is_adjacent(pivot, v)).collect();
        for v in branch {
            r.push(v);
            self.expand(r, and(&p, &self.rows[v]), and(&x, &self.rows[v]), out);
            r.pop();
            p[v / WORD] &= !(1 << (v % WORD));
            x[v / WORD] |= 1 << (v % WORD);
        }
    }
}

/// Explicit J_n(m, m-1): vertex `i` is the label of colex rank `i`, and
/// adjacency comes from a pairwise scan.
pub fn materialize(p: &JohnsonParams, cap: u64) -> Result<DenseGraph> {
    let count = p.vertex_count()?;
    if count > cap {
        return Err(Error::CapExceeded {
            what: "materialize",
            count,
            cap,
        });
    }
    let labels: Vec<VertexLabel> = p.vertices().collect();
    let mut g = DenseGraph::new(labels.len());
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().skip(i + 1) {
            if are_adjacent(a, b)? {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Outcome of checking every closed-form claim for one `(n, m)` against
/// the brute-force oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub n: u32,
    pub m: u32,
    pub regime: Regime,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub oracle_clique_count: u64,
    pub closed_form_count: u64,
    pub sets_equal: bool,
    pub intersection_sizes_ok: bool,
    pub size_laws_ok: bool,
    pub clique_number_ok: bool,
    pub max_clique_size_observed: u64,
    pub edge_membership_ok: bool,
    pub partition_ok: bool,
    /// Closed-form clique partition number.
    pub cp: u64,
    /// `ceil(|E| / C(ω, 2))` from the oracle's edge count and largest
    /// clique; no edge partition into cliques can be smaller.
    pub cp_lower_bound: u64,
    pub max_class_applicable: bool,
    pub oracle_self_check_ok: bool,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// One JSON line. Timing is left out unless asked for, so that repeated
    /// runs are byte-identical.
    pub fn to_json_line(&self, with_timing: bool) -> String {
        let line = ReportLine {
            report: self,
            elapsed_ms: with_timing.then_some(self.elapsed.as_secs_f64() * 1e3),
        };
        serde_json::to_string(&line).expect("report serializes")
    }
}

#[derive(Serialize)]
struct ReportLine<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<f64>,
}

struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(what());
        }
        ok
    }
}

/// Runs every structural check for `p`. Failed checks are reported in the
/// result; only an oversized graph or an arithmetic overflow is an error.
pub fn verify(p: &JohnsonParams, cap: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let (n, m) = (p.n(), p.m());
    let mu = m as usize;
    let g = materialize(p, cap)?;
    let labels: Vec<VertexLabel> = p.vertices().collect();
    let oracle = g.maximal_cliques();
    let mut checks = Checks {
        failures: Vec::new(),
    };

    let vertex_count = p.vertex_count()?;
    let edge_count = p.edge_count()?;
    checks.check(g.edge_count() as u64 == edge_count, || {
        format!(
            "graph has {} edges, formula says {edge_count}",
            g.edge_count()
        )
    });

    let oracle_self_check_ok = checks.check(oracle.iter().all(|c| g.is_maximal_clique(c)), || {
        "oracle emitted a non-maximal clique".into()
    });

    // Oracle cliques as sorted label lists, plus their label intersections.
    let oracle_labels: Vec<Vec<VertexLabel>> = oracle
        .iter()
        .map(|c| {
            let mut ls: Vec<VertexLabel> = c.iter().map(|&i| labels[i].clone()).collect();
            ls.sort();
            ls
        })
        .collect();
    let oracle_inter: Vec<usize> = oracle_labels
        .iter()
        .map(|ls| intersection_of(ls).map(|s| s.len()))
        .collect::<Result<_>>()?;

    let intersection_sizes_ok =
        checks.check(oracle_inter.iter().all(|&s| s == 0 || s == mu - 1), || {
            format!(
                "oracle clique with intersection size outside {{0, {}}}",
                mu - 1
            )
        });

    let (min_size, max_size) = (u64::from(m) + 1, u64::from(n - m) + 1);
    let size_laws_ok = checks.check(
        oracle_labels.iter().zip(&oracle_inter).all(|(ls, &s)| {
            let len = ls.len() as u64;
            if s == 0 {
                len == min_size
            } else {
                len == max_size
            }
        }),
        || "oracle clique size does not match its class".into(),
    );

    let min_count = binomial(n.into(), u64::from(m) + 1)?;
    let max_count = match p.regime() {
        Regime::Standard => binomial(n.into(), u64::from(m) - 1)?,
        Regime::Degenerate => 0,
    };
    let closed_form_count = min_count + max_count;
    let oracle_min = oracle_inter.iter().filter(|&&s| s == 0).count() as u64;
    let oracle_max = oracle_labels.len() as u64 - oracle_min;
    checks.check(oracle_min == min_count && oracle_max == max_count, || {
        format!("oracle found {oracle_min} min + {oracle_max} max cliques, expected {min_count} + {max_count}")
    });

    let closed = all_maximal_cliques(p);
    let mut closed_labels: Vec<Vec<VertexLabel>> = closed.iter().map(|h| h.members()).collect();
    for ls in &mut closed_labels {
        ls.sort();
    }
    closed_labels.sort();
    let mut sorted_oracle = oracle_labels.clone();
    sorted_oracle.sort();
    let sets_equal = checks.check(
        closed_labels == sorted_oracle && closed.len() as u64 == closed_form_count,
        || "oracle clique set differs from the closed-form families".into(),
    );
    checks.check(closed_labels.windows(2).all(|w| w[0] != w[1]), || {
        "closed-form families share a clique".into()
    });

    let max_clique_size_observed = oracle.iter().map(|c| c.len() as u64).max().unwrap_or(0);
    let omega = clique_number(p);
    let mut clique_number_ok = max_clique_size_observed == omega;
    if m == 2 {
        clique_number_ok &= max_clique_size_observed == u64::from((n - 1).max(3));
    }
    checks.check(clique_number_ok, || {
        format!(
            "largest oracle clique has {max_clique_size_observed} vertices, formula says {omega}"
        )
    });

    // Each oracle edge: count containing oracle cliques per class.
    let mut per_edge: HashMap<(usize, usize), (u32, u32)> =
        g.edges().map(|e| (e, (0, 0))).collect();
    for (c, &s) in oracle.iter().zip(&oracle_inter) {
        for (k, &a) in c.iter().enumerate() {
            for &b in &c[k + 1..] {
                if let Some(slot) = per_edge.get_mut(&(a, b)) {
                    if s == 0 {
                        slot.0 += 1;
                    } else {
                        slot.1 += 1;
                    }
                }
            }
        }
    }
    let want_max = u32::from(p.regime() == Regime::Standard);
    let edge_membership_ok = checks.check(
        per_edge.values().all(|&(lo, hi)| lo == 1 && hi == want_max),
        || "some edge is not in exactly one clique per class".into(),
    );

    let cp = clique_partition_number(p)?;
    let per_clique = binomial(max_clique_size_observed, 2)?.max(1);
    let cp_lower_bound = (g.edge_count() as u64).div_ceil(per_clique);
    let partition_ok = match clique_partition(p) {
        Ok(part) => checks.check(
            part.len() as u64 == cp
                && part.len() as u64 == cp_lower_bound
                && part.covered_edge_count() == g.edge_count() as u64,
            || {
                format!(
                    "partition has {} parts covering {} edges; cp = {cp}, lower bound {cp_lower_bound}",
                    part.len(),
                    part.covered_edge_count()
                )
            },
        ),
        Err(e) => checks.check(false, || format!("partition failed: {e}")),
    };

    Ok(VerificationReport {
        n,
        m,
        regime: p.regime(),
        vertex_count,
        edge_count,
        oracle_clique_count: oracle.len() as u64,
        closed_form_count,
        sets_equal,
        intersection_sizes_ok,
        size_laws_ok,
        clique_number_ok,
        max_clique_size_observed,
        edge_membership_ok,
        partition_ok,
        cp,
        cp_lower_bound,
        max_class_applicable: p.regime() == Regime::Standard,
        oracle_self_check_ok,
        failures: checks.failures,
        elapsed: start.elapsed(),
    })
}

/// Valid `(n, m)` pairs from the two ranges, ordered by `(n, m)`.
pub fn param_pairs(
    m_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
) -> Vec<JohnsonParams> {
    let mut out: Vec<JohnsonParams> = n_range
        .flat_map(|n| {
            m_range
                .clone()
                .filter_map(move |m| JohnsonParams::new(n, m).ok())
        })
        .collect();
    out.sort_by_key(|p| (p.n(), p.m()));
    out
}

/// [`verify`] over every valid pair, on `jobs` worker threads. Output order
/// does not depend on `jobs`.
pub fn verify_range(
    m_range: RangeInclusive<u32>,
    n_range: RangeInclusive<u32>,
    jobs: usize,
    cap: u64,
) -> Result<Vec<VerificationReport>> {
    let pairs = param_pairs(m_range, n_range);
    if jobs <= 1 {
        return pairs.iter().map(|p| verify(p, cap)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("cannot start {jobs} workers: {e}")))?;
    pool.install(|| pairs.par_iter().map(|p| verify(p, cap)).collect())
}
