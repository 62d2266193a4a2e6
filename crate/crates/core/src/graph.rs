//! The Johnson graph J_n(m, m-1) as an implicit graph.
//!
//! Vertices are the m-subsets of `{1, ..., n}`; two vertices are adjacent
//! when their labels share exactly `m - 1` elements. Nothing is stored:
//! adjacency, neighbours and edges are computed from labels on demand.

use std::collections::VecDeque;
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::Serialize;

use crate::combinat::{binomial, rank, unrank, Combinations, SubsetRank, VertexLabel};
use crate::error::{Error, Result};

/// Vertex cap applied by [`export`] unless the caller passes another one.
pub const DEFAULT_EXPORT_CAP: u64 = 100_000;

/// Which clique regime a parameter pair falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// `n >= m + 2`: both maximal-clique classes exist.
    Standard,
    /// `n = m + 1`: the graph is the complete graph K_{m+1}.
    Degenerate,
}

/// Parameters `(n, m)` of J_n(m, m-1). Requires `m >= 2` and `n >= m + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct JohnsonParams {
    n: u32,
    m: u32,
}

impl JohnsonParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParams(format!(
                "m must be at least 2, got m={m}"
            )));
        }
        if n < m + 1 {
            return Err(Error::InvalidParams(format!(
                "n must be at least m+1, got n={n}, m={m}"
            )));
        }
        Ok(JohnsonParams { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn regime(&self) -> Regime {
        if self.n == self.m + 1 {
            Regime::Degenerate
        } else {
            Regime::Standard
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.regime() == Regime::Degenerate
    }

    /// `C(n, m)`.
    pub fn vertex_count(&self) -> Result<u64> {
        binomial(self.n.into(), self.m.into())
    }

    /// `C(n, m) * m * (n - m) / 2`.
    pub fn edge_count(&self) -> Result<u64> {
        let v = u128::from(self.vertex_count()?);
        let e = v * u128::from(self.m) * u128::from(self.n - self.m) / 2;
        u64::try_from(e)
            .map_err(|_| Error::Overflow(format!("edge count of {self} does not fit in 64 bits")))
    }

    /// Every vertex has `m * (n - m)` neighbours.
    pub fn degree(&self) -> u64 {
        u64::from(self.m) * u64::from(self.n - self.m)
    }

    pub fn check_vertex(&self, label: &VertexLabel) -> Result<()> {
        label.check_vertex(self.n, self.m)
    }

    pub fn rank(&self, label: &VertexLabel) -> Result<SubsetRank> {
        self.check_vertex(label)?;
        rank(label, self.n)
    }

    pub fn unrank(&self, r: SubsetRank) -> Result<VertexLabel> {
        unrank(r, self.n, self.m)
    }

    /// Adjacency with both labels validated against these parameters.
    pub fn are_adjacent(&self, u: &VertexLabel, v: &VertexLabel) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        are_adjacent(u, v)
    }

    /// All vertices in colex order.
    pub fn vertices(&self) -> Combinations {
        Combinations::new(self.n, self.m)
    }

    /// Neighbours of `u` in colex order: every label obtained by swapping
    /// one element of `u` for one element outside it.
    pub fn neighbors(&self, u: &VertexLabel) -> Result<Vec<VertexLabel>> {
        self.check_vertex(u)?;
        let outside = VertexLabel::ground(self.n).difference(u);
        let mut out = Vec::with_capacity(self.degree() as usize);
        for &drop in u.elements() {
            let base = u.without(drop);
            for &add in outside.elements() {
                out.push(base.with(add));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Every edge once, smaller endpoint first, ordered by endpoint ranks.
    pub fn edges(&self) -> Edges {
        Edges {
            params: *self,
            vertices: self.vertices(),
            current: None,
            pending: VecDeque::new(),
        }
    }
}

impl fmt::Display for JohnsonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J_{}({},{})", self.n, self.m, self.m - 1)
    }
}

/// `u` and `v` are adjacent when they have equal size and share all but one
/// element. A label is never adjacent to itself.
pub fn are_adjacent(u: &VertexLabel, v: &VertexLabel) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::InvalidLabel(format!(
            "labels of different sizes: {u} has {}, {v} has {}",
            u.len(),
            v.len()
        )));
    }
    Ok(!u.is_empty() && u.intersection_len(v) + 1 == u.len())
}

/// An undirected edge with the colex-smaller endpoint stored first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    first: VertexLabel,
    second: VertexLabel,
}

impl Edge {
    /// Builds a canonical edge; fails when the labels are not adjacent.
    pub fn new(a: VertexLabel, b: VertexLabel) -> Result<Self> {
        if !are_adjacent(&a, &b)? {
            return Err(Error::InvalidLabel(format!("{a} and {b} are not adjacent")));
        }
        Ok(if a < b {
            Edge {
                first: a,
                second: b,
            }
        } else {
            Edge {
                first: b,
                second: a,
            }
        })
    }

    pub fn first(&self) -> &VertexLabel {
        &self.first
    }

    pub fn second(&self) -> &VertexLabel {
        &self.second
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -- {}", self.first, self.second)
    }
}

/// Iterator returned by [`JohnsonParams::edges`].
pub struct Edges {
    params: JohnsonParams,
    vertices: Combinations,
    current: Option<VertexLabel>,
    pending: VecDeque<VertexLabel>,
}

impl Iterator for Edges {
    type Item = Edge;

    fn next(&mut self) -> Option<Edge> {
        loop {
            if let (Some(u), Some(v)) = (&self.current, self.pending.pop_front()) {
                return Some(Edge {
                    first: u.clone(),
                    second: v,
                });
            }
            let u = self.vertices.next()?;
            let later = self
                .params
                .neighbors(&u)
                .expect("enumerated vertex is valid")
                .into_iter()
                .filter(|v| *v > u);
            self.pending = later.collect();
            self.current = Some(u);
        }
    }
}

/// Output formats accepted by [`export`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Edgelist,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            "edgelist" => Ok(ExportFormat::Edgelist),
            other => Err(format!(
                "unknown format {other:?} (expected dot, json or edgelist)"
            )),
        }
    }
}

fn dot_id(label: &VertexLabel) -> String {
    let parts: Vec<String> = label.elements().iter().map(u32::to_string).collect();
    format!("\"{}\"", parts.join("_"))
}

#[derive(Serialize)]
struct JsonGraph {
    n: u32,
    m: u32,
    vertices: Vec<Vec<u32>>,
    edges: Vec<[u64; 2]>,
}

/// Writes the whole graph to `sink`. Refuses graphs with more than `cap`
/// vertices.
pub fn export<W: Write + ?Sized>(
    p: &JohnsonParams,
    format: ExportFormat,
    sink: &mut W,
    cap: u64,
) -> Result<()> {
    let count = p.vertex_count()?;
    if count > cap {
        return Err(Error::CapExceeded {
            what: "export",
            count,
            cap,
        });
    }
    match format {
        ExportFormat::Edgelist => {
            for e in p.edges() {
                writeln!(sink, "{e}")?;
            }
        }
        ExportFormat::Dot => {
            writeln!(sink, "graph J_{}_{} {{", p.n, p.m)?;
            for v in p.vertices() {
                writeln!(sink, "  {};", dot_id(&v))?;
            }
            for e in p.edges() {
                writeln!(sink, "  {} -- {};", dot_id(e.first()), dot_id(e.second()))?;
            }
            writeln!(sink, "}}")?;
        }
        ExportFormat::Json => {
            let vertices = p.vertices().map(Vec::from).collect();
            let edges = p
                .edges()
                .map(|e| Ok([p.rank(e.first())?.0, p.rank(e.second())?.0]))
                .collect::<Result<_>>()?;
            let doc = JsonGraph {
                n: p.n,
                m: p.m,
                vertices,
                edges,
            };
            serde_json::to_writer(&mut *sink, &doc).map_err(std::io::Error::from)?;
            writeln!(sink)?;
        }
    }
    Ok(())
}
