//! Closed-form clique structure of J_n(m, m-1).
//!
//! Every maximal clique belongs to one of two classes:
//!
//! * **min** — all m-subsets of a fixed (m+1)-set `B`. Size `m + 1`, empty
//!   label intersection, `C(n, m+1)` such cliques.
//! * **max** — all sets `A ∪ {x}` for a fixed (m-1)-set `A` and `x ∉ A`.
//!   Size `n - m + 1`, label intersection `A`, `C(n, m-1)` such cliques.
//!
//! An r-clique with `r > 2` lies in exactly one maximal clique, found from
//! the size of its label union (`m + 1` for min) or label intersection
//! (`m - 1` for max). An edge lies in exactly one clique of each class.
//!
//! When `n = m + 1` the graph is complete, the max-class candidates have
//! two members and are not maximal, and only the single min clique
//! `B = {1..n}` remains. Functions that need the max class report
//! [`Error::Regime`] there.

use std::collections::HashMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinat::{binomial, Combinations, SubsetRank, VertexLabel};
use crate::error::{Error, Result};
use crate::graph::{JohnsonParams, Regime};

/// The two classes of maximal cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CliqueClass {
    Min,
    Max,
}

impl fmt::Display for CliqueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueClass::Min => "min",
            CliqueClass::Max => "max",
        })
    }
}

/// Intersection of all labels. Fails on an empty input.
pub fn intersection_of(labels: &[VertexLabel]) -> Result<VertexLabel> {
    let (first, rest) = labels
        .split_first()
        .ok_or_else(|| Error::NotAClique("empty label set".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, l| acc.intersect(l)))
}

/// Union of all labels. Fails on an empty input.
pub fn union_of(labels: &[VertexLabel]) -> Result<VertexLabel> {
    let (first, rest) = labels
        .split_first()
        .ok_or_else(|| Error::NotAClique("empty label set".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, l| acc.union(l)))
}

fn check_members(p: &JohnsonParams, labels: &[VertexLabel]) -> Result<Vec<VertexLabel>> {
    if labels.is_empty() {
        return Err(Error::NotAClique("empty label set".into()));
    }
    for l in labels {
        p.check_vertex(l)?;
    }
    let mut sorted = labels.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::InvalidLabel(format!("duplicate label {}", w[0])));
    }
    Ok(sorted)
}

fn first_non_adjacent(labels: &[VertexLabel], m: usize) -> Option<(&VertexLabel, &VertexLabel)> {
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            if a.intersection_len(b) + 1 != m {
                return Some((a, b));
            }
        }
    }
    None
}

/// Whether every pair of the given labels is adjacent.
///
/// Labels must be distinct m-subsets of `{1..n}`; an empty or malformed
/// input is an error rather than `false`.
pub fn is_clique(p: &JohnsonParams, labels: &[VertexLabel]) -> Result<bool> {
    let sorted = check_members(p, labels)?;
    Ok(first_non_adjacent(&sorted, p.m() as usize).is_none())
}

/// A validated clique with its label intersection and union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clique {
    params: JohnsonParams,
    members: Vec<VertexLabel>,
    intersection: VertexLabel,
    union: VertexLabel,
}

impl Clique {
    /// Validates the labels pairwise. Members are stored in colex order.
    pub fn new(params: JohnsonParams, labels: &[VertexLabel]) -> Result<Self> {
        let members = check_members(&params, labels)?;
        if let Some((a, b)) = first_non_adjacent(&members, params.m() as usize) {
            return Err(Error::NotAClique(format!("{a} and {b} are not adjacent")));
        }
        let intersection = intersection_of(&members)?;
        let union = union_of(&members)?;
        Ok(Clique {
            params,
            members,
            intersection,
            union,
        })
    }

    pub fn params(&self) -> &JohnsonParams {
        &self.params
    }

    pub fn members(&self) -> &[VertexLabel] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn intersection(&self) -> &VertexLabel {
        &self.intersection
    }

    pub fn union(&self) -> &VertexLabel {
        &self.union
    }
}

/// A maximal clique, stored by its defining set only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MaximalClique {
    class: CliqueClass,
    set: VertexLabel,
    params: JohnsonParams,
}

impl MaximalClique {
    /// The min-class clique spanned by the (m+1)-set `b`.
    pub fn min(params: JohnsonParams, b: VertexLabel) -> Result<Self> {
        b.check_within(params.n())?;
        if b.len() != params.m() as usize + 1 {
            return Err(Error::InvalidLabel(format!(
                "min-class defining set must have m+1 = {} elements, got {b}",
                params.m() + 1
            )));
        }
        Ok(MaximalClique {
            class: CliqueClass::Min,
            set: b,
            params,
        })
    }

    /// The max-class clique around the (m-1)-set `a`. Not available in the
    /// degenerate regime, where such cliques are not maximal.
    pub fn max(params: JohnsonParams, a: VertexLabel) -> Result<Self> {
        a.check_within(params.n())?;
        if a.len() != params.m() as usize - 1 {
            return Err(Error::InvalidLabel(format!(
                "max-class defining set must have m-1 = {} elements, got {a}",
                params.m() - 1
            )));
        }
        if params.is_degenerate() {
            return Err(degenerate_max_error(&params));
        }
        Ok(MaximalClique {
            class: CliqueClass::Max,
            set: a,
            params,
        })
    }

    pub fn class(&self) -> CliqueClass {
        self.class
    }

    pub fn defining_set(&self) -> &VertexLabel {
        &self.set
    }

    pub fn params(&self) -> &JohnsonParams {
        &self.params
    }

    /// `m + 1` for min, `n - m + 1` for max.
    pub fn size(&self) -> u64 {
        match self.class {
            CliqueClass::Min => u64::from(self.params.m()) + 1,
            CliqueClass::Max => u64::from(self.params.n() - self.params.m()) + 1,
        }
    }

    /// Member labels. Min: the m-subsets of `B` in colex order. Max:
    /// `A ∪ {x}` for `x` ascending over the complement of `A`.
    pub fn members(&self) -> Vec<VertexLabel> {
        match self.class {
            CliqueClass::Min => Combinations::of(&self.set, self.params.m() as usize).collect(),
            CliqueClass::Max => VertexLabel::ground(self.params.n())
                .difference(&self.set)
                .elements()
                .iter()
                .map(|&x| self.set.with(x))
                .collect(),
        }
    }

    /// Whether the vertex `label` belongs to this clique.
    pub fn contains(&self, label: &VertexLabel) -> bool {
        if label.len() != self.params.m() as usize {
            return false;
        }
        match self.class {
            CliqueClass::Min => label.is_subset(&self.set),
            CliqueClass::Max => {
                self.set.is_subset(label) && label.check_within(self.params.n()).is_ok()
            }
        }
    }

    /// The intersection of all member labels.
    pub fn intersection_set(&self) -> VertexLabel {
        match self.class {
            CliqueClass::Min => VertexLabel::default(),
            CliqueClass::Max => self.set.clone(),
        }
    }

    /// The union of all member labels.
    pub fn union_set(&self) -> VertexLabel {
        match self.class {
            CliqueClass::Min => self.set.clone(),
            CliqueClass::Max => VertexLabel::ground(self.params.n()),
        }
    }

    /// The clique read as an intersecting family of m-sets.
    pub fn family_view(&self) -> FamilyDescription {
        let pairwise = match self.class {
            CliqueClass::Min => PairwiseLaw::UnionEquals(self.set.clone()),
            CliqueClass::Max => PairwiseLaw::IntersectionEquals(self.set.clone()),
        };
        FamilyDescription {
            class: self.class,
            defining_set: self.set.clone(),
            element_count: self.size(),
            total_intersection: self.intersection_set(),
            pairwise,
        }
    }
}

impl fmt::Display for MaximalClique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.class, self.set)
    }
}

impl Serialize for MaximalClique {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MaximalClique", 5)?;
        st.serialize_field("class", &self.class)?;
        st.serialize_field("set", self.set.elements())?;
        st.serialize_field("n", &self.params.n())?;
        st.serialize_field("m", &self.params.m())?;
        st.serialize_field("size", &self.size())?;
        st.end()
    }
}

/// Pairwise law obeyed by any two distinct members of a maximal clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairwiseLaw {
    /// Any two members have union `B`.
    UnionEquals(VertexLabel),
    /// Any two members have intersection `A`, which is also the total
    /// intersection.
    IntersectionEquals(VertexLabel),
}

/// Facts about a maximal clique viewed as a maximal family of m-sets with
/// pairwise intersections of size `m - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyDescription {
    pub class: CliqueClass,
    pub defining_set: VertexLabel,
    pub element_count: u64,
    pub total_intersection: VertexLabel,
    pub pairwise: PairwiseLaw,
}

/// Result of [`classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueClassification {
    /// A single vertex.
    Singleton(VertexLabel),
    /// An edge, contained in one clique of each class.
    EdgeBoth {
        min: MaximalClique,
        max: MaximalClique,
    },
    /// Extends to exactly one maximal clique, of class min.
    UniqueMin(MaximalClique),
    /// Extends to exactly one maximal clique, of class max.
    UniqueMax(MaximalClique),
    /// The clique is already maximal.
    AlreadyMaximal(MaximalClique),
}

impl CliqueClassification {
    pub fn kind(&self) -> &'static str {
        match self {
            CliqueClassification::Singleton(_) => "singleton",
            CliqueClassification::EdgeBoth { .. } => "edge_both",
            CliqueClassification::UniqueMin(_) => "unique_min",
            CliqueClassification::UniqueMax(_) => "unique_max",
            CliqueClassification::AlreadyMaximal(_) => "already_maximal",
        }
    }

    /// The maximal cliques this classification points at.
    pub fn extensions(&self) -> Vec<MaximalClique> {
        match self {
            CliqueClassification::Singleton(_) => Vec::new(),
            CliqueClassification::EdgeBoth { min, max } => vec![min.clone(), max.clone()],
            CliqueClassification::UniqueMin(h)
            | CliqueClassification::UniqueMax(h)
            | CliqueClassification::AlreadyMaximal(h) => vec![h.clone()],
        }
    }
}

fn degenerate_max_error(p: &JohnsonParams) -> Error {
    Error::Regime(format!(
        "{p} has n = m+1 and is the complete graph K_{}; max-class cliques are not maximal there",
        p.n()
    ))
}

/// Classifies a clique by the maximal cliques that contain it.
pub fn classify(c: &Clique) -> Result<CliqueClassification> {
    let p = *c.params();
    let m = p.m() as usize;
    let r = c.len();
    let union = c.union();
    let inter = c.intersection();

    if r == 1 {
        return Ok(CliqueClassification::Singleton(c.members()[0].clone()));
    }
    if r == 2 {
        let min = MaximalClique::min(p, union.clone())?;
        return Ok(match p.regime() {
            Regime::Degenerate => CliqueClassification::UniqueMin(min),
            Regime::Standard => {
                let max = MaximalClique::max(p, inter.clone())?;
                CliqueClassification::EdgeBoth { min, max }
            }
        });
    }

    let is_min = union.len() == m + 1;
    let is_max = inter.len() == m - 1;
    let h = match (is_min, is_max) {
        (true, false) if inter.len() + r == m + 1 => MaximalClique::min(p, union.clone())?,
        (false, true) if union.len() + 1 == m + r => MaximalClique::max(p, inter.clone())?,
        _ => {
            return Err(Error::Consistency(format!(
                "{r}-clique in {p} with |union| = {} and |intersection| = {} fits neither class",
                union.len(),
                inter.len()
            )))
        }
    };
    if let Some(stray) = c.members().iter().find(|l| !h.contains(l)) {
        return Err(Error::Consistency(format!(
            "{stray} is not a member of its extension {h}"
        )));
    }
    Ok(if r as u64 == h.size() {
        CliqueClassification::AlreadyMaximal(h)
    } else if is_min {
        CliqueClassification::UniqueMin(h)
    } else {
        CliqueClassification::UniqueMax(h)
    })
}

/// The maximal cliques containing `c`: two for an edge (one per class,
/// or just the min clique in the degenerate regime), exactly one for
/// larger cliques.
pub fn extend_to_maximal(c: &Clique) -> Result<Vec<MaximalClique>> {
    if c.len() < 2 {
        return Err(Error::NotAClique(format!(
            "extension needs at least 2 members, got {}",
            c.len()
        )));
    }
    Ok(classify(c)?.extensions())
}

/// Iterator over min-class cliques, in colex order of `B`.
pub struct MinCliques {
    params: JohnsonParams,
    sets: Combinations,
}

impl Iterator for MinCliques {
    type Item = MaximalClique;

    fn next(&mut self) -> Option<MaximalClique> {
        let set = self.sets.next()?;
        Some(MaximalClique {
            class: CliqueClass::Min,
            set,
            params: self.params,
        })
    }
}

/// Iterator over max-class cliques, in colex order of `A`.
pub struct MaxCliques {
    params: JohnsonParams,
    sets: Combinations,
}

impl Iterator for MaxCliques {
    type Item = MaximalClique;

    fn next(&mut self) -> Option<MaximalClique> {
        let set = self.sets.next()?;
        Some(MaximalClique {
            class: CliqueClass::Max,
            set,
            params: self.params,
        })
    }
}

/// All `C(n, m+1)` min-class cliques.
pub fn enumerate_min_cliques(p: &JohnsonParams) -> MinCliques {
    MinCliques {
        params: *p,
        sets: Combinations::new(p.n(), p.m() + 1),
    }
}

/// All `C(n, m-1)` max-class cliques. Fails in the degenerate regime.
pub fn enumerate_max_cliques(p: &JohnsonParams) -> Result<MaxCliques> {
    if p.is_degenerate() {
        return Err(degenerate_max_error(p));
    }
    Ok(MaxCliques {
        params: *p,
        sets: Combinations::new(p.n(), p.m() - 1),
    })
}

/// Every maximal clique: the min class followed by the max class (when the
/// max class is maximal at all).
pub fn all_maximal_cliques(p: &JohnsonParams) -> Vec<MaximalClique> {
    let mut out: Vec<MaximalClique> = enumerate_min_cliques(p).collect();
    if let Ok(maxes) = enumerate_max_cliques(p) {
        out.extend(maxes);
    }
    out
}

/// `ω = max(m + 1, n - m + 1)`.
pub fn clique_number(p: &JohnsonParams) -> u64 {
    u64::from((p.m() + 1).max(p.n() - p.m() + 1))
}

/// Clique partition number: the size of the smaller class, `C(n, m+1)`
/// when `n <= 2m` and `C(n, m-1)` when `n >= 2m` (equal at `n = 2m`).
///
/// The smaller class consists of cliques of size ω, and each edge lies in
/// exactly one of them, so its size meets the lower bound `|E| / C(ω, 2)`.
/// In the degenerate regime this is 1: the whole graph.
pub fn clique_partition_number(p: &JohnsonParams) -> Result<u64> {
    let (n, m) = (u64::from(p.n()), u64::from(p.m()));
    if n <= 2 * m {
        binomial(n, m + 1)
    } else {
        binomial(n, m - 1)
    }
}

/// An edge partition of J_n(m, m-1) into maximal cliques of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliquePartition {
    params: JohnsonParams,
    parts: Vec<MaximalClique>,
    covered_edge_count: u64,
}

impl CliquePartition {
    pub fn params(&self) -> &JohnsonParams {
        &self.params
    }

    pub fn parts(&self) -> &[MaximalClique] {
        &self.parts
    }

    pub fn covered_edge_count(&self) -> u64 {
        self.covered_edge_count
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

impl Serialize for CliquePartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CliquePartition", 5)?;
        st.serialize_field("n", &self.params.n())?;
        st.serialize_field("m", &self.params.m())?;
        st.serialize_field("cp", &self.parts.len())?;
        st.serialize_field("covered_edges", &self.covered_edge_count)?;
        st.serialize_field("parts", &self.parts)?;
        st.end()
    }
}

/// Checks that the edge sets of `parts` are disjoint and cover every edge
/// of the graph. Returns the number of covered edges.
pub fn validate_edge_partition(p: &JohnsonParams, parts: &[MaximalClique]) -> Result<u64> {
    let mut marks: HashMap<(u64, u64), u32> = HashMap::new();
    for h in parts {
        let ranks = h
            .members()
            .iter()
            .map(|l| p.rank(l).map(|r| r.0))
            .collect::<Result<Vec<u64>>>()?;
        for (i, &a) in ranks.iter().enumerate() {
            for &b in &ranks[i + 1..] {
                let key = (a.min(b), a.max(b));
                let count = marks.entry(key).or_insert(0);
                *count += 1;
                if *count > 1 {
                    return Err(Error::Consistency(format!(
                        "edge {} -- {} covered twice (second time by {h})",
                        p.unrank(SubsetRank(key.0))?,
                        p.unrank(SubsetRank(key.1))?
                    )));
                }
            }
        }
    }
    let edges = p.edge_count()?;
    if marks.len() as u64 != edges {
        return Err(Error::Consistency(format!(
            "{} edges covered, {p} has {edges}",
            marks.len()
        )));
    }
    Ok(edges)
}

/// A minimum clique partition: the smaller of the two classes, min on ties.
/// In the degenerate regime it is the single min clique `{1..n}`.
/// Validated before being returned.
pub fn clique_partition(p: &JohnsonParams) -> Result<CliquePartition> {
    let min_count = binomial(p.n().into(), u64::from(p.m()) + 1)?;
    let use_min = match p.regime() {
        Regime::Degenerate => true,
        Regime::Standard => min_count <= binomial(p.n().into(), u64::from(p.m()) - 1)?,
    };
    let parts: Vec<MaximalClique> = if use_min {
        enumerate_min_cliques(p).collect()
    } else {
        enumerate_max_cliques(p)?.collect()
    };
    let expected = clique_partition_number(p)?;
    if parts.len() as u64 != expected {
        return Err(Error::Consistency(format!(
            "partition of {p} has {} parts, closed form says {expected}",
            parts.len()
        )));
    }
    let covered_edge_count = validate_edge_partition(p, &parts)?;
    Ok(CliquePartition {
        params: *p,
        parts,
        covered_edge_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(xs: &[u32]) -> VertexLabel {
        VertexLabel::new(xs.iter().copied()).unwrap()
    }

    fn labels(xs: &[&[u32]]) -> Vec<VertexLabel> {
        xs.iter().map(|x| label(x)).collect()
    }

    fn params(n: u32, m: u32) -> JohnsonParams {
        JohnsonParams::new(n, m).unwrap()
    }

    fn clique(n: u32, m: u32, xs: &[&[u32]]) -> Clique {
        Clique::new(params(n, m), &labels(xs)).unwrap()
    }

    #[test]
    fn is_clique_examples() {
        let p = params(4, 2);
        assert!(is_clique(&p, &labels(&[&[1, 2], &[1, 3], &[2, 3]])).unwrap());
        assert!(!is_clique(&p, &labels(&[&[1, 3], &[1, 4], &[2, 3], &[3, 4]])).unwrap());
        assert!(is_clique(&params(5, 3), &labels(&[&[1, 2, 3]])).unwrap());
        assert!(is_clique(&p, &[]).is_err());
        assert!(is_clique(&p, &labels(&[&[1, 2], &[1, 2]])).is_err());
        assert!(is_clique(&p, &labels(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn intersection_and_union_examples() {
        assert_eq!(
            intersection_of(&labels(&[&[1, 2], &[1, 3], &[1, 4]])).unwrap(),
            label(&[1])
        );
        assert_eq!(
            intersection_of(&labels(&[&[2, 3], &[2, 4], &[3, 4]])).unwrap(),
            label(&[])
        );
        assert_eq!(
            intersection_of(&labels(&[&[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])).unwrap(),
            label(&[3, 4])
        );
        assert_eq!(
            union_of(&labels(&[&[2, 3], &[2, 4], &[3, 4]])).unwrap(),
            label(&[2, 3, 4])
        );
        assert!(intersection_of(&[]).is_err());
    }

    #[test]
    fn clique_rejects_non_adjacent() {
        let err = Clique::new(params(4, 2), &labels(&[&[1, 2], &[3, 4]])).unwrap_err();
        assert!(matches!(err, Error::NotAClique(_)));
    }

    #[test]
    fn classify_already_maximal_min() {
        let c = clique(5, 3, &[&[1, 2, 3], &[1, 2, 5], &[1, 3, 5], &[2, 3, 5]]);
        let h = MaximalClique::min(params(5, 3), label(&[1, 2, 3, 5])).unwrap();
        assert_eq!(
            classify(&c).unwrap(),
            CliqueClassification::AlreadyMaximal(h)
        );
        assert!(c.intersection().is_empty());
    }

    #[test]
    fn classify_already_maximal_max() {
        let c = clique(5, 3, &[&[1, 3, 4], &[2, 3, 4], &[3, 4, 5]]);
        let h = MaximalClique::max(params(5, 3), label(&[3, 4])).unwrap();
        assert_eq!(
            classify(&c).unwrap(),
            CliqueClassification::AlreadyMaximal(h)
        );
    }

    #[test]
    fn classify_edge() {
        let p = params(4, 2);
        let c = clique(4, 2, &[&[1, 2], &[1, 3]]);
        assert_eq!(
            classify(&c).unwrap(),
            CliqueClassification::EdgeBoth {
                min: MaximalClique::min(p, label(&[1, 2, 3])).unwrap(),
                max: MaximalClique::max(p, label(&[1])).unwrap(),
            }
        );
    }

    #[test]
    fn classify_singleton_and_degenerate_edge() {
        let c = clique(4, 2, &[&[2, 4]]);
        assert_eq!(
            classify(&c).unwrap(),
            CliqueClassification::Singleton(label(&[2, 4]))
        );
        assert!(extend_to_maximal(&c).is_err());

        let p = params(4, 3);
        let e = clique(4, 3, &[&[1, 2, 3], &[1, 2, 4]]);
        let whole = MaximalClique::min(p, label(&[1, 2, 3, 4])).unwrap();
        assert_eq!(
            classify(&e).unwrap(),
            CliqueClassification::UniqueMin(whole.clone())
        );
        assert_eq!(extend_to_maximal(&e).unwrap(), vec![whole]);
    }

    #[test]
    fn extension_examples() {
        let ext = extend_to_maximal(&clique(6, 3, &[&[1, 3, 4], &[2, 3, 4], &[3, 4, 5]])).unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].class(), CliqueClass::Max);
        assert_eq!(ext[0].defining_set(), &label(&[3, 4]));
        assert_eq!(
            ext[0].members(),
            labels(&[&[1, 3, 4], &[2, 3, 4], &[3, 4, 5], &[3, 4, 6]])
        );

        let ext = extend_to_maximal(&clique(4, 2, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap();
        assert_eq!(
            ext,
            vec![MaximalClique::min(params(4, 2), label(&[1, 2, 3])).unwrap()]
        );

        let ext = extend_to_maximal(&clique(5, 2, &[&[1, 2], &[2, 3], &[2, 4]])).unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0].class(), CliqueClass::Max);
        assert_eq!(ext[0].defining_set(), &label(&[2]));
        assert_eq!(ext[0].size(), 4);
        assert_eq!(ext[0].members().len(), 4);
    }

    #[test]
    fn members_examples() {
        let p53 = params(5, 3);
        let h = MaximalClique::min(p53, label(&[1, 2, 3, 5])).unwrap();
        assert_eq!(
            h.members(),
            labels(&[&[1, 2, 3], &[1, 2, 5], &[1, 3, 5], &[2, 3, 5]])
        );
        let h = MaximalClique::max(p53, label(&[3, 4])).unwrap();
        assert_eq!(h.members(), labels(&[&[1, 3, 4], &[2, 3, 4], &[3, 4, 5]]));
        let h = MaximalClique::max(params(4, 2), label(&[1])).unwrap();
        assert_eq!(h.members(), labels(&[&[1, 2], &[1, 3], &[1, 4]]));
    }

    #[test]
    fn maximal_clique_constructors_validate() {
        assert!(MaximalClique::min(params(5, 3), label(&[1, 2, 3])).is_err());
        assert!(MaximalClique::min(params(5, 3), label(&[1, 2, 3, 6])).is_err());
        assert!(MaximalClique::max(params(5, 3), label(&[3])).is_err());
        assert!(matches!(
            MaximalClique::max(params(4, 3), label(&[3, 4])),
            Err(Error::Regime(_))
        ));
    }

    #[test]
    fn enumeration_counts_and_sizes() {
        let p = params(5, 3);
        let mins: Vec<_> = enumerate_min_cliques(&p).collect();
        assert_eq!(mins.len(), 5);
        assert!(mins.iter().all(|h| h.size() == 4 && h.members().len() == 4));
        let maxes: Vec<_> = enumerate_max_cliques(&p).unwrap().collect();
        assert_eq!(maxes.len(), 10);
        assert!(maxes
            .iter()
            .all(|h| h.size() == 3 && h.members().len() == 3));

        let p = params(4, 2);
        assert_eq!(enumerate_min_cliques(&p).count(), 4);
        let maxes: Vec<_> = enumerate_max_cliques(&p).unwrap().collect();
        assert_eq!(maxes.len(), 4);
        assert!(maxes
            .iter()
            .all(|h| h.defining_set().len() == 1 && h.size() == 3));

        let k3: Vec<_> = enumerate_min_cliques(&params(3, 2)).collect();
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].defining_set(), &label(&[1, 2, 3]));
        assert!(matches!(
            enumerate_max_cliques(&params(4, 3)),
            Err(Error::Regime(_))
        ));
    }

    #[test]
    fn clique_number_examples() {
        assert_eq!(clique_number(&params(4, 2)), 3);
        assert_eq!(clique_number(&params(5, 3)), 4);
        assert_eq!(clique_number(&params(10, 3)), 8);
        for n in 3..=12 {
            assert_eq!(clique_number(&params(n, 2)), u64::from((n - 1).max(3)));
        }
    }

    #[test]
    fn partition_number_examples() {
        assert_eq!(clique_partition_number(&params(4, 2)).unwrap(), 4);
        // n < 2m: the five 4-cliques of J_5(3,2) cover its 30 edges.
        assert_eq!(clique_partition_number(&params(5, 3)).unwrap(), 5);
        assert_eq!(clique_partition_number(&params(6, 3)).unwrap(), 15);
        // n > 2m: the seven stars of J_7(2,1) cover its 105 edges.
        assert_eq!(clique_partition_number(&params(7, 2)).unwrap(), 7);
        assert_eq!(clique_partition_number(&params(4, 3)).unwrap(), 1);
    }

    #[test]
    fn partition_number_meets_edge_bound() {
        for m in 2..=8 {
            for n in m + 1..=24 {
                let p = params(n, m);
                let per_clique = binomial(clique_number(&p), 2).unwrap();
                let bound = p.edge_count().unwrap().div_ceil(per_clique);
                assert_eq!(clique_partition_number(&p).unwrap(), bound, "{p}");
            }
        }
    }

    #[test]
    fn partition_examples() {
        let part = clique_partition(&params(4, 2)).unwrap();
        assert_eq!(part.len(), 4);
        assert!(part.parts().iter().all(|h| h.class() == CliqueClass::Min));
        assert_eq!(part.covered_edge_count(), 12);

        let part = clique_partition(&params(5, 3)).unwrap();
        assert_eq!(part.len(), 5);
        assert!(part
            .parts()
            .iter()
            .all(|h| h.class() == CliqueClass::Min && h.size() == 4));
        assert_eq!(part.covered_edge_count(), 30);

        let part = clique_partition(&params(6, 3)).unwrap();
        assert_eq!(part.len(), 15);
        assert!(part
            .parts()
            .iter()
            .all(|h| h.class() == CliqueClass::Min && h.size() == 4));
        assert_eq!(part.covered_edge_count(), 90);

        let part = clique_partition(&params(7, 2)).unwrap();
        assert_eq!(part.len(), 7);
        assert!(part
            .parts()
            .iter()
            .all(|h| h.class() == CliqueClass::Max && h.size() == 6));
        assert_eq!(part.covered_edge_count(), 105);

        let part = clique_partition(&params(4, 3)).unwrap();
        assert_eq!(part.len(), 1);
        assert_eq!(part.parts()[0].defining_set(), &label(&[1, 2, 3, 4]));
        assert_eq!(part.covered_edge_count(), 6);
    }

    #[test]
    fn both_classes_partition_the_edges() {
        for m in 2..=4 {
            for n in m + 2..=9 {
                let p = params(n, m);
                let mins: Vec<_> = enumerate_min_cliques(&p).collect();
                let maxes: Vec<_> = enumerate_max_cliques(&p).unwrap().collect();
                let edges = p.edge_count().unwrap();
                assert_eq!(validate_edge_partition(&p, &mins).unwrap(), edges);
                assert_eq!(validate_edge_partition(&p, &maxes).unwrap(), edges);
            }
        }
    }

    #[test]
    fn validate_partition_detects_overlap_and_gaps() {
        let p = params(4, 2);
        let mut parts: Vec<_> = enumerate_min_cliques(&p).collect();
        parts.push(parts[0].clone());
        assert!(matches!(
            validate_edge_partition(&p, &parts),
            Err(Error::Consistency(_))
        ));
        parts.truncate(3);
        assert!(matches!(
            validate_edge_partition(&p, &parts),
            Err(Error::Consistency(_))
        ));
        // The degenerate K_4 is partitioned by its single min clique.
        let k4 = params(4, 3);
        let whole: Vec<_> = enumerate_min_cliques(&k4).collect();
        assert_eq!(validate_edge_partition(&k4, &whole).unwrap(), 6);
    }

    #[test]
    fn family_view_examples() {
        let f = MaximalClique::min(params(5, 3), label(&[1, 2, 3, 5]))
            .unwrap()
            .family_view();
        assert_eq!(f.element_count, 4);
        assert!(f.total_intersection.is_empty());
        assert_eq!(f.pairwise, PairwiseLaw::UnionEquals(label(&[1, 2, 3, 5])));

        let f = MaximalClique::max(params(5, 3), label(&[3, 4]))
            .unwrap()
            .family_view();
        assert_eq!(f.element_count, 3);
        assert_eq!(f.total_intersection, label(&[3, 4]));

        let h = MaximalClique::max(params(6, 2), label(&[1])).unwrap();
        let f = h.family_view();
        assert_eq!(f.element_count, 5);
        let members = h.members();
        assert_eq!(members.len(), 5);
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                assert_eq!(a.intersect(b), label(&[1]));
            }
        }
        assert_eq!(f.pairwise, PairwiseLaw::IntersectionEquals(label(&[1])));
    }

    #[test]
    fn family_view_laws_hold_on_members() {
        for m in 2..=4 {
            for n in m + 2..=9 {
                for h in all_maximal_cliques(&params(n, m)) {
                    let f = h.family_view();
                    let members = h.members();
                    assert_eq!(members.len() as u64, f.element_count);
                    assert_eq!(intersection_of(&members).unwrap(), f.total_intersection);
                    for (i, a) in members.iter().enumerate() {
                        for b in &members[i + 1..] {
                            match &f.pairwise {
                                PairwiseLaw::UnionEquals(s) => assert_eq!(&a.union(b), s),
                                PairwiseLaw::IntersectionEquals(s) => {
                                    assert_eq!(&a.intersect(b), s)
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn serialization_shape() {
        let h = MaximalClique::max(params(5, 3), label(&[3, 4])).unwrap();
        assert_eq!(
            serde_json::to_string(&h).unwrap(),
            r#"{"class":"max","set":[3,4],"n":5,"m":3,"size":3}"#
        );
    }

    #[test]
    fn contains_matches_members() {
        let p = params(6, 3);
        for h in all_maximal_cliques(&p) {
            let members = h.members();
            for v in p.vertices() {
                assert_eq!(h.contains(&v), members.contains(&v), "{h} {v}");
            }
        }
    }

    #[test]
    fn edge_counting_identity() {
        for m in 2u64..=6 {
            for n in m + 2..=20 {
                let edges = binomial(n, m).unwrap() * m * (n - m) / 2;
                assert_eq!(
                    binomial(n, m + 1).unwrap() * binomial(m + 1, 2).unwrap(),
                    edges
                );
                assert_eq!(
                    binomial(n, m - 1).unwrap() * binomial(n - m + 1, 2).unwrap(),
                    edges
                );
            }
        }
    }
}
