//! Exact subset combinatorics.
//!
//! Subsets of `{1, ..., n}` are represented by [`VertexLabel`], a sorted,
//! duplicate-free list of 1-based elements. Ranking uses the
//! colexicographic order (the combinatorial number system): the rank of
//! `{e_1 < e_2 < ... < e_m}` is `sum_i C(e_i - 1, i)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact binomial coefficient `C(n, k)`.
///
/// Every result that fits in a `u64` is computed exactly (this covers all
/// `k` for `n <= 67`). Larger results are reported as [`Error::Overflow`]
/// instead of wrapping. Returns 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1); partial values are
    // increasing in i for i < n/2, so they never exceed the final result.
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow(format!(
                "C({n}, {k}) does not fit in 64 bits"
            )));
        }
    }
    Ok(acc as u64)
}

/// Position of an m-subset in colexicographic order, `0..C(n, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetRank(pub u64);

impl fmt::Display for SubsetRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite set of positive integers, stored sorted and duplicate-free.
///
/// Used both for vertex labels (exactly `m` elements out of `1..=n`) and
/// for the derived sets that show up in clique algebra: intersections,
/// unions, and the defining sets of maximal cliques.
///
/// Ordering is colexicographic: sets are compared by their largest
/// elements first. For sets of equal size this agrees with [`rank`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct VertexLabel(Vec<u32>);

impl VertexLabel {
    /// Builds a set from arbitrary-order elements. Rejects 0 and duplicates.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut v: Vec<u32> = elements.into_iter().collect();
        v.sort_unstable();
        Self::from_sorted(v)
    }

    /// Builds a set from elements that must already be strictly increasing.
    pub fn from_sorted(elements: Vec<u32>) -> Result<Self> {
        if elements.first() == Some(&0) {
            return Err(Error::InvalidLabel(
                "elements are 1-based; 0 is not allowed".into(),
            ));
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] >= w[1]) {
            let what = if w[0] == w[1] {
                "duplicate element"
            } else {
                "elements not increasing"
            };
            return Err(Error::InvalidLabel(format!(
                "{what}: {} then {}",
                w[0], w[1]
            )));
        }
        Ok(VertexLabel(elements))
    }

    /// The full ground set `{1, ..., n}`.
    pub fn ground(n: u32) -> Self {
        VertexLabel((1..=n).collect())
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_element(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &VertexLabel) -> bool {
        self.len() <= other.len() && self.0.iter().all(|&x| other.contains(x))
    }

    /// Checks that every element lies in `1..=n`.
    pub fn check_within(&self, n: u32) -> Result<()> {
        match self.max_element() {
            Some(x) if x > n => Err(Error::InvalidLabel(format!(
                "{self} has element {x} outside 1..={n}"
            ))),
            _ => Ok(()),
        }
    }

    /// Checks that this is an m-subset of `{1, ..., n}`.
    pub fn check_vertex(&self, n: u32, m: u32) -> Result<()> {
        if self.len() != m as usize {
            return Err(Error::InvalidLabel(format!(
                "{self} has {} elements, expected {m}",
                self.len()
            )));
        }
        self.check_within(n)
    }

    pub fn intersect(&self, other: &VertexLabel) -> VertexLabel {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len().min(other.len()));
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        VertexLabel(out)
    }

    pub fn union(&self, other: &VertexLabel) -> VertexLabel {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(self.len() + other.len());
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        VertexLabel(out)
    }

    pub fn difference(&self, other: &VertexLabel) -> VertexLabel {
        VertexLabel(
            self.0
                .iter()
                .copied()
                .filter(|&x| !other.contains(x))
                .collect(),
        )
    }

    /// Size of the intersection without allocating.
    pub fn intersection_len(&self, other: &VertexLabel) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub(crate) fn with(&self, x: u32) -> VertexLabel {
        let mut v = self.0.clone();
        match v.binary_search(&x) {
            Ok(_) => {}
            Err(pos) => v.insert(pos, x),
        }
        VertexLabel(v)
    }

    pub(crate) fn without(&self, x: u32) -> VertexLabel {
        VertexLabel(self.0.iter().copied().filter(|&y| y != x).collect())
    }
}

impl Ord for VertexLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for VertexLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VertexLabel {
    type Err = Error;

    /// Parses the `{a,b,c}` form. Element order is normalized.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidLabel(format!("expected {{a,b,...}}, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(VertexLabel::default());
        }
        let elements = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidLabel(format!("bad element {tok:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexLabel::new(elements)
    }
}

impl TryFrom<Vec<u32>> for VertexLabel {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        VertexLabel::new(v)
    }
}

impl From<VertexLabel> for Vec<u32> {
    fn from(l: VertexLabel) -> Self {
        l.0
    }
}

/// Colex rank of `label` among all `|label|`-subsets of `{1, ..., n}`.
pub fn rank(label: &VertexLabel, n: u32) -> Result<SubsetRank> {
    label.check_within(n)?;
    let mut r: u64 = 0;
    for (i, &e) in label.elements().iter().enumerate() {
        let term = binomial(u64::from(e - 1), i as u64 + 1)?;
        r = r
            .checked_add(term)
            .ok_or_else(|| Error::Overflow(format!("rank of {label} does not fit in 64 bits")))?;
    }
    Ok(SubsetRank(r))
}

/// Inverse of [`rank`]: the m-subset of `{1, ..., n}` at colex position `r`.
pub fn unrank(r: SubsetRank, n: u32, m: u32) -> Result<VertexLabel> {
    if m > n {
        return Err(Error::Range(format!("no {m}-subsets of a {n}-set")));
    }
    let total = binomial(u64::from(n), u64::from(m))?;
    if r.0 >= total {
        return Err(Error::Range(format!(
            "rank {r} out of range 0..{total} for C({n},{m})"
        )));
    }
    let mut rest = r.0;
    let mut out = vec![0u32; m as usize];
    // Largest element first; candidates only shrink, so the scan over
    // `c` is monotone across positions.
    let mut c = u64::from(n);
    for i in (1..=u64::from(m)).rev() {
        loop {
            c -= 1;
            let b = binomial(c, i)?;
            if b <= rest {
                rest -= b;
                break;
            }
        }
        out[(i - 1) as usize] = (c + 1) as u32;
    }
    Ok(VertexLabel(out))
}

/// All k-subsets of a base set, in colex order.
///
/// Iterates index combinations and maps them through the sorted base, so the
/// colex order of indices carries over to the elements.
#[derive(Debug, Clone)]
pub struct Combinations {
    base: Vec<u32>,
    idx: Option<Vec<usize>>,
}

impl Combinations {
    /// k-subsets of `{1, ..., n}`.
    pub fn new(n: u32, k: u32) -> Self {
        Self::of(&VertexLabel::ground(n), k as usize)
    }

    /// k-subsets of `base`.
    pub fn of(base: &VertexLabel, k: usize) -> Self {
        let idx = (k <= base.len()).then(|| (0..k).collect());
        Combinations {
            base: base.0.clone(),
            idx,
        }
    }
}

impl Iterator for Combinations {
    type Item = VertexLabel;

    fn next(&mut self) -> Option<VertexLabel> {
        let idx = self.idx.as_mut()?;
        let out = VertexLabel(idx.iter().map(|&i| self.base[i]).collect());
        // Colex successor: bump the lowest position that has room below
        // its upper neighbour, reset everything beneath it.
        let k = idx.len();
        let limit = self.base.len();
        let mut j = 0;
        loop {
            if j == k {
                self.idx = None;
                break;
            }
            let upper = if j + 1 < k { idx[j + 1] } else { limit };
            if idx[j] + 1 < upper {
                idx[j] += 1;
                for (t, slot) in idx.iter_mut().enumerate().take(j) {
                    *slot = t;
                }
                break;
            }
            j += 1;
        }
        Some(out)
    }
}
