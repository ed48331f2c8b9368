//! Integer partitions and their Young diagrams.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition in canonical form: weakly decreasing, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Length of column `c` (1-based).
    pub fn column_len(&self, c: usize) -> usize {
        if c == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= c).count()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition((1..=width).map(|c| self.column_len(c)).collect())
    }

    /// No part greater than `k` is repeated.
    pub fn is_k_strict(&self, k: usize) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1] || w[0] <= k)
    }

    pub fn is_strict(&self) -> bool {
        self.is_k_strict(0)
    }

    /// Number of parts strictly greater than `k`.
    pub fn parts_above(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p > k).count()
    }

    pub fn has_part(&self, k: usize) -> bool {
        self.0.contains(&k)
    }

    /// Diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.part(row - 1) >= col
    }

    /// Cells `(row, col)`, 1-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for c in 1..=p {
                out.push((i + 1, c));
            }
        }
        out
    }

    /// Cells of `self` not in `inner`.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for c in inner.part(i) + 1..=p {
                out.push((i + 1, c));
            }
        }
        out
    }

    /// Fits inside a `rows × cols` rectangle.
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    pub fn intersect(&self, other: &Partition) -> Partition {
        Partition::from_unsorted(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Dominance order on partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 0..n {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, usize::MAX, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with at most `max_len` parts, each at most `max_part`.
    pub fn all_bounded(n: usize, max_len: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, max_part.min(n), max_len, &mut cur, &mut out);
        out
    }

    /// All partitions of size at most `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All `k`-strict partitions of `n`.
    pub fn k_strict_of_size(n: usize, k: usize) -> Vec<Partition> {
        Partition::all_of_size(n).into_iter().filter(|p| p.is_k_strict(k)).collect()
    }

    /// Partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        sub_rec(&self.0, 0, usize::MAX, &mut cur, &mut out);
        out
    }

    /// Appends a part; the caller keeps the sequence decreasing.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut p = Partition(parts);
        while p.0.last() == Some(&0) {
            p.0.pop();
        }
        p
    }
}

fn gen_partitions(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, max_len, cur, out);
        cur.pop();
    }
}

fn sub_rec(outer: &[usize], i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if i == outer.len() {
        out.push(Partition::from_parts_unchecked(cur.clone()));
        return;
    }
    for v in 0..=outer[i].min(bound) {
        cur.push(v);
        sub_rec(outer, i + 1, v, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("bad part {t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Shape of a skew diagram `μ/λ`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StripKind {
    NotContained,
    Horizontal,
    Vertical,
    Neither,
}

/// Classifies `μ/λ`. A strip with at most one box per row and per column
/// reports `Horizontal`.
pub fn strip_kind(lambda: &Partition, mu: &Partition) -> StripKind {
    if !mu.contains(lambda) {
        return StripKind::NotContained;
    }
    if is_horizontal_strip(lambda, mu) {
        StripKind::Horizontal
    } else if is_horizontal_strip(&lambda.conjugate(), &mu.conjugate()) {
        StripKind::Vertical
    } else {
        StripKind::Neither
    }
}

/// `μ/λ` has at most one box in each column (assumes containment).
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    (1..mu.len()).all(|i| lambda.part(i - 1) >= mu.part(i))
}

/// `μ/λ` has at most one box in each row (assumes containment).
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    (0..mu.len()).all(|i| mu.part(i) <= lambda.part(i) + 1)
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of `q` boxes.
pub fn add_horizontal_strips(lambda: &Partition, q: usize) -> Vec<Partition> {
    let l = lambda.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l.len() + 1);
    fn rec(l: &[usize], i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == l.len() + 1 {
            if left == 0 {
                out.push(Partition::from_parts_unchecked(cur.clone()));
            }
            return;
        }
        let base = if i < l.len() { l[i] } else { 0 };
        let cap = if i == 0 { base + left } else { l[i - 1] };
        for v in (base..=cap.min(base + left)).rev() {
            cur.push(v);
            rec(l, i + 1, left - (v - base), cur, out);
            cur.pop();
        }
    }
    rec(l, 0, q, &mut cur, &mut out);
    out
}

/// All `ν ⊆ λ` with `λ/ν` a vertical strip whose boxes lie in columns `≤ max_col`.
pub fn remove_vertical_strips(lambda: &Partition, max_col: usize) -> Vec<Partition> {
    let l = lambda.parts();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(l.len());
    fn rec(l: &[usize], i: usize, max_col: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == l.len() {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        let prev = if i == 0 { usize::MAX } else { cur[i - 1] };
        for v in [l[i], l[i].wrapping_sub(1)] {
            if v > l[i] || v > prev {
                continue;
            }
            if v < l[i] && l[i] > max_col {
                continue;
            }
            cur.push(v);
            rec(l, i + 1, max_col, cur, out);
            cur.pop();
        }
    }
    rec(l, 0, max_col, &mut cur, &mut out);
    out
}
