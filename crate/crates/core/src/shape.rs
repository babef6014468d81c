//! Partitions and skew shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Shape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-indexed); zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32).collect();
        Partition { parts }
    }

    /// Componentwise containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn of_size(n: u32) -> Vec<Partition> {
        fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: prefix.clone() });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                go(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, smallest sizes first.
    pub fn up_to_size(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::of_size).collect()
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(outer: &Partition, row: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if row == outer.len() {
                let mut parts = cur.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition { parts });
                return;
            }
            for p in 0..=cap.min(outer.part(row)) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        go(self, 0, u32::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Parses `3,3,2`; `-` or the empty string is the empty partition.
    pub fn parse(s: &str) -> Result<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Convenience constructor for literals in tests and fixtures.
///
/// Panics if the parts are not weakly decreasing.
pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("invalid partition literal")
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Shape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.outer.size() - self.inner.size()
    }

    /// Columns (1-indexed) occupied in row `row` (1-indexed).
    pub fn row_range(&self, row: usize) -> std::ops::RangeInclusive<u32> {
        self.inner.part(row - 1) + 1..=self.outer.part(row - 1)
    }

    pub fn contains_box(&self, row: usize, col: u32) -> bool {
        row >= 1 && col >= 1 && self.row_range(row).contains(&col)
    }

    /// Whether the flagged families are nonempty-able: equal numbers of rows.
    pub fn equal_row_counts(&self) -> bool {
        self.outer.len() == self.inner.len()
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        (1..=self.rows()).flat_map(move |r| self.row_range(r).map(move |c| (r, c)))
    }

    /// Number of boxes in column `col`.
    pub fn column_len(&self, col: u32) -> u32 {
        (1..=self.rows()).filter(|&r| self.contains_box(r, col)).count() as u32
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
