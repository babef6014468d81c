//! One tableau representation shared by every family, plus the validators
//! and weight functions.

use std::fmt;

use crate::error::{Error, Result};
use crate::letter::{Letter, TotalOrder};
use crate::shape::{Partition, SkewShape};

/// The content of a single box: a set of primed values and a multiset of
/// unprimed values. Both lists are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxFill {
    primed: Vec<u32>,
    unprimed: Vec<u32>,
}

impl BoxFill {
    pub fn empty() -> BoxFill {
        BoxFill::default()
    }

    /// Sorts both lists. Repeated primed values are kept so that validators
    /// can reject them.
    pub fn new(mut primed: Vec<u32>, mut unprimed: Vec<u32>) -> BoxFill {
        primed.sort_unstable();
        unprimed.sort_unstable();
        BoxFill { primed, unprimed }
    }

    pub fn single(l: Letter) -> BoxFill {
        if l.primed {
            BoxFill { primed: vec![l.value], unprimed: vec![] }
        } else {
            BoxFill { primed: vec![], unprimed: vec![l.value] }
        }
    }

    pub fn primed(&self) -> &[u32] {
        &self.primed
    }

    pub fn unprimed(&self) -> &[u32] {
        &self.unprimed
    }

    pub fn len(&self) -> usize {
        self.primed.len() + self.unprimed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Letters in standard order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self
            .primed
            .iter()
            .map(|&p| Letter::primed(p))
            .chain(self.unprimed.iter().map(|&u| Letter::unprimed(u)))
            .collect();
        v.sort();
        v
    }

    pub fn min_letter(&self) -> Option<Letter> {
        let p = self.primed.first().map(|&v| Letter::primed(v));
        let u = self.unprimed.first().map(|&v| Letter::unprimed(v));
        match (p, u) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    pub fn max_letter(&self) -> Option<Letter> {
        let p = self.primed.last().map(|&v| Letter::primed(v));
        let u = self.unprimed.last().map(|&v| Letter::unprimed(v));
        match (p, u) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        }
    }

    /// The letter of a box holding exactly one entry.
    pub fn single_letter(&self) -> Option<Letter> {
        if self.len() == 1 {
            self.min_letter()
        } else {
            None
        }
    }

    pub fn insert(&mut self, l: Letter) {
        let list = if l.primed { &mut self.primed } else { &mut self.unprimed };
        let at = list.partition_point(|&v| v <= l.value);
        list.insert(at, l.value);
    }

    /// Removes one copy of `l`; returns whether it was present.
    pub fn remove(&mut self, l: Letter) -> bool {
        let list = if l.primed { &mut self.primed } else { &mut self.unprimed };
        match list.iter().position(|&v| v == l.value) {
            Some(i) => {
                list.remove(i);
                true
            }
            None => false,
        }
    }

    fn primed_distinct(&self) -> bool {
        self.primed.windows(2).all(|w| w[0] < w[1])
    }
}

impl fmt::Display for BoxFill {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A finitely supported vector of counts; trailing zeros are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<u32>);

impl WeightVector {
    pub fn new(mut coords: Vec<u32>) -> WeightVector {
        while coords.last() == Some(&0) {
            coords.pop();
        }
        WeightVector(coords)
    }

    pub fn zero() -> WeightVector {
        WeightVector(Vec::new())
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// Coordinate `i`, 1-indexed; zero outside the support.
    pub fn get(&self, i: usize) -> u32 {
        if i == 0 {
            0
        } else {
            self.0.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &WeightVector) -> WeightVector {
        let n = self.len().max(other.len());
        WeightVector::new((1..=n).map(|i| self.get(i) + other.get(i)).collect())
    }

    fn bump(counts: &mut Vec<u32>, index: usize) {
        if counts.len() < index {
            counts.resize(index, 0);
        }
        counts[index - 1] += 1;
    }
}

impl From<Vec<u32>> for WeightVector {
    fn from(v: Vec<u32>) -> Self {
        WeightVector::new(v)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The tableau families with a validator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Overfull: nonempty boxes holding a primed set and an unprimed multiset.
    Ot,
    /// Underfull: at most one letter per box, leftmost column full.
    Ut,
    /// Primed: exactly one letter per box.
    Pt,
    /// Over flagged, unprimed entries.
    Oft,
    /// Under flagged, primed entries.
    Uft,
    /// Primed flagged, under the order `... 2 < 1 < 1' < 2' ...`.
    Pft,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Ot => "OT",
            Family::Ut => "UT",
            Family::Pt => "PT",
            Family::Oft => "OFT",
            Family::Uft => "UFT",
            Family::Pft => "PFT",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "OT" => Family::Ot,
            "UT" => Family::Ut,
            "PT" => Family::Pt,
            "OFT" => Family::Oft,
            "UFT" => Family::Uft,
            "PFT" => Family::Pft,
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A filling of a skew shape. Boxes are addressed by 1-indexed
/// `(row, column)` in English orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<BoxFill>>,
}

impl Tableau {
    /// `rows[r]` lists the boxes of row `r + 1` from left to right.
    pub fn new(shape: SkewShape, rows: Vec<Vec<BoxFill>>) -> Result<Tableau> {
        if rows.len() != shape.rows() {
            return Err(Error::Shape(format!("{} rows given for shape {shape}", rows.len())));
        }
        for (r, row) in rows.iter().enumerate() {
            let want = shape.row_range(r + 1).count();
            if row.len() != want {
                return Err(Error::Shape(format!("row {} has {} boxes, shape {shape} needs {want}", r + 1, row.len())));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// A tableau with every box empty.
    pub fn blank(shape: SkewShape) -> Tableau {
        let rows = (1..=shape.rows()).map(|r| vec![BoxFill::empty(); shape.row_range(r).count()]).collect();
        Tableau { shape, rows }
    }

    /// Builds a straight-shape tableau from rows of single letters.
    pub fn from_letter_rows(rows: &[Vec<Letter>]) -> Result<Tableau> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let fills = rows.iter().map(|r| r.iter().map(|&l| BoxFill::single(l)).collect()).collect();
        Tableau::new(SkewShape::straight(outer), fills)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<BoxFill>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: u32) -> Option<&BoxFill> {
        if !self.shape.contains_box(row, col) {
            return None;
        }
        let start = self.shape.inner().part(row - 1);
        self.rows[row - 1].get((col - start - 1) as usize)
    }

    /// The single letter at a box, if the box exists and holds exactly one.
    pub fn letter(&self, row: usize, col: u32) -> Option<Letter> {
        self.get(row, col).and_then(BoxFill::single_letter)
    }

    pub fn set(&mut self, row: usize, col: u32, fill: BoxFill) -> Result<()> {
        if !self.shape.contains_box(row, col) {
            return Err(Error::Shape(format!("box ({row},{col}) outside {}", self.shape)));
        }
        let start = self.shape.inner().part(row - 1);
        self.rows[row - 1][(col - start - 1) as usize] = fill;
        Ok(())
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, u32), &BoxFill)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(r, row)| {
            let start = self.shape.inner().part(r);
            row.iter().enumerate().map(move |(k, f)| ((r + 1, start + 1 + k as u32), f))
        })
    }

    pub fn entry_count(&self) -> usize {
        self.cells().map(|(_, f)| f.len()).sum()
    }

    /// Number of unprimed entries.
    pub fn unprimed_count(&self) -> usize {
        self.cells().map(|(_, f)| f.unprimed().len()).sum()
    }

    /// Counts of unprimed `i`.
    pub fn left_weight(&self) -> WeightVector {
        let mut counts = Vec::new();
        for (_, f) in self.cells() {
            for &v in f.unprimed() {
                WeightVector::bump(&mut counts, v as usize);
            }
        }
        WeightVector::new(counts)
    }

    /// Counts of primed `i'`.
    pub fn right_weight(&self) -> WeightVector {
        let mut counts = Vec::new();
        for (_, f) in self.cells() {
            for &v in f.primed() {
                WeightVector::bump(&mut counts, v as usize);
            }
        }
        WeightVector::new(counts)
    }

    fn column_counts(&self) -> Vec<(u32, u32)> {
        let width = self.shape.outer().part(0) as usize;
        let mut cols = vec![(0u32, 0u32); width];
        for ((_, c), f) in self.cells() {
            let e = &mut cols[c as usize - 1];
            e.0 += 1;
            e.1 += f.len() as u32;
        }
        cols
    }

    /// Entries minus boxes in each column of an overfull tableau.
    pub fn overweight(&self) -> Result<WeightVector> {
        check(self, Family::Ot)?;
        Ok(self.overweight_unchecked())
    }

    pub(crate) fn overweight_unchecked(&self) -> WeightVector {
        WeightVector::new(self.column_counts().iter().map(|&(b, e)| e.saturating_sub(b)).collect())
    }

    /// Coordinate `i` is boxes minus entries in column `i + 1` of an underfull tableau.
    pub fn underweight(&self) -> Result<WeightVector> {
        check(self, Family::Ut)?;
        Ok(self.underweight_unchecked())
    }

    pub(crate) fn underweight_unchecked(&self) -> WeightVector {
        WeightVector::new(self.column_counts().iter().skip(1).map(|&(b, e)| b.saturating_sub(e)).collect())
    }

    /// `wt` of a flagged tableau: counts of `i` for OFT, of `i'` for UFT.
    pub fn flag_weight(&self, family: Family) -> Result<WeightVector> {
        check(self, family)?;
        match family {
            Family::Oft => Ok(self.left_weight()),
            Family::Uft => Ok(self.right_weight()),
            _ => Err(Error::Other(format!("{family} has no flag weight"))),
        }
    }

    /// Rows of letters of a one-letter-per-box tableau; `None` for empty boxes.
    pub fn letter_rows(&self) -> Vec<Vec<Option<Letter>>> {
        self.rows.iter().map(|r| r.iter().map(BoxFill::single_letter).collect()).collect()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            for _ in 0..self.shape.inner().part(r) {
                write!(f, "[*]")?;
            }
            for b in row {
                write!(f, "[{b}]")?;
            }
        }
        Ok(())
    }
}

fn invalid(family: Family, reason: String) -> Error {
    Error::Invalid { family: family.name(), reason }
}

/// Checks membership in `family`, reporting the first violated clause.
pub fn check(t: &Tableau, family: Family) -> Result<()> {
    match family {
        Family::Ot => check_ot(t),
        Family::Ut => check_ut(t),
        Family::Pt => check_pt(t),
        Family::Oft => check_oft(t),
        Family::Uft => check_uft(t),
        Family::Pft => check_pft(t),
    }
}

pub fn validate(t: &Tableau, family: Family) -> bool {
    check(t, family).is_ok()
}

fn require_straight(t: &Tableau, family: Family) -> Result<()> {
    if t.shape.inner().is_empty() {
        Ok(())
    } else {
        Err(invalid(family, "defined on straight shapes only".into()))
    }
}

// a left of b in a row: a < b, or a = b unprimed
fn row_ok(a: Letter, b: Letter) -> bool {
    a < b || (a == b && !a.primed)
}

// a above c in a column: a < c, or a = c primed
fn column_ok(a: Letter, c: Letter) -> bool {
    a < c || (a == c && a.primed)
}

fn check_ot(t: &Tableau) -> Result<()> {
    let fam = Family::Ot;
    require_straight(t, fam)?;
    for ((r, c), f) in t.cells() {
        if f.is_empty() {
            return Err(invalid(fam, format!("box ({r},{c}) is empty")));
        }
        if !f.primed_distinct() {
            return Err(invalid(fam, format!("box ({r},{c}) repeats a primed letter")));
        }
        let lo = f.min_letter().unwrap();
        if let Some(left) = t.get(r, c.wrapping_sub(1)) {
            let hi = left.max_letter().unwrap_or(lo);
            if !left.is_empty() && !row_ok(hi, lo) {
                return Err(invalid(fam, format!("row {r}: {hi} then {lo} at column {c}")));
            }
        }
        if r > 1 {
            if let Some(above) = t.get(r - 1, c) {
                if let Some(hi) = above.max_letter() {
                    if !column_ok(hi, lo) {
                        return Err(invalid(fam, format!("column {c}: {hi} above {lo} at row {r}")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_ut(t: &Tableau) -> Result<()> {
    let fam = Family::Ut;
    require_straight(t, fam)?;
    for ((r, c), f) in t.cells() {
        if f.len() > 1 {
            return Err(invalid(fam, format!("box ({r},{c}) holds more than one letter")));
        }
        if c == 1 && f.is_empty() {
            return Err(invalid(fam, format!("box ({r},1) in the leftmost column is empty")));
        }
    }
    let rows = t.letter_rows();
    for (ri, row) in rows.iter().enumerate() {
        let r = ri + 1;
        // row rule: each entry against the next nonempty box to its right
        let filled: Vec<Letter> = row.iter().flatten().copied().collect();
        for w in filled.windows(2) {
            if !row_ok(w[0], w[1]) {
                return Err(invalid(fam, format!("row {r}: {} then {}", w[0], w[1])));
            }
        }
        // column rule: an entry with a box directly below it is compared with
        // the rightmost nonempty box of the next row weakly to its left
        if let Some(next) = rows.get(ri + 1) {
            for (ci, a) in row.iter().enumerate() {
                let Some(a) = a else { continue };
                if ci >= next.len() {
                    continue;
                }
                let c_letter = next[..=ci].iter().rev().flatten().next().copied();
                if let Some(c_letter) = c_letter {
                    if !column_ok(*a, c_letter) {
                        return Err(invalid(
                            fam,
                            format!("({r},{}) = {a} against {c_letter} in row {}", ci + 1, r + 1),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn check_pt(t: &Tableau) -> Result<()> {
    let fam = Family::Pt;
    for ((r, c), f) in t.cells() {
        if f.len() != 1 {
            return Err(invalid(fam, format!("box ({r},{c}) must hold exactly one letter")));
        }
    }
    check_ot(t).map_err(|e| match e {
        Error::Invalid { reason, .. } => invalid(fam, reason),
        other => other,
    })
}

fn single_letters(t: &Tableau, fam: Family, primed: bool) -> Result<()> {
    for ((r, c), f) in t.cells() {
        match f.single_letter() {
            Some(l) if l.primed == primed => {}
            _ => {
                return Err(invalid(
                    fam,
                    format!("box ({r},{c}) must hold one {} letter", if primed { "primed" } else { "unprimed" }),
                ))
            }
        }
    }
    Ok(())
}

fn check_oft(t: &Tableau) -> Result<()> {
    let fam = Family::Oft;
    let shape = t.shape();
    if !shape.equal_row_counts() {
        return Err(invalid(fam, "inner and outer shapes have different row counts".into()));
    }
    single_letters(t, fam, false)?;
    for ((r, c), _) in t.cells() {
        let a = t.letter(r, c).unwrap().value;
        if a > shape.inner().part(r - 1) {
            return Err(invalid(fam, format!("({r},{c}) = {a} exceeds flag {}", shape.inner().part(r - 1))));
        }
        if let Some(b) = t.letter(r, c + 1) {
            if a < b.value {
                return Err(invalid(fam, format!("row {r} increases at column {c}")));
            }
        }
        if let Some(below) = t.letter(r + 1, c) {
            if a <= below.value {
                return Err(invalid(fam, format!("column {c} not strictly decreasing at row {r}")));
            }
        }
    }
    Ok(())
}

fn check_uft(t: &Tableau) -> Result<()> {
    let fam = Family::Uft;
    let shape = t.shape();
    if !shape.equal_row_counts() {
        return Err(invalid(fam, "inner and outer shapes have different row counts".into()));
    }
    single_letters(t, fam, true)?;
    for ((r, c), _) in t.cells() {
        let a = t.letter(r, c).unwrap().value;
        if a + 1 > shape.outer().part(r - 1) {
            return Err(invalid(fam, format!("({r},{c}) = {a}' breaks the flag")));
        }
        if let Some(b) = t.letter(r, c + 1) {
            if a >= b.value {
                return Err(invalid(fam, format!("row {r} not strictly increasing at column {c}")));
            }
        }
        if let Some(below) = t.letter(r + 1, c) {
            if a > below.value {
                return Err(invalid(fam, format!("column {c} decreases at row {r}")));
            }
        }
    }
    Ok(())
}

fn check_pft(t: &Tableau) -> Result<()> {
    let fam = Family::Pft;
    let n = t.cells().flat_map(|(_, f)| f.letters()).map(|l| l.value).max().unwrap_or(1);
    check_pt_order(t, &TotalOrder::flagged(n)).map_err(|e| match e {
        Error::Invalid { reason, .. } => invalid(fam, reason),
        other => other,
    })?;
    let shape = t.shape();
    for ((r, c), f) in t.cells() {
        let l = f.single_letter().unwrap();
        if !l.primed && l.value > shape.inner().part(r - 1) {
            return Err(invalid(fam, format!("({r},{c}) = {l} breaks the unprimed flag")));
        }
        if l.primed && l.value >= shape.outer().part(r - 1) {
            return Err(invalid(fam, format!("({r},{c}) = {l} breaks the primed flag")));
        }
    }
    Ok(())
}

/// Membership in `PT_≺` for the given order. Letters outside the order's
/// domain are an error rather than a failed check.
pub fn check_pt_order(t: &Tableau, order: &TotalOrder) -> Result<()> {
    const FAM: &str = "PT under the given order";
    let bad = |reason: String| Error::Invalid { family: FAM, reason };
    for ((r, c), f) in t.cells() {
        let Some(l) = f.single_letter() else {
            return Err(bad(format!("box ({r},{c}) must hold exactly one letter")));
        };
        order.rank(l)?;
        if let Some(left) = t.letter(r, c.wrapping_sub(1)) {
            let ord = order.compare(left, l)?;
            if ord.is_gt() || (ord.is_eq() && l.primed) {
                return Err(bad(format!("row {r}: {left} then {l}")));
            }
        }
        if r > 1 {
            if let Some(above) = t.letter(r - 1, c) {
                let ord = order.compare(above, l)?;
                if ord.is_gt() || (ord.is_eq() && !l.primed) {
                    return Err(bad(format!("column {c}: {above} above {l}")));
                }
            }
        }
    }
    Ok(())
}

pub fn validate_pt_order(t: &Tableau, order: &TotalOrder) -> Result<bool> {
    match check_pt_order(t, order) {
        Ok(()) => Ok(true),
        Err(Error::Invalid { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}
