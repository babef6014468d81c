//! Sparse exact multivariate series in three variable families `x`, `y`,
//! `z`, generic over the coefficient ring.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::WeightVector;

/// The coefficient ring: any exact commutative ring with unit.
pub trait Coefficient:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
}

impl<T> Coefficient for T where
    T: Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Send
        + Sync
{
}

/// `(-1)^k` in the coefficient ring.
pub fn sign<C: Coefficient>(k: u32) -> C {
    if k.is_multiple_of(2) {
        C::one()
    } else {
        -C::one()
    }
}

/// `x^xe y^ye z^ze`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub x: WeightVector,
    pub y: WeightVector,
    pub z: WeightVector,
}

impl Monomial {
    pub fn new(x: impl Into<WeightVector>, y: impl Into<WeightVector>, z: impl Into<WeightVector>) -> Self {
        Monomial { x: x.into(), y: y.into(), z: z.into() }
    }

    pub fn one() -> Monomial {
        Monomial::default()
    }

    /// Combined `x`, `y` degree; the quantity bounded by truncation.
    pub fn xy_degree(&self) -> u32 {
        self.x.total() + self.y.total()
    }

    pub fn degree(&self) -> u32 {
        self.xy_degree() + self.z.total()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        Monomial { x: self.x.add(&other.x), y: self.y.add(&other.y), z: self.z.add(&other.z) }
    }
}

/// Graded order: lower total degree first, then lexicographically larger
/// exponents (x, then y, then z) first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| other.y.cmp(&self.y))
            .then_with(|| other.z.cmp(&self.z))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Variable counts and the combined `x`,`y` degree bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub nx: usize,
    pub ny: usize,
    /// `None`: any number of `z` variables.
    pub nz: Option<usize>,
    /// `None`: no degree bound.
    pub degree: Option<u32>,
}

impl Truncation {
    pub fn new(nx: usize, ny: usize, degree: Option<u32>) -> Truncation {
        Truncation { nx, ny, nz: None, degree }
    }

    fn admits(&self, m: &Monomial) -> bool {
        m.x.len() <= self.nx && m.y.len() <= self.ny && self.nz.is_none_or(|n| m.z.len() <= n)
    }

    fn keeps(&self, m: &Monomial) -> bool {
        self.degree.is_none_or(|d| m.xy_degree() <= d)
    }

    fn combine(&self, other: &Truncation) -> Result<Truncation> {
        if self.nx != other.nx || self.ny != other.ny || self.nz != other.nz {
            return Err(Error::Incompatible(format!(
                "variable counts {:?} vs {:?}",
                (self.nx, self.ny, self.nz),
                (other.nx, other.ny, other.nz)
            )));
        }
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Ok(Truncation { degree, ..*self })
    }
}

/// Exact sparse series; terms above the degree bound are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<C> {
    terms: BTreeMap<Monomial, C>,
    trunc: Truncation,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(trunc: Truncation) -> Self {
        Series { terms: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: Truncation) -> Self {
        let mut s = Series::zero(trunc);
        s.add_term(Monomial::one(), C::one()).unwrap();
        s
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Adds `c * m`. Monomials beyond the variable counts are an error;
    /// monomials above the degree bound are dropped.
    pub fn add_term(&mut self, m: Monomial, c: C) -> Result<()> {
        if !self.trunc.admits(&m) {
            return Err(Error::Incompatible(format!("monomial {m:?} exceeds variable counts")));
        }
        if c.is_zero() || !self.trunc.keeps(&m) {
            return Ok(());
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Series<C>) -> Result<Series<C>> {
        let mut out = Series::zero(self.trunc.combine(&other.trunc)?);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            out.add_term(m.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series<C>) -> Result<Series<C>> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series<C> {
        Series { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(), trunc: self.trunc }
    }

    pub fn mul(&self, other: &Series<C>) -> Result<Series<C>> {
        let mut out = Series::zero(self.trunc.combine(&other.trunc)?);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1.clone() * c2.clone())?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Series<C> {
        let mut out = Series::zero(self.trunc);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone()).unwrap();
        }
        out
    }

    /// Applies `f` to every monomial, re-collecting under `trunc`.
    pub fn map_monomials(&self, trunc: Truncation, f: impl Fn(&Monomial) -> Monomial) -> Result<Series<C>> {
        let mut out = Series::zero(trunc);
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone())?;
        }
        Ok(out)
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Series<C> {
        Series {
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
            trunc: self.trunc,
        }
    }

    /// Sets every `z_i = 1`.
    pub fn at_z_one(&self) -> Series<C> {
        self.map_monomials(self.trunc, |m| Monomial { z: WeightVector::zero(), ..m.clone() })
            .expect("dropping z keeps variable counts")
    }

    /// Exchanges the `x` and `y` families.
    pub fn swap_xy(&self) -> Series<C> {
        let trunc = Truncation { nx: self.trunc.ny, ny: self.trunc.nx, ..self.trunc };
        self.map_monomials(trunc, |m| Monomial { x: m.y.clone(), y: m.x.clone(), z: m.z.clone() })
            .expect("swap keeps variable counts")
    }

    /// The part of combined `x`,`y` degree exactly `d`.
    pub fn xy_homogeneous_part(&self, d: u32) -> Series<C> {
        self.filter(|m| m.xy_degree() == d)
    }

    /// Exchanges variables `i` and `i + 1` (1-indexed) of one family.
    pub fn transpose_variables(&self, alphabet: Alphabet, i: usize) -> Series<C> {
        let swap = |w: &WeightVector| {
            let n = w.len().max(i + 1);
            let mut v: Vec<u32> = (1..=n).map(|k| w.get(k)).collect();
            v.swap(i - 1, i);
            WeightVector::new(v)
        };
        self.map_monomials(self.trunc, |m| match alphabet {
            Alphabet::X => Monomial { x: swap(&m.x), ..m.clone() },
            Alphabet::Y => Monomial { y: swap(&m.y), ..m.clone() },
        })
        .expect("transposition stays within the variable count")
    }

    /// Whether every adjacent transposition of the family's variables fixes the series.
    pub fn is_symmetric_in(&self, alphabet: Alphabet) -> bool {
        let n = match alphabet {
            Alphabet::X => self.trunc.nx,
            Alphabet::Y => self.trunc.ny,
        };
        (1..n).all(|i| &self.transpose_variables(alphabet, i) == self)
    }

    pub fn to_text(&self) -> String {
        render(self, Style::Text)
    }

    pub fn to_latex(&self) -> String {
        render(self, Style::Latex)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                xe: m.x.coords().to_vec(),
                ye: m.y.coords().to_vec(),
                ze: m.z.coords().to_vec(),
                c: coefficient_json(c),
            })
            .collect();
        serde_json::to_value(terms).unwrap()
    }
}

/// One of the two symmetric alphabets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    X,
    Y,
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Alphabet::X => "x",
            Alphabet::Y => "y",
        })
    }
}

#[derive(Serialize)]
struct TermRecord {
    xe: Vec<u32>,
    ye: Vec<u32>,
    ze: Vec<u32>,
    c: serde_json::Value,
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
pub fn coefficient_json<C: fmt::Display>(c: &C) -> serde_json::Value {
    let s = c.to_string();
    match s.parse::<i64>() {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(s),
    }
}

#[derive(Clone, Copy)]
enum Style {
    Text,
    Latex,
}

fn render_monomial(m: &Monomial, style: Style) -> String {
    let mut out = String::new();
    // z first, matching the usual way of writing the refined parameters
    for (name, w) in [("z", &m.z), ("x", &m.x), ("y", &m.y)] {
        for (i, &e) in w.coords().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let idx = i + 1;
            match style {
                Style::Text => {
                    if !out.is_empty() {
                        out.push('*');
                    }
                    out.push_str(&format!("{name}{idx}"));
                    if e > 1 {
                        out.push_str(&format!("^{e}"));
                    }
                }
                Style::Latex => {
                    out.push_str(&format!("{name}_{idx}"));
                    if e > 1 {
                        out.push_str(&format!("^{{{e}}}"));
                    }
                }
            }
        }
    }
    out
}

fn render<C: Coefficient>(s: &Series<C>, style: Style) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let (plus, minus, times) = match style {
        Style::Text => (" + ", " - ", "*"),
        Style::Latex => ("+", "-", ""),
    };
    let mut out = String::new();
    for (k, (m, c)) in s.terms().enumerate() {
        let negative = c.to_string().starts_with('-');
        let abs = if negative { -c.clone() } else { c.clone() };
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { minus } else { plus });
        }
        let mono = render_monomial(m, style);
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}{times}{mono}"));
        }
    }
    out
}

impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A polynomial in the `z` variables only.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly<C> {
    terms: BTreeMap<WeightVector, C>,
}

impl<C: Coefficient> Default for ZPoly<C> {
    fn default() -> Self {
        ZPoly { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> ZPoly<C> {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn constant(c: C) -> Self {
        ZPoly::monomial(WeightVector::zero(), c)
    }

    pub fn monomial(e: WeightVector, c: C) -> Self {
        let mut p = ZPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&WeightVector, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &WeightVector) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: WeightVector, c: C) {
        if c.is_zero() {
            return;
        }
        let v = self.coeff(&e) + c;
        if v.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn add(&self, other: &ZPoly<C>) -> ZPoly<C> {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> ZPoly<C> {
        ZPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }

    pub fn mul(&self, other: &ZPoly<C>) -> ZPoly<C> {
        let mut out = ZPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Reads a series with no `x` or `y` dependence as a `z`-polynomial.
    pub fn from_series(s: &Series<C>) -> Result<ZPoly<C>> {
        let mut out = ZPoly::zero();
        for (m, c) in s.terms() {
            if !m.x.is_zero() || !m.y.is_zero() {
                return Err(Error::Incompatible(format!("term {m:?} is not a pure z monomial")));
            }
            out.add_term(m.z.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms.iter().map(|(e, c)| serde_json::json!({"e": e.coords(), "c": coefficient_json(c)})).collect(),
        )
    }
}

impl<C: Coefficient> ZPoly<C> {
    fn as_series(&self) -> Series<C> {
        let mut s = Series::zero(Truncation::new(0, 0, None));
        for (e, c) in &self.terms {
            s.add_term(Monomial::new(vec![], vec![], e.clone()), c.clone()).unwrap();
        }
        s
    }

    pub fn to_latex(&self) -> String {
        self.as_series().to_latex()
    }
}

impl<C: Coefficient> fmt::Display for ZPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_series().to_text())
    }
}
