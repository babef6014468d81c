//! The sign-reversing involution on primed flagged tableaux, and the
//! correspondence between `PFT(λ/μ)` and pairs of flagged tableaux.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::shape::{Partition, SkewShape};
use crate::tableau::{check, BoxFill, Family, Tableau};

/// The box `ι` toggles: the rightmost box holding `m` or `m'` in the
/// highest row that holds one, `m` being the smallest value present.
pub fn iota_box(t: &Tableau) -> Option<(usize, u32)> {
    let m = t.cells().filter_map(|(_, f)| f.single_letter()).map(|l| l.value).min()?;
    let has_m = |f: &BoxFill| f.single_letter().is_some_and(|l| l.value == m);
    let row = t.cells().find(|(_, f)| has_m(f))?.0 .0;
    t.cells().filter(|&((r, _), f)| r == row && has_m(f)).map(|(p, _)| p).last()
}

/// `ι`: toggles the prime on [`iota_box`].
pub fn iota(t: &Tableau) -> Result<Tableau> {
    check(t, Family::Pft)?;
    let (r, c) = iota_box(t).ok_or_else(|| Error::Other("the involution needs a nonempty tableau".into()))?;
    let l = t.letter(r, c).unwrap();
    let mut out = t.clone();
    out.set(r, c, BoxFill::single(Letter { primed: !l.primed, ..l }))?;
    check(&out, Family::Pft)?;
    Ok(out)
}

/// Lays `p ∈ OFT(ρ/μ)` and `q ∈ UFT(λ/ρ)` on the single diagram `λ/μ`.
pub fn superimpose(p: &Tableau, q: &Tableau) -> Result<Tableau> {
    check(p, Family::Oft)?;
    check(q, Family::Uft)?;
    if p.shape().outer() != q.shape().inner() {
        return Err(Error::Shape(format!("{} and {} do not tile a skew shape", p.shape(), q.shape())));
    }
    let shape = SkewShape::new(q.shape().outer().clone(), p.shape().inner().clone())?;
    let mut out = Tableau::blank(shape);
    for ((r, c), f) in p.cells().chain(q.cells()) {
        out.set(r, c, f.clone())?;
    }
    check(&out, Family::Pft)?;
    Ok(out)
}

/// Inverse of [`superimpose`]: unprimed boxes form the flagged overfull
/// part, primed boxes the underfull part.
pub fn split(t: &Tableau) -> Result<(Tableau, Tableau)> {
    check(t, Family::Pft)?;
    let shape = t.shape();
    let mut rho = Vec::new();
    for r in 1..=shape.rows() {
        let mut seen_primed = false;
        let mut width = shape.inner().part(r - 1);
        for c in shape.row_range(r) {
            let primed = t.letter(r, c).unwrap().primed;
            if !primed && seen_primed {
                return Err(Error::Invalid {
                    family: Family::Pft.name(),
                    reason: format!("row {r} has an unprimed letter right of a primed one"),
                });
            }
            seen_primed |= primed;
            if !primed {
                width = c;
            }
        }
        rho.push(width);
    }
    let rho = Partition::new(rho)?;
    let mut p = Tableau::blank(SkewShape::new(rho.clone(), shape.inner().clone())?);
    let mut q = Tableau::blank(SkewShape::new(shape.outer().clone(), rho)?);
    for ((r, c), f) in t.cells() {
        if f.single_letter().unwrap().primed {
            q.set(r, c, f.clone())?;
        } else {
            p.set(r, c, f.clone())?;
        }
    }
    check(&p, Family::Oft)?;
    check(&q, Family::Uft)?;
    Ok((p, q))
}
