//! Primed jeu de taquin: `UT(λ) ↔ {(P, Q) : P ∈ PT(μ), Q ∈ UFT(λ/μ)}`.

use serde::{Deserialize, Serialize};

use super::grid::{labelled, Grid};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::shape::SkewShape;
use crate::tableau::{check, BoxFill, Family, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JdtPair {
    /// Rectified tableau, in `PT(μ)`.
    pub p: Tableau,
    /// Recording tableau, in `UFT(λ/μ)`.
    pub q: Tableau,
}

pub fn jdt_forward(t: &Tableau) -> Result<JdtPair> {
    jdt_forward_traced(t).map(|(pair, _)| pair)
}

/// As [`jdt_forward`], also returning the input followed by the state after
/// each slide.
pub fn jdt_forward_traced(t: &Tableau) -> Result<(JdtPair, Vec<Tableau>)> {
    check(t, Family::Ut)?;
    let lambda = t.shape().outer().clone();
    let mut grid = Grid::from_tableau(t);
    let mut trace = vec![t.clone()];
    let mut labels = Vec::new();
    for c in (2..=lambda.part(0)).rev() {
        while let Some(r) = (1..=grid.col_len(c)).rev().find(|&r| grid.get(r, c).unwrap().is_empty()) {
            let (mut hr, mut hc) = (r, c);
            loop {
                let below = grid.letter(hr + 1, hc);
                let right = grid.letter(hr, hc + 1);
                let from_below = match (below, right) {
                    (None, None) => break,
                    (Some(_), None) => true,
                    (None, Some(_)) => false,
                    (Some(d), Some(e)) => d < e || (d == e && !d.primed),
                };
                let (nr, nc) = if from_below { (hr + 1, hc) } else { (hr, hc + 1) };
                let l = grid.letter(nr, nc).unwrap();
                grid.set_letter(hr, hc, l);
                *grid.get_mut(nr, nc) = BoxFill::empty();
                (hr, hc) = (nr, nc);
            }
            grid.pop(hr, hc)?;
            labels.push(((hr, hc), Letter::primed(c - 1)));
            trace.push(grid.to_tableau()?);
        }
    }
    let p = grid.to_tableau()?;
    let q = labelled(SkewShape::new(lambda, p.shape().outer().clone())?, &labels)?;
    Ok((JdtPair { p, q }, trace))
}

/// Inverse of [`jdt_forward`]; the outer shape of `q` is the shape of the result.
pub fn jdt_backward(pair: &JdtPair) -> Result<Tableau> {
    check(&pair.p, Family::Pt)?;
    check(&pair.q, Family::Uft)?;
    if pair.q.shape().inner() != pair.p.shape().outer() || !pair.p.shape().inner().is_empty() {
        return Err(Error::Shape("recording tableau must have P's shape as inner shape".into()));
    }
    let not_in_image = |what: String| Error::NotInImage(what);
    let mut labels: Vec<(u32, usize, u32)> =
        pair.q.cells().map(|((r, c), f)| (f.single_letter().unwrap().value, r, c)).collect();
    // increasing label, topmost box first
    labels.sort();
    let mut grid = Grid::from_tableau(&pair.p);
    for (k, r, c) in labels {
        let target = k + 1;
        grid.push(r, c, BoxFill::empty())
            .map_err(|_| not_in_image(format!("label at ({r},{c}) is not addable when undone")))?;
        let (mut hr, mut hc) = (r, c);
        loop {
            let source = if hc > target {
                let left =
                    grid.letter(hr, hc - 1).ok_or_else(|| not_in_image(format!("empty box left of ({hr},{hc})")))?;
                match grid.get(hr.wrapping_sub(1), hc) {
                    None => (hr, hc - 1),
                    Some(f) => {
                        let above =
                            f.single_letter().ok_or_else(|| not_in_image(format!("empty box above ({hr},{hc})")))?;
                        if above > left || (above == left && !above.primed) {
                            (hr - 1, hc)
                        } else {
                            (hr, hc - 1)
                        }
                    }
                }
            } else {
                let Some(above) = grid.letter(hr.wrapping_sub(1), hc) else {
                    break;
                };
                let e = (1..hc).rev().find_map(|cc| grid.letter(hr, cc));
                let Some(e) = e else {
                    return Err(not_in_image(format!("row {hr} has no entry left of column {hc}")));
                };
                if above > e || (above == e && !above.primed) {
                    (hr - 1, hc)
                } else {
                    break;
                }
            };
            let l = grid.letter(source.0, source.1).unwrap();
            grid.set_letter(hr, hc, l);
            *grid.get_mut(source.0, source.1) = BoxFill::empty();
            (hr, hc) = source;
        }
    }
    let t = grid.to_tableau()?;
    if t.shape().outer() != pair.q.shape().outer() {
        return Err(not_in_image("recovered shape differs from the outer shape of Q".into()));
    }
    check(&t, Family::Ut).map_err(|e| not_in_image(e.to_string()))?;
    if jdt_forward(&t)? != *pair {
        return Err(not_in_image("sliding the recovered tableau gives a different pair".into()));
    }
    Ok(t)
}
