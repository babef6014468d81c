//! Primed column insertion: `OT(μ) ↔ {(P, Q) : P ∈ PT(λ), Q ∈ OFT(λ/μ)}`.

use serde::{Deserialize, Serialize};

use super::grid::{labelled, Grid};
use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::shape::SkewShape;
use crate::tableau::{check, Family, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RskPair {
    /// Insertion tableau, in `PT(λ)`.
    pub p: Tableau,
    /// Recording tableau, in `OFT(λ/μ)`.
    pub q: Tableau,
}

// x bumps y in a column when y > x, or y = x unprimed
fn bumps(x: Letter, y: Letter) -> bool {
    y > x || (y == x && !x.primed)
}

/// Column-inserts `x` into columns `col, col + 1, ...`; returns the new box.
fn insert(grid: &mut Grid, mut col: u32, mut x: Letter) -> Result<(usize, u32)> {
    loop {
        let height = grid.col_len(col);
        let hit = (1..=height).find(|&r| grid.letter(r, col).is_some_and(|y| bumps(x, y)));
        match hit {
            Some(r) => {
                let y = grid.letter(r, col).unwrap();
                grid.set_letter(r, col, x);
                x = y;
                col += 1;
            }
            None => {
                let r = height + 1;
                grid.push(r, col, crate::tableau::BoxFill::single(x))?;
                return Ok((r, col));
            }
        }
    }
}

pub fn rsk_forward(t: &Tableau) -> Result<RskPair> {
    rsk_forward_traced(t).map(|(pair, _)| pair)
}

/// As [`rsk_forward`], also returning the input followed by the state after
/// each single insertion. Entries not yet inserted stay in their boxes.
pub fn rsk_forward_traced(t: &Tableau) -> Result<(RskPair, Vec<Tableau>)> {
    check(t, Family::Ot)?;
    let mu = t.shape().outer().clone();
    let mut grid = Grid::from_tableau(t);
    let mut trace = vec![t.clone()];
    let mut labels = Vec::new();
    for i in (1..=mu.part(0)).rev() {
        let height = grid.col_len(i);
        let mut removed = Vec::new();
        for r in 1..=height {
            let f = grid.get(r, i).unwrap();
            let keep = f.min_letter().unwrap();
            let mut kept = false;
            for l in f.letters() {
                if l == keep && !kept {
                    kept = true;
                } else {
                    removed.push((l, r));
                }
            }
        }
        // weakly decreasing; equal letters leave from the lowest box first
        removed.sort_by(|a, b| b.cmp(a));
        for (l, r) in removed {
            grid.get_mut(r, i).remove(l);
            let pos = insert(&mut grid, i + 1, l)?;
            labels.push((pos, Letter::unprimed(i)));
            trace.push(grid.to_tableau()?);
        }
    }
    let p = grid.to_tableau()?;
    let q = labelled(SkewShape::new(p.shape().outer().clone(), mu)?, &labels)?;
    Ok((RskPair { p, q }, trace))
}

/// Inverse of [`rsk_forward`]; the inner shape of `q` is the shape of the result.
pub fn rsk_backward(pair: &RskPair) -> Result<Tableau> {
    check(&pair.p, Family::Pt)?;
    check(&pair.q, Family::Oft)?;
    if pair.q.shape().outer() != pair.p.shape().outer() || !pair.p.shape().inner().is_empty() {
        return Err(Error::Shape("recording tableau must have the outer shape of P".into()));
    }
    let mu = pair.q.shape().inner().clone();
    let mut labels: Vec<(u32, u32, usize)> =
        pair.q.cells().map(|((r, c), f)| (f.single_letter().unwrap().value, c, r)).collect();
    // increasing label, rightmost box first
    labels.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut grid = Grid::from_tableau(&pair.p);
    let not_in_image = |what: String| Error::NotInImage(what);
    for (i, c, r) in labels {
        let mut y = grid
            .pop(r, c)
            .map_err(|_| not_in_image(format!("label at ({r},{c}) is not a corner when undone")))?
            .single_letter()
            .unwrap();
        for col in (i + 1..c).rev() {
            let height = grid.col_len(col);
            let hit = (1..=height)
                .rev()
                .find(|&k| grid.letter(k, col).is_some_and(|x| bumps(x, y)))
                .ok_or_else(|| not_in_image(format!("no entry of column {col} bumps {y}")))?;
            let x = grid.letter(hit, col).unwrap();
            grid.set_letter(hit, col, y);
            y = x;
        }
        let height = mu.conjugate().part(i as usize - 1) as usize;
        let target = (1..=height)
            .rev()
            .find(|&k| grid.get(k, i).and_then(|f| f.min_letter()).is_some_and(|kr| bumps(kr, y)))
            .ok_or_else(|| not_in_image(format!("{y} fits no box of column {i}")))?;
        grid.get_mut(target, i).insert(y);
    }
    let t = grid.to_tableau()?;
    if t.shape().outer() != &mu {
        return Err(not_in_image("recovered shape differs from the inner shape of Q".into()));
    }
    check(&t, Family::Ot).map_err(|e| not_in_image(e.to_string()))?;
    if rsk_forward(&t)? != *pair {
        return Err(not_in_image("reinserting the recovered tableau gives a different pair".into()));
    }
    Ok(t)
}
