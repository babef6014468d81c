//! Weight-preserving bijections `PT_≺(λ/μ) → PT_◁(λ/μ)` for orders that
//! differ by one adjacent transposition, and their composites.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::letter::{Letter, TotalOrder};
use crate::tableau::{check_pt_order, BoxFill, Tableau};

type Pos = (usize, u32);

fn diagonal(p: Pos) -> i64 {
    p.1 as i64 - p.0 as i64
}

fn write(t: &Tableau, changes: BTreeMap<Pos, Letter>) -> Tableau {
    let mut out = t.clone();
    for ((r, c), l) in changes {
        out.set(r, c, BoxFill::single(l)).unwrap();
    }
    out
}

/// Shifts `i` and `j'` one diagonal up (`up`) or down within each run of
/// consecutive occupied diagonals, wrapping the end entry around.
fn diagonal_shift(t: &Tableau, i: Letter, j: Letter, up: bool) -> Result<Tableau> {
    let boxes: Vec<Pos> =
        t.cells().filter(|(_, f)| f.single_letter().is_some_and(|l| l == i || l == j)).map(|(p, _)| p).collect();
    let mut by_diag: BTreeMap<i64, Vec<Pos>> = BTreeMap::new();
    for &p in &boxes {
        by_diag.entry(diagonal(p)).or_default().push(p);
    }
    let mut components: Vec<Vec<Pos>> = Vec::new();
    let mut last = None;
    for (&d, ps) in &by_diag {
        if last != Some(d - 1) {
            components.push(Vec::new());
        }
        components.last_mut().unwrap().extend(ps);
        last = Some(d);
    }
    let mut changes = BTreeMap::new();
    for comp in components {
        let members: BTreeSet<Pos> = comp.iter().copied().collect();
        // upper-rightmost for the upward shift, lower-leftmost for the downward one
        let end = if up {
            *comp.iter().max_by_key(|&&p| (diagonal(p), std::cmp::Reverse(p.0))).unwrap()
        } else {
            *comp.iter().min_by_key(|&&p| (diagonal(p), std::cmp::Reverse(p.0))).unwrap()
        };
        let carried = t.letter(end.0, end.1).unwrap();
        let mut targets = BTreeMap::new();
        for &p in comp.iter().filter(|&&p| p != end) {
            let l = t.letter(p.0, p.1).unwrap();
            let q = match (l == i, up) {
                (true, true) => (p.0, p.1 + 1),
                (true, false) => (p.0, p.1.wrapping_sub(1)),
                (false, true) => (p.0.wrapping_sub(1), p.1),
                (false, false) => (p.0 + 1, p.1),
            };
            if !members.contains(&q) || targets.insert(q, l).is_some() {
                return Err(Error::Invalid {
                    family: "PT under the target order",
                    reason: format!("{l} at {p:?} cannot shift within its component"),
                });
            }
        }
        let vacant: Vec<Pos> = members.iter().filter(|p| !targets.contains_key(p)).copied().collect();
        let [v] = vacant.as_slice() else {
            return Err(Error::Invalid {
                family: "PT under the target order",
                reason: "component shift does not leave exactly one vacancy".into(),
            });
        };
        targets.insert(*v, carried);
        changes.extend(targets);
    }
    Ok(write(t, changes))
}

/// Exchanges two adjacent letters of the same kind. Unprimed pairs stacked
/// in a column and primed pairs side by side in a row swap; every maximal
/// run of the remaining boxes along a row (unprimed) or column (primed) is
/// reversed.
fn same_kind_swap(t: &Tableau, a: Letter, b: Letter) -> Tableau {
    let primed = a.primed;
    let holds = |p: Pos, l: Letter| t.letter(p.0, p.1) == Some(l);
    let partner = |p: Pos| if primed { (p.0, p.1 + 1) } else { (p.0 + 1, p.1) };
    let mut changes = BTreeMap::new();
    let mut paired = BTreeSet::new();
    for (p, _) in t.cells() {
        if holds(p, a) && holds(partner(p), b) {
            let q = partner(p);
            changes.insert(p, b);
            changes.insert(q, a);
            paired.insert(p);
            paired.insert(q);
        }
    }
    let mut lines: BTreeMap<u32, Vec<(u32, Pos)>> = BTreeMap::new();
    for (p, _) in t.cells() {
        if (holds(p, a) || holds(p, b)) && !paired.contains(&p) {
            let (line, along) = if primed { (p.1, p.0 as u32) } else { (p.0 as u32, p.1) };
            lines.entry(line).or_default().push((along, p));
        }
    }
    for (_, mut cells) in lines {
        cells.sort();
        let mut start = 0;
        while start < cells.len() {
            let mut end = start + 1;
            while end < cells.len() && cells[end].0 == cells[end - 1].0 + 1 {
                end += 1;
            }
            let run = &cells[start..end];
            for (k, &(_, p)) in run.iter().enumerate() {
                let (_, src) = run[run.len() - 1 - k];
                changes.insert(p, t.letter(src.0, src.1).unwrap());
            }
            start = end;
        }
    }
    write(t, changes)
}

/// Maps `PT_from` to `PT_to` where `to` is `from` with one adjacent pair
/// of letters exchanged.
pub fn swap_adjacent(t: &Tableau, from: &TotalOrder, to: &TotalOrder) -> Result<Tableau> {
    let k = from.adjacent_transposition_to(to)?;
    check_pt_order(t, from)?;
    let (a, b) = (from.sequence()[k], from.sequence()[k + 1]);
    let out = match (a.primed, b.primed) {
        (false, true) => diagonal_shift(t, a, b, true)?,
        (true, false) => diagonal_shift(t, b, a, false)?,
        _ => same_kind_swap(t, a, b),
    };
    check_pt_order(&out, to)?;
    Ok(out)
}

fn swapped_pair(from: &TotalOrder, to: &TotalOrder) -> Result<(Letter, Letter)> {
    let k = from.adjacent_transposition_to(to)?;
    Ok((from.sequence()[k], from.sequence()[k + 1]))
}

/// `↗`: `prec` has some `i` immediately before some `j'`, and `lhd` is
/// `prec` with that pair exchanged.
pub fn order_swap_up(t: &Tableau, prec: &TotalOrder, lhd: &TotalOrder) -> Result<Tableau> {
    match swapped_pair(prec, lhd)? {
        (a, b) if !a.primed && b.primed => swap_adjacent(t, prec, lhd),
        (a, b) => Err(Error::NotAdjacent(format!("{a} before {b} is not an unprimed-primed pair"))),
    }
}

/// `↙`, the inverse of [`order_swap_up`]: `lhd` has `j'` immediately before `i`.
pub fn order_swap_down(t: &Tableau, lhd: &TotalOrder, prec: &TotalOrder) -> Result<Tableau> {
    match swapped_pair(lhd, prec)? {
        (a, b) if a.primed && !b.primed => swap_adjacent(t, lhd, prec),
        (a, b) => Err(Error::NotAdjacent(format!("{a} before {b} is not a primed-unprimed pair"))),
    }
}

/// The sequence of orders visited by bubble-sorting `from` into `to`.
pub fn bubble_path(from: &TotalOrder, to: &TotalOrder) -> Result<Vec<TotalOrder>> {
    if from.max_value() != to.max_value() {
        return Err(Error::Incompatible(format!("orders on 1..{} and 1..{}", from.max_value(), to.max_value())));
    }
    let mut path = vec![from.clone()];
    let mut cur = from.clone();
    for (p, &want) in to.sequence().iter().enumerate() {
        let q = cur.rank(want)?;
        for k in (p..q).rev() {
            cur = cur.swapped(k);
            path.push(cur.clone());
        }
    }
    Ok(path)
}

/// Composite of adjacent swaps along [`bubble_path`].
pub fn reorder(t: &Tableau, from: &TotalOrder, to: &TotalOrder) -> Result<Tableau> {
    let path = bubble_path(from, to)?;
    check_pt_order(t, from)?;
    let mut cur = t.clone();
    for w in path.windows(2) {
        cur = swap_adjacent(&cur, &w[0], &w[1])?;
    }
    Ok(cur)
}
