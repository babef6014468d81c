//! Exhaustive generators for every tableau family.
//!
//! All generators fill boxes in row-major order and emit tableaux in a
//! deterministic order: lexicographic on cell coordinates, then on the
//! candidate order of each box (standard letter order, or the supplied order
//! for `PT_≺`).

use crate::error::Result;
use crate::letter::{Letter, TotalOrder};
use crate::shape::{Partition, SkewShape};
use crate::tableau::{BoxFill, Tableau};

/// Letter and size bounds that make the infinite families finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBounds {
    /// Largest unprimed value allowed.
    pub max_unprimed: u32,
    /// Largest primed value allowed.
    pub max_primed: u32,
    /// Entries beyond one per box (overfull tableaux only).
    pub extra_entries: u32,
}

impl EnumBounds {
    /// Letter values at most `n`, at most `extra` surplus entries.
    pub fn new(n: u32, extra: u32) -> EnumBounds {
        EnumBounds { max_unprimed: n, max_primed: n, extra_entries: extra }
    }

    pub fn split(max_unprimed: u32, max_primed: u32, extra: u32) -> EnumBounds {
        EnumBounds { max_unprimed, max_primed, extra_entries: extra }
    }
}

/// Row-major backtracking over the boxes of `shape`. `options` lists the
/// admissible fills of box `(r, c)` given the partially filled tableau and
/// the surplus entries used so far.
fn search<O, V>(shape: &SkewShape, options: O, visit: &mut V)
where
    O: Fn(&Tableau, usize, u32, u32) -> Vec<BoxFill>,
    V: FnMut(&Tableau) + ?Sized,
{
    let cells: Vec<(usize, u32)> = shape.boxes().collect();
    let mut tab = Tableau::blank(shape.clone());
    fn go<O, V>(cells: &[(usize, u32)], k: usize, surplus: u32, tab: &mut Tableau, options: &O, visit: &mut V)
    where
        O: Fn(&Tableau, usize, u32, u32) -> Vec<BoxFill>,
        V: FnMut(&Tableau) + ?Sized,
    {
        let Some(&(r, c)) = cells.get(k) else {
            visit(tab);
            return;
        };
        for f in options(tab, r, c, surplus) {
            let extra = (f.len() as u32).saturating_sub(1);
            tab.set(r, c, f).unwrap();
            go(cells, k + 1, surplus + extra, tab, options, visit);
        }
        tab.set(r, c, BoxFill::empty()).unwrap();
    }
    go(&cells, 0, 0, &mut tab, &options, visit);
}

fn letters_up_to(bounds: &EnumBounds) -> Vec<Letter> {
    let n = bounds.max_primed.max(bounds.max_unprimed);
    let mut v: Vec<Letter> = (1..=n)
        .flat_map(|x| [Letter::primed(x), Letter::unprimed(x)])
        .filter(|l| if l.primed { l.value <= bounds.max_primed } else { l.value <= bounds.max_unprimed })
        .collect();
    v.sort();
    v
}

/// Every nonempty box content with at most `max_len` entries, sorted by its
/// letter sequence.
fn all_box_fills(bounds: &EnumBounds, max_len: usize) -> Vec<BoxFill> {
    let letters = letters_up_to(bounds);
    let mut out = Vec::new();
    fn go(letters: &[Letter], start: usize, cur: &mut BoxFill, max_len: usize, out: &mut Vec<BoxFill>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max_len {
            return;
        }
        for (i, &l) in letters.iter().enumerate().skip(start) {
            cur.insert(l);
            // primed letters form a set, unprimed a multiset
            let next = if l.primed { i + 1 } else { i };
            go(letters, next, cur, max_len, out);
            cur.remove(l);
        }
    }
    go(&letters, 0, &mut BoxFill::empty(), max_len, &mut out);
    out.sort_by_key(|f| f.letters());
    out
}

fn row_ok(a: Letter, b: Letter) -> bool {
    a < b || (a == b && !a.primed)
}

fn column_ok(a: Letter, c: Letter) -> bool {
    a < c || (a == c && a.primed)
}

/// Overfull tableaux of shape `mu` with letters inside `bounds` and at most
/// `bounds.extra_entries` entries beyond one per box.
pub fn visit_ot(mu: &Partition, bounds: EnumBounds, visit: &mut dyn FnMut(&Tableau)) {
    let fills = all_box_fills(&bounds, 1 + bounds.extra_entries as usize);
    let shape = SkewShape::straight(mu.clone());
    search(
        &shape,
        |t, r, c, surplus| {
            let left = t.get(r, c.wrapping_sub(1)).and_then(BoxFill::max_letter);
            let above = if r > 1 { t.get(r - 1, c).and_then(BoxFill::max_letter) } else { None };
            fills
                .iter()
                .filter(|f| f.len() as u32 - 1 + surplus <= bounds.extra_entries)
                .filter(|f| {
                    let lo = f.min_letter().unwrap();
                    left.is_none_or(|a| row_ok(a, lo)) && above.is_none_or(|a| column_ok(a, lo))
                })
                .cloned()
                .collect()
        },
        visit,
    );
}

pub fn ot_tableaux(mu: &Partition, bounds: EnumBounds) -> Vec<Tableau> {
    collect(|v| visit_ot(mu, bounds, v))
}

/// Underfull tableaux of shape `lambda`; `bounds.extra_entries` is ignored.
pub fn visit_ut(lambda: &Partition, bounds: EnumBounds, visit: &mut dyn FnMut(&Tableau)) {
    let mut choices = vec![BoxFill::empty()];
    choices.extend(letters_up_to(&bounds).into_iter().map(BoxFill::single));
    let shape = SkewShape::straight(lambda.clone());
    search(
        &shape,
        |t, r, c, _| {
            let left = (1..c).rev().find_map(|j| t.letter(r, j));
            let above = if r > 1 { t.letter(r - 1, c) } else { None };
            choices
                .iter()
                .filter(|f| {
                    if c == 1 && f.is_empty() {
                        return false;
                    }
                    let cur = f.single_letter();
                    if let (Some(a), Some(b)) = (left, cur) {
                        if !row_ok(a, b) {
                            return false;
                        }
                    }
                    // the rightmost nonempty box of this row weakly left of c
                    let effective = cur.or(left);
                    match (above, effective) {
                        (Some(a), Some(e)) => column_ok(a, e),
                        _ => true,
                    }
                })
                .cloned()
                .collect()
        },
        visit,
    );
}

pub fn ut_tableaux(lambda: &Partition, bounds: EnumBounds) -> Vec<Tableau> {
    collect(|v| visit_ut(lambda, bounds, v))
}

/// Primed tableaux of shape `lambda` with letters inside `bounds`.
pub fn visit_pt(lambda: &Partition, bounds: EnumBounds, visit: &mut dyn FnMut(&Tableau)) {
    let letters = letters_up_to(&bounds);
    let shape = SkewShape::straight(lambda.clone());
    search(
        &shape,
        |t, r, c, _| {
            let left = t.letter(r, c.wrapping_sub(1));
            let above = if r > 1 { t.letter(r - 1, c) } else { None };
            letters
                .iter()
                .filter(|&&l| left.is_none_or(|a| row_ok(a, l)) && above.is_none_or(|a| column_ok(a, l)))
                .map(|&l| BoxFill::single(l))
                .collect()
        },
        visit,
    );
}

pub fn pt_tableaux(lambda: &Partition, n: u32) -> Vec<Tableau> {
    collect(|v| visit_pt(lambda, EnumBounds::new(n, 0), v))
}

/// `PT_≺(shape)` with letter values at most `n`.
pub fn visit_pt_order(shape: &SkewShape, order: &TotalOrder, n: u32, visit: &mut dyn FnMut(&Tableau)) -> Result<()> {
    let letters: Vec<Letter> = order.sequence().iter().copied().filter(|l| l.value <= n).collect();
    for &l in &letters {
        order.rank(l)?;
    }
    let rank = |l: Letter| order.rank(l).unwrap();
    search(
        shape,
        |t, r, c, _| {
            let left = t.letter(r, c.wrapping_sub(1));
            let above = if r > 1 { t.letter(r - 1, c) } else { None };
            letters
                .iter()
                .filter(|&&l| {
                    let row = left.is_none_or(|a| rank(a) < rank(l) || (a == l && !l.primed));
                    let col = above.is_none_or(|a| rank(a) < rank(l) || (a == l && l.primed));
                    row && col
                })
                .map(|&l| BoxFill::single(l))
                .collect()
        },
        visit,
    );
    Ok(())
}

pub fn pt_order_tableaux(shape: &SkewShape, order: &TotalOrder, n: u32) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    visit_pt_order(shape, order, n, &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// Over flagged tableaux: row `i` uses `1..=inner_i`, rows weakly decrease,
/// columns strictly decrease downward.
pub fn visit_oft(shape: &SkewShape, visit: &mut dyn FnMut(&Tableau)) {
    if !shape.equal_row_counts() {
        return;
    }
    search(
        shape,
        |t, r, c, _| {
            let flag = shape.inner().part(r - 1);
            let left = t.letter(r, c.wrapping_sub(1)).map(|l| l.value);
            let above = if r > 1 { t.letter(r - 1, c).map(|l| l.value) } else { None };
            (1..=flag)
                .filter(|&v| left.is_none_or(|a| a >= v) && above.is_none_or(|a| a > v))
                .map(|v| BoxFill::single(Letter::unprimed(v)))
                .collect()
        },
        visit,
    );
}

pub fn oft_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    collect(|v| visit_oft(shape, v))
}

/// Under flagged tableaux: row `i` uses `1'..=(outer_i - 1)'`, rows strictly
/// increase, columns weakly increase downward.
pub fn visit_uft(shape: &SkewShape, visit: &mut dyn FnMut(&Tableau)) {
    if !shape.equal_row_counts() {
        return;
    }
    search(
        shape,
        |t, r, c, _| {
            let flag = shape.outer().part(r - 1).saturating_sub(1);
            let left = t.letter(r, c.wrapping_sub(1)).map(|l| l.value);
            let above = if r > 1 { t.letter(r - 1, c).map(|l| l.value) } else { None };
            (1..=flag)
                .filter(|&v| left.is_none_or(|a| a < v) && above.is_none_or(|a| a <= v))
                .map(|v| BoxFill::single(Letter::primed(v)))
                .collect()
        },
        visit,
    );
}

pub fn uft_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    collect(|v| visit_uft(shape, v))
}

/// Primed flagged tableaux under `... 2 < 1 < 1' < 2' < ...`.
pub fn visit_pft(shape: &SkewShape, visit: &mut dyn FnMut(&Tableau)) {
    let n = shape.outer().part(0).max(1);
    let order = TotalOrder::flagged(n);
    let rank = |l: Letter| order.rank(l).unwrap();
    search(
        shape,
        |t, r, c, _| {
            let left = t.letter(r, c.wrapping_sub(1));
            let above = if r > 1 { t.letter(r - 1, c) } else { None };
            let unprimed = (1..=shape.inner().part(r - 1)).map(Letter::unprimed);
            let primed = (1..shape.outer().part(r - 1)).map(Letter::primed);
            let mut cands: Vec<Letter> = unprimed.chain(primed).collect();
            cands.sort_by_key(|&l| rank(l));
            cands
                .into_iter()
                .filter(|&l| {
                    let row = left.is_none_or(|a| rank(a) < rank(l) || (a == l && !l.primed));
                    let col = above.is_none_or(|a| rank(a) < rank(l) || (a == l && l.primed));
                    row && col
                })
                .map(BoxFill::single)
                .collect()
        },
        visit,
    );
}

pub fn pft_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    collect(|v| visit_pft(shape, v))
}

/// Semistandard tableaux of skew shape with entries at most `n`.
pub fn visit_ssyt(shape: &SkewShape, n: u32, visit: &mut dyn FnMut(&Tableau)) {
    search(
        shape,
        |t, r, c, _| {
            let left = t.letter(r, c.wrapping_sub(1)).map(|l| l.value).unwrap_or(1);
            let above = if r > 1 { t.letter(r - 1, c).map(|l| l.value + 1) } else { None };
            (left.max(above.unwrap_or(1))..=n).map(|v| BoxFill::single(Letter::unprimed(v))).collect()
        },
        visit,
    );
}

fn collect(run: impl FnOnce(&mut dyn FnMut(&Tableau))) -> Vec<Tableau> {
    let mut out = Vec::new();
    run(&mut |t: &Tableau| out.push(t.clone()));
    out
}
