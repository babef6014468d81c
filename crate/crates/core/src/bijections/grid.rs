//! A straight-shape working grid whose rows may grow and shrink.

use crate::error::{Error, Result};
use crate::letter::Letter;
use crate::shape::{Partition, SkewShape};
use crate::tableau::{BoxFill, Tableau};

#[derive(Clone, Debug)]
pub(crate) struct Grid {
    rows: Vec<Vec<BoxFill>>,
}

impl Grid {
    pub fn from_tableau(t: &Tableau) -> Grid {
        debug_assert!(t.shape().inner().is_empty());
        Grid { rows: t.rows().to_vec() }
    }

    pub fn row_len(&self, r: usize) -> u32 {
        self.rows.get(r.wrapping_sub(1)).map_or(0, |row| row.len() as u32)
    }

    pub fn col_len(&self, c: u32) -> usize {
        self.rows.iter().take_while(|row| row.len() as u32 >= c).count()
    }

    pub fn get(&self, r: usize, c: u32) -> Option<&BoxFill> {
        if r == 0 || c == 0 {
            return None;
        }
        self.rows.get(r - 1)?.get(c as usize - 1)
    }

    pub fn get_mut(&mut self, r: usize, c: u32) -> &mut BoxFill {
        &mut self.rows[r - 1][c as usize - 1]
    }

    pub fn letter(&self, r: usize, c: u32) -> Option<Letter> {
        self.get(r, c).and_then(BoxFill::single_letter)
    }

    pub fn set_letter(&mut self, r: usize, c: u32, l: Letter) {
        *self.get_mut(r, c) = BoxFill::single(l);
    }

    /// Adds a box at the end of row `r`, which must be column `c`.
    pub fn push(&mut self, r: usize, c: u32, fill: BoxFill) -> Result<()> {
        if r == self.rows.len() + 1 {
            self.rows.push(Vec::new());
        }
        if r > self.rows.len() || self.row_len(r) + 1 != c {
            return Err(Error::Shape(format!("({r},{c}) is not an addable box")));
        }
        self.rows[r - 1].push(fill);
        Ok(())
    }

    /// Removes the last box of row `r`, which must be column `c`.
    pub fn pop(&mut self, r: usize, c: u32) -> Result<BoxFill> {
        if self.row_len(r) != c || self.row_len(r + 1) >= c {
            return Err(Error::Shape(format!("({r},{c}) is not a removable corner")));
        }
        let f = self.rows[r - 1].pop().unwrap();
        while self.rows.last().is_some_and(Vec::is_empty) {
            self.rows.pop();
        }
        Ok(f)
    }

    pub fn shape(&self) -> Result<Partition> {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn to_tableau(&self) -> Result<Tableau> {
        Tableau::new(SkewShape::straight(self.shape()?), self.rows.clone())
    }
}

/// Fills a skew shape with single letters at the given boxes.
pub(crate) fn labelled(shape: SkewShape, labels: &[((usize, u32), Letter)]) -> Result<Tableau> {
    let mut q = Tableau::blank(shape);
    for &((r, c), l) in labels {
        q.set(r, c, BoxFill::single(l))?;
    }
    Ok(q)
}
