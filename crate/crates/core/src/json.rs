//! JSON interchange format for tableaux.
//!
//! ```json
//! {"outer":[2,1],"inner":[],"cells":[{"row":1,"col":1,"primed":[1],"unprimed":[]}]}
//! ```
//!
//! Boxes absent from `cells` are empty.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shape::{Partition, SkewShape};
use crate::tableau::{BoxFill, Tableau};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub row: usize,
    pub col: u32,
    #[serde(default)]
    pub primed: Vec<u32>,
    #[serde(default)]
    pub unprimed: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauRecord {
    pub outer: Vec<u32>,
    #[serde(default)]
    pub inner: Vec<u32>,
    pub cells: Vec<CellRecord>,
}

impl From<&Tableau> for TableauRecord {
    fn from(t: &Tableau) -> Self {
        TableauRecord {
            outer: t.shape().outer().parts().to_vec(),
            inner: t.shape().inner().parts().to_vec(),
            cells: t
                .cells()
                .map(|((row, col), f)| CellRecord {
                    row,
                    col,
                    primed: f.primed().to_vec(),
                    unprimed: f.unprimed().to_vec(),
                })
                .collect(),
        }
    }
}

impl TryFrom<TableauRecord> for Tableau {
    type Error = Error;

    fn try_from(rec: TableauRecord) -> Result<Tableau> {
        let shape = SkewShape::new(Partition::new(rec.outer)?, Partition::new(rec.inner)?)?;
        let mut t = Tableau::blank(shape);
        let mut seen = std::collections::HashSet::new();
        for cell in rec.cells {
            if !seen.insert((cell.row, cell.col)) {
                return Err(Error::Shape(format!("box ({},{}) listed twice", cell.row, cell.col)));
            }
            if cell.primed.iter().chain(&cell.unprimed).any(|&v| v == 0) {
                return Err(Error::Parse("letter values start at 1".into()));
            }
            t.set(cell.row, cell.col, BoxFill::new(cell.primed, cell.unprimed))?;
        }
        Ok(t)
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableauRecord::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rec = TableauRecord::deserialize(d)?;
        Tableau::try_from(rec).map_err(serde::de::Error::custom)
    }
}

pub fn tableau_to_json(t: &Tableau) -> String {
    serde_json::to_string(t).expect("tableau serialization cannot fail")
}

pub fn tableau_from_json(s: &str) -> Result<Tableau> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::letter::Letter;

    #[test]
    fn exact_format() {
        let t = Tableau::from_letter_rows(&[vec![Letter::primed(1), Letter::unprimed(1)]]).unwrap();
        assert_eq!(
            tableau_to_json(&t),
            r#"{"outer":[2],"inner":[],"cells":[{"row":1,"col":1,"primed":[1],"unprimed":[]},{"row":1,"col":2,"primed":[],"unprimed":[1]}]}"#
        );
        assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn structural_errors() {
        assert!(tableau_from_json(r#"{"outer":[1],"inner":[],"cells":[{"row":1,"col":2}]}"#).is_err());
        assert!(tableau_from_json(r#"{"outer":[1,2],"cells":[]}"#).is_err());
        assert!(tableau_from_json(r#"{"outer":[1],"inner":[2],"cells":[]}"#).is_err());
        let t = tableau_from_json(r#"{"outer":[2],"cells":[]}"#).unwrap();
        assert!(t.cells().all(|(_, f)| f.is_empty()));
    }
}
