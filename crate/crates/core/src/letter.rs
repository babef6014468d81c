//! The primed alphabet `1' < 1 < 2' < 2 < ...` and arbitrary total orders on it.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A primed (`v'`) or unprimed (`v`) positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    #[serde(rename = "v")]
    pub value: u32,
    #[serde(rename = "p")]
    pub primed: bool,
}

impl Letter {
    pub const fn unprimed(value: u32) -> Letter {
        Letter { value, primed: false }
    }

    pub const fn primed(value: u32) -> Letter {
        Letter { value, primed: true }
    }

    /// Position in the standard order `1' < 1 < 2' < 2 < ...`.
    pub fn standard_key(self) -> u32 {
        2 * self.value - self.primed as u32
    }

    pub fn parse(s: &str) -> Result<Letter> {
        let s = s.trim();
        let (digits, primed) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let value: u32 = digits.parse().map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if value == 0 {
            return Err(Error::Parse("letters start at 1".into()));
        }
        Ok(Letter { value, primed })
    }
}

/// Letters compare in the standard order.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.standard_key().cmp(&other.standard_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.primed {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// A total order on `{1', 1, ..., N', N}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalOrder {
    sequence: Vec<Letter>,
    /// `rank[standard_key - 1]`
    rank: Vec<usize>,
}

impl TotalOrder {
    /// Builds an order from its increasing sequence, which must list every
    /// letter of value at most `N` exactly once for some `N`.
    pub fn new(sequence: Vec<Letter>) -> Result<TotalOrder> {
        let n = sequence.len() / 2;
        if !sequence.len().is_multiple_of(2) {
            return Err(Error::Parse("an order lists an even number of letters".into()));
        }
        let mut rank = vec![usize::MAX; sequence.len()];
        for (i, &l) in sequence.iter().enumerate() {
            if l.value == 0 || l.value as usize > n || rank[l.standard_key() as usize - 1] != usize::MAX {
                return Err(Error::Parse(format!("order must list each of 1',1,...,{n}',{n} exactly once")));
            }
            rank[l.standard_key() as usize - 1] = i;
        }
        Ok(TotalOrder { sequence, rank })
    }

    /// `1' < 1 < 2' < 2 < ... < N' < N`.
    pub fn standard(n: u32) -> TotalOrder {
        let seq = (1..=n).flat_map(|v| [Letter::primed(v), Letter::unprimed(v)]).collect();
        TotalOrder::new(seq).unwrap()
    }

    /// `1 < 2 < ... < N < 1' < 2' < ... < N'`.
    pub fn unprimed_first(n: u32) -> TotalOrder {
        let seq = (1..=n).map(Letter::unprimed).chain((1..=n).map(Letter::primed)).collect();
        TotalOrder::new(seq).unwrap()
    }

    /// `1' < 2' < ... < N' < 1 < 2 < ... < N`.
    pub fn primed_first(n: u32) -> TotalOrder {
        let seq = (1..=n).map(Letter::primed).chain((1..=n).map(Letter::unprimed)).collect();
        TotalOrder::new(seq).unwrap()
    }

    /// `N < ... < 2 < 1 < 1' < 2' < ... < N'`, the order of primed flagged tableaux.
    pub fn flagged(n: u32) -> TotalOrder {
        let seq = (1..=n).rev().map(Letter::unprimed).chain((1..=n).map(Letter::primed)).collect();
        TotalOrder::new(seq).unwrap()
    }

    /// Parses a comma-separated increasing sequence such as `1',1,2,2'`.
    pub fn parse(s: &str) -> Result<TotalOrder> {
        let seq = s.split(',').map(Letter::parse).collect::<Result<Vec<_>>>()?;
        TotalOrder::new(seq)
    }

    /// The largest letter value in the domain.
    pub fn max_value(&self) -> u32 {
        (self.sequence.len() / 2) as u32
    }

    pub fn sequence(&self) -> &[Letter] {
        &self.sequence
    }

    pub fn rank(&self, l: Letter) -> Result<usize> {
        (l.value as usize)
            .checked_sub(1)
            .and_then(|_| self.rank.get(l.standard_key() as usize - 1))
            .copied()
            .ok_or_else(|| Error::OutsideOrder(l.to_string()))
    }

    pub fn compare(&self, a: Letter, b: Letter) -> Result<Ordering> {
        Ok(self.rank(a)?.cmp(&self.rank(b)?))
    }

    /// Swaps the letters at positions `k` and `k + 1`.
    pub fn swapped(&self, k: usize) -> TotalOrder {
        let mut seq = self.sequence.clone();
        seq.swap(k, k + 1);
        TotalOrder::new(seq).unwrap()
    }

    /// If `other` is `self` with one adjacent pair exchanged, returns the
    /// position `k` of the lower letter of that pair in `self`.
    pub fn adjacent_transposition_to(&self, other: &TotalOrder) -> Result<usize> {
        if self.sequence.len() != other.sequence.len() {
            return Err(Error::Incompatible("orders on different alphabets".into()));
        }
        let diff: Vec<usize> = (0..self.sequence.len()).filter(|&k| self.sequence[k] != other.sequence[k]).collect();
        match diff.as_slice() {
            [k, k1]
                if *k1 == k + 1
                    && self.sequence[*k] == other.sequence[*k1]
                    && self.sequence[*k1] == other.sequence[*k] =>
            {
                Ok(*k)
            }
            _ => Err(Error::NotAdjacent(format!("{self} vs {other}"))),
        }
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.sequence.iter().enumerate() {
            if i > 0 {
                write!(f, "<")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_order_interleaves() {
        let mut letters = [Letter::unprimed(2), Letter::primed(1), Letter::primed(2), Letter::unprimed(1)];
        letters.sort();
        let shown: Vec<String> = letters.iter().map(|l| l.to_string()).collect();
        assert_eq!(shown, ["1'", "1", "2'", "2"]);
        assert_eq!(TotalOrder::standard(2).to_string(), "1'<1<2'<2");
    }

    #[test]
    fn order_must_cover_domain() {
        assert!(TotalOrder::parse("1',1,2'").is_err());
        assert!(TotalOrder::parse("1',1,1',2").is_err());
        assert!(TotalOrder::parse("1',1,2,3").is_err());
        let o = TotalOrder::parse("1',1,2,3,2',4,3',4'").unwrap();
        assert_eq!(o.max_value(), 4);
        assert!(o.rank(Letter::unprimed(5)).is_err());
    }

    #[test]
    fn detects_adjacent_swaps() {
        let a = TotalOrder::parse("1',1,2,3,2',4,3',4'").unwrap();
        let b = TotalOrder::parse("1',1,2,2',3,4,3',4'").unwrap();
        assert_eq!(a.adjacent_transposition_to(&b).unwrap(), 3);
        assert!(a.adjacent_transposition_to(&a).is_err());
        assert!(TotalOrder::standard(2).adjacent_transposition_to(&TotalOrder::unprimed_first(2)).is_err());
    }

    #[test]
    fn letter_json_shape() {
        let s = serde_json::to_string(&Letter::primed(3)).unwrap();
        assert_eq!(s, r#"{"v":3,"p":true}"#);
    }
}
