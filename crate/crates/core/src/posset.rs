use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A subset of `{1, ..., n-1}` together with its ambient `n`.
///
/// This is the value type of every set-valued statistic (descent sets,
/// inverse descent sets, `Eul`, `El`). Carrying `n` makes complementation
/// well defined without extra arguments.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PositionSet {
    n: usize,
    positions: Vec<usize>,
}

impl PositionSet {
    /// Builds a set from arbitrary positions; they are sorted and must be
    /// distinct and within `1..=n-1`.
    pub fn new(n: usize, mut positions: Vec<usize>) -> Result<Self> {
        positions.sort_unstable();
        for (i, &p) in positions.iter().enumerate() {
            if p == 0 || p >= n.max(1) {
                return Err(Error::PositionOutOfRange {
                    position: p,
                    max: n.saturating_sub(1),
                });
            }
            if i > 0 && positions[i - 1] == p {
                return Err(Error::Precondition(format!("duplicate position {p}")));
            }
        }
        Ok(PositionSet { n, positions })
    }

    pub fn empty(n: usize) -> Self {
        PositionSet {
            n,
            positions: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        PositionSet {
            n,
            positions: (1..n).collect(),
        }
    }

    /// Descent positions of a word of length `n`.
    pub fn descents_of(w: &[u32]) -> Self {
        PositionSet {
            n: w.len(),
            positions: crate::word::descent_positions(w).collect(),
        }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(positions.iter().all(|&p| p >= 1 && p < n));
        PositionSet { n, positions }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.positions.iter().sum()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.positions.binary_search(&p).is_ok()
    }

    pub fn is_subset(&self, other: &PositionSet) -> bool {
        self.positions.iter().all(|&p| other.contains(p))
    }

    /// `{1..n-1} \ self`.
    pub fn complement(&self) -> PositionSet {
        PositionSet {
            n: self.n,
            positions: (1..self.n).filter(|&p| !self.contains(p)).collect(),
        }
    }

    /// All subsets, in order of increasing bitmask (bit `p-1` for position `p`).
    pub fn subsets(&self) -> impl Iterator<Item = PositionSet> + '_ {
        let k = self.positions.len();
        (0u64..(1u64 << k)).map(move |mask| PositionSet {
            n: self.n,
            positions: (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.positions[i])
                .collect(),
        })
    }

    /// Parses the canonical text form for a given ambient `n`. Accepts `-`,
    /// `∅`, `ε` or the empty string for the empty set.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "" | "-" | "∅" | "ε") {
            return Ok(PositionSet::empty(n));
        }
        let letters = crate::word::parse_letters(s)?;
        PositionSet::new(n, letters.into_iter().map(|p| p as usize).collect())
    }
}

/// Concatenated digits when `n <= 9`, comma-separated otherwise, `-` when
/// empty.
impl fmt::Display for PositionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positions.is_empty() {
            return f.write_str("-");
        }
        let parts: Vec<String> = self.positions.iter().map(usize::to_string).collect();
        if self.n <= 9 {
            f.write_str(&parts.concat())
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(PositionSet::new(4, vec![0]).is_err());
        assert!(PositionSet::new(4, vec![4]).is_err());
        assert!(PositionSet::new(4, vec![2, 2]).is_err());
        let s = PositionSet::new(4, vec![3, 1]).unwrap();
        assert_eq!(s.positions(), &[1, 3]);
        assert!(PositionSet::new(1, vec![]).is_ok());
        assert!(PositionSet::new(0, vec![]).is_ok());
    }

    #[test]
    fn complement_and_format() {
        let s = PositionSet::new(9, vec![1, 4, 5]).unwrap();
        assert_eq!(s.to_string(), "145");
        assert_eq!(s.complement().to_string(), "23678");
        assert_eq!(s.complement().complement(), s);
        assert_eq!(PositionSet::empty(4).to_string(), "-");
        let big = PositionSet::new(12, vec![1, 5, 7, 10]).unwrap();
        assert_eq!(big.to_string(), "1,5,7,10");
    }

    #[test]
    fn parse_round_trip() {
        for text in ["13", "-", "123", "2"] {
            assert_eq!(PositionSet::parse(text, 4).unwrap().to_string(), text);
        }
        assert!(PositionSet::parse("∅", 4).unwrap().is_empty());
        assert!(PositionSet::parse("14", 4).is_err());
        let big = PositionSet::parse("1,5,7,10", 12).unwrap();
        assert_eq!(big.positions(), &[1, 5, 7, 10]);
    }

    #[test]
    fn subsets_enumeration() {
        let s = PositionSet::new(5, vec![1, 3]).unwrap();
        let subs: Vec<String> = s.subsets().map(|t| t.to_string()).collect();
        assert_eq!(subs, vec!["-", "1", "3", "13"]);
    }
}
