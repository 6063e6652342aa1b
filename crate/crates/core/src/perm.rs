use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::posset::PositionSet;
use crate::word::{self, IntWord};

/// A permutation of `1..=n` in one-line notation `x_1 x_2 ... x_n`.
///
/// Ordering is lexicographic on the one-line word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct Permutation {
    word: Vec<u32>,
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.word
    }
}

impl Permutation {
    /// Validates that `word` uses each of `1..=n` exactly once.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &x in &word {
            let x = x as usize;
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation {
                    word: word::format_letters(&word),
                    n,
                });
            }
            seen[x] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_vec_unchecked(word: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    /// `n n-1 ... 1`.
    pub fn decreasing(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).rev().collect(),
        }
    }

    /// Order-preserving relabelling of a word with distinct letters onto
    /// `1..=len`.
    pub fn standardize(letters: &[u32]) -> Result<Self> {
        let mut order: Vec<usize> = (0..letters.len()).collect();
        order.sort_by_key(|&i| letters[i]);
        if order.windows(2).any(|p| letters[p[0]] == letters[p[1]]) {
            return Err(Error::Precondition(format!(
                "cannot standardize word with repeated letters: {}",
                word::format_letters(letters)
            )));
        }
        let mut word = vec![0; letters.len()];
        for (rank, &i) in order.iter().enumerate() {
            word[i] = rank as u32 + 1;
        }
        Ok(Permutation { word })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.word
    }

    pub fn to_word(&self) -> IntWord {
        IntWord::new(self.word.clone())
    }

    /// 1-based position of letter `x`.
    pub fn position_of(&self, x: u32) -> Option<usize> {
        self.word.iter().position(|&y| y == x).map(|i| i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.word.iter().enumerate() {
            inv[x as usize - 1] = i as u32 + 1;
        }
        Permutation { word: inv }
    }

    /// Complement to `n+1`.
    pub fn complement(&self) -> Permutation {
        let m = self.n() as u32 + 1;
        Permutation {
            word: self.word.iter().map(|&x| m - x).collect(),
        }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation {
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Erases the letters `i+1, ..., n`, giving an element of `S_i`.
    pub fn restrict_leq(&self, i: usize) -> Result<Permutation> {
        if i < 1 || i > self.n() {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.n(),
            });
        }
        Ok(Permutation {
            word: self.restrict_leq_letters(i),
        })
    }

    /// Like [`restrict_leq`](Self::restrict_leq) but allows `i = 0` and skips
    /// validation; returns the raw letters.
    pub(crate) fn restrict_leq_letters(&self, i: usize) -> Vec<u32> {
        self.word
            .iter()
            .copied()
            .filter(|&x| x as usize <= i)
            .collect()
    }

    /// Erases the letters smaller than `i`. `i = n+1` gives the empty word.
    pub fn restrict_geq(&self, i: usize) -> Result<IntWord> {
        if i < 1 || i > self.n() + 1 {
            return Err(Error::IndexOutOfRange {
                index: i,
                lo: 1,
                hi: self.n() + 1,
            });
        }
        Ok(IntWord::new(self.restrict_geq_letters(i)))
    }

    pub(crate) fn restrict_geq_letters(&self, i: usize) -> Vec<u32> {
        self.word
            .iter()
            .copied()
            .filter(|&x| x as usize >= i)
            .collect()
    }

    pub fn des(&self) -> usize {
        word::des(&self.word)
    }

    pub fn maj(&self) -> usize {
        word::maj(&self.word)
    }

    pub fn inv(&self) -> usize {
        word::inv(&self.word)
    }

    pub fn ides(&self) -> usize {
        self.inverse().des()
    }

    pub fn imaj(&self) -> usize {
        self.inverse().maj()
    }

    /// Descent set.
    pub fn ligne(&self) -> PositionSet {
        PositionSet::descents_of(&self.word)
    }

    /// Descent set of the inverse.
    pub fn iligne(&self) -> PositionSet {
        self.inverse().ligne()
    }

    /// Digit string without separators. Only unambiguous for `n <= 9`; longer
    /// permutations fall back to the space-separated form.
    pub fn to_compact(&self) -> String {
        if self.n() <= 9 {
            self.word.iter().map(u32::to_string).collect()
        } else {
            self.to_string()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::new(word::parse_letters(s)?)
    }
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn validation() {
        assert!(Permutation::new(vec![1, 2, 2]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 3]).is_err());
        assert!(Permutation::new(vec![]).is_ok());
        assert_eq!(p("12 5 9 6 13 3 4 8 1 2 7 10 11").n(), 13);
    }

    #[test]
    fn dihedral_operators() {
        assert_eq!(p("935721468").complement(), p("175389642"));
        assert_eq!(p("362715984").inverse(), p("531962487"));
        assert_eq!(p("531962487").reverse(), p("784269135"));
    }

    #[test]
    fn lignes() {
        assert!(p("1234").ligne().is_empty());
        assert_eq!(p("935721468").ligne().positions(), &[1, 4, 5]);
        assert_eq!(p("795128643").ligne().positions(), &[2, 3, 6, 7, 8]);
        assert!(p("1234").iligne().is_empty());
        // inverse of 2341 is 4123
        assert_eq!(p("2341").inverse(), p("4123"));
        assert_eq!(p("2341").iligne().positions(), &[1]);
        // inverse of 3142 is 2413
        assert_eq!(p("3142").inverse(), p("2413"));
        assert_eq!(p("3142").iligne().positions(), &[2]);
    }

    #[test]
    fn inverse_statistics() {
        let s = p("935721468");
        let inv = s.inverse();
        assert_eq!(s.ides(), inv.des());
        assert_eq!(s.imaj(), inv.maj());
        assert_eq!(inv.ides(), s.des());
        assert_eq!(inv.imaj(), s.maj());
        assert_eq!(Permutation::identity(5).ides(), 0);
        assert_eq!(Permutation::identity(5).imaj(), 0);
    }

    #[test]
    fn restrictions() {
        let s = p("935721468");
        assert_eq!(s.restrict_leq(9).unwrap(), s);
        assert_eq!(s.restrict_leq(2).unwrap(), p("21"));
        assert_eq!(p("175389642").restrict_leq(3).unwrap(), p("132"));
        assert!(s.restrict_leq(0).is_err());
        assert!(s.restrict_leq(10).is_err());

        assert_eq!(s.restrict_geq(1).unwrap().letters(), s.as_slice());
        assert_eq!(s.restrict_geq(9).unwrap().letters(), &[9]);
        assert!(s.restrict_geq(10).unwrap().is_empty());
        assert!(s.restrict_geq(11).is_err());
        let big = p("12 5 9 6 13 3 4 8 1 2 7 10 11");
        assert_eq!(
            big.restrict_geq(8).unwrap().letters(),
            &[12, 9, 13, 8, 10, 11]
        );
    }

    #[test]
    fn standardize_words() {
        assert_eq!(
            Permutation::standardize(&[12, 9, 13, 8]).unwrap(),
            p("3241")
        );
        assert!(Permutation::standardize(&[3, 3]).is_err());
    }

    #[test]
    fn text_forms() {
        let s = p("935721468");
        assert_eq!(s.to_string(), "9 3 5 7 2 1 4 6 8");
        assert_eq!(s.to_compact(), "935721468");
        assert_eq!(p("9 3 5 7 2 1 4 6 8"), s);
    }
}
