//! General integer words and the classical descent statistics.
//!
//! All statistics here work on arbitrary words, not only permutations, since
//! several constructions take `maj` or `des` of subwords whose letters are not
//! `1..n`. Positions are 1-based: a descent at position `i` means
//! `w[i] > w[i+1]` in 1-based indexing. Equal adjacent letters are neither a
//! descent nor a rise.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A finite word over the nonnegative integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntWord(Vec<u32>);

impl IntWord {
    pub fn new(letters: Vec<u32>) -> Self {
        IntWord(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u32> {
        self.0
    }

    pub fn des(&self) -> usize {
        des(&self.0)
    }

    pub fn maj(&self) -> usize {
        maj(&self.0)
    }

    pub fn inv(&self) -> usize {
        inv(&self.0)
    }

    /// Nondecreasing rearrangement.
    pub fn sorted(&self) -> IntWord {
        IntWord(sort_word(&self.0))
    }
}

impl Deref for IntWord {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for IntWord {
    fn from(v: Vec<u32>) -> Self {
        IntWord(v)
    }
}

impl fmt::Display for IntWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_letters(&self.0))
    }
}

impl std::str::FromStr for IntWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_letters(s).map(IntWord)
    }
}

/// Iterator over the 1-based descent positions of `w`.
pub fn descent_positions(w: &[u32]) -> impl Iterator<Item = usize> + '_ {
    w.windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] > pair[1])
        .map(|(i, _)| i + 1)
}

pub fn des(w: &[u32]) -> usize {
    w.windows(2).filter(|p| p[0] > p[1]).count()
}

pub fn maj(w: &[u32]) -> usize {
    descent_positions(w).sum()
}

pub fn inv(w: &[u32]) -> usize {
    let mut count = 0;
    for (i, &a) in w.iter().enumerate() {
        count += w[i + 1..].iter().filter(|&&b| a > b).count();
    }
    count
}

pub fn sort_word(w: &[u32]) -> Vec<u32> {
    let mut v = w.to_vec();
    v.sort_unstable();
    v
}

/// Compact digit string when every letter is a single digit, comma-separated
/// integers otherwise. The empty word formats as the empty string.
pub fn format_letters(w: &[u32]) -> String {
    if w.iter().all(|&d| d <= 9) {
        w.iter().map(|d| char::from(b'0' + *d as u8)).collect()
    } else {
        w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Accepts a compact digit string (`"0120"`), or integers separated by commas
/// and/or whitespace (`"12 5 9"`, `"1,10,3"`).
pub fn parse_letters(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
    if separated {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?} in {s:?}")))
            })
            .collect()
    } else {
        s.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?} in {s:?}")))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descent_statistics() {
        assert_eq!(des(&[1, 2, 3, 4]), 0);
        assert_eq!(maj(&[1, 2, 3, 4]), 0);
        let w = [9, 3, 5, 7, 2, 1, 4, 6, 8];
        assert_eq!(des(&w), 3);
        assert_eq!(maj(&w), 10);
        assert_eq!(descent_positions(&w).collect::<Vec<_>>(), vec![1, 4, 5]);
        // adjacent pairs 31, 14, 42: two descents
        assert_eq!(des(&[3, 1, 4, 2]), 2);
    }

    #[test]
    fn inversions() {
        assert_eq!(inv(&[1, 2, 3, 4, 5]), 0);
        for n in 1..=8u32 {
            let rev: Vec<u32> = (1..=n).rev().collect();
            assert_eq!(inv(&rev) as u32, n * (n - 1) / 2);
        }
        assert_eq!(inv(&[7, 8, 4, 2, 6, 9, 1, 3, 5]), 22);
    }

    #[test]
    fn equal_letters_are_not_descents() {
        assert_eq!(des(&[2, 2, 1, 1]), 1);
        assert_eq!(maj(&[2, 2, 1, 1]), 2);
        assert_eq!(inv(&[2, 2, 1, 1]), 4);
    }

    #[test]
    fn empty_and_singleton() {
        assert_eq!(des(&[]), 0);
        assert_eq!(maj(&[7]), 0);
        assert_eq!(inv(&[]), 0);
    }

    #[test]
    fn sorting() {
        assert_eq!(sort_word(&[2, 2, 0, 0]), vec![0, 0, 2, 2]);
        assert_eq!(sort_word(&[0, 1, 1, 3]), vec![0, 1, 1, 3]);
    }

    #[test]
    fn sort_is_idempotent_on_small_words() {
        // every word of length <= 6 over {0..5}
        for len in 0..=6u32 {
            let total = 6u32.pow(len);
            for mut code in 0..total {
                let mut w = Vec::with_capacity(len as usize);
                for _ in 0..len {
                    w.push(code % 6);
                    code /= 6;
                }
                let once = sort_word(&w);
                assert_eq!(sort_word(&once), once);
                assert!(once.windows(2).all(|p| p[0] <= p[1]));
            }
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(format_letters(&[0, 0, 2, 1]), "0021");
        assert_eq!(format_letters(&[12, 5, 9]), "12,5,9");
        assert_eq!(
            parse_letters("935721468").unwrap(),
            vec![9, 3, 5, 7, 2, 1, 4, 6, 8]
        );
        assert_eq!(parse_letters("12 5 9").unwrap(), vec![12, 5, 9]);
        assert_eq!(parse_letters("1,10, 3").unwrap(), vec![1, 10, 3]);
        assert!(parse_letters("12a").is_err());
        assert!(parse_letters("1 x").is_err());
    }
}
