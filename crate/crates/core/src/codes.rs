//! Code bijections between `S_n` and digit words.
//!
//! Subexcedent words (`0 <= d_i <= i-1`) are the codomain of [`invcode`] (the
//! Lehmer code) and [`majcode`]; subdiagonal words (`0 <= d_i <= n-i`) are the
//! codomain of [`lc`], [`ic`] and [`mc`]. Reversal maps one family onto the
//! other, and [`delta`] complements a subexcedent word digit by digit.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::slots::{insert_at_slot, SlotLabeling};
use crate::word::{self, maj};

/// `d_1 ... d_n` with `0 <= d_i <= i-1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct SubexcedentWord(Vec<u32>);

/// `d_1 ... d_n` with `0 <= d_i <= n-i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "Vec<u32>")]
pub struct SubdiagonalWord(Vec<u32>);

impl SubexcedentWord {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        for (i, &d) in digits.iter().enumerate() {
            if d > i as u32 {
                return Err(Error::DigitOutOfRange {
                    kind: "subexcedent",
                    position: i + 1,
                    digit: d,
                    bound: i as u32,
                });
            }
        }
        Ok(SubexcedentWord(digits))
    }

    pub fn zeros(n: usize) -> Self {
        SubexcedentWord(vec![0; n])
    }

    /// `0 1 2 ... n-1`, the digit-wise maximum.
    pub fn staircase(n: usize) -> Self {
        SubexcedentWord((0..n as u32).collect())
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }

    /// Reversal, which lands in the subdiagonal words of the same length.
    pub fn reverse(&self) -> SubdiagonalWord {
        SubdiagonalWord(self.0.iter().rev().copied().collect())
    }

    /// All subexcedent words of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SubexcedentWord> {
        MixedRadix::new((1..=n as u32).collect()).map(SubexcedentWord)
    }
}

impl SubdiagonalWord {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        let n = digits.len();
        for (i, &d) in digits.iter().enumerate() {
            let bound = (n - i - 1) as u32;
            if d > bound {
                return Err(Error::DigitOutOfRange {
                    kind: "subdiagonal",
                    position: i + 1,
                    digit: d,
                    bound,
                });
            }
        }
        Ok(SubdiagonalWord(digits))
    }

    pub fn zeros(n: usize) -> Self {
        SubdiagonalWord(vec![0; n])
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&d| d as usize).sum()
    }

    /// Reversal, which lands in the subexcedent words of the same length.
    pub fn reverse(&self) -> SubexcedentWord {
        SubexcedentWord(self.0.iter().rev().copied().collect())
    }

    /// Nondecreasing rearrangement of the digits (not necessarily
    /// subdiagonal any more).
    pub fn sorted(&self) -> Vec<u32> {
        word::sort_word(&self.0)
    }

    /// All subdiagonal words of length `n`, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = SubdiagonalWord> {
        MixedRadix::new((1..=n as u32).rev().collect()).map(SubdiagonalWord)
    }
}

macro_rules! code_word_common {
    ($ty:ident) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&word::format_letters(&self.0))
            }
        }

        impl std::str::FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $ty::new(word::parse_letters(s)?)
            }
        }

        impl From<$ty> for Vec<u32> {
            fn from(w: $ty) -> Vec<u32> {
                w.0
            }
        }

        impl TryFrom<Vec<u32>> for $ty {
            type Error = Error;

            fn try_from(v: Vec<u32>) -> Result<Self> {
                $ty::new(v)
            }
        }
    };
}

code_word_common!(SubexcedentWord);
code_word_common!(SubdiagonalWord);

/// Odometer over words with `0 <= d_i < radix_i`, last digit fastest.
struct MixedRadix {
    radix: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl MixedRadix {
    fn new(radix: Vec<u32>) -> Self {
        let current = Some(vec![0; radix.len()]);
        MixedRadix { radix, current }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        for i in (0..next.len()).rev() {
            if next[i] + 1 < self.radix[i] {
                next[i] += 1;
                self.current = Some(next);
                return Some(out);
            }
            next[i] = 0;
        }
        Some(out)
    }
}

/// Lehmer code: `d_i = #{ j < i : x_j > x_i }`.
pub fn invcode(sigma: &Permutation) -> SubexcedentWord {
    let x = sigma.as_slice();
    SubexcedentWord(
        x.iter()
            .enumerate()
            .map(|(i, &xi)| x[..i].iter().filter(|&&xj| xj > xi).count() as u32)
            .collect(),
    )
}

/// Rebuilds from the right: `x_i` is the `(d_i+1)`-th largest value not yet
/// placed.
pub fn invcode_inv(w: &SubexcedentWord) -> Permutation {
    let n = w.len();
    let mut remaining: Vec<u32> = (1..=n as u32).collect();
    let mut x = vec![0; n];
    for i in (0..n).rev() {
        let idx = remaining.len() - 1 - w.0[i] as usize;
        x[i] = remaining.remove(idx);
    }
    Permutation::from_vec_unchecked(x)
}

/// `d_i = maj(sigma|_i) - maj(sigma|_{i-1})`, where `sigma|_i` keeps the
/// letters `1..=i`.
pub fn majcode(sigma: &Permutation) -> SubexcedentWord {
    let n = sigma.n();
    let mut prev = 0;
    let mut digits = Vec::with_capacity(n);
    for i in 1..=n {
        let m = maj(&sigma.restrict_leq_letters(i));
        digits.push((m - prev) as u32);
        prev = m;
    }
    SubexcedentWord(digits)
}

/// Inserts `1, 2, ..., n` in turn, letter `i` going into the slot of the
/// current word labelled `d_i`.
pub fn majcode_inv(w: &SubexcedentWord) -> Permutation {
    let mut word: Vec<u32> = Vec::with_capacity(w.len());
    for (i, &d) in w.0.iter().enumerate() {
        let labels = SlotLabeling::of_unchecked(&word);
        let slot = labels
            .slot_with_label(d)
            .expect("subexcedent digit is always a valid slot label");
        word = insert_at_slot(&word, slot, i as u32 + 1);
    }
    Permutation::from_vec_unchecked(word)
}

/// `d_i = #{ j > i : x_i > x_j }`.
pub fn lc(sigma: &Permutation) -> SubdiagonalWord {
    let x = sigma.as_slice();
    SubdiagonalWord(
        x.iter()
            .enumerate()
            .map(|(i, &xi)| x[i + 1..].iter().filter(|&&xj| xi > xj).count() as u32)
            .collect(),
    )
}

/// Inverse of [`lc`]: `x_i` is the `(d_i+1)`-th smallest unused value.
pub fn lc_inv(w: &SubdiagonalWord) -> Permutation {
    let mut remaining: Vec<u32> = (1..=w.len() as u32).collect();
    let x = w.0.iter().map(|&d| remaining.remove(d as usize)).collect();
    Permutation::from_vec_unchecked(x)
}

pub fn ic(sigma: &Permutation) -> SubdiagonalWord {
    lc(&sigma.inverse())
}

/// Inverse of [`ic`], computed as `i ∘ r ∘ invcode⁻¹ ∘ δ ∘ r`.
pub fn ic_inv(w: &SubdiagonalWord) -> Permutation {
    invcode_inv(&delta(&w.reverse())).reverse().inverse()
}

/// `d_i = maj(sigma^(i)) - maj(sigma^(i+1))`, where `sigma^(i)` keeps the
/// letters `>= i`.
pub fn mc(sigma: &Permutation) -> SubdiagonalWord {
    let n = sigma.n();
    let mut digits = vec![0u32; n];
    let mut prev = 0;
    for i in (1..=n).rev() {
        let m = maj(&sigma.restrict_geq_letters(i));
        digits[i - 1] = (m - prev) as u32;
        prev = m;
    }
    SubdiagonalWord(digits)
}

/// Inverse of [`mc`] via `c ∘ majcode⁻¹ ∘ δ ∘ r`. Debug builds cross-check
/// against [`mc_inv_by_insertion`].
pub fn mc_inv(w: &SubdiagonalWord) -> Permutation {
    let sigma = majcode_inv(&delta(&w.reverse())).complement();
    debug_assert_eq!(sigma, mc_inv_by_insertion(w));
    sigma
}

/// Inverse of [`mc`] by inserting `n, n-1, ..., 1`: letter `i` goes into the
/// slot of the current word (letters `> i`) whose `maj` increment is `d_i`.
pub fn mc_inv_by_insertion(w: &SubdiagonalWord) -> Permutation {
    let n = w.len();
    let mut word: Vec<u32> = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        let base = maj(&word);
        let target = w.0[i - 1] as usize;
        let slot = (1..=word.len() + 1)
            .find(|&slot| maj(&insert_at_slot(&word, slot, i as u32)) - base == target)
            .expect("subdiagonal digit always matches one slot increment");
        word = insert_at_slot(&word, slot, i as u32);
    }
    Permutation::from_vec_unchecked(word)
}

/// `δ(d_1 ... d_n) = (0-d_1)(1-d_2)...(n-1-d_n)`.
pub fn delta(w: &SubexcedentWord) -> SubexcedentWord {
    SubexcedentWord(w.0.iter().enumerate().map(|(i, &d)| i as u32 - d).collect())
}
