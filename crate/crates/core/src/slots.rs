//! Insertion-slot labelling for the major index.
//!
//! A word `x_1 ... x_m` padded with `x_0 = x_{m+1} = 0` has `m+1` slots; slot
//! `i` sits between `x_{i-1}` and `x_i`. With `k` descent slots, the descents
//! are labelled `0..k` right to left and the rises `k..=m` left to right. The
//! label of a slot is then exactly the increase of `maj` caused by inserting a
//! new maximum letter there. The leftmost slot is always a rise and the
//! rightmost always a descent (for the empty word the single slot is treated
//! as a descent, label 0).

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotLabeling {
    labels: Vec<u32>,
    descent: Vec<bool>,
    descent_count: usize,
}

impl SlotLabeling {
    pub fn of(w: &[u32]) -> Result<Self> {
        let mut seen = w.to_vec();
        seen.sort_unstable();
        if seen.first() == Some(&0) || seen.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::Precondition(
                "slot labelling needs distinct positive letters".into(),
            ));
        }
        Ok(Self::of_unchecked(w))
    }

    pub(crate) fn of_unchecked(w: &[u32]) -> Self {
        let m = w.len();
        let at = |i: usize| if i == 0 || i > m { 0 } else { w[i - 1] };
        let descent: Vec<bool> = (1..=m + 1)
            .map(|i| i == m + 1 || at(i - 1) > at(i))
            .collect();
        let k = descent.iter().filter(|&&d| d).count();
        let mut labels = vec![0u32; m + 1];
        let descents = descent.iter().enumerate().rev().filter(|(_, &d)| d);
        for (label, (slot, _)) in (0u32..).zip(descents) {
            labels[slot] = label;
        }
        let rises = descent.iter().enumerate().filter(|(_, &d)| !d);
        for (label, (slot, _)) in (k as u32..).zip(rises) {
            labels[slot] = label;
        }
        SlotLabeling {
            labels,
            descent,
            descent_count: k,
        }
    }

    /// Labels of slots `1..=m+1`, left to right.
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn slot_count(&self) -> usize {
        self.labels.len()
    }

    pub fn descent_count(&self) -> usize {
        self.descent_count
    }

    /// Label of the 1-based `slot`.
    pub fn label(&self, slot: usize) -> u32 {
        self.labels[slot - 1]
    }

    pub fn is_descent(&self, slot: usize) -> bool {
        self.descent[slot - 1]
    }

    pub fn is_rise(&self, slot: usize) -> bool {
        !self.descent[slot - 1]
    }

    /// The 1-based slot carrying `label`.
    pub fn slot_with_label(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label).map(|i| i + 1)
    }
}

/// Inserts `letter` before the 1-based `slot` of `w` (slot `m+1` appends).
pub fn insert_at_slot(w: &[u32], slot: usize, letter: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(w.len() + 1);
    out.extend_from_slice(&w[..slot - 1]);
    out.push(letter);
    out.extend_from_slice(&w[slot - 1..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::maj;

    #[test]
    fn printed_tableaux() {
        let c = SlotLabeling::of(&[3, 5, 7, 2, 1, 4, 6, 8]).unwrap();
        assert_eq!(c.labels(), &[3, 4, 5, 2, 1, 6, 7, 8, 0]);
        assert_eq!(c.descent_count(), 3);
        let d = SlotLabeling::of(&[7, 5, 1, 2, 8, 6, 4, 3]).unwrap();
        assert_eq!(d.labels(), &[6, 5, 4, 7, 8, 3, 2, 1, 0]);
    }

    #[test]
    fn empty_word_has_one_slot() {
        let l = SlotLabeling::of(&[]).unwrap();
        assert_eq!(l.labels(), &[0]);
    }

    #[test]
    fn rejects_repeated_or_zero_letters() {
        assert!(SlotLabeling::of(&[1, 1]).is_err());
        assert!(SlotLabeling::of(&[0, 2]).is_err());
    }

    #[test]
    fn label_is_maj_increment_of_new_maximum() {
        let w = [3, 5, 7, 2, 1, 4, 6, 8];
        let l = SlotLabeling::of(&w).unwrap();
        for slot in 1..=w.len() + 1 {
            let grown = insert_at_slot(&w, slot, 9);
            assert_eq!((maj(&grown) - maj(&w)) as u32, l.label(slot), "slot {slot}");
        }
    }

    #[test]
    fn insertion_positions() {
        assert_eq!(insert_at_slot(&[1, 2], 1, 3), vec![3, 1, 2]);
        assert_eq!(insert_at_slot(&[1, 2], 3, 3), vec![1, 2, 3]);
        assert_eq!(insert_at_slot(&[], 1, 1), vec![1]);
    }
}
