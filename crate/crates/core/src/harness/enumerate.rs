//! Lexicographic enumeration of `S_n`, with rank-based ranges so work can be
//! split across threads.

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest `n` the harness will enumerate.
pub const MAX_N: usize = 10;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All of `S_n` in lexicographic order.
pub fn enumerate_sn(n: usize) -> Result<SnIter> {
    check_n(n)?;
    Ok(SnIter {
        next: Some((1..=n as u32).collect()),
        remaining: factorial(n),
    })
}

/// The permutations of lexicographic rank `start .. start + count`.
pub fn enumerate_range(n: usize, start: u64, count: u64) -> Result<SnIter> {
    check_n(n)?;
    let total = factorial(n);
    if start > total {
        return Err(Error::IndexOutOfRange {
            index: start as usize,
            lo: 0,
            hi: total as usize,
        });
    }
    let count = count.min(total - start);
    let next = (count > 0).then(|| unrank(n, start).into());
    Ok(SnIter {
        next,
        remaining: count,
    })
}

/// The permutation of lexicographic rank `rank` (0-based).
pub fn unrank(n: usize, mut rank: u64) -> Permutation {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    Permutation::from_vec_unchecked(out)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return Err(Error::IndexOutOfRange {
            index: n,
            lo: 1,
            hi: MAX_N,
        });
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct SnIter {
    next: Option<Vec<u32>>,
    remaining: u64,
}

impl Iterator for SnIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.remaining == 0 {
            return None;
        }
        let current = self.next.take()?;
        self.remaining -= 1;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_vec_unchecked(current))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

/// In-place lexicographic successor; false on the last permutation.
fn next_permutation(a: &mut [u32]) -> bool {
    let Some(i) = a.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = a.iter().rposition(|&x| x > a[i]).unwrap();
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn counts() {
        assert_eq!(
            enumerate_sn(1).unwrap().collect::<Vec<_>>(),
            vec![Permutation::identity(1)]
        );
        assert_eq!(enumerate_sn(4).unwrap().count(), 24);
        assert_eq!(enumerate_sn(8).unwrap().count(), 40320);
        assert!(enumerate_sn(0).is_err());
        assert!(enumerate_sn(11).is_err());
    }

    #[test]
    fn lexicographic_and_distinct() {
        let all: Vec<Permutation> = enumerate_sn(5).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        let set: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 120);
        assert_eq!(all.last().unwrap(), &Permutation::decreasing(5));
    }

    #[test]
    fn ranges_tile_the_group() {
        let whole: Vec<Permutation> = enumerate_sn(5).unwrap().collect();
        let mut tiled = Vec::new();
        for start in (0..120).step_by(7) {
            tiled.extend(enumerate_range(5, start, 7).unwrap());
        }
        assert_eq!(tiled, whole);
        for (rank, p) in whole.iter().enumerate() {
            assert_eq!(&unrank(5, rank as u64), p);
        }
        assert_eq!(enumerate_range(5, 120, 3).unwrap().count(), 0);
    }
}
