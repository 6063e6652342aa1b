//! Multisets of statistic tuples and their exact comparison.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::enumerate::{enumerate_range, factorial};
use crate::harness::registry::{eval_tuple, format_tuple, StatValue, StatisticSpec};
use crate::perm::Permutation;

/// Ranks per parallel work unit.
const CHUNK: u64 = 5040;

/// Counts of statistic tuples. Merging is associative and commutative, so
/// partial distributions built on disjoint rank ranges can be combined in
/// any order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Distribution {
    entries: BTreeMap<Vec<StatValue>, u64>,
    total: u64,
}

impl Distribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, tuple: Vec<StatValue>) {
        *self.entries.entry(tuple).or_default() += 1;
        self.total += 1;
    }

    pub fn merge(mut self, other: Distribution) -> Distribution {
        for (k, v) in other.entries {
            *self.entries.entry(k).or_default() += v;
        }
        self.total += other.total;
        self
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, tuple: &[StatValue]) -> u64 {
        self.entries.get(tuple).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<StatValue>, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    /// Distribution of `f` over the given permutations.
    pub fn collect<'a, I, F>(perms: I, mut f: F) -> Result<Distribution>
    where
        I: IntoIterator<Item = &'a Permutation>,
        F: FnMut(&Permutation) -> Result<Vec<StatValue>>,
    {
        let mut d = Distribution::new();
        for sigma in perms {
            d.add(f(sigma)?);
        }
        Ok(d)
    }

    /// Distribution of `f` over all of `S_n`, split over rank ranges and
    /// evaluated in parallel.
    pub fn over_sn<F>(n: usize, f: F) -> Result<Distribution>
    where
        F: Fn(&Permutation) -> Result<Vec<StatValue>> + Sync,
    {
        let total = factorial(n);
        let starts: Vec<u64> = (0..total).step_by(CHUNK as usize).collect();
        starts
            .into_par_iter()
            .map(|start| {
                let mut d = Distribution::new();
                for sigma in enumerate_range(n, start, CHUNK)? {
                    d.add(f(&sigma)?);
                }
                Ok(d)
            })
            .try_reduce(Distribution::new, |a, b| Ok(a.merge(b)))
    }

    /// Same as [`over_sn`](Self::over_sn) on a single thread.
    pub fn over_sn_sequential<F>(n: usize, f: F) -> Result<Distribution>
    where
        F: Fn(&Permutation) -> Result<Vec<StatValue>>,
    {
        let mut d = Distribution::new();
        for sigma in crate::harness::enumerate::enumerate_sn(n)? {
            d.add(f(&sigma)?);
        }
        Ok(d)
    }

    /// Distribution of the statistic tuple `specs` over `S_n`.
    pub fn of_specs(n: usize, specs: &[StatisticSpec]) -> Result<Distribution> {
        Distribution::over_sn(n, |sigma| eval_tuple(sigma, specs))
    }

    /// Lexicographically least tuple whose counts differ, with both counts.
    pub fn first_difference(&self, other: &Distribution) -> Option<(Vec<StatValue>, u64, u64)> {
        let mut a = self.entries.iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ka, &va)), None) => return Some(((*ka).clone(), va, 0)),
                (None, Some((kb, &vb))) => return Some(((*kb).clone(), 0, vb)),
                (Some((ka, &va)), Some((kb, &vb))) => match ka.cmp(kb) {
                    std::cmp::Ordering::Less => return Some(((*ka).clone(), va, 0)),
                    std::cmp::Ordering::Greater => return Some(((*kb).clone(), 0, vb)),
                    std::cmp::Ordering::Equal => {
                        if va != vb {
                            return Some(((*ka).clone(), va, vb));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    /// Compares two distributions exactly.
    pub fn verdict(&self, other: &Distribution) -> Verdict {
        match self.first_difference(other) {
            None => Verdict::Equal,
            Some((tuple, lhs_count, rhs_count)) => Verdict::Unequal {
                tuple: format_tuple(&tuple),
                lhs_count,
                rhs_count,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    Unequal {
        tuple: String,
        lhs_count: u64,
        rhs_count: u64,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Equal => f.write_str("EQUAL"),
            Verdict::Unequal {
                tuple,
                lhs_count,
                rhs_count,
            } => write!(f, "UNEQUAL at {tuple}: lhs {lhs_count}, rhs {rhs_count}"),
        }
    }
}

/// Compares the distributions of two statistic tuples of equal arity over
/// `S_n`.
pub fn compare_distributions(
    n: usize,
    lhs: &[StatisticSpec],
    rhs: &[StatisticSpec],
) -> Result<Verdict> {
    if lhs.len() != rhs.len() {
        return Err(Error::LengthMismatch {
            expected: lhs.len(),
            actual: rhs.len(),
        });
    }
    let a = Distribution::of_specs(n, lhs)?;
    let b = Distribution::of_specs(n, rhs)?;
    Ok(a.verdict(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::registry::StatisticSpec::*;

    #[test]
    fn maj_and_inv_agree() {
        for n in 1..=6 {
            assert_eq!(
                compare_distributions(n, &[Maj], &[Inv]).unwrap(),
                Verdict::Equal
            );
        }
    }

    #[test]
    fn witness_is_least_differing_tuple() {
        // des takes value 0 once; inv takes value 0 once too, but des = 1
        // occurs 4 times in S_3 while inv = 1 occurs twice.
        match compare_distributions(3, &[Des], &[Inv]).unwrap() {
            Verdict::Unequal {
                tuple,
                lhs_count,
                rhs_count,
            } => {
                assert_eq!(tuple, "(1)");
                assert_eq!((lhs_count, rhs_count), (4, 2));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn arity_mismatch() {
        assert!(compare_distributions(3, &[Des], &[Des, Maj]).is_err());
    }

    #[test]
    fn parallel_equals_sequential() {
        let f = |s: &Permutation| eval_tuple(s, &[Iligne, SortMc, ElMc]);
        let a = Distribution::over_sn(7, f).unwrap();
        let b = Distribution::over_sn_sequential(7, f).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.total(), 5040);
    }

    #[test]
    fn merge_is_order_independent() {
        let parts: Vec<Distribution> = (0..6u64)
            .map(|start| {
                let mut d = Distribution::new();
                for s in enumerate_range(5, start * 20, 20).unwrap() {
                    d.add(eval_tuple(&s, &[Des, Maj]).unwrap());
                }
                d
            })
            .collect();
        let forward = parts
            .iter()
            .cloned()
            .fold(Distribution::new(), Distribution::merge);
        let backward = parts
            .iter()
            .rev()
            .cloned()
            .fold(Distribution::new(), Distribution::merge);
        let nested = parts[0]
            .clone()
            .merge(parts[1].clone().merge(parts[2].clone()))
            .merge(
                parts[3]
                    .clone()
                    .merge(parts[4].clone().merge(parts[5].clone())),
            );
        assert_eq!(forward, backward);
        assert_eq!(forward, nested);
        assert_eq!(forward.total(), 120);
    }
}
