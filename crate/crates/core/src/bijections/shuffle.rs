//! Shifted shuffles, inverse-descent classes, and the code-changing bijection
//! on shuffles of identities.

use std::collections::BTreeMap;

use crate::codes::{ic, ic_inv, mc, SubdiagonalWord};
use crate::error::{Error, Result};
use crate::harness::enumerate::enumerate_sn;
use crate::perm::Permutation;
use crate::posset::PositionSet;
use crate::word::sort_word;

/// A composition `k_1 + ... + k_r = n` with positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Composition { parts })
    }

    /// The composition whose partial sums are exactly `set`.
    pub fn from_partial_sums(set: &PositionSet) -> Self {
        let n = set.ambient();
        if n == 0 {
            return Composition { parts: Vec::new() };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &p in set.positions().iter().chain(std::iter::once(&n)) {
            parts.push(p - prev);
            prev = p;
        }
        Composition { parts }
    }

    /// All `2^(n-1)` compositions of `n` (just the empty one for `n = 0`).
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition { parts: Vec::new() }];
        }
        PositionSet::full(n)
            .subsets()
            .map(|s| Composition::from_partial_sums(&s))
            .collect()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `{k_1, k_1+k_2, ..., k_1+...+k_{r-1}}` inside `{1..n-1}`.
    pub fn partial_sums(&self) -> PositionSet {
        let n = self.total();
        let mut acc = 0;
        let sums = self.parts[..self.parts.len().saturating_sub(1)]
            .iter()
            .map(|k| {
                acc += k;
                acc
            })
            .collect();
        PositionSet::from_sorted_unchecked(n, sums)
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = crate::word::parse_letters(s)?
            .into_iter()
            .map(|k| k as usize)
            .collect();
        Composition::new(parts)
    }
}

/// Every `σ ∈ S_{k+l}` whose letters `1..=k` spell `alpha` and whose letters
/// `k+1..` spell `beta` shifted up by `k`. Lexicographic order.
pub fn shifted_shuffle(alpha: &Permutation, beta: &Permutation) -> Vec<Permutation> {
    let k = alpha.n();
    let l = beta.n();
    let n = k + l;
    let shifted: Vec<u32> = beta.as_slice().iter().map(|&y| y + k as u32).collect();
    let mut out = Vec::new();
    // choose which positions carry alpha's letters
    let mut chosen: Vec<usize> = (0..k).collect();
    loop {
        let mut word = Vec::with_capacity(n);
        let (mut a, mut b) = (alpha.as_slice().iter(), shifted.iter());
        let mut c = chosen.iter().peekable();
        for pos in 0..n {
            if c.peek() == Some(&&pos) {
                c.next();
                word.push(*a.next().unwrap());
            } else {
                word.push(*b.next().unwrap());
            }
        }
        out.push(Permutation::from_vec_unchecked(word));
        if !next_combination(&mut chosen, n) {
            break;
        }
    }
    out.sort();
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
        return false;
    };
    c[i] += 1;
    for j in i + 1..k {
        c[j] = c[j - 1] + 1;
    }
    true
}

/// `id_{k_1} ⧢ id_{k_2} ⧢ ... ⧢ id_{k_r}`, built right to left. Lexicographic
/// order.
pub fn shuffle_of_identities(comp: &Composition) -> Vec<Permutation> {
    let mut acc = vec![Permutation::identity(0)];
    for &k in comp.parts().iter().rev() {
        let id = Permutation::identity(k);
        acc = acc
            .iter()
            .flat_map(|beta| shifted_shuffle(&id, beta))
            .collect();
    }
    acc.sort();
    acc
}

/// Permutations of `S_n` whose inverse descent set is contained in `set`
/// (`strict = false`) or equal to it (`strict = true`).
///
/// The containment class is the shuffle of identities on the composition with
/// partial sums `set`; the exact class comes from inclusion-exclusion over
/// the containment classes of all subsets.
pub fn descent_class(n: usize, set: &PositionSet, strict: bool) -> Result<Vec<Permutation>> {
    if set.ambient() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            actual: set.ambient(),
        });
    }
    if !strict {
        return Ok(shuffle_of_identities(&Composition::from_partial_sums(set)));
    }
    let mut weight: BTreeMap<Permutation, i64> = BTreeMap::new();
    for sub in set.subsets() {
        let sign = if (set.len() - sub.len()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        for sigma in shuffle_of_identities(&Composition::from_partial_sums(&sub)) {
            *weight.entry(sigma).or_default() += sign;
        }
    }
    debug_assert!(weight.values().all(|&w| w == 0 || w == 1));
    Ok(weight
        .into_iter()
        .filter(|&(_, w)| w == 1)
        .map(|(sigma, _)| sigma)
        .collect())
}

/// Direct filter over `S_n`; the reference for [`descent_class`].
pub fn descent_class_by_filter(
    n: usize,
    set: &PositionSet,
    strict: bool,
) -> Result<Vec<Permutation>> {
    Ok(enumerate_sn(n)?
        .filter(|sigma| {
            let il = sigma.iligne();
            if strict {
                &il == set
            } else {
                il.is_subset(set)
            }
        })
        .collect())
}

/// Bijection `φ` of `id_{k_1} ⧢ ... ⧢ id_{k_r}` onto itself with
/// `sort(Mc σ) = sort(Ic φ(σ))` and `El(Mc σ) = El(Ic φ(σ))`.
///
/// Peels off the first part `k`: with `Mc σ = d_1 ... d_k Mc(β)` where `β` is
/// the standardized subword of letters `> k`,
/// `φ(σ) = Ic⁻¹(sort(d_1 ... d_k) Ic(φ(β)))`.
pub fn shuffle_class_bijection(sigma: &Permutation, comp: &Composition) -> Result<Permutation> {
    if comp.total() != sigma.n() {
        return Err(Error::LengthMismatch {
            expected: comp.total(),
            actual: sigma.n(),
        });
    }
    let sums = comp.partial_sums();
    if !sigma.iligne().is_subset(&sums) {
        return Err(Error::Precondition(format!(
            "{sigma} is not in the shuffle class of composition {:?}",
            comp.parts()
        )));
    }
    phi(sigma, comp.parts())
}

fn phi(sigma: &Permutation, parts: &[usize]) -> Result<Permutation> {
    let Some((&k, rest)) = parts.split_first() else {
        return Ok(Permutation::identity(0));
    };
    let code = mc(sigma);
    let upper: Vec<u32> = sigma.restrict_geq_letters(k + 1);
    let beta = Permutation::standardize(&upper)?;
    debug_assert_eq!(&code.digits()[k..], mc(&beta).digits());

    let mapped_beta = phi(&beta, rest)?;
    let mut digits = sort_word(&code.digits()[..k]);
    digits.extend_from_slice(ic(&mapped_beta).digits());
    Ok(ic_inv(&SubdiagonalWord::new(digits)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn compositions() {
        let c = Composition::new(vec![2, 1, 3]).unwrap();
        assert_eq!(c.total(), 6);
        assert_eq!(c.partial_sums().positions(), &[2, 3]);
        assert_eq!(Composition::from_partial_sums(&c.partial_sums()), c);
        assert!(Composition::new(vec![1, 0]).is_err());
        assert_eq!(Composition::all(4).len(), 8);
        assert_eq!(Composition::all(0).len(), 1);
        assert_eq!("2,2".parse::<Composition>().unwrap().parts(), &[2, 2]);
    }

    #[test]
    fn small_shuffles() {
        let id1 = Permutation::identity(1);
        assert_eq!(shifted_shuffle(&id1, &id1), vec![p("12"), p("21")]);
        let id2 = Permutation::identity(2);
        let got = shifted_shuffle(&id2, &id2);
        let expected: Vec<Permutation> = ["1234", "1324", "1342", "3124", "3142", "3412"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(got, expected);
        let two = PositionSet::new(4, vec![2]).unwrap();
        assert_eq!(descent_class_by_filter(4, &two, false).unwrap(), expected);
        assert_eq!(descent_class(4, &two, false).unwrap(), expected);
    }

    #[test]
    fn shuffle_sizes_are_binomial() {
        for k in 0..=4 {
            for l in 0..=4 {
                let alpha = Permutation::decreasing(k);
                let beta = Permutation::identity(l);
                let s = shifted_shuffle(&alpha, &beta);
                assert_eq!(s.len(), binomial(k + l, k));
                for sigma in &s {
                    assert_eq!(sigma.restrict_leq_letters(k), alpha.as_slice());
                }
            }
        }
    }

    #[test]
    fn strict_classes() {
        let empty = PositionSet::empty(5);
        assert_eq!(
            descent_class(5, &empty, true).unwrap(),
            vec![Permutation::identity(5)]
        );
        let total: usize = PositionSet::full(4)
            .subsets()
            .map(|s| descent_class(4, &s, true).unwrap().len())
            .sum();
        assert_eq!(total, 24);
        assert!(descent_class(5, &PositionSet::empty(4), true).is_err());
    }

    #[test]
    fn phi_on_identity_and_small_class() {
        let comp = Composition::new(vec![2, 1, 2]).unwrap();
        assert_eq!(
            shuffle_class_bijection(&Permutation::identity(5), &comp).unwrap(),
            Permutation::identity(5)
        );
        let comp = Composition::new(vec![2, 2]).unwrap();
        for sigma in shuffle_of_identities(&comp) {
            let image = shuffle_class_bijection(&sigma, &comp).unwrap();
            assert_eq!(mc(&sigma).sorted(), ic(&image).sorted());
        }
        assert!(shuffle_class_bijection(&p("2143"), &comp).is_err());
    }
}
