//! The involution `σ ↦ majcode⁻¹(δ(majcode σ))`, which complements the
//! descent set, and its letter-by-letter construction through slot labels.

use crate::codes::{delta, majcode, majcode_inv};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::slots::{insert_at_slot, SlotLabeling};

/// `majcode⁻¹ ∘ δ ∘ majcode`. The image has descent set
/// `{1..n-1} \ Ligne σ`, and the map is an involution.
pub fn complement_descents(sigma: &Permutation) -> Permutation {
    majcode_inv(&delta(&majcode(sigma)))
}

/// Given `σ'`, `τ'` of the same length with complementary descent sets and
/// the slot `s` of `σ'` where the new maximum goes, returns the slot `t` of
/// `τ'` that keeps the two grown permutations complementary (on both descent
/// sets and major-index codes).
///
/// Slots are 1-based over the zero-padded word; the leftmost slot counts as a
/// rise and the rightmost as a descent.
pub fn complement_insert_slot(sigma_prime: &[u32], tau_prime: &[u32], s: usize) -> Result<usize> {
    if sigma_prime.len() != tau_prime.len() {
        return Err(Error::LengthMismatch {
            expected: sigma_prime.len(),
            actual: tau_prime.len(),
        });
    }
    let slots = sigma_prime.len() + 1;
    if s < 1 || s > slots {
        return Err(Error::IndexOutOfRange {
            index: s,
            lo: 1,
            hi: slots,
        });
    }
    let sigma_ligne = crate::posset::PositionSet::descents_of(sigma_prime);
    let tau_ligne = crate::posset::PositionSet::descents_of(tau_prime);
    if tau_ligne != sigma_ligne.complement() {
        return Err(Error::Precondition(format!(
            "descent sets {sigma_ligne} and {tau_ligne} are not complementary"
        )));
    }
    let labels = SlotLabeling::of(sigma_prime)?;
    let rises: Vec<usize> = (1..=slots).filter(|&i| labels.is_rise(i)).collect();
    let descents: Vec<usize> = (1..=slots).filter(|&i| labels.is_descent(i)).collect();

    let t = if labels.is_rise(s) {
        match rises.iter().find(|&&r| r > s) {
            Some(&next) => next,
            None => slots,
        }
    } else {
        match descents.iter().rev().find(|&&d| d < s) {
            Some(&prev) => prev,
            None => 1,
        }
    };
    Ok(t)
}

/// Same map as [`complement_descents`], built by inserting `1, 2, ..., n`
/// into `σ` and its partner in lockstep using [`complement_insert_slot`].
pub fn complement_descents_incremental(sigma: &Permutation) -> Permutation {
    let mut sigma_prime: Vec<u32> = Vec::new();
    let mut tau_prime: Vec<u32> = Vec::new();
    for m in 1..=sigma.n() {
        let grown = sigma.restrict_leq_letters(m);
        let s = grown.iter().position(|&x| x as usize == m).unwrap() + 1;
        let t = complement_insert_slot(&sigma_prime, &tau_prime, s)
            .expect("partners stay complementary by induction");
        sigma_prime = grown;
        tau_prime = insert_at_slot(&tau_prime, t, m as u32);
    }
    Permutation::from_vec_unchecked(tau_prime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slots::SlotLabeling;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let sigma = p("935721468");
        let tau = complement_descents(&sigma);
        assert_eq!(tau, p("795128643"));
        assert_eq!(tau.ligne(), sigma.ligne().complement());
        assert_eq!(complement_descents(&tau), sigma);
        assert_eq!(complement_descents_incremental(&sigma), tau);
    }

    #[test]
    fn identity_goes_to_staircase_preimage() {
        for n in 1..=7 {
            let tau = complement_descents(&Permutation::identity(n));
            assert_eq!(
                tau,
                majcode_inv(&crate::codes::SubexcedentWord::staircase(n))
            );
            assert_eq!(tau.ligne(), crate::posset::PositionSet::full(n));
        }
    }

    #[test]
    fn label_relations_on_printed_pair() {
        let sigma_prime = [3, 5, 7, 2, 1, 4, 6, 8];
        let tau_prime = [7, 5, 1, 2, 8, 6, 4, 3];
        let n = 9u32;
        let c = SlotLabeling::of(&sigma_prime).unwrap();
        let d = SlotLabeling::of(&tau_prime).unwrap();
        assert_eq!(c.label(9), 0);
        assert_eq!(d.label(9), 0);
        for i in 1..9 {
            assert_eq!(c.label(i) + d.label(i), n);
        }
        for s in 1..=9 {
            let t = complement_insert_slot(&sigma_prime, &tau_prime, s).unwrap();
            assert_eq!(d.label(t), n - 1 - c.label(s), "s = {s}");
            let expected = if c.label(t) == 0 {
                n - 1
            } else {
                c.label(t) - 1
            };
            assert_eq!(c.label(s), expected);
        }
        // the rightmost rise of σ' carries label n-1 and sends n to the end
        let rightmost_rise = c.slot_with_label(n - 1).unwrap();
        assert_eq!(rightmost_rise, 8);
        assert_eq!(
            complement_insert_slot(&sigma_prime, &tau_prime, 8).unwrap(),
            9
        );
    }

    #[test]
    fn insert_step_errors() {
        assert!(complement_insert_slot(&[1, 2], &[2, 1], 0).is_err());
        assert!(complement_insert_slot(&[1, 2], &[2, 1], 4).is_err());
        assert!(complement_insert_slot(&[1, 2], &[1, 2], 1).is_err());
        assert!(complement_insert_slot(&[1, 2], &[1], 1).is_err());
        assert_eq!(complement_insert_slot(&[], &[], 1).unwrap(), 1);
    }
}
