//! `eul`, `Eul` and `El`.
//!
//! `Eul` and `El` are taken through their defining relations
//! `Ligne σ = Eul(Majcode σ)` and `Ligne σ = El(Mc σ)`.

use crate::codes::{majcode_inv, mc_inv, SubdiagonalWord, SubexcedentWord};
use crate::error::{Error, Result};
use crate::posset::PositionSet;

/// Left fold: starting from 0, each digit after the first bumps the value
/// when it is at least one more than the value so far.
pub fn eul(w: &SubexcedentWord) -> Result<usize> {
    let (first, rest) = w.digits().split_first().ok_or(Error::EmptyWord)?;
    debug_assert_eq!(*first, 0);
    Ok(rest
        .iter()
        .fold(0usize, |e, &d| if d as usize > e { e + 1 } else { e }))
}

/// The set-valued `Eul`: descent set of `majcode⁻¹(w)`.
pub fn eul_set(w: &SubexcedentWord) -> PositionSet {
    majcode_inv(w).ligne()
}

/// The set-valued `El`: descent set of `mc⁻¹(w)`.
pub fn el_set(w: &SubdiagonalWord) -> PositionSet {
    mc_inv(w).ligne()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn se(s: &str) -> SubexcedentWord {
        s.parse().unwrap()
    }

    fn sd(s: &str) -> SubdiagonalWord {
        s.parse().unwrap()
    }

    #[test]
    fn eul_values() {
        assert_eq!(eul(&se("0")).unwrap(), 0);
        for n in 1..=8 {
            assert_eq!(eul(&SubexcedentWord::staircase(n)).unwrap(), n - 1);
            assert_eq!(eul(&SubexcedentWord::zeros(n)).unwrap(), 0);
        }
        assert!(eul(&SubexcedentWord::zeros(0)).is_err());
        // 0 1 1: second digit lifts to 1, third digit 1 <= 1 keeps it
        assert_eq!(eul(&se("011")).unwrap(), 1);
    }

    #[test]
    fn eul_set_examples() {
        assert_eq!(eul_set(&se("012020203")).to_string(), "145");
        assert!(eul_set(&SubexcedentWord::zeros(6)).is_empty());
        assert_eq!(eul_set(&se("000325475")).to_string(), "23678");
    }

    #[test]
    fn el_set_examples() {
        assert_eq!(el_set(&sd("2200")).to_string(), "13");
        assert!(el_set(&SubdiagonalWord::zeros(5)).is_empty());
        assert_eq!(el_set(&sd("3210")).to_string(), "123");
    }
}
