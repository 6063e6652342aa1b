//! Descent-set preserving moves on the first `k` digits of the `Mc` code.

use crate::codes::{mc, mc_inv, SubdiagonalWord};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::sort_word;

/// Checks the four conditions under which [`rotate_code_prefix`] applies.
/// With `Mc σ = d_1 ... d_n`:
///
/// 1. `d_1 <= ... <= d_{k-1}`
/// 2. `d_{k-1} > d_k`
/// 3. `d_k <= d_1`
/// 4. the letter `k` lies to the right of every smaller letter in `σ`.
pub fn check_rotation_conditions(sigma: &Permutation, k: usize) -> Result<()> {
    let n = sigma.n();
    if k < 2 || k > n {
        return Err(Error::Precondition(format!(
            "rotation needs 2 <= k <= n, got k = {k}, n = {n}"
        )));
    }
    let code = mc(sigma);
    let d = code.digits();
    if d[..k - 1].windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::Precondition(format!(
            "code {code}: first {} digits are not nondecreasing",
            k - 1
        )));
    }
    if d[k - 2] <= d[k - 1] {
        return Err(Error::Precondition(format!(
            "code {code}: digit {} must exceed digit {k}",
            k - 1
        )));
    }
    if d[k - 1] > d[0] {
        return Err(Error::Precondition(format!(
            "code {code}: digit {k} exceeds the first digit"
        )));
    }
    let pos_k = sigma.position_of(k as u32).unwrap();
    if (1..k as u32).any(|i| sigma.position_of(i).unwrap() > pos_k) {
        return Err(Error::Precondition(format!(
            "letter {k} is not to the right of all smaller letters in {sigma}"
        )));
    }
    Ok(())
}

/// For `σ` satisfying [`check_rotation_conditions`], returns `τ` with the same
/// descent set and `Mc τ = d_k d_1 d_2 ... d_{k-1} d_{k+1} ... d_n`.
///
/// Letters above `k` stay put, letters below `k` go up by one, `k` becomes
/// `1`, and then the maximal factor around `1` with letters `<= k` is sorted.
pub fn rotate_code_prefix(sigma: &Permutation, k: usize) -> Result<Permutation> {
    check_rotation_conditions(sigma, k)?;
    let k = k as u32;
    let mut word: Vec<u32> = sigma
        .as_slice()
        .iter()
        .map(|&x| match x.cmp(&k) {
            std::cmp::Ordering::Greater => x,
            std::cmp::Ordering::Less => x + 1,
            std::cmp::Ordering::Equal => 1,
        })
        .collect();

    let one = word.iter().position(|&x| x == 1).unwrap();
    let mut lo = one;
    while lo > 0 && word[lo - 1] <= k {
        lo -= 1;
    }
    let mut hi = one + 1;
    while hi < word.len() && word[hi] <= k {
        hi += 1;
    }
    word[lo..hi].sort_unstable();
    Ok(Permutation::from_vec_unchecked(word))
}

fn check_prefix_shuffle(sigma: &Permutation, k: usize) -> Result<()> {
    let n = sigma.n();
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange {
            index: k,
            lo: 1,
            hi: n,
        });
    }
    let small = sigma.restrict_leq_letters(k);
    if small.windows(2).any(|p| p[0] > p[1]) {
        return Err(Error::Precondition(format!(
            "letters 1..={k} do not appear in increasing order in {sigma}"
        )));
    }
    Ok(())
}

/// For `σ` a shuffle of `1 2 ... k` with a word on `k+1..n`, returns
/// `mc⁻¹(sort(d_1..d_k) d_{k+1} ... d_n)`, which has the same descent set as
/// `σ`. Debug builds cross-check against [`sort_code_prefix_steps`].
pub fn sort_code_prefix(sigma: &Permutation, k: usize) -> Result<Permutation> {
    check_prefix_shuffle(sigma, k)?;
    let code = mc(sigma);
    let mut digits = sort_word(&code.digits()[..k]);
    digits.extend_from_slice(&code.digits()[k..]);
    let tau = mc_inv(&SubdiagonalWord::new(digits)?);
    debug_assert_eq!(
        sort_code_prefix_steps(sigma, k)
            .ok()
            .and_then(|s| s.last().cloned()),
        Some(tau.clone())
    );
    Ok(tau)
}

/// The chain `τ_1 = σ, τ_2, ..., τ_k` where `τ_i` has the first `i` code
/// digits sorted. Each step either leaves the permutation alone (the new
/// digit is at least every earlier one) or applies [`rotate_code_prefix`]
/// (the new digit is at most every earlier one).
pub fn sort_code_prefix_steps(sigma: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    check_prefix_shuffle(sigma, k)?;
    let mut chain = vec![sigma.clone()];
    for i in 2..=k {
        let current = chain.last().unwrap();
        let code = mc(current);
        let d = code.digits();
        let head = &d[..i - 1];
        let (lo, hi) = (head[0], head[i - 2]);
        let next = if d[i - 1] >= hi {
            current.clone()
        } else if d[i - 1] <= lo {
            rotate_code_prefix(current, i)?
        } else {
            return Err(Error::Precondition(format!(
                "digit {i} of {code} lies strictly between earlier digits"
            )));
        };
        chain.push(next);
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_worked_example() {
        let sigma = p("5 6 12 4 10 2 3 9 11 1 7 8");
        assert_eq!(mc(&sigma).to_string(), "011233042010");
        let tau = rotate_code_prefix(&sigma, 7).unwrap();
        assert_eq!(tau, p("6 7 12 5 10 3 4 9 11 1 2 8"));
        assert_eq!(mc(&tau).to_string(), "001123342010");
        assert_eq!(tau.ligne(), sigma.ligne());
    }

    #[test]
    fn rotation_rejects_bad_inputs() {
        let sigma = p("5 6 12 4 10 2 3 9 11 1 7 8");
        assert!(rotate_code_prefix(&sigma, 1).is_err());
        assert!(rotate_code_prefix(&sigma, 13).is_err());
        // constant prefix: digit k-1 does not exceed digit k
        assert!(rotate_code_prefix(&Permutation::identity(5), 3).is_err());
        // letter 6 has letter 1 to its right
        assert!(rotate_code_prefix(&sigma, 6).is_err());
    }

    #[test]
    fn prefix_sort_worked_example() {
        let sigma = p("12 1 2 3 10 4 9 5 6 11 7 8");
        assert_eq!(mc(&sigma).to_string(), "333214042010");
        let tau = sort_code_prefix(&sigma, 7).unwrap();
        assert_eq!(tau, p("12 4 5 6 10 3 9 2 7 11 1 8"));
        assert_eq!(sigma.ligne().to_string(), "1,5,7,10");
        assert_eq!(tau.ligne(), sigma.ligne());

        let chain = sort_code_prefix_steps(&sigma, 7).unwrap();
        assert_eq!(chain.len(), 7);
        assert_eq!(chain[0], sigma);
        assert_eq!(chain[1], sigma);
        assert_eq!(chain[2], sigma);
        assert_eq!(chain[3], p("12 2 3 4 10 1 9 5 6 11 7 8"));
        assert_eq!(chain[4], p("12 3 4 5 10 2 9 1 6 11 7 8"));
        assert_eq!(chain[5], chain[4]);
        assert_eq!(chain[6], tau);
        assert_eq!(mc(&chain[3]).to_string(), "233314042010");
        assert_eq!(mc(&chain[4]).to_string(), "123334042010");
    }

    #[test]
    fn prefix_sort_trivial_and_errors() {
        let sigma = p("3 1 2 4");
        assert_eq!(sort_code_prefix(&sigma, 1).unwrap(), sigma);
        assert!(sort_code_prefix(&p("2 1 3"), 2).is_err());
        assert!(sort_code_prefix(&sigma, 0).is_err());
        assert!(sort_code_prefix(&sigma, 5).is_err());
    }
}
