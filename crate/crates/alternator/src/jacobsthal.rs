//! Jacobsthal numbers and the counting bounds they put on the game.
//!
//! The Jacobsthal sequence (OEIS A001045) is
//! `J(n) = (2^n - (-1)^n) / 3` = 0, 1, 1, 3, 5, 11, 21, 43, ... and obeys
//! `J(n+1) = J(n) + 2*J(n-1)` as well as `J(n) = 2*J(n-1) - (-1)^n`.
//!
//! Its role here: along any sequence of weighings the alternator can
//! never make the scale tip twice in a row (after tipping it is due to
//! act real), so the outcome strings over `{E, L, R}` that a strategy can
//! produce have no two adjacent `L`/`R` letters. There are exactly
//! `J(w+2)` such strings of length `w`, which caps how many coins `w`
//! weighings can tell apart and pins the minimum number of weighings for
//! every coin count and starting state.
//!
//! All counting here uses checked 64-bit results; inputs past the
//! documented limits return a range error instead of wrapping.

use thiserror::Error;

use crate::model::InitialState;

/// Largest `n` for which `jacobsthal(n)` fits in a `u64`.
pub const MAX_INDEX: u32 = 65;
/// Largest string length `count_admissible_strings` accepts (`J(w+2)`
/// must fit in a `u64`).
pub const MAX_COUNT_LENGTH: u32 = MAX_INDEX - 2;
/// Largest string length `enumerate_admissible_strings` materializes.
pub const MAX_ENUMERATION_LENGTH: u32 = 20;
/// Largest exponent for `classic_fake_capacity` (`3^40` fits in a `u64`).
pub const MAX_EXPONENT: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum RangeError {
    #[error("Jacobsthal index {index} out of range (supported up to {max})")]
    IndexOutOfRange { index: u32, max: u32 },
    #[error("3^{exponent} does not fit in 64 bits (supported up to 3^{max})")]
    ExponentOutOfRange { exponent: u32, max: u32 },
    #[error("admissible strings of length {length} out of range (supported up to {max})")]
    LengthOutOfRange { length: u32, max: u32 },
    #[error("need at least 2 coins, got {n_coins}")]
    TooFewCoins { n_coins: usize },
}

/// `J(n) = (2^n - (-1)^n) / 3`, e.g. `J(0) = 0`, `J(3) = 3`, `J(4) = 5`.
pub fn jacobsthal(n: u32) -> Result<u64, RangeError> {
    if n > MAX_INDEX {
        return Err(RangeError::IndexOutOfRange {
            index: n,
            max: MAX_INDEX,
        });
    }
    let power = 1u128 << n;
    let value = if n.is_multiple_of(2) {
        (power - 1) / 3
    } else {
        (power + 1) / 3
    };
    Ok(value as u64)
}

/// Unbounded Jacobsthal sequence used by the interval scans below.
fn jacobsthal_values() -> impl Iterator<Item = u128> {
    let mut pair = (0u128, 1u128);
    std::iter::once(0).chain(std::iter::from_fn(move || {
        let current = pair.1;
        pair = (pair.1, pair.1 + 2 * pair.0);
        Some(current)
    }))
}

/// The split `n_coins = 2*J(k-1) + m` for the unique `k` with
/// `J(k) < n_coins <= J(k+1)`; `m` always lands in `0..=J(k)`.
///
/// `pan_size` is `J(k-1)`: how many coins to place on each pan so that an
/// unbalanced outcome leaves a pile that the remaining budget can still
/// handle, while `leftover` is the pile that stays off the scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    /// Index `k` of the interval `J(k) < n_coins <= J(k+1)`.
    pub index: u32,
    /// `J(k-1)` coins per pan.
    pub pan_size: usize,
    /// `m = n_coins - 2 * pan_size` coins left off the scale.
    pub leftover: usize,
}

pub fn jacobsthal_split(n_coins: usize) -> Result<Split, RangeError> {
    if n_coins < 2 {
        return Err(RangeError::TooFewCoins { n_coins });
    }
    let n = n_coins as u128;
    // J(2) = 1 < 2 <= n, so scanning from k = 2 always terminates with
    // the unique bracketing index (the sequence is strictly increasing
    // from there on).
    let mut j_prev = 1u128; // J(k-1)
    let mut j_k = 1u128; // J(k)
    for k in 2u32.. {
        let j_next = j_k + 2 * j_prev;
        if j_k < n && n <= j_next {
            let pan_size = j_prev as usize;
            return Ok(Split {
                index: k,
                pan_size,
                leftover: n_coins - 2 * pan_size,
            });
        }
        j_prev = j_k;
        j_k = j_next;
    }
    unreachable!("the Jacobsthal sequence is unbounded");
}

/// Minimum number of weighings that suffices (and is necessary) to find
/// the alternator among `n_coins` coins starting in `state`.
///
/// This is the smallest `w` with `n_coins <= J(w+2)` when the alternator
/// starts due-fake, and the smallest `w` with `n_coins <= J(w+1)` when it
/// starts due-real or unknown. A single coin needs zero weighings in
/// every state.
pub fn min_weighings_bound(n_coins: usize, state: InitialState) -> u32 {
    assert!(n_coins >= 1, "a game needs at least one coin");
    let shift = match state {
        InitialState::Fake => 2,
        InitialState::Real | InitialState::Unknown => 1,
    };
    let n = n_coins as u128;
    for (i, value) in jacobsthal_values().enumerate() {
        let i = i as u32;
        if i >= shift && value >= n {
            return i - shift;
        }
    }
    unreachable!("the Jacobsthal sequence is unbounded");
}

/// Elementary bracket on the optimum, from the plain fake-coin strategy:
/// with `k` defined by `3^(k-1) < n_coins <= 3^k`, the answer lies in
/// `k+1..=2k` for the real/unknown starts and in `k..=2k-1` for the fake
/// start. (Repeating every fake-coin weighing twice gives the upper
/// bound; the outcome-string count gives the lower one.)
pub fn trivial_bounds(n_coins: usize, state: InitialState) -> Result<(u32, u32), RangeError> {
    if n_coins < 2 {
        return Err(RangeError::TooFewCoins { n_coins });
    }
    let n = n_coins as u128;
    let mut power = 1u128; // 3^k
    let mut k = 0u32;
    while power < n {
        power *= 3;
        k += 1;
    }
    Ok(match state {
        InitialState::Fake => (k, 2 * k - 1),
        InitialState::Real | InitialState::Unknown => (k + 1, 2 * k),
    })
}

/// How many coins the classic one-fake-coin puzzle can process in `w`
/// weighings: `3^w` distinct outcome strings.
pub fn classic_fake_capacity(w: u32) -> Result<u64, RangeError> {
    if w > MAX_EXPONENT {
        return Err(RangeError::ExponentOutOfRange {
            exponent: w,
            max: MAX_EXPONENT,
        });
    }
    Ok(3u64.pow(w))
}

/// Number of length-`w` strings over `{E, L, R}` in which an `L` or `R`
/// is never immediately followed by another `L` or `R`.
///
/// Computed by its own recursion `s(w) = s(w-1) + 2*s(w-2)` with
/// `s(0) = 1`, `s(1) = 3` (a leading `E` can precede any admissible
/// suffix, a leading `L` or `R` must be followed by `E` and then any
/// admissible suffix). The result coincides with `jacobsthal(w + 2)`.
pub fn count_admissible_strings(w: u32) -> Result<u64, RangeError> {
    if w > MAX_COUNT_LENGTH {
        return Err(RangeError::LengthOutOfRange {
            length: w,
            max: MAX_COUNT_LENGTH,
        });
    }
    let (mut two_back, mut one_back) = (1u64, 3u64);
    match w {
        0 => Ok(two_back),
        1 => Ok(one_back),
        _ => {
            for _ in 2..=w {
                let next = one_back + 2 * two_back;
                two_back = one_back;
                one_back = next;
            }
            Ok(one_back)
        }
    }
}

/// All admissible strings of length `w` in lexicographic order
/// (`E < L < R`), without duplicates.
pub fn enumerate_admissible_strings(w: u32) -> Result<Vec<String>, RangeError> {
    if w > MAX_ENUMERATION_LENGTH {
        return Err(RangeError::LengthOutOfRange {
            length: w,
            max: MAX_ENUMERATION_LENGTH,
        });
    }
    let mut out = Vec::new();
    let mut buf = String::with_capacity(w as usize);
    fn extend(buf: &mut String, after_tip: bool, remaining: u32, out: &mut Vec<String>) {
        if remaining == 0 {
            out.push(buf.clone());
            return;
        }
        for letter in ['E', 'L', 'R'] {
            if after_tip && letter != 'E' {
                continue;
            }
            buf.push(letter);
            extend(buf, letter != 'E', remaining - 1, out);
            buf.pop();
        }
    }
    extend(&mut buf, false, w, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobsthal_closed_form_values() {
        let expected = [0u64, 1, 1, 3, 5, 11, 21, 43, 85, 171];
        for (n, &value) in expected.iter().enumerate() {
            assert_eq!(jacobsthal(n as u32).unwrap(), value);
        }
        assert_eq!(jacobsthal(5).unwrap(), (32 + 1) / 3);
        // Largest supported index, against u128 arithmetic; one past it
        // would no longer fit a u64.
        assert_eq!(
            jacobsthal(MAX_INDEX).unwrap() as u128,
            ((1u128 << 65) + 1) / 3
        );
        assert!(((1u128 << 66) - 1) / 3 > u64::MAX as u128);
        assert_eq!(
            jacobsthal(MAX_INDEX + 1),
            Err(RangeError::IndexOutOfRange {
                index: 66,
                max: MAX_INDEX
            })
        );
    }

    #[test]
    fn jacobsthal_recurrences_hold() {
        for n in 1..=40u32 {
            let j = |i: u32| jacobsthal(i).unwrap() as i128;
            assert_eq!(j(n + 1), j(n) + 2 * j(n - 1), "three-term recursion at {n}");
            let sign = if n % 2 == 0 { 1 } else { -1 };
            assert_eq!(j(n), 2 * j(n - 1) - sign, "doubling identity at {n}");
        }
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            jacobsthal_split(4).unwrap(),
            Split {
                index: 3,
                pan_size: 1,
                leftover: 2
            }
        );
        // m = 3 = J(3) sits exactly on the upper boundary of 0..=J(k).
        assert_eq!(
            jacobsthal_split(5).unwrap(),
            Split {
                index: 3,
                pan_size: 1,
                leftover: 3
            }
        );
        assert_eq!(
            jacobsthal_split(11).unwrap(),
            Split {
                index: 4,
                pan_size: 3,
                leftover: 5
            }
        );
        assert_eq!(
            jacobsthal_split(1),
            Err(RangeError::TooFewCoins { n_coins: 1 })
        );
    }

    #[test]
    fn split_brackets_and_bounds_leftover() {
        for n in 2..=10_000usize {
            let split = jacobsthal_split(n).unwrap();
            let j = |i: u32| jacobsthal(i).unwrap() as usize;
            assert!(j(split.index) < n && n <= j(split.index + 1));
            assert_eq!(split.pan_size, j(split.index - 1));
            assert_eq!(n, 2 * split.pan_size + split.leftover);
            assert!(split.leftover <= j(split.index));
        }
    }

    #[test]
    fn bound_examples() {
        assert_eq!(min_weighings_bound(3, InitialState::Fake), 1);
        assert_eq!(min_weighings_bound(5, InitialState::Unknown), 3);
        assert_eq!(min_weighings_bound(1, InitialState::Unknown), 0);
        assert_eq!(min_weighings_bound(11, InitialState::Unknown), 4);
    }

    #[test]
    fn bounds_relate_across_states_and_sandwich() {
        for n in 2..=10_000usize {
            let fake = min_weighings_bound(n, InitialState::Fake);
            let real = min_weighings_bound(n, InitialState::Real);
            let unknown = min_weighings_bound(n, InitialState::Unknown);
            assert_eq!(unknown, real);
            assert_eq!(real, fake + 1);
            for state in [InitialState::Fake, InitialState::Real, InitialState::Unknown] {
                let (lo, hi) = trivial_bounds(n, state).unwrap();
                let exact = min_weighings_bound(n, state);
                assert!(lo <= exact && exact <= hi, "N={n} state={state}");
            }
        }
    }

    #[test]
    fn trivial_bound_examples() {
        assert_eq!(trivial_bounds(9, InitialState::Unknown).unwrap(), (3, 4));
        assert_eq!(trivial_bounds(3, InitialState::Fake).unwrap(), (1, 1));
        assert_eq!(trivial_bounds(27, InitialState::Real).unwrap(), (4, 6));
        assert_eq!(
            trivial_bounds(1, InitialState::Unknown),
            Err(RangeError::TooFewCoins { n_coins: 1 })
        );
    }

    #[test]
    fn classic_capacity() {
        assert_eq!(classic_fake_capacity(0).unwrap(), 1);
        assert_eq!(classic_fake_capacity(2).unwrap(), 9);
        assert_eq!(classic_fake_capacity(4).unwrap(), 81);
        assert!(classic_fake_capacity(41).is_err());
    }

    /// Brute-force oracle: count/collect admissible strings by filtering
    /// all 3^w strings.
    fn brute_force_admissible(w: u32) -> Vec<String> {
        let mut out = Vec::new();
        let letters = ['E', 'L', 'R'];
        for mut code in 0..3usize.pow(w) {
            let mut s = String::new();
            for _ in 0..w {
                s.push(letters[code % 3]);
                code /= 3;
            }
            let s: String = s.chars().rev().collect();
            let ok = s
                .as_bytes()
                .windows(2)
                .all(|pair| pair[0] == b'E' || pair[1] == b'E');
            if ok {
                out.push(s);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn admissible_counts_match_brute_force_and_jacobsthal() {
        assert_eq!(count_admissible_strings(0).unwrap(), 1);
        assert_eq!(count_admissible_strings(1).unwrap(), 3);
        assert_eq!(count_admissible_strings(2).unwrap(), 5);
        for w in 0..=10u32 {
            let count = count_admissible_strings(w).unwrap();
            assert_eq!(count as usize, brute_force_admissible(w).len(), "w={w}");
            assert_eq!(count, jacobsthal(w + 2).unwrap(), "w={w}");
        }
        assert!(count_admissible_strings(MAX_COUNT_LENGTH).is_ok());
        assert!(count_admissible_strings(MAX_COUNT_LENGTH + 1).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force() {
        assert_eq!(enumerate_admissible_strings(0).unwrap(), [""]);
        assert_eq!(enumerate_admissible_strings(1).unwrap(), ["E", "L", "R"]);
        assert_eq!(
            enumerate_admissible_strings(2).unwrap(),
            ["EE", "EL", "ER", "LE", "RE"]
        );
        for w in 0..=8u32 {
            assert_eq!(
                enumerate_admissible_strings(w).unwrap(),
                brute_force_admissible(w),
                "w={w}"
            );
        }
        assert!(enumerate_admissible_strings(MAX_ENUMERATION_LENGTH + 1).is_err());
    }
}
