//! Search-space budgeting.
//!
//! Every potentially explosive operation sizes its search space up front and
//! refuses with [`Error::ResourceLimit`](crate::Error::ResourceLimit) before
//! doing any work, so a refused call never produces partial output. Sizes are
//! computed in saturating `u128`, so an astronomically large space simply
//! compares as too big instead of overflowing.

use crate::error::{Error, Result};

/// Default cap on the number of candidate states a search may enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Refuse with a resource-limit error if `space` exceeds `budget`.
pub fn ensure_within(space: u128, budget: u64, what: &str) -> Result<()> {
    if space > budget as u128 {
        Err(Error::ResourceLimit(format!(
            "{what} needs {space} candidates, budget is {budget}"
        )))
    } else {
        Ok(())
    }
}

pub fn pow(base: u64, exp: u32) -> u128 {
    (base as u128).saturating_pow(exp)
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).fold(1u128, |acc, k| acc.saturating_mul(k))
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Number of partitions of an n-set into exactly k nonempty blocks.
pub fn stirling2(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    if n == 0 {
        return 1; // k == 0 here
    }
    if k == 0 {
        return 0;
    }
    let (n, k) = (n as usize, k as usize);
    let mut row: Vec<u128> = vec![0; k + 1];
    row[0] = 1; // S(0, 0)
    for i in 1..=n {
        let mut next = vec![0u128; k + 1];
        for j in 1..=k.min(i) {
            next[j] = row[j]
                .saturating_mul(j as u128)
                .saturating_add(row[j - 1]);
        }
        row = next;
    }
    row[k]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(10), 3_628_800);
        assert_eq!(binomial(15, 5), 3003);
        assert_eq!(binomial(4, 7), 0);
        assert_eq!(stirling2(10, 6), 22827);
        assert_eq!(stirling2(4, 2), 7);
        assert_eq!(stirling2(5, 5), 1);
        assert_eq!(stirling2(5, 0), 0);
        assert_eq!(pow(9, 3), 729);
    }

    #[test]
    fn refusal_mentions_budget() {
        let err = ensure_within(100, 10, "test search").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("100") && msg.contains("10"), "{msg}");
    }

    #[test]
    fn saturation_does_not_panic() {
        assert_eq!(factorial(200), u128::MAX);
        assert!(ensure_within(factorial(200), u64::MAX, "huge").is_err());
    }
}
