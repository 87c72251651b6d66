use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use super::{binomial, Rational};

static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number `B_n` with the `B_1 = +1/2` convention.
///
/// Generated from `sum_{j=0..n} C(n+1, j) B_j = n + 1` and memoized in a
/// process-wide table that only ever grows.
pub fn bernoulli(n: usize) -> Rational {
    let table = TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]));
    if let Some(b) = table.read().unwrap_or_else(|e| e.into_inner()).get(n) {
        return b.clone();
    }
    let mut values = table.write().unwrap_or_else(|e| e.into_inner());
    while values.len() <= n {
        let m = values.len();
        let mut acc = Rational::from(m as u64 + 1);
        for (j, b) in values.iter().enumerate() {
            if !b.is_zero() {
                acc -= &(Rational::from(binomial(m as u64 + 1, j as i64)) * b);
            }
        }
        values.push(acc / Rational::from(BigInt::from(m + 1)));
    }
    values[n].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), Rational::one());
        assert_eq!(bernoulli(1), q(1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(3), Rational::zero());
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        for k in 1..=20 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn satisfies_recurrence() {
        for n in 0..=60usize {
            let lhs: Rational = (0..=n)
                .map(|j| Rational::from(binomial(n as u64 + 1, j as i64)) * bernoulli(j))
                .sum();
            assert_eq!(lhs, Rational::from(n as u64 + 1), "n = {n}");
        }
    }

    #[test]
    fn repeated_and_concurrent_calls_agree() {
        let handles: Vec<_> = (0..4)
            .map(|t| {
                std::thread::spawn(move || {
                    (0..50).rev().map(|n| bernoulli(n + t)).collect::<Vec<_>>()
                })
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            let want: Vec<_> = (0..50).rev().map(|n| bernoulli(n + t)).collect();
            assert_eq!(got, want);
        }
    }
}
