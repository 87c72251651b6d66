//! Coefficient rows `A_{m,0..m}` of the odd-power identity
//!
//! ```text
//! n^(2m+1) = sum_{k=1..n} sum_{r=0..m} A_{m,r} k^r (n-k)^r
//! ```
//!
//! Each row is obtained by matching coefficients against the diagonal
//! polynomials `D_r(n) = H_r(n, n)`, which have degree `2r + 1`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::arith::Rational;
use crate::bipoly::{BiPoly, MonomialKey};
use crate::powersum::conv_sum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    /// The even-degree part of the residual did not cancel.
    #[error("coefficient system for m = {m} is inconsistent: residual {residual:?}")]
    Inconsistent { m: u32, residual: BiPoly },
}

/// The row `A_{m,r}` for `r = 0..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffVector {
    m: u32,
    values: Vec<Rational>,
}

impl CoeffVector {
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Always `m + 1` entries, indexed by `r`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, r: u32) -> Option<&Rational> {
        self.values.get(r as usize)
    }

    /// `{"m":<int>,"A":["<num>/<den>",...]}`
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row {
            m: u32,
            #[serde(rename = "A")]
            a: Vec<String>,
        }
        serde_json::to_string(&Row {
            m: self.m,
            a: self
                .values
                .iter()
                .map(Rational::to_fraction_string)
                .collect(),
        })
        .expect("plain struct serializes")
    }

    /// `[1, 6]` style listing.
    pub fn to_plain(&self) -> String {
        let parts: Vec<_> = self.values.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(", "))
    }
}

type RowCache = RwLock<HashMap<u32, Arc<CoeffVector>>>;
static ROWS: OnceLock<RowCache> = OnceLock::new();

/// Solves for the row by top-down elimination over the odd degrees.
///
/// For `r = m` down to `0`, `A_{m,r}` is read off the `n^(2r+1)` coefficient
/// of the residual, then `A_{m,r} D_r` is subtracted. The residual must be
/// zero at the end. Rows are cached per `m`.
pub fn solve_coeffs(m: u32) -> Result<CoeffVector, CoeffError> {
    let cache = ROWS.get_or_init(Default::default);
    if let Some(row) = cache.read().unwrap_or_else(|e| e.into_inner()).get(&m) {
        return Ok(CoeffVector::clone(row));
    }
    let row = solve_uncached(m)?;
    cache
        .write()
        .unwrap_or_else(|e| e.into_inner())
        .insert(m, Arc::new(row.clone()));
    Ok(row)
}

fn solve_uncached(m: u32) -> Result<CoeffVector, CoeffError> {
    let (values, residual) = eliminate(m);
    if !residual.is_zero() {
        return Err(CoeffError::Inconsistent { m, residual });
    }
    Ok(CoeffVector { m, values })
}

/// Runs the elimination and returns the row together with the final residual.
pub fn eliminate(m: u32) -> (Vec<Rational>, BiPoly) {
    let mut residual = BiPoly::monomial(Rational::one(), MonomialKey::new(2 * m + 1, 0));
    let mut values = vec![Rational::zero(); m as usize + 1];
    for r in (0..=m).rev() {
        let diag = conv_sum(r).substitute_diagonal();
        let top = MonomialKey::new(2 * r + 1, 0);
        let lead = diag.coeff(top);
        let a = residual.coeff(top) / lead;
        residual = &residual - &diag.scale(&a);
        values[r as usize] = a;
    }
    (values, residual)
}

/// Checks the identity numerically with the solved row, using a literal
/// double sum over integers `n = 1..=n_max`.
pub fn verify_identity(m: u32, n_max: u32) -> bool {
    let row = match solve_coeffs(m) {
        Ok(row) => row,
        Err(_) => return false,
    };
    (1..=n_max as i64).all(|n| {
        let lhs: Rational = (1..=n)
            .map(|k| {
                let base = BigInt::from(k) * BigInt::from(n - k);
                let mut power = BigInt::from(1);
                let mut acc = Rational::zero();
                for a in row.values() {
                    acc += &(a * Rational::from(power.clone()));
                    power *= &base;
                }
                acc
            })
            .sum();
        lhs == Rational::from(BigInt::from(n).pow(2 * m + 1))
    })
}
