//! Faulhaber power sums and the convolved sums built from them.
//!
//! `power_sum(p)` is `S_p(z) = sum_{k=1..z} k^p` and `conv_sum(r)` is
//! `H_r(x, z) = sum_{k=1..z} k^r (x - k)^r`, both as polynomials, so they
//! extend to non-integer `z`.

use std::sync::{OnceLock, RwLock};

use crate::arith::{bernoulli, binomial, Rational};
use crate::bipoly::{BiPoly, MonomialKey, Var};

static CONV_SUMS: OnceLock<RwLock<Vec<BiPoly>>> = OnceLock::new();

/// `S_p(z) = 1/(p+1) * sum_{j=0..p} C(p+1, j) B_j z^(p+1-j)` with `B_1 = +1/2`.
pub fn power_sum(p: u32) -> BiPoly {
    let scale = Rational::new(1, p + 1).expect("p + 1 > 0");
    BiPoly::from_terms((0..=p).map(|j| {
        let c = Rational::from(binomial(p as u64 + 1, j as i64)) * bernoulli(j as usize) * &scale;
        (MonomialKey::new(0, p + 1 - j), c)
    }))
}

/// `H_r(x, z) = sum_{j=0..r} C(r, j) (-1)^j x^(r-j) S_{r+j}(z)`.
///
/// `H_0 = z`. Results are memoized.
pub fn conv_sum(r: u32) -> BiPoly {
    let cache = CONV_SUMS.get_or_init(Default::default);
    if let Some(h) = cache
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(r as usize)
    {
        return h.clone();
    }
    let mut table = cache.write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= r as usize {
        let next = expand_conv_sum(table.len() as u32);
        table.push(next);
    }
    table[r as usize].clone()
}

fn expand_conv_sum(r: u32) -> BiPoly {
    (0..=r)
        .map(|j| {
            let mut c = Rational::from(binomial(r as u64, j as i64));
            if j % 2 == 1 {
                c = -c;
            }
            power_sum(r + j).shift(MonomialKey::new(r - j, 0)).scale(&c)
        })
        .sum()
}

/// Substitutes `z -> z - 1` by expanding each `(z - 1)^d` binomially.
pub fn shift_z_down(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().flat_map(|(k, c)| {
        (0..=k.dz).map(move |i| {
            let mut coeff = c * Rational::from(binomial(k.dz as u64, i as i64));
            if (k.dz - i) % 2 == 1 {
                coeff = -coeff;
            }
            (MonomialKey::new(k.dx, i), coeff)
        })
    }))
}

/// `z^p` as a polynomial.
pub fn z_pow(p: u32) -> BiPoly {
    BiPoly::var_pow(Var::Z, p)
}
