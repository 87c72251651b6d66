//! Construction of `f_y(x, z)` and the exact checks built on it.
//!
//! `f_y(x, z) = sum_{r=0..y} A_{y,r} H_r(x, z)`. On the diagonal it reduces
//! to `x^(2y+1)`, and the sum of its two first partials on the diagonal is
//! `(2y+1) x^(2y)`. Both facts are checked here as polynomial identities,
//! so a passing check holds for every point at once.

use crate::arith::Rational;
use crate::bipoly::{BiPoly, MonomialKey, Var};
use crate::coeffs::solve_coeffs;
use crate::powersum::conv_sum;

/// Everything computed while checking the derivative identity for one `y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub y: u32,
    pub f_poly: BiPoly,
    pub partial_x: BiPoly,
    pub partial_z: BiPoly,
    /// `partial_x + partial_z`.
    pub partial_sum: BiPoly,
    /// `partial_sum(x, x)`, univariate in `x`.
    pub diagonal_of_sum: BiPoly,
    /// `(2y+1) x^(2y)`.
    pub expected_derivative: BiPoly,
    /// `diagonal_of_sum - expected_derivative`.
    pub residual: BiPoly,
    /// Set iff `residual` is zero.
    pub holds: bool,
}

/// Builds `f_y(x, z)`.
///
/// # Panics
///
/// If the coefficient solve for `y` is inconsistent, which cannot happen for
/// a correct power-sum implementation.
pub fn build_f(y: u32) -> BiPoly {
    let row = solve_coeffs(y).unwrap_or_else(|e| panic!("{e}"));
    row.values()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(r, a)| conv_sum(r as u32).scale(a))
        .sum()
}

pub fn partials(y: u32) -> (BiPoly, BiPoly) {
    let f = build_f(y);
    (f.partial_derivative(Var::X), f.partial_derivative(Var::Z))
}

/// `(f_y)'_x + (f_y)'_z`.
pub fn derivative_combination(y: u32) -> BiPoly {
    let (dx, dz) = partials(y);
    dx + dz
}

/// `g_y(x) = x^(2y+1)`.
pub fn odd_power(y: u32) -> BiPoly {
    BiPoly::var_pow(Var::X, 2 * y + 1)
}

/// `d/dx g_y = (2y+1) x^(2y)`.
pub fn odd_power_derivative(y: u32) -> BiPoly {
    BiPoly::monomial(Rational::from(2 * y + 1), MonomialKey::new(2 * y, 0))
}

/// `f_y(x, x) == x^(2y+1)` exactly.
pub fn check_diagonal(y: u32) -> bool {
    build_f(y).substitute_diagonal() == odd_power(y)
}

pub fn check_theorem(y: u32) -> TheoremReport {
    let f_poly = build_f(y);
    let partial_x = f_poly.partial_derivative(Var::X);
    let partial_z = f_poly.partial_derivative(Var::Z);
    let partial_sum = &partial_x + &partial_z;
    let diagonal_of_sum = partial_sum.substitute_diagonal();
    let expected_derivative = odd_power_derivative(y);
    let residual = &diagonal_of_sum - &expected_derivative;
    let holds = residual.is_zero();
    TheoremReport {
        y,
        f_poly,
        partial_x,
        partial_z,
        partial_sum,
        diagonal_of_sum,
        expected_derivative,
        residual,
        holds,
    }
}

/// `[(f_y)'_x + (f_y)'_z](u, u)`.
pub fn eval_derivative_at(y: u32, u: &Rational) -> Rational {
    derivative_combination(y).eval(u, u)
}

/// `(2y+1) u^(2y)`, the closed form `eval_derivative_at` should match.
pub fn odd_power_derivative_at(y: u32, u: &Rational) -> Rational {
    Rational::from(2 * y + 1) * u.powu(2 * y)
}
