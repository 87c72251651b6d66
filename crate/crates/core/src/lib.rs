//! Exact computer algebra for the odd-power derivative identity.
//!
//! The crate builds the bivariate polynomials
//!
//! ```text
//! f_y(x, z) = sum_{k=1..z} sum_{r=0..y} A_{y,r} k^r (x - k)^r
//! ```
//!
//! over exact rationals and checks that `f_y(x, x) = x^(2y+1)` and that
//! `[(f_y)'_x + (f_y)'_z](u, u) = (2y+1) u^(2y)` hold as polynomial
//! identities.
//!
//! ```
//! use oddpower_core::{check_theorem, render, RenderFormat};
//!
//! let report = check_theorem(1);
//! assert!(report.holds);
//! assert_eq!(render(&report.partial_sum, RenderFormat::Plain), "3 x - 3 z + 6 x z - 3 z^2");
//! ```

pub mod arith;
pub mod bipoly;
pub mod coeffs;
pub mod engine;
pub mod io;
pub mod powersum;

pub use arith::{bernoulli, binomial, ArithError, ParseRationalError, Rational};
pub use bipoly::{BiPoly, MonomialKey, Var};
pub use coeffs::{solve_coeffs, verify_identity, CoeffError, CoeffVector};
pub use engine::{
    build_f, check_diagonal, check_theorem, derivative_combination, eval_derivative_at, odd_power,
    odd_power_derivative_at, TheoremReport,
};
pub use io::{parse_poly, render, Fixture, FixtureSet, ParseError, RenderFormat};
pub use powersum::{conv_sum, power_sum};
