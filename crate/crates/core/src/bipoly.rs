//! Sparse bivariate polynomials over [`Rational`] in the variables `x` and `z`.

use std::cmp::Ordering;
use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Rational;

/// One of the two ring variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Z,
}

impl Var {
    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Z => 'z',
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Exponent pair of a monomial `x^dx z^dz`.
///
/// Ordered by ascending `dz`, then ascending `dx`; this is the iteration and
/// rendering order of every [`BiPoly`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialKey {
    pub dx: u32,
    pub dz: u32,
}

impl MonomialKey {
    pub const ONE: MonomialKey = MonomialKey { dx: 0, dz: 0 };

    pub const fn new(dx: u32, dz: u32) -> Self {
        MonomialKey { dx, dz }
    }

    pub fn total_degree(self) -> u32 {
        self.dx + self.dz
    }

    pub fn degree(self, var: Var) -> u32 {
        match var {
            Var::X => self.dx,
            Var::Z => self.dz,
        }
    }
}

impl Ord for MonomialKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dz.cmp(&other.dz).then(self.dx.cmp(&other.dx))
    }
}

impl PartialOrd for MonomialKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for MonomialKey {
    type Output = MonomialKey;
    fn mul(self, rhs: MonomialKey) -> MonomialKey {
        MonomialKey::new(self.dx + rhs.dx, self.dz + rhs.dz)
    }
}

/// A polynomial in `x` and `z` with exact rational coefficients.
///
/// No stored coefficient is ever zero, so the zero polynomial is the empty
/// map and derived equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<MonomialKey, Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::monomial(c, MonomialKey::ONE)
    }

    pub fn monomial(c: Rational, key: MonomialKey) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        BiPoly { terms }
    }

    /// The polynomial `var`.
    pub fn var(var: Var) -> Self {
        BiPoly::var_pow(var, 1)
    }

    /// The monomial `var^e`.
    pub fn var_pow(var: Var, e: u32) -> Self {
        let key = match var {
            Var::X => MonomialKey::new(e, 0),
            Var::Z => MonomialKey::new(0, e),
        };
        BiPoly::monomial(Rational::one(), key)
    }

    /// Collects terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (MonomialKey, Rational)>,
    {
        let mut p = BiPoly::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, key: MonomialKey, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coeff(&self, key: MonomialKey) -> Rational {
        self.terms.get(&key).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> btree_map::Iter<'_, MonomialKey, Rational> {
        self.terms.iter()
    }

    /// Highest power of `var`; `None` for the zero polynomial.
    pub fn degree(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|k| k.degree(var)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.total_degree()).max()
    }

    /// True when no term involves `z`.
    pub fn is_univariate_in_x(&self) -> bool {
        self.terms.keys().all(|k| k.dz == 0)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^dx z^dz`.
    pub fn shift(&self, by: MonomialKey) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (*k * by, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        let mut result = BiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative by the power rule.
    pub fn partial_derivative(&self, var: Var) -> BiPoly {
        let mut out = BiPoly::zero();
        for (k, c) in &self.terms {
            let d = k.degree(var);
            if d == 0 {
                continue;
            }
            let key = match var {
                Var::X => MonomialKey::new(k.dx - 1, k.dz),
                Var::Z => MonomialKey::new(k.dx, k.dz - 1),
            };
            out.add_term(key, &(c * Rational::from(d)));
        }
        out
    }

    /// Value at `(x, z)`.
    pub fn eval(&self, x: &Rational, z: &Rational) -> Rational {
        // Powers are cached per degree; f_y terms reuse them heavily.
        let max_dx = self.degree(Var::X).unwrap_or(0) as usize;
        let max_dz = self.degree(Var::Z).unwrap_or(0) as usize;
        let xs = powers(x, max_dx);
        let zs = powers(z, max_dz);
        self.terms
            .iter()
            .map(|(k, c)| c * &xs[k.dx as usize] * &zs[k.dz as usize])
            .sum()
    }

    /// `p(x, x)` as a polynomial in `x` alone.
    pub fn substitute_diagonal(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .map(|(k, c)| (MonomialKey::new(k.total_degree(), 0), c.clone())),
        )
    }
}

fn powers(base: &Rational, max: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Rational::one());
    for i in 0..max {
        let next = &out[i] * base;
        out.push(next);
    }
    out
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*x^{}*z^{}", k.dx, k.dz)?;
        }
        Ok(())
    }
}

impl From<Rational> for BiPoly {
    fn from(c: Rational) -> Self {
        BiPoly::constant(c)
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(*ka * *kb, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                $trait::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> Self {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn t(c: i64, dx: u32, dz: u32) -> (MonomialKey, Rational) {
        (MonomialKey::new(dx, dz), q(c))
    }

    fn x() -> BiPoly {
        BiPoly::var(Var::X)
    }

    fn z() -> BiPoly {
        BiPoly::var(Var::Z)
    }

    fn f1() -> BiPoly {
        BiPoly::from_terms([t(3, 1, 1), t(-3, 0, 2), t(3, 1, 2), t(-2, 0, 3)])
    }

    #[test]
    fn canonical_order() {
        let keys: Vec<_> = f1().terms().map(|(k, _)| (k.dx, k.dz)).collect();
        assert_eq!(keys, vec![(1, 1), (0, 2), (1, 2), (0, 3)]);
    }

    #[test]
    fn add_examples() {
        let a = BiPoly::from_terms([t(3, 1, 1)]);
        let b = BiPoly::from_terms([t(-3, 0, 2)]);
        assert_eq!(&a + &b, BiPoly::from_terms([t(3, 1, 1), t(-3, 0, 2)]));
        assert_eq!(&f1() + &BiPoly::zero(), f1());

        let dx = BiPoly::from_terms([t(3, 0, 1), t(3, 0, 2)]);
        let dz = BiPoly::from_terms([t(3, 1, 0), t(-6, 0, 1), t(6, 1, 1), t(-6, 0, 2)]);
        let sum = BiPoly::from_terms([t(3, 1, 0), t(-3, 0, 1), t(6, 1, 1), t(-3, 0, 2)]);
        assert_eq!(dx + dz, sum);
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let p = &f1() - &f1();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
        assert_eq!(p, BiPoly::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&(&x() - &z()) * &(&x() + &z()), x().pow(2) - z().pow(2));
        assert_eq!(&f1() * &BiPoly::one(), f1());
        let sq = BiPoly::from_terms([t(1, 2, 0), t(-2, 1, 1), t(1, 0, 2)]);
        assert_eq!(&(&x() - &z()) * &(&x() - &z()), sq);
    }

    #[test]
    fn pow_examples() {
        assert_eq!((&x() - &z()).pow(0), BiPoly::one());
        assert_eq!(x().pow(3), BiPoly::monomial(q(1), MonomialKey::new(3, 0)));
        let sq = BiPoly::from_terms([t(1, 2, 0), t(-2, 1, 1), t(1, 0, 2)]);
        assert_eq!((&x() - &z()).pow(2), sq);
        assert_eq!(BiPoly::zero().pow(0), BiPoly::one());
        assert_eq!(BiPoly::zero().pow(3), BiPoly::zero());
    }

    #[test]
    fn partial_derivative_examples() {
        assert_eq!(
            f1().partial_derivative(Var::X),
            BiPoly::from_terms([t(3, 0, 1), t(3, 0, 2)])
        );
        assert_eq!(
            f1().partial_derivative(Var::Z),
            BiPoly::from_terms([t(3, 1, 0), t(-6, 0, 1), t(6, 1, 1), t(-6, 0, 2)])
        );
        let c = BiPoly::constant(q(17));
        assert!(c.partial_derivative(Var::X).is_zero());
        assert!(c.partial_derivative(Var::Z).is_zero());
    }

    #[test]
    fn eval_examples() {
        let sum = BiPoly::from_terms([t(3, 1, 0), t(-3, 0, 1), t(6, 1, 1), t(-3, 0, 2)]);
        assert_eq!(sum.eval(&q(2), &q(2)), q(12));
        let p = &f1() + &BiPoly::constant(q(-9));
        assert_eq!(p.eval(&q(0), &q(0)), q(-9));
        assert_eq!(BiPoly::zero().eval(&q(5), &q(5)), q(0));
    }

    #[test]
    fn substitute_diagonal_examples() {
        assert_eq!(f1().substitute_diagonal(), x().pow(3));
        assert!((x().pow(2) - z().pow(2)).substitute_diagonal().is_zero());
    }

    #[test]
    fn degrees() {
        assert_eq!(f1().degree(Var::X), Some(1));
        assert_eq!(f1().degree(Var::Z), Some(3));
        assert_eq!(f1().total_degree(), Some(3));
        assert_eq!(BiPoly::zero().degree(Var::X), None);
        assert!(x().pow(4).is_univariate_in_x());
        assert!(!f1().is_univariate_in_x());
    }

    fn arb_coeff() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    fn arb_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec(((0u32..5, 0u32..5), arb_coeff()), 0..6).prop_map(|ts| {
            BiPoly::from_terms(
                ts.into_iter()
                    .map(|((dx, dz), c)| (MonomialKey::new(dx, dz), c)),
            )
        })
    }

    fn arb_point() -> impl Strategy<Value = Rational> {
        (-20i64..20, 1i64..7).prop_map(|(n, d)| Rational::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!((&p + &q) + &r, &p + (&q + &r));
            prop_assert_eq!((&p * &q) * &r, &p * (&q * &r));
            prop_assert_eq!(&p * (&q + &r), &p * &q + &p * &r);
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn no_zero_coefficients_stored(p in arb_poly(), q in arb_poly()) {
            for poly in [&p + &q, &p - &q, &p * &q, p.partial_derivative(Var::X), q.substitute_diagonal()] {
                prop_assert!(poly.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn derivative_is_linear_and_leibniz(p in arb_poly(), q in arb_poly()) {
            for v in [Var::X, Var::Z] {
                prop_assert_eq!((&p + &q).partial_derivative(v), p.partial_derivative(v) + q.partial_derivative(v));
                prop_assert_eq!(
                    (&p * &q).partial_derivative(v),
                    &p * &q.partial_derivative(v) + &q * &p.partial_derivative(v)
                );
            }
        }

        #[test]
        fn mixed_partials_commute(p in arb_poly()) {
            prop_assert_eq!(
                p.partial_derivative(Var::X).partial_derivative(Var::Z),
                p.partial_derivative(Var::Z).partial_derivative(Var::X)
            );
        }

        #[test]
        fn eval_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly(), a in arb_point(), b in arb_point()) {
            prop_assert_eq!((&p * &q).eval(&a, &b), p.eval(&a, &b) * q.eval(&a, &b));
            prop_assert_eq!((&p + &q).eval(&a, &b), p.eval(&a, &b) + q.eval(&a, &b));
        }

        #[test]
        fn diagonal_commutes_with_eval(p in arb_poly(), u in arb_point(), w in arb_point()) {
            prop_assert_eq!(p.substitute_diagonal().eval(&u, &w), p.eval(&u, &u));
        }

        #[test]
        fn chain_rule_on_diagonal(p in arb_poly()) {
            let lhs = p.substitute_diagonal().partial_derivative(Var::X);
            let rhs = (p.partial_derivative(Var::X) + p.partial_derivative(Var::Z)).substitute_diagonal();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pow_matches_repeated_mul(p in arb_poly(), e in 0u32..5) {
            let mut expect = BiPoly::one();
            for _ in 0..e {
                expect = &expect * &p;
            }
            prop_assert_eq!(p.pow(e), expect);
        }
    }
}
