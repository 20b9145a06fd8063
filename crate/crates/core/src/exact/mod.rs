//! Scalars and polynomials: exact rationals, univariate polynomials in `x`,
//! and the small ring abstraction the series and matrix layers are generic over.

mod poly;
mod rational;

pub use poly::Poly;
pub use rational::Rational;

use std::fmt::Debug;

/// Commutative ring with a rational scalar action.
///
/// Only two instances exist: [`Rational`] itself and [`Poly`].
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, by: &Rational) -> Self;
    fn from_rational(r: Rational) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, by: &Rational) -> Self {
        self * by
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, by: &Rational) -> Self {
        Poly::scale(self, by)
    }
    fn from_rational(r: Rational) -> Self {
        Poly::constant(r)
    }
}
