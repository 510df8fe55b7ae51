//! Exact coefficient rings: arbitrary-precision rationals, polynomials in the
//! dimension parameter `t`, and reduced rational functions in `t`.
//!
//! Downstream code is generic over [`Coefficient`] (a commutative ring with
//! rational scalars) and, where division is needed, [`Field`]. The dimension
//! parameter is always passed as a value of the ring: `TauPolynomial::tau()`
//! or `TauRational::tau()` for symbolic work, a plain [`Rational`] otherwise.

mod parse;
mod poly;
mod ratfunc;
mod rational;

use std::fmt;

pub use poly::TauPolynomial;
pub use ratfunc::TauRational;
pub use rational::Rational;

use crate::error::Result;

pub trait Coefficient:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_rational(r: &Rational) -> Self;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_rational(&Rational::from_int(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        let p = a.mul_ref(b);
        self.add_assign_ref(&p);
    }

    fn scale(&self, r: &Rational) -> Self {
        self.mul_ref(&Self::from_rational(r))
    }

    fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = out.mul_ref(self);
        }
        out
    }

    /// Parses the textual form produced by `Display`.
    fn parse_coeff(s: &str) -> Result<Self>;
}

pub trait Field: Coefficient {
    /// Multiplicative inverse; inverting zero is an arithmetic error.
    fn inv(&self) -> Result<Self>;

    fn div_ref(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }
}
