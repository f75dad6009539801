//! Exact coefficient fields.
//!
//! Every algebra in this crate is built over a type implementing [`Field`]:
//! arbitrary-precision rationals ([`Rational`]), the cyclotomic fields
//! `Q(zeta_m)` ([`Cyclo`]) and univariate rational functions over either of
//! those ([`RatFunc`]). All values are immutable, canonical and compare
//! exactly.

mod cyclo;
mod ground;
mod poly;
mod ratfunc;
mod rational;

pub use cyclo::{cyclotomic_polynomial, Cyclo};
pub use ground::{
    check_genericity, sample_generic, Genericity, GroundField, HeckeParams, GroundMode,
};
pub use poly::{vanish_order, UniPoly};
pub use ratfunc::{limit_at, RatFunc};
pub use rational::Rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// An exact commutative field with decidable, canonical equality.
///
/// `zero` and `one` are context free, so every implementation must be able to
/// represent rational constants without knowing any extra data (for instance
/// the modulus of a cyclotomic field).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplicative inverse; `Error::DivisionByZero` for zero.
    fn inv(&self) -> Result<Self>;

    fn from_rational(r: &Rational) -> Self;

    /// Exact string/list encoding used in JSON output.
    fn to_json(&self) -> serde_json::Value;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// `self += a * b`, the inner-loop operation of every sparse product.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let prod = a.mul_ref(b);
        *self = self.add_ref(&prod);
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    fn pow_i(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_ref(&sq);
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.mul_ref(&sq);
            }
        }
        Ok(acc)
    }
}

/// Product of an iterator of field elements.
pub fn product<F: Field, I: IntoIterator<Item = F>>(items: I) -> F {
    items.into_iter().fold(F::one(), |acc, x| acc * x)
}

/// Checked quotient that reports a zero denominator as a genericity failure.
pub(crate) fn div_generic<F: Field>(num: &F, den: &F, what: &str) -> Result<F> {
    if den.is_zero() {
        return Err(Error::NotGeneric(format!("vanishing denominator in {what}")));
    }
    num.try_div(den)
}
