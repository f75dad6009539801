use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{vanish_order, UniPoly};
use super::{Field, Rational};
use crate::error::{Error, Result};

/// Univariate rational function `num / den` over a field `F`.
///
/// Normalization is eager: after every operation `gcd(num, den) = 1` and `den`
/// is monic, so structural equality is equality of functions. When used as a
/// ground field the variable is printed as `q`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> RatFunc<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: UniPoly::one() };
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).unwrap().0, den.div_rem(&g).unwrap().0)
        };
        let lc_inv = den.leading().unwrap().inv().unwrap();
        if lc_inv.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
        }
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        RatFunc { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    /// Plain evaluation; fails when the denominator vanishes at `at`.
    pub fn eval(&self, at: &F) -> Result<F> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::Pole {
                point: at.to_string(),
                num_order: vanish_order(&self.num, at),
                den_order: vanish_order(&self.den, at),
            });
        }
        self.num.eval(at).try_div(&d)
    }

    /// Whether this function is regular at `at`.
    pub fn is_finite_at(&self, at: &F) -> bool {
        !self.den.eval(at).is_zero()
    }

    /// Applies a coefficient homomorphism to numerator and denominator.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<RatFunc<G>> {
        let num = UniPoly::from_coeffs(self.num.coeffs().iter().map(&f).collect());
        let den = UniPoly::from_coeffs(self.den.coeffs().iter().map(&f).collect());
        RatFunc::new(num, den)
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.den.degree() == Some(0) {
            return self.num.fmt_var(var);
        }
        format!("({})/({})", self.num.fmt_var(var), self.den.fmt_var(var))
    }
}

/// Limit of `r` at `s`: common powers of `(x - s)` are divided out before
/// evaluating. A genuine pole is reported as `Error::Pole`.
pub fn limit_at<F: Field>(r: &RatFunc<F>, s: &F) -> Result<F> {
    let den_order = vanish_order(&r.den, s);
    if den_order == 0 {
        return r.num.eval(s).try_div(&r.den.eval(s));
    }
    // After normalization num and den are coprime, so any vanishing of the
    // denominator is a genuine pole.
    Err(Error::Pole {
        point: s.to_string(),
        num_order: if r.num.is_zero() { 0 } else { vanish_order(&r.num, s) },
        den_order,
    })
}

impl<F: Field> fmt::Display for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_var("q"))
    }
}

impl<F: Field> fmt::Debug for RatFunc<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({})", self.fmt_var("q"))
    }
}

impl<F: Field> Add for RatFunc<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl<F: Field> Sub for RatFunc<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl<F: Field> Mul for RatFunc<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<F: Field> Neg for RatFunc<F> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<F: Field> Field for RatFunc<F> {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    fn from_rational(r: &Rational) -> Self {
        Self::constant(F::from_rational(r))
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(format!("{}/{}", paren(&self.num), paren(&self.den)))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.degree() == Some(0) && other.den.degree() == Some(0) {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }
}

fn paren<F: Field>(p: &UniPoly<F>) -> String {
    format!("({})", p.fmt_var("q"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn cancels_common_factor() {
        // (q-1)/(q^2-1) = 1/(q+1)
        let r = RatFunc::new(p(&[-1, 1]), p(&[-1, 0, 1])).unwrap();
        assert_eq!(r.num(), &p(&[1]));
        assert_eq!(r.den(), &p(&[1, 1]));
    }

    #[test]
    fn limits() {
        let r = RatFunc::new(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(limit_at(&r, &Rational::from(1)).unwrap(), Rational::from(2));
        let pole = RatFunc::new(p(&[1]), p(&[-1, 1])).unwrap();
        assert!(matches!(limit_at(&pole, &Rational::from(1)), Err(Error::Pole { .. })));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RatFunc::new(p(&[1]), UniPoly::zero()), Err(Error::DivisionByZero));
    }
}
