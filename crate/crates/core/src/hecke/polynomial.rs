use super::algebra::HeckeAlgebra;
use super::element::Element;
use crate::error::Result;
use crate::scalar::{Field, UniPoly};

/// Polynomial in one spectral variable `u` with algebra coefficients,
/// lowest degree first; trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPolynomial<F> {
    coeffs: Vec<Element<F>>,
}

impl<F: Field> AlgebraPolynomial<F> {
    pub fn from_coeffs(mut coeffs: Vec<Element<F>>) -> Self {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        AlgebraPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        AlgebraPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(x: Element<F>) -> Self {
        Self::from_coeffs(vec![x])
    }

    pub fn coeffs(&self) -> &[Element<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Element<F> {
        self.coeffs.get(k).cloned().unwrap_or_else(Element::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::from_coeffs((0..len).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    /// Product with a scalar polynomial in `u`.
    pub fn mul_scalar_poly(&self, p: &UniPoly<F>) -> Self {
        if self.is_zero() || p.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Element::zero(); self.coeffs.len() + p.coeffs().len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, c) in p.coeffs().iter().enumerate() {
                out[i + j] = out[i + j].add_scaled(x, c);
            }
        }
        Self::from_coeffs(out)
    }

    /// Coefficientwise `f(x_k)` for a linear map `f` of the algebra.
    pub fn map(&self, f: impl Fn(&Element<F>) -> Result<Element<F>>) -> Result<Self> {
        Ok(Self::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// `self * other` with algebra multiplication of coefficients.
    pub fn mul(&self, alg: &HeckeAlgebra<F>, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Element::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&alg.mul(x, y));
            }
        }
        Self::from_coeffs(out)
    }

    /// Value at `u = s`.
    pub fn eval(&self, s: &F) -> Element<F> {
        self.coeffs.iter().rev().fold(Element::zero(), |acc, x| {
            x.add_scaled(&acc, s)
        })
    }

    /// Division by `(u - s)`: returns the quotient and the remainder
    /// (the value at `s`).
    pub fn div_linear(&self, s: &F) -> (Self, Element<F>) {
        if self.is_zero() {
            return (Self::zero(), Element::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quot = vec![Element::zero(); d];
        let mut carry = Element::zero();
        for k in (0..=d).rev() {
            let value = self.coeffs[k].add_scaled(&carry, s);
            if k == 0 {
                return (Self::from_coeffs(quot), value);
            }
            quot[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Multiplicity of `(u - s)` as a factor; `usize::MAX` for zero.
    pub fn vanish_order(&self, s: &F) -> usize {
        let mut order = 0;
        let mut p = self.clone();
        while !p.is_zero() {
            let (q, r) = p.div_linear(s);
            if !r.is_zero() {
                return order;
            }
            order += 1;
            p = q;
        }
        usize::MAX
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn el(ts: &[(u32, i64)]) -> Element<Rational> {
        Element::from_terms(ts.iter().map(|&(i, c)| (i, Rational::from(c))).collect())
    }

    #[test]
    fn synthetic_division() {
        // (u - 2)(u + 1) * e_0 + (u - 2) * e_1
        let p = AlgebraPolynomial::from_coeffs(vec![el(&[(0, -2), (1, -2)]), el(&[(0, -1), (1, 1)]), el(&[(0, 1)])]);
        let two = Rational::from(2);
        assert!(p.eval(&two).is_zero());
        let (q, r) = p.div_linear(&two);
        assert!(r.is_zero());
        assert_eq!(q, AlgebraPolynomial::from_coeffs(vec![el(&[(0, 1), (1, 1)]), el(&[(0, 1)])]));
        assert_eq!(p.vanish_order(&two), 1);
        assert_eq!(p.vanish_order(&Rational::from(-1)), 0);
    }

    #[test]
    fn scalar_poly_product() {
        let p = AlgebraPolynomial::constant(el(&[(3, 2)]));
        let lin = UniPoly::linear(&Rational::from(5));
        let prod = p.mul_scalar_poly(&lin);
        assert_eq!(prod.coeffs(), &[el(&[(3, -10)]), el(&[(3, 2)])]);
        assert_eq!(prod.vanish_order(&Rational::from(5)), 1);
    }
}
