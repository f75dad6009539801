use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::poly::UniPoly;
use super::{Field, Rational};
use crate::error::{Error, Result};

/// The m-th cyclotomic polynomial, computed as `x^m - 1` divided by `Phi_d`
/// for every proper divisor `d` of `m`.
pub fn cyclotomic_polynomial(m: usize) -> UniPoly<Rational> {
    assert!(m >= 1, "cyclotomic index must be positive");
    let mut p = UniPoly::monomial(Rational::from(1), m) - UniPoly::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let (quot, rem) = p.div_rem(&cyclotomic_polynomial(d)).unwrap();
        debug_assert!(rem.is_zero());
        p = quot;
    }
    p
}

#[derive(Debug)]
struct Modulus {
    order: usize,
    poly: UniPoly<Rational>,
}

/// Element of the cyclotomic field `Q(zeta_m)`, stored as its residue modulo
/// `Phi_m` in the power basis `1, zeta, zeta^2, ...`.
///
/// Rational constants carry no modulus and combine with elements of any
/// cyclotomic field; all other values remember their field. Equality and
/// hashing look only at the residue, which is canonical.
#[derive(Clone)]
pub struct Cyclo {
    modulus: Option<Arc<Modulus>>,
    residue: UniPoly<Rational>,
}

impl Cyclo {
    /// A primitive m-th root of unity, `zeta_m`.
    pub fn zeta(m: usize) -> Self {
        Self::zeta_pow(m, 1)
    }

    /// `zeta_m^k` for any integer `k`.
    pub fn zeta_pow(m: usize, k: i64) -> Self {
        let modulus = Arc::new(Modulus { order: m, poly: cyclotomic_polynomial(m) });
        let e = k.rem_euclid(m as i64) as usize;
        let mono = UniPoly::monomial(Rational::from(1), e);
        let residue = mono.div_rem(&modulus.poly).unwrap().1;
        Cyclo { modulus: Some(modulus), residue }
    }

    /// The element with the given power-basis coefficients in `Q(zeta_m)`.
    pub fn from_coeffs(m: usize, coeffs: Vec<Rational>) -> Self {
        let z = Self::zeta(m);
        let residue = UniPoly::from_coeffs(coeffs)
            .div_rem(&z.modulus.as_ref().unwrap().poly)
            .unwrap()
            .1;
        Cyclo { modulus: z.modulus, residue }
    }

    /// Index `m` of the ambient field, if known.
    pub fn order(&self) -> Option<usize> {
        self.modulus.as_ref().map(|md| md.order)
    }

    pub fn residue(&self) -> &UniPoly<Rational> {
        &self.residue
    }

    /// Coefficients padded to `deg Phi_m` when the field is known.
    pub fn coefficients(&self) -> Vec<Rational> {
        let len = self
            .modulus
            .as_ref()
            .map(|md| md.poly.degree().unwrap())
            .unwrap_or(1)
            .max(self.residue.coeffs().len());
        (0..len).map(|i| self.residue.coeff(i)).collect()
    }

    /// The rational value, if this element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.residue.degree() {
            None => Some(Rational::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            _ => None,
        }
    }

    fn join(a: &Option<Arc<Modulus>>, b: &Option<Arc<Modulus>>) -> Option<Arc<Modulus>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert_eq!(x.order, y.order, "mixing elements of different cyclotomic fields");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }

    fn reduce(modulus: Option<Arc<Modulus>>, p: UniPoly<Rational>) -> Self {
        let residue = match &modulus {
            Some(md) if p.degree().unwrap_or(0) >= md.poly.degree().unwrap() => {
                p.div_rem(&md.poly).unwrap().1
            }
            _ => p,
        };
        Cyclo { modulus, residue }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue
    }
}

impl Eq for Cyclo {}

impl Hash for Cyclo {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.residue.hash(state);
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.residue.fmt_var("z"))
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            Some(m) => write!(f, "Cyclo<{m}>({})", self.residue.fmt_var("z")),
            None => write!(f, "Cyclo({})", self.residue.fmt_var("z")),
        }
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.add_ref(&rhs)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.sub_ref(&rhs)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_ref(&rhs)
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { modulus: self.modulus, residue: -self.residue }
    }
}

impl Field for Cyclo {
    fn zero() -> Self {
        Cyclo { modulus: None, residue: UniPoly::zero() }
    }

    fn one() -> Self {
        Cyclo { modulus: None, residue: UniPoly::one() }
    }

    fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    fn inv(&self) -> Result<Self> {
        if self.residue.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_rational() {
            let modulus = self.modulus.clone();
            return Ok(Cyclo { modulus, residue: UniPoly::constant(c.inv()?) });
        }
        let md = self.modulus.as_ref().expect("non-rational element without modulus");
        let (g, s, _) = UniPoly::ext_gcd(&self.residue, &md.poly);
        // Phi_m is irreducible, so the gcd is 1 for every nonzero residue.
        if g != UniPoly::one() {
            return Err(Error::Consistency(format!("{} not invertible modulo Phi_{}", self, md.order)));
        }
        Ok(Self::reduce(self.modulus.clone(), s))
    }

    fn from_rational(r: &Rational) -> Self {
        Cyclo { modulus: None, residue: UniPoly::constant(r.clone()) }
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coefficients().iter().map(|c| serde_json::Value::String(c.to_string())).collect(),
        )
    }

    fn add_ref(&self, other: &Self) -> Self {
        Cyclo {
            modulus: Self::join(&self.modulus, &other.modulus),
            residue: &self.residue + &other.residue,
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        Cyclo {
            modulus: Self::join(&self.modulus, &other.modulus),
            residue: &self.residue - &other.residue,
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        Self::reduce(Self::join(&self.modulus, &other.modulus), &self.residue * &other.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_poly(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), int_poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), int_poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), int_poly(&[1, -1, 1]));
    }

    #[test]
    fn zeta4_squared() {
        let z = Cyclo::zeta(4);
        assert_eq!(z.clone() * z, Cyclo::from_i64(-1));
    }

    #[test]
    fn divisor_product_recovers_x_pow_m_minus_one() {
        for m in 1..=12usize {
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(UniPoly::one(), |acc, d| &acc * &cyclotomic_polynomial(d));
            assert_eq!(prod, &UniPoly::monomial(Rational::from(1), m) - &UniPoly::one());
            let deg_sum: usize =
                (1..=m).filter(|d| m % d == 0).map(|d| cyclotomic_polynomial(d).degree().unwrap()).sum();
            assert_eq!(deg_sum, m);
        }
    }

    #[test]
    fn zeta_is_a_root() {
        for m in 1..=12usize {
            let z = Cyclo::zeta(m);
            let phi = cyclotomic_polynomial(m);
            let value = phi
                .coeffs()
                .iter()
                .rev()
                .fold(Cyclo::zero(), |acc, c| acc * z.clone() + Cyclo::from_rational(c));
            assert!(value.is_zero(), "Phi_{m}(zeta_{m}) != 0");
            assert_eq!(z.pow_i(m as i64).unwrap(), Cyclo::one());
        }
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let a = Cyclo::from_coeffs(5, vec![Rational::from(2), Rational::from(1), Rational::new(1, 3)]);
        let inv = a.inv().unwrap();
        assert_eq!(a * inv, Cyclo::one());
    }

    #[test]
    fn json_pads_to_field_degree() {
        let z = Cyclo::zeta(5);
        assert_eq!(z.to_json().as_array().unwrap().len(), 4);
    }
}
