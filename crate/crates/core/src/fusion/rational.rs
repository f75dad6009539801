//! Rational functions of the spectral variable `u` whose denominators split
//! into linear factors `(u - s)`.

use crate::error::{Error, Result};
use crate::hecke::{AlgebraPolynomial, Element};
use crate::scalar::{Field, RatFunc, UniPoly};

fn multiplicity<F: Field>(roots: &[F], s: &F) -> usize {
    roots.iter().filter(|r| *r == s).count()
}

fn remove_one<F: Field>(roots: &mut Vec<F>, s: &F) {
    if let Some(pos) = roots.iter().position(|r| r == s) {
        roots.swap_remove(pos);
    }
}

/// `prod (s - r)` over `roots`.
fn eval_roots<F: Field>(roots: &[F], s: &F) -> F {
    roots.iter().fold(F::one(), |acc, r| acc.mul_ref(&s.sub_ref(r)))
}

/// `num(u) / (unit * prod (u - s))` with algebra-valued numerator.
///
/// Kept reduced: the numerator does not vanish at any retained root, so a
/// retained root is a genuine pole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraRationalFunction<F> {
    num: AlgebraPolynomial<F>,
    den_roots: Vec<F>,
    unit: F,
}

impl<F: Field> AlgebraRationalFunction<F> {
    pub fn new(num: AlgebraPolynomial<F>, den_roots: Vec<F>, unit: F) -> Result<Self> {
        if unit.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = AlgebraRationalFunction { num, den_roots, unit };
        out.reduce();
        Ok(out)
    }

    pub fn from_polynomial(num: AlgebraPolynomial<F>) -> Self {
        AlgebraRationalFunction { num, den_roots: Vec::new(), unit: F::one() }
    }

    pub fn num(&self) -> &AlgebraPolynomial<F> {
        &self.num
    }

    pub fn den_roots(&self) -> &[F] {
        &self.den_roots
    }

    pub fn unit(&self) -> &F {
        &self.unit
    }

    /// Multiplicity of `(u - s)` in the denominator.
    pub fn pole_order(&self, s: &F) -> usize {
        multiplicity(&self.den_roots, s)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den_roots.clear();
            return;
        }
        let mut distinct: Vec<F> = Vec::new();
        for r in &self.den_roots {
            if !distinct.contains(r) {
                distinct.push(r.clone());
            }
        }
        for s in distinct {
            while multiplicity(&self.den_roots, &s) > 0 {
                let (quot, rem) = self.num.div_linear(&s);
                if !rem.is_zero() {
                    break;
                }
                self.num = quot;
                remove_one(&mut self.den_roots, &s);
            }
        }
    }

    /// Value at `u = s` after cancelling common factors. A pole that
    /// survives cancellation is an error.
    pub fn limit_at(&self, s: &F) -> Result<Element<F>> {
        let order = self.pole_order(s);
        if order > 0 {
            return Err(Error::Pole { point: s.to_string(), num_order: 0, den_order: order });
        }
        let den = self.unit.mul_ref(&eval_roots(&self.den_roots, s));
        Ok(self.num.eval(s).scale(&den.inv()?))
    }

    /// Product with a scalar rational function given in factored form.
    pub fn mul_factored(&self, f: &FactoredRatFunc<F>) -> Result<Self> {
        let num = self.num.mul_scalar_poly(&UniPoly::from_roots(&f.num_roots)).scale(&f.unit);
        let mut den_roots = self.den_roots.clone();
        den_roots.extend(f.den_roots.iter().cloned());
        Self::new(num, den_roots, self.unit.clone())
    }

    /// Sum over a common denominator (the multiset union of both).
    pub fn add(&self, other: &Self) -> Result<Self> {
        let mut lcm = self.den_roots.clone();
        let mut extra_self = Vec::new();
        let mut remaining = self.den_roots.clone();
        for r in &other.den_roots {
            if multiplicity(&remaining, r) > 0 {
                remove_one(&mut remaining, r);
            } else {
                lcm.push(r.clone());
                extra_self.push(r.clone());
            }
        }
        // `remaining` are the factors of self missing from other.
        let a = self.num.mul_scalar_poly(&UniPoly::from_roots(&extra_self)).scale(&other.unit);
        let b = other.num.mul_scalar_poly(&UniPoly::from_roots(&remaining)).scale(&self.unit);
        Self::new(a.add(&b), lcm, self.unit.mul_ref(&other.unit))
    }

    /// Equality as rational functions, by clearing denominators.
    pub fn equals(&self, other: &Self) -> bool {
        let lhs = self.num.mul_scalar_poly(&UniPoly::from_roots(&other.den_roots)).scale(&other.unit);
        let rhs = other.num.mul_scalar_poly(&UniPoly::from_roots(&self.den_roots)).scale(&self.unit);
        lhs == rhs
    }
}

/// Scalar rational function `unit * prod (u - a) / prod (u - b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRatFunc<F> {
    pub unit: F,
    pub num_roots: Vec<F>,
    pub den_roots: Vec<F>,
}

impl<F: Field> FactoredRatFunc<F> {
    pub fn new(unit: F, num_roots: Vec<F>, den_roots: Vec<F>) -> Self {
        FactoredRatFunc { unit, num_roots, den_roots }
    }

    /// Expanded, normalized form.
    pub fn to_ratfunc(&self) -> RatFunc<F> {
        let num = UniPoly::from_roots(&self.num_roots).scale(&self.unit);
        RatFunc::new(num, UniPoly::from_roots(&self.den_roots)).expect("denominator is monic")
    }

    /// Value at `u = s` after cancelling common linear factors.
    pub fn limit_at(&self, s: &F) -> Result<F> {
        let mut num = self.num_roots.clone();
        let mut den = self.den_roots.clone();
        while multiplicity(&num, s) > 0 && multiplicity(&den, s) > 0 {
            remove_one(&mut num, s);
            remove_one(&mut den, s);
        }
        let d = multiplicity(&den, s);
        if d > 0 {
            return Err(Error::Pole { point: s.to_string(), num_order: 0, den_order: d });
        }
        self.unit.mul_ref(&eval_roots(&num, s)).try_div(&eval_roots(&den, s))
    }
}
