use crate::scalar::Field;

/// Sparse linear combination of basis words, sorted by word index with no
/// stored zeros. The owning [`super::HeckeAlgebra`] fixes what the indices mean.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<F> {
    terms: Vec<(u32, F)>,
}

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    /// A single basis word with coefficient one.
    pub fn basis(index: u32) -> Self {
        Element { terms: vec![(index, F::one())] }
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(mut terms: Vec<(u32, F)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u32, F)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 = last.1.add_ref(&c),
                _ => out.push((i, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        Element { terms: out }
    }

    /// Wraps terms already sorted, unique and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(u32, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.is_zero()));
        Element { terms }
    }

    pub fn terms(&self) -> &[(u32, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(u32, F)> {
        self.terms
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

    pub fn coefficient(&self, index: u32) -> F {
        match self.terms.binary_search_by_key(&index, |t| t.0) {
            Ok(pos) => self.terms[pos].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Element { terms: self.terms.iter().map(|(i, x)| (*i, x.mul_ref(c))).collect() }
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(i, x)| (*i, -x.clone())).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) if x.0 == y.0 => {
                    let mut v = x.1.clone();
                    v.add_mul_assign(&y.1, c);
                    if !v.is_zero() {
                        out.push((x.0, v));
                    }
                    a.next();
                    b.next();
                }
                (Some(x), Some(y)) if x.0 < y.0 => {
                    out.push((*x).clone());
                    a.next();
                }
                (_, Some(y)) => {
                    out.push((y.0, y.1.mul_ref(c)));
                    b.next();
                }
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, None) => break,
            }
        }
        Element { terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-F::one())
    }

    /// Applies a coefficient map, dropping terms that become zero.
    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Element<G> {
        Element {
            terms: self
                .terms
                .iter()
                .filter_map(|(i, c)| {
                    let v = f(c);
                    (!v.is_zero()).then_some((*i, v))
                })
                .collect(),
        }
    }

    pub fn try_map_coeffs<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Element<G>, E> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (i, c) in &self.terms {
            let v = f(c)?;
            if !v.is_zero() {
                terms.push((*i, v));
            }
        }
        Ok(Element { terms })
    }
}

/// Dense scratch space for summing many scaled terms over one level.
pub(crate) struct Accumulator<F> {
    vals: Vec<F>,
    used: Vec<bool>,
    touched: Vec<u32>,
}

impl<F: Field> Accumulator<F> {
    pub(crate) fn new(dim: usize) -> Self {
        Accumulator { vals: vec![F::zero(); dim], used: vec![false; dim], touched: Vec::new() }
    }

    /// Adds `a * b` at `index`.
    pub(crate) fn add_mul(&mut self, index: u32, a: &F, b: &F) {
        let i = index as usize;
        if !self.used[i] {
            self.used[i] = true;
            self.touched.push(index);
        }
        self.vals[i].add_mul_assign(a, b);
    }

    /// Drains the accumulated sum, leaving the scratch space empty.
    pub(crate) fn take(&mut self) -> Element<F> {
        self.touched.sort_unstable();
        let mut terms = Vec::with_capacity(self.touched.len());
        for &idx in &self.touched {
            let i = idx as usize;
            self.used[i] = false;
            let v = std::mem::replace(&mut self.vals[i], F::zero());
            if !v.is_zero() {
                terms.push((idx, v));
            }
        }
        self.touched.clear();
        Element::from_sorted(terms)
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
    fn normalizes_terms() {
        let e = el(&[(3, 1), (1, 2), (3, -1), (0, 0)]);
        assert_eq!(e.terms(), &[(1, Rational::from(2))]);
    }

    #[test]
    fn add_and_cancel() {
        let a = el(&[(0, 1), (2, 3)]);
        let b = el(&[(1, 5), (2, -3)]);
        assert_eq!(a.add(&b), el(&[(0, 1), (1, 5)]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add_scaled(&b, &Rational::from(2)), el(&[(0, 1), (1, 10), (2, -3)]));
    }

    #[test]
    fn accumulator_round_trip() {
        let mut acc = Accumulator::new(5);
        let one = Rational::from(1);
        acc.add_mul(4, &one, &one);
        acc.add_mul(1, &Rational::from(2), &Rational::from(3));
        acc.add_mul(4, &one, &Rational::from(-1));
        assert_eq!(acc.take(), el(&[(1, 6)]));
        assert!(acc.take().is_zero());
    }
}
