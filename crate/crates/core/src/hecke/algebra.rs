use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::element::{Accumulator, Element};
use crate::error::{Error, Result};
use crate::scalar::{Field, HeckeParams};

/// A generator of `H(m,1,n)`: `tau` or `sigma_i`, `1 <= i < n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Tau,
    Sigma(usize),
}

impl Generator {
    fn id(self) -> usize {
        match self {
            Generator::Tau => 0,
            Generator::Sigma(i) => i,
        }
    }

    fn from_id(id: usize) -> Self {
        if id == 0 {
            Generator::Tau
        } else {
            Generator::Sigma(id)
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Tau => write!(f, "t"),
            Generator::Sigma(i) => write!(f, "s{i}"),
        }
    }
}

type Row<F> = Vec<(u32, F)>;
type Table<F> = Vec<Row<F>>;

struct Level<F> {
    dim: usize,
    /// `right[g][w]` is `e_w * g` for generator id `g`.
    right: Vec<Table<F>>,
    /// `left[g][w]` is `g * e_w`, filled on first use.
    left: Vec<OnceLock<Table<F>>>,
    /// `e_w * J_k` and `J_k * e_w` for `k = 1..=l`, filled on first use.
    jm_right: Vec<OnceLock<Table<F>>>,
    jm_left: Vec<OnceLock<Table<F>>>,
}

impl<F> Level<F> {
    fn new(dim: usize, right: Vec<Table<F>>, l: usize) -> Self {
        Level {
            dim,
            right,
            left: (0..l).map(|_| OnceLock::new()).collect(),
            jm_right: (0..=l).map(|_| OnceLock::new()).collect(),
            jm_left: (0..=l).map(|_| OnceLock::new()).collect(),
        }
    }
}

fn apply_table<F: Field>(dim: usize, table: &Table<F>, x: &Element<F>) -> Element<F> {
    let mut acc = Accumulator::new(dim);
    for (idx, c) in x.terms() {
        for (j, d) in &table[*idx as usize] {
            acc.add_mul(*j, c, d);
        }
    }
    acc.take()
}

/// The chain `H(m,1,0) ⊂ H(m,1,1) ⊂ ... ⊂ H(m,1,n)` with multiplication
/// tables for every level.
///
/// A basis word at level `l` is a word at level `l-1` followed by a pair
/// `(a, i)`, `0 <= a < m`, `1 <= i <= l`, and stands for the product
/// `b' * J_l^a * sigma_{l-1} sigma_{l-2} ... sigma_i`. Its index is
/// `index(b') * m*l + a*l + (i-1)`.
struct Tower<F> {
    m: usize,
    kappa: F,
    /// `a_0, ..., a_{m-1}` of the monic `(X - v_1)...(X - v_m)`.
    char_coeffs: Vec<F>,
    levels: Vec<Level<F>>,
}

impl<F: Field> Tower<F> {
    fn block(&self, l: usize) -> usize {
        self.m * l
    }

    fn split(&self, l: usize, idx: u32) -> (u32, usize, usize) {
        let b = self.block(l) as u32;
        let r = (idx % b) as usize;
        (idx / b, r / l, r % l + 1)
    }

    fn join(&self, l: usize, prefix: u32, a: usize, i: usize) -> u32 {
        prefix * self.block(l) as u32 + (a * l + i - 1) as u32
    }

    /// Index of a level `l-1` word viewed at level `l`.
    fn embed(&self, l: usize, prefix: u32) -> u32 {
        self.join(l, prefix, 0, l)
    }

    fn identity_index(&self, l: usize) -> u32 {
        (1..=l).fold(0, |idx, k| self.embed(k, idx))
    }

    /// `h ⊗ X^a S_i`: a level `l-1` element placed in front of a coset factor.
    fn tensor(&self, l: usize, h: &[(u32, F)], a: usize, i: usize) -> Element<F> {
        Element::from_sorted(h.iter().map(|(p, c)| (self.join(l, *p, a, i), c.clone())).collect())
    }

    fn rgen(&self, l: usize, x: &Element<F>, g: usize) -> Element<F> {
        apply_table(self.levels[l].dim, &self.levels[l].right[g], x)
    }

    /// `x * J_k` at level `l`.
    fn rjm(&self, l: usize, x: &Element<F>, k: usize) -> Element<F> {
        let table = self.levels[l].jm_right[k].get_or_init(|| {
            let word = Self::jm_word(k);
            (0..self.levels[l].dim as u32)
                .map(|w| self.rword(l, &Element::basis(w), &word).into_terms())
                .collect()
        });
        apply_table(self.levels[l].dim, table, x)
    }

    /// `J_k * x` at level `l`.
    fn ljm(&self, l: usize, x: &Element<F>, k: usize) -> Element<F> {
        let table = self.levels[l].jm_left[k].get_or_init(|| {
            let word = Self::jm_word(k);
            (0..self.levels[l].dim as u32)
                .map(|w| {
                    word.iter()
                        .rev()
                        .fold(Element::basis(w), |acc, &g| self.lgen(l, g, &acc))
                        .into_terms()
                })
                .collect()
        });
        apply_table(self.levels[l].dim, table, x)
    }

    fn rword(&self, l: usize, x: &Element<F>, word: &[usize]) -> Element<F> {
        word.iter().fold(x.clone(), |acc, &g| self.rgen(l, &acc, g))
    }

    /// Generator ids spelling `J_l = sigma_{l-1} ... sigma_1 tau sigma_1 ... sigma_{l-1}`.
    fn jm_word(l: usize) -> Vec<usize> {
        (1..l).rev().chain(std::iter::once(0)).chain(1..l).collect()
    }

    fn gen_word(&self, l: usize, idx: u32) -> Vec<usize> {
        if l == 0 {
            return Vec::new();
        }
        let (p, a, i) = self.split(l, idx);
        let mut word = self.gen_word(l - 1, p);
        for _ in 0..a {
            word.extend(Self::jm_word(l));
        }
        word.extend((i..l).rev());
        word
    }

    /// `x * y` at level `top`, where `y` lives at level `l <= top`.
    fn rmul(&self, top: usize, x: &Element<F>, l: usize, y: &Element<F>) -> Element<F> {
        if l == 0 {
            return x.scale(&y.coefficient(0));
        }
        let mut groups: BTreeMap<(usize, usize), Vec<(u32, F)>> = BTreeMap::new();
        for (idx, c) in y.terms() {
            let (p, a, i) = self.split(l, *idx);
            groups.entry((a, i)).or_default().push((p, c.clone()));
        }
        let mut result = Element::zero();
        for ((a, i), terms) in groups {
            let mut t = self.rmul(top, x, l - 1, &Element::from_sorted(terms));
            for _ in 0..a {
                t = self.rjm(top, &t, l);
            }
            let tail: Vec<usize> = (i..l).rev().collect();
            t = self.rword(top, &t, &tail);
            result = result.add(&t);
        }
        result
    }

    /// `x * y` at level `top`, where `x` lives at level `l <= top`.
    fn lmul(&self, top: usize, l: usize, x: &Element<F>, y: &Element<F>) -> Element<F> {
        if l == 0 {
            return y.scale(&x.coefficient(0));
        }
        let mut groups: BTreeMap<(usize, usize), Vec<(u32, F)>> = BTreeMap::new();
        for (idx, c) in x.terms() {
            let (p, a, i) = self.split(l, *idx);
            groups.entry((a, i)).or_default().push((p, c.clone()));
        }
        let mut result = Element::zero();
        for ((a, i), terms) in groups {
            let mut t = (i..l).fold(y.clone(), |acc, g| self.lgen(top, g, &acc));
            for _ in 0..a {
                t = self.ljm(top, &t, l);
            }
            result = result.add(&self.lmul(top, l - 1, &Element::from_sorted(terms), &t));
        }
        result
    }

    /// Walks the basis-word tree of whichever factor has fewer terms.
    fn mul(&self, l: usize, x: &Element<F>, y: &Element<F>) -> Element<F> {
        if x.is_zero() || y.is_zero() {
            return Element::zero();
        }
        if x.len() <= y.len() {
            self.lmul(l, l, x, y)
        } else {
            self.rmul(l, x, l, y)
        }
    }

    fn build_level_one(&mut self) {
        let m = self.m;
        let tau: Table<F> = (0..m)
            .map(|a| {
                if a + 1 < m {
                    vec![(a as u32 + 1, F::one())]
                } else {
                    (0..m)
                        .filter(|&k| !self.char_coeffs[k].is_zero())
                        .map(|k| (k as u32, -self.char_coeffs[k].clone()))
                        .collect()
                }
            })
            .collect();
        self.levels.push(Level::new(m, vec![tau], 1));
    }

    fn build_level(&mut self, big_l: usize) {
        let m = self.m;
        let dim = self.levels[big_l - 1].dim * m * big_l;
        let kappa = self.kappa.clone();
        let lower = &self.levels[big_l - 1];

        let mut right: Vec<Table<F>> = vec![Vec::new(); big_l];
        for (j, slot) in right.iter_mut().enumerate().skip(1) {
            *slot = (0..dim as u32)
                .map(|idx| {
                    let (p, a, i) = self.split(big_l, idx);
                    let row = if j + 1 < i {
                        self.tensor(big_l, &lower.right[j][p as usize], a, i).into_terms()
                    } else if j + 1 == i {
                        vec![(self.join(big_l, p, a, i - 1), F::one())]
                    } else if j == i {
                        vec![(self.join(big_l, p, a, i), kappa.clone()), (self.join(big_l, p, a, i + 1), F::one())]
                    } else {
                        self.tensor(big_l, &lower.right[j - 1][p as usize], a, i).into_terms()
                    };
                    Element::from_terms(row).into_terms()
                })
                .collect();
        }
        self.levels.push(Level::new(dim, right, big_l));

        let xm = self.top_jm_power(big_l);
        // X^m grouped by coset factor, with level L-1 coefficients.
        let mut xm_groups: BTreeMap<(usize, usize), Vec<(u32, F)>> = BTreeMap::new();
        for (idx, c) in xm.terms() {
            let (p, a, i) = self.split(big_l, *idx);
            xm_groups.entry((a, i)).or_default().push((p, c.clone()));
        }
        let xm_groups: Vec<((usize, usize), Element<F>)> =
            xm_groups.into_iter().map(|(k, t)| (k, Element::from_sorted(t))).collect();

        let tau: Table<F> = (0..dim as u32)
            .map(|idx| {
                let (p, a, i) = self.split(big_l, idx);
                if i >= 2 {
                    return self.tensor(big_l, &self.levels[big_l - 1].right[0][p as usize], a, i).into_terms();
                }
                // X^a S_1 tau = X^(a+1) sigma_{L-1}^-1 ... sigma_1^-1
                let mut t = if a + 1 < m {
                    Element::basis(self.join(big_l, p, a + 1, big_l))
                } else {
                    let bp = Element::basis(p);
                    let mut acc = Element::zero();
                    for ((ga, gi), h) in &xm_groups {
                        let prod = self.mul(big_l - 1, &bp, h);
                        acc = acc.add(&self.tensor(big_l, prod.terms(), *ga, *gi));
                    }
                    acc
                };
                for j in (1..big_l).rev() {
                    let s = self.rgen(big_l, &t, j);
                    t = s.add_scaled(&t, &-kappa.clone());
                }
                t.into_terms()
            })
            .collect();
        self.levels[big_l].right[0] = tau;
    }

    /// `J_L^m` at level `L >= 2`, from `J_L = sigma J_{L-1} sigma` with `sigma = sigma_{L-1}`:
    /// `X^m = sigma Y^m sigma + kappa sum_{j=1}^{m-1} Y^{m-j} X^j sigma`, and
    /// `sigma Y^a = X^a sigma - kappa sum_{j=1}^a X^j Y^(a-j)`.
    fn top_jm_power(&self, big_l: usize) -> Element<F> {
        let m = self.m;
        let l1 = big_l - 1;
        let kappa = &self.kappa;
        let y = self.rword(l1, &Element::basis(self.identity_index(l1)), &Self::jm_word(l1));
        let mut y_pows = vec![Element::basis(self.identity_index(l1))];
        for k in 1..=m {
            y_pows.push(self.mul(l1, &y_pows[k - 1], &y));
        }
        let mut out = Element::zero();
        for (w, c) in y_pows[m].terms() {
            let (w2, a, i) = self.split(l1, *w);
            let h2 = self.embed(l1, w2);
            if i + 2 <= big_l {
                let h = &self.levels[l1].right[big_l - 2][h2 as usize];
                out = out.add_scaled(&self.tensor(big_l, h, a, i), c);
            } else {
                out = out.add_scaled(&Element::basis(self.join(big_l, h2, a, big_l - 1)), &c.mul_ref(kappa));
                out = out.add_scaled(&Element::basis(self.join(big_l, h2, a, big_l)), c);
            }
            let minus = -c.mul_ref(kappa);
            for j in 1..=a {
                let e = self.join(big_l, self.join(l1, w2, a - j, i), j, big_l - 1);
                out = out.add_scaled(&Element::basis(e), &minus);
            }
        }
        for j in 1..m {
            out = out.add_scaled(&self.tensor(big_l, y_pows[m - j].terms(), j, big_l - 1), kappa);
        }
        out
    }

    fn left_table(&self, l: usize, g: usize) -> &Table<F> {
        self.levels[l].left[g].get_or_init(|| {
            let dim = self.levels[l].dim as u32;
            if l == 1 {
                return self.levels[1].right[0].clone();
            }
            if g + 1 < l {
                let lower = self.left_table(l - 1, g);
                (0..dim)
                    .map(|idx| {
                        let (p, a, i) = self.split(l, idx);
                        self.tensor(l, &lower[p as usize], a, i).into_terms()
                    })
                    .collect()
            } else {
                let sigma = Element::basis(self.join(l, self.identity_index(l - 1), 0, l - 1));
                (0..dim).map(|idx| self.rword(l, &sigma, &self.gen_word(l, idx)).into_terms()).collect()
            }
        })
    }

    fn lgen(&self, l: usize, g: usize, x: &Element<F>) -> Element<F> {
        apply_table(self.levels[l].dim, self.left_table(l, g), x)
    }
}

/// The cyclotomic Hecke algebra `H(m,1,n)` over a field `F`, with exact
/// multiplication in the tower basis.
pub struct HeckeAlgebra<F> {
    params: HeckeParams<F>,
    n: usize,
    tower: Tower<F>,
}

impl<F: Field> HeckeAlgebra<F> {
    pub fn new(params: HeckeParams<F>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        let m = params.m();
        let dim = (1..=n).try_fold(1u64, |d, k| d.checked_mul((m * k) as u64));
        if dim.is_none_or(|d| d > u32::MAX as u64 / 2) {
            return Err(Error::InvalidParameter(format!("H({m},1,{n}) is too large")));
        }
        let coeffs = params.char_coeffs();
        let mut tower = Tower {
            m,
            kappa: params.kappa(),
            char_coeffs: coeffs[..m].to_vec(),
            levels: vec![Level::new(1, Vec::new(), 0)],
        };
        tower.build_level_one();
        for l in 2..=n {
            tower.build_level(l);
        }
        Ok(HeckeAlgebra { params, n, tower })
    }

    pub fn params(&self) -> &HeckeParams<F> {
        &self.params
    }

    pub fn m(&self) -> usize {
        self.tower.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `q - q^-1`.
    pub fn kappa(&self) -> &F {
        &self.tower.kappa
    }

    /// Number of basis words, `m^n n!`.
    pub fn dimension(&self) -> usize {
        self.tower.levels[self.n].dim
    }

    fn check(&self, g: Generator) -> Result<()> {
        match g {
            Generator::Sigma(i) if i == 0 || i >= self.n => {
                Err(Error::GeneratorOutOfRange { index: i, n: self.n })
            }
            _ => Ok(()),
        }
    }

    pub fn identity(&self) -> Element<F> {
        Element::basis(self.tower.identity_index(self.n))
    }

    pub fn scalar(&self, c: F) -> Element<F> {
        self.identity().scale(&c)
    }

    pub fn generator(&self, g: Generator) -> Result<Element<F>> {
        self.check(g)?;
        Ok(self.tower.rgen(self.n, &self.identity(), g.id()))
    }

    pub fn tau(&self) -> Element<F> {
        self.generator(Generator::Tau).unwrap()
    }

    pub fn sigma(&self, i: usize) -> Result<Element<F>> {
        self.generator(Generator::Sigma(i))
    }

    /// `sigma_i^-1 = sigma_i - (q - q^-1)`.
    pub fn sigma_inverse(&self, i: usize) -> Result<Element<F>> {
        Ok(self.sigma(i)?.sub(&self.scalar(self.kappa().clone())))
    }

    /// `J_1 = tau`, `J_{i+1} = sigma_i J_i sigma_i`.
    pub fn jm_element(&self, i: usize) -> Result<Element<F>> {
        if i == 0 || i > self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(self.tower.rword(self.n, &self.identity(), &Tower::<F>::jm_word(i)))
    }

    pub fn mul(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        self.tower.mul(self.n, x, y)
    }

    /// `x * g`.
    pub fn mul_gen(&self, x: &Element<F>, g: Generator) -> Result<Element<F>> {
        self.check(g)?;
        Ok(self.tower.rgen(self.n, x, g.id()))
    }

    /// `g * x`.
    pub fn gen_mul(&self, g: Generator, x: &Element<F>) -> Result<Element<F>> {
        self.check(g)?;
        Ok(self.tower.lgen(self.n, g.id(), x))
    }

    /// `x * g_1 * g_2 * ...`.
    pub fn mul_word(&self, x: &Element<F>, word: &[Generator]) -> Result<Element<F>> {
        word.iter().try_fold(x.clone(), |acc, g| self.mul_gen(&acc, *g))
    }

    /// `x * J_i`, applied as a generator word.
    pub fn mul_jm(&self, x: &Element<F>, i: usize) -> Result<Element<F>> {
        if i == 0 || i > self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(self.tower.rjm(self.n, x, i))
    }

    /// `J_i * x`.
    pub fn jm_mul(&self, i: usize, x: &Element<F>) -> Result<Element<F>> {
        if i == 0 || i > self.n {
            return Err(Error::GeneratorOutOfRange { index: i, n: self.n });
        }
        Ok(self.tower.ljm(self.n, x, i))
    }

    pub fn pow(&self, x: &Element<F>, k: u32) -> Element<F> {
        (0..k).fold(self.identity(), |acc, _| self.mul(&acc, x))
    }

    /// The generators whose product is basis word `index`.
    pub fn generator_word(&self, index: u32) -> Vec<Generator> {
        self.tower.gen_word(self.n, index).into_iter().map(Generator::from_id).collect()
    }

    /// The pairs `(a_1, i_1), ..., (a_n, i_n)` of basis word `index`.
    pub fn word_pairs(&self, index: u32) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n);
        let mut idx = index;
        for l in (1..=self.n).rev() {
            let (p, a, i) = self.tower.split(l, idx);
            out.push((a, i));
            idx = p;
        }
        out.reverse();
        out
    }

    pub fn index_of(&self, pairs: &[(usize, usize)]) -> Result<u32> {
        if pairs.len() != self.n {
            return Err(Error::Parse(format!("expected {} pairs, got {}", self.n, pairs.len())));
        }
        let mut idx = 0;
        for (l, &(a, i)) in (1..=self.n).zip(pairs) {
            if a >= self.m() || i == 0 || i > l {
                return Err(Error::Parse(format!("pair ({a},{i}) invalid at level {l}")));
            }
            idx = self.tower.join(l, idx, a, i);
        }
        Ok(idx)
    }

    /// Text form `(a1,i1)(a2,i2)...` of a basis word.
    pub fn encode_word(&self, index: u32) -> String {
        self.word_pairs(index).iter().map(|(a, i)| format!("({a},{i})")).collect()
    }

    /// Index in this algebra of basis word `index` of `H(m,1,k)`, `k <= n`.
    pub fn embed_index(&self, k: usize, index: u32) -> u32 {
        (k + 1..=self.n).fold(index, |idx, l| self.tower.embed(l, idx))
    }

    /// Image of an element of `smaller` under the generator-preserving inclusion.
    pub fn embed(&self, smaller: &HeckeAlgebra<F>, x: &Element<F>) -> Result<Element<F>> {
        if smaller.m() != self.m() || smaller.n > self.n {
            return Err(Error::Domain("cannot embed into a smaller algebra".into()));
        }
        Ok(Element::from_sorted(
            x.terms().iter().map(|(i, c)| (self.embed_index(smaller.n, *i), c.clone())).collect(),
        ))
    }

    /// JSON list of `[word, coefficient]` pairs.
    pub fn element_to_json(&self, x: &Element<F>) -> serde_json::Value {
        serde_json::Value::Array(
            x.terms()
                .iter()
                .map(|(i, c)| serde_json::json!([self.encode_word(*i), c.to_json()]))
                .collect(),
        )
    }

    /// Human-readable form, one term per basis word.
    pub fn display(&self, x: &Element<F>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .iter()
            .map(|(i, c)| format!("({c})*{}", self.encode_word(*i)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn algebra(m: usize, n: usize) -> HeckeAlgebra<Rational> {
        let v = (0..m).map(|k| Rational::new(2 * k as i64 + 3, 5 - k as i64)).collect();
        HeckeAlgebra::new(HeckeParams::new(Rational::new(3, 2), v).unwrap(), n).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(algebra(2, 3).dimension(), 48);
        assert_eq!(algebra(3, 3).dimension(), 162);
        assert_eq!(algebra(1, 1).dimension(), 1);
    }

    #[test]
    fn tau_is_scalar_for_m_one() {
        let h = algebra(1, 3);
        assert_eq!(h.tau(), h.scalar(h.params().v[0].clone()));
    }

    #[test]
    fn quadratic_relation() {
        let h = algebra(2, 3);
        for i in 1..3 {
            let s = h.sigma(i).unwrap();
            let lhs = h.mul(&s, &s);
            let rhs = s.scale(h.kappa()).add(&h.identity());
            assert_eq!(lhs, rhs);
            assert_eq!(h.mul(&s, &h.sigma_inverse(i).unwrap()), h.identity());
        }
    }

    #[test]
    fn cyclotomic_relation() {
        let h = algebra(3, 2);
        let tau = h.tau();
        let prod = h.params().v.iter().fold(h.identity(), |acc, v| {
            h.mul(&acc, &tau.sub(&h.scalar(v.clone())))
        });
        assert!(prod.is_zero());
    }

    #[test]
    fn tau_commutes_with_far_sigmas() {
        let h = algebra(2, 4);
        let tau = h.tau();
        for i in 2..4 {
            let s = h.sigma(i).unwrap();
            assert_eq!(h.mul(&tau, &s), h.mul(&s, &tau));
        }
    }

    #[test]
    fn word_round_trip() {
        let h = algebra(2, 3);
        for idx in 0..h.dimension() as u32 {
            let pairs = h.word_pairs(idx);
            assert_eq!(h.index_of(&pairs).unwrap(), idx);
            let built = h.mul_word(&h.identity(), &h.generator_word(idx)).unwrap();
            assert_eq!(built, Element::basis(idx), "{}", h.encode_word(idx));
        }
    }

    #[test]
    fn left_and_right_agree_with_products() {
        let h = algebra(2, 3);
        let x = Element::from_terms(vec![(5, Rational::from(2)), (17, Rational::new(-1, 3)), (40, Rational::from(1))]);
        for g in [Generator::Tau, Generator::Sigma(1), Generator::Sigma(2)] {
            let ge = h.generator(g).unwrap();
            assert_eq!(h.gen_mul(g, &x).unwrap(), h.mul(&ge, &x));
            assert_eq!(h.mul_gen(&x, g).unwrap(), h.mul(&x, &ge));
        }
    }

    #[test]
    fn out_of_range() {
        let h = algebra(2, 2);
        assert!(matches!(h.sigma(2), Err(Error::GeneratorOutOfRange { .. })));
        assert!(h.sigma(0).is_err());
        assert!(h.jm_element(3).is_err());
    }
}
