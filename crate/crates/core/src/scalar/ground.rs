use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cyclo, Field, RatFunc, Rational, UniPoly};
use crate::error::{Error, Result};

/// Parameters `q, v_1, ..., v_m` of `H(m,1,n)` in a chosen coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeParams<F> {
    pub q: F,
    pub v: Vec<F>,
}

impl<F: Field> HeckeParams<F> {
    pub fn new(q: F, v: Vec<F>) -> Result<Self> {
        if v.is_empty() {
            return Err(Error::InvalidParameter("need at least one v parameter".into()));
        }
        if q.is_zero() {
            return Err(Error::InvalidParameter("q must be nonzero".into()));
        }
        Ok(HeckeParams { q, v })
    }

    pub fn m(&self) -> usize {
        self.v.len()
    }

    pub fn q_inv(&self) -> F {
        self.q.inv().expect("q is nonzero")
    }

    /// `q - q^{-1}`.
    pub fn kappa(&self) -> F {
        self.q.sub_ref(&self.q_inv())
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(&self, e: i64) -> F {
        self.q.pow_i(e).expect("q is nonzero")
    }

    /// Coefficients `a_0, ..., a_m` of `(X - v_1)...(X - v_m)`.
    pub fn char_coeffs(&self) -> Vec<F> {
        let p = UniPoly::from_roots(self.v.iter());
        (0..=self.m()).map(|i| p.coeff(i)).collect()
    }
}

impl HeckeParams<Cyclo> {
    /// The classical specialization `q = 1`, `v_k = zeta_m^(k-1)`, realizing the
    /// group algebra of `G(m,1,n)` over `Q(zeta_m)`.
    pub fn classical(m: usize) -> Self {
        HeckeParams { q: Cyclo::one(), v: (0..m).map(|k| Cyclo::zeta_pow(m, k as i64)).collect() }
    }
}

impl HeckeParams<RatFunc<Cyclo>> {
    /// `q` an indeterminate over `Q(zeta_m)`, `v_k = zeta_m^(k-1)`.
    pub fn symbolic_q(m: usize) -> Self {
        HeckeParams {
            q: RatFunc::var(),
            v: (0..m).map(|k| RatFunc::constant(Cyclo::zeta_pow(m, k as i64))).collect(),
        }
    }
}

/// How the ground field is realized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundMode {
    /// `q` and the `v_k` specialized to rationals.
    GenericRational { q: Rational, v: Vec<Rational> },
    /// Base `Q(zeta_m)`, `q` adjoined as an indeterminate, `v_k = zeta_m^(k-1)`.
    CyclotomicQSymbolic { m: usize },
}

/// A ground field together with the size bound `n` it was validated for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundField {
    pub mode: GroundMode,
    pub n: usize,
}

impl GroundField {
    /// Rational specialization; rejected unless generic for `n`.
    pub fn generic(q: Rational, v: Vec<Rational>, n: usize) -> Result<Self> {
        let check = check_genericity(&q, &v, n);
        if let Some(why) = check.violation {
            return Err(Error::NotGeneric(why));
        }
        Ok(GroundField { mode: GroundMode::GenericRational { q, v }, n })
    }

    pub fn symbolic(m: usize, n: usize) -> Self {
        GroundField { mode: GroundMode::CyclotomicQSymbolic { m }, n }
    }

    pub fn m(&self) -> usize {
        match &self.mode {
            GroundMode::GenericRational { v, .. } => v.len(),
            GroundMode::CyclotomicQSymbolic { m } => *m,
        }
    }

    pub fn generic_params(&self) -> Option<HeckeParams<Rational>> {
        match &self.mode {
            GroundMode::GenericRational { q, v } => Some(HeckeParams { q: q.clone(), v: v.clone() }),
            _ => None,
        }
    }

    pub fn symbolic_params(&self) -> Option<HeckeParams<RatFunc<Cyclo>>> {
        match &self.mode {
            GroundMode::CyclotomicQSymbolic { m } => Some(HeckeParams::symbolic_q(*m)),
            _ => None,
        }
    }
}

/// Outcome of a genericity check; `violation` names the first failed inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Genericity {
    pub generic: bool,
    pub violation: Option<String>,
}

/// Checks, for the bound `n`:
/// `1 + q^2 + ... + q^(2N) != 0` for `N < n`;
/// `q^(2i) v_j != v_k` for `j != k`, `-n < i < n`;
/// `q != 0`, `v_j != 0`; and in addition `q^2 != 1`.
pub fn check_genericity(q: &Rational, v: &[Rational], n: usize) -> Genericity {
    let fail = |msg: String| Genericity { generic: false, violation: Some(msg) };
    if q.is_zero() {
        return fail("q = 0".into());
    }
    if let Some(j) = v.iter().position(|x| x.is_zero()) {
        return fail(format!("v_{} = 0", j + 1));
    }
    let q2 = q.mul_ref(q);
    let mut partial = Rational::one();
    let mut power = Rational::one();
    for big_n in 1..n {
        power = power.mul_ref(&q2);
        partial = partial.add_ref(&power);
        if partial.is_zero() {
            return fail(format!("1 + q^2 + ... + q^{} = 0", 2 * big_n));
        }
    }
    let bound = n as i64;
    for i in (0..bound).chain((1 - bound)..0) {
        let factor = q2.pow_i(i).expect("q nonzero");
        for (j, vj) in v.iter().enumerate() {
            for (k, vk) in v.iter().enumerate() {
                if j != k && factor.mul_ref(vj) == *vk {
                    return fail(format!("q^({}) v_{} = v_{}", 2 * i, j + 1, k + 1));
                }
            }
        }
    }
    if q2.is_one() {
        return fail("q^2 = 1".into());
    }
    Genericity { generic: true, violation: None }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = 0i64;
    while num == 0 {
        num = rng.gen_range(-50..=50);
    }
    let den = rng.gen_range(1..=50);
    Rational::new(num, den)
}

/// Draws `q, v_1..v_m` with numerators and denominators bounded by 50,
/// rejecting until the tuple is generic for `n`. Deterministic in `seed`.
pub fn sample_generic(m: usize, n: usize, seed: u64) -> GroundField {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let q = small_rational(&mut rng);
        let v: Vec<Rational> = (0..m).map(|_| small_rational(&mut rng)).collect();
        if check_genericity(&q, &v, n).generic {
            return GroundField { mode: GroundMode::GenericRational { q, v }, n };
        }
    }
}
