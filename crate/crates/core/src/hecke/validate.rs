use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::algebra::{Generator, HeckeAlgebra};
use super::element::Element;
use crate::scalar::Field;

/// Outcome of one family of checks.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyResult {
    pub name: String,
    pub checked: usize,
    /// Basis words (or triples) where the check failed, in text form.
    pub failures: Vec<String>,
}

impl FamilyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub m: usize,
    pub n: usize,
    pub dimension: usize,
    pub expected_dimension: usize,
    pub families: Vec<FamilyResult>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.dimension == self.expected_dimension && self.families.iter().all(FamilyResult::passed)
    }
}

type Side<'a, F> = Box<dyn Fn(&Element<F>) -> Element<F> + 'a>;

fn word_side<F: Field>(alg: &HeckeAlgebra<F>, word: Vec<Generator>) -> Side<'_, F> {
    Box::new(move |x| alg.mul_word(x, &word).expect("generators in range"))
}

/// Checks `e_w * lhs = e_w * rhs` for every basis word `w`.
fn on_all_words<F: Field>(alg: &HeckeAlgebra<F>, name: String, lhs: Side<'_, F>, rhs: Side<'_, F>) -> FamilyResult {
    let mut failures = Vec::new();
    for w in 0..alg.dimension() as u32 {
        let e = Element::basis(w);
        if lhs(&e) != rhs(&e) {
            failures.push(alg.encode_word(w));
        }
    }
    FamilyResult { name, checked: alg.dimension(), failures }
}

fn merge(name: &str, parts: Vec<FamilyResult>) -> FamilyResult {
    FamilyResult {
        name: name.into(),
        checked: parts.iter().map(|p| p.checked).sum(),
        failures: parts.into_iter().flat_map(|p| p.failures.into_iter().map(move |f| format!("{}: {f}", p.name))).collect(),
    }
}

/// Verifies that the multiplication tables realize `H(m,1,n)`: the dimension
/// is `m^n n!`, every defining relation holds when applied to every basis
/// word, every basis word equals the product of its generator spelling, and
/// the product is associative on `samples` random triples of basis words.
pub fn validate_presentation<F: Field>(alg: &HeckeAlgebra<F>, samples: usize, seed: u64) -> PresentationReport {
    use Generator::{Sigma, Tau};
    let (m, n) = (alg.m(), alg.n());
    let mut families = Vec::new();

    let braid = (1..n.saturating_sub(1))
        .map(|i| {
            on_all_words(
                alg,
                format!("s{i} s{} s{i}", i + 1),
                word_side(alg, vec![Sigma(i), Sigma(i + 1), Sigma(i)]),
                word_side(alg, vec![Sigma(i + 1), Sigma(i), Sigma(i + 1)]),
            )
        })
        .collect();
    families.push(merge("braid", braid));

    let mut far = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            far.push(on_all_words(
                alg,
                format!("s{i} s{j}"),
                word_side(alg, vec![Sigma(i), Sigma(j)]),
                word_side(alg, vec![Sigma(j), Sigma(i)]),
            ));
        }
    }
    families.push(merge("far commutation", far));

    let mut tau_braid = Vec::new();
    if n >= 2 {
        tau_braid.push(on_all_words(
            alg,
            "t s1 t s1".into(),
            word_side(alg, vec![Tau, Sigma(1), Tau, Sigma(1)]),
            word_side(alg, vec![Sigma(1), Tau, Sigma(1), Tau]),
        ));
    }
    families.push(merge("tau braid", tau_braid));

    let tau_comm = (2..n)
        .map(|i| {
            on_all_words(
                alg,
                format!("t s{i}"),
                word_side(alg, vec![Tau, Sigma(i)]),
                word_side(alg, vec![Sigma(i), Tau]),
            )
        })
        .collect();
    families.push(merge("tau commutation", tau_comm));

    let kappa = alg.kappa().clone();
    let quadratic = (1..n)
        .map(|i| {
            let k = kappa.clone();
            on_all_words(
                alg,
                format!("s{i}^2"),
                word_side(alg, vec![Sigma(i), Sigma(i)]),
                Box::new(move |x: &Element<F>| alg.mul_gen(x, Sigma(i)).unwrap().scale(&k).add(x)),
            )
        })
        .collect();
    families.push(merge("quadratic", quadratic));

    let v = alg.params().v.clone();
    families.push(on_all_words(
        alg,
        "cyclotomic".into(),
        Box::new(move |x: &Element<F>| {
            v.iter().fold(x.clone(), |acc, vk| alg.mul_gen(&acc, Tau).unwrap().sub(&acc.scale(vk)))
        }),
        Box::new(|_| Element::zero()),
    ));

    let identity = alg.identity();
    let mut spelling = FamilyResult { name: "basis spelling".into(), checked: alg.dimension(), failures: Vec::new() };
    for w in 0..alg.dimension() as u32 {
        if alg.mul_word(&identity, &alg.generator_word(w)).ok() != Some(Element::basis(w)) {
            spelling.failures.push(alg.encode_word(w));
        }
    }
    families.push(spelling);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = alg.dimension() as u32;
    let mut assoc = FamilyResult { name: "associativity".into(), checked: samples, failures: Vec::new() };
    for _ in 0..samples {
        let (a, b, c) = (rng.gen_range(0..dim), rng.gen_range(0..dim), rng.gen_range(0..dim));
        let (x, y, z) = (Element::basis(a), Element::basis(b), Element::basis(c));
        let left = alg.mul(&alg.mul(&x, &y), &z);
        let right = alg.mul(&x, &alg.mul(&y, &z));
        if left != right {
            assoc.failures.push(format!(
                "{} {} {}",
                alg.encode_word(a),
                alg.encode_word(b),
                alg.encode_word(c)
            ));
        }
    }
    families.push(assoc);

    let expected_dimension = (1..=n).map(|k| m * k).product();
    PresentationReport { m, n, dimension: alg.dimension(), expected_dimension, families }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{HeckeParams, Rational};

    #[test]
    fn small_algebras_validate() {
        for (m, n) in [(1, 1), (1, 3), (2, 1), (2, 2), (3, 2), (2, 3)] {
            let v = (0..m).map(|k| Rational::new(3 * k as i64 + 2, 7)).collect();
            let alg = HeckeAlgebra::new(HeckeParams::new(Rational::new(-5, 3), v).unwrap(), n).unwrap();
            let report = validate_presentation(&alg, 50, 1);
            assert!(report.passed(), "{m},{n}: {report:?}");
        }
    }
}
