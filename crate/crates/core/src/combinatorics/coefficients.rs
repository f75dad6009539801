//! Scalars attached to nodes and shapes: contents, q-integers, the shape
//! constant `F_lambda` and its classical counterpart.

use num_bigint::BigInt;

use super::mpartition::{MNode, MPartition};
use super::tableau::StandardMTableau;
use crate::error::{Error, Result};
use crate::scalar::{div_generic, Cyclo, Field, HeckeParams, Rational};

/// Quantum content `v_k q^(2(y-x))`.
pub fn quantum_content<F: Field>(params: &HeckeParams<F>, node: &MNode) -> F {
    params.v[node.k - 1].mul_ref(&params.q_pow(2 * node.classical_content()))
}

/// Classical content `y - x`.
pub fn classical_content(node: &MNode) -> i64 {
    node.classical_content()
}

/// The root of unity `xi_k = zeta_m^(k-1)` attached to the node's component.
pub fn position_root(m: usize, node: &MNode) -> Cyclo {
    Cyclo::zeta_pow(m, node.k as i64 - 1)
}

/// Content sequence `c(T|1), ..., c(T|N)`.
pub fn contents<F: Field>(params: &HeckeParams<F>, t: &StandardMTableau) -> Vec<F> {
    t.placement().iter().map(|node| quantum_content(params, node)).collect()
}

/// `[j]_q = q^(j-1) + q^(j-3) + ... + q^(1-j)`.
pub fn q_integer<F: Field>(params: &HeckeParams<F>, j: usize) -> F {
    (0..j).fold(F::zero(), |acc, i| acc + params.q_pow(j as i64 - 1 - 2 * i as i64))
}

/// `q^(-cc) / (v_a q^(-h) - v_b q^h)` with `h = h^(b)` of `node` (whose position is `a`).
fn pair_factor<F: Field>(
    params: &HeckeParams<F>,
    shape: &MPartition,
    node: &MNode,
    b: usize,
) -> Result<F> {
    let h = shape.generalized_hook_length(node, b)?;
    let den = params.v[node.k - 1]
        .mul_ref(&params.q_pow(-h))
        .sub_ref(&params.v[b - 1].mul_ref(&params.q_pow(h)));
    div_generic(&params.q_pow(-node.classical_content()), &den, "shape coefficient")
}

/// `q^(cc) / [h]_q` for a node.
fn hook_factor<F: Field>(params: &HeckeParams<F>, shape: &MPartition, node: &MNode) -> Result<F> {
    let h = shape.hook_length(node)?;
    div_generic(&params.q_pow(node.classical_content()), &q_integer(params, h), "shape coefficient")
}

/// `F_lambda` as a product over nodes of `c(alpha) prod_k pair(alpha, k)`,
/// times `(q^-1 - q)^n`.
pub fn f_croc<F: Field>(params: &HeckeParams<F>, shape: &MPartition) -> Result<F> {
    check_m(params, shape)?;
    let mut acc = (params.q_inv() - params.q.clone()).pow_i(shape.size() as i64)?;
    for node in shape.nodes() {
        acc = acc.mul_ref(&quantum_content(params, &node));
        for k in 1..=shape.m() {
            acc = acc.mul_ref(&pair_factor(params, shape, &node, k)?);
        }
    }
    Ok(acc)
}

/// `F_lambda` as a product over nodes of `q^cc / [h]_q` times the pair
/// factors for the other components.
pub fn f_croc2<F: Field>(params: &HeckeParams<F>, shape: &MPartition) -> Result<F> {
    check_m(params, shape)?;
    let mut acc = F::one();
    for node in shape.nodes() {
        acc = acc.mul_ref(&hook_factor(params, shape, &node)?);
        for k in (1..=shape.m()).filter(|&k| k != node.k) {
            acc = acc.mul_ref(&pair_factor(params, shape, &node, k)?);
        }
    }
    Ok(acc)
}

/// `F_lambda`, computed by both product formulas; a disagreement is reported
/// as an internal consistency failure.
pub fn f_coefficient<F: Field>(params: &HeckeParams<F>, shape: &MPartition) -> Result<F> {
    let a = f_croc(params, shape)?;
    let b = f_croc2(params, shape)?;
    if a != b {
        return Err(Error::Consistency(format!("the two forms of F for {shape} differ: {a} vs {b}")));
    }
    Ok(a)
}

fn check_m<F: Field>(params: &HeckeParams<F>, shape: &MPartition) -> Result<()> {
    if params.m() != shape.m() {
        return Err(Error::Domain(format!(
            "shape {shape} has {} components but the algebra has m = {}",
            shape.m(),
            params.m()
        )));
    }
    Ok(())
}

/// `f_lambda = 1 / prod h(alpha)` and `x_lambda = m^(-n) prod xi_pos(alpha)`.
pub fn classical_coefficients(shape: &MPartition) -> (Rational, Cyclo) {
    let m = shape.m();
    let mut hooks = BigInt::from(1);
    let mut x = Cyclo::one();
    for node in shape.nodes() {
        hooks *= shape.hook_length(&node).unwrap();
        x = x.mul_ref(&position_root(m, &node));
    }
    let f = Rational::from_bigints(BigInt::from(1), hooks).expect("hook lengths are positive");
    let scale = Rational::new(1, m as i64).pow_i(shape.size() as i64).unwrap();
    (f, x.mul_ref(&Cyclo::from_rational(&scale)))
}

/// Factors of `F_lambda` relative to a distinguished component `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurPartials<F> {
    pub k: usize,
    /// Hook part `prod q^cc / [h]_q` over all nodes.
    pub tilde: F,
    /// `(j, F^(j))` for every `j != k`: pairs of (node at `k`, component `j`)
    /// and (node at `j`, component `k`).
    pub partials: Vec<(usize, F)>,
    /// Remaining pair factors (node at `a`, component `b`) with `a, b != k`;
    /// identically 1 when `m <= 2`.
    pub cross: F,
}

impl<F: Field> SchurPartials<F> {
    /// `tilde * prod_j F^(j)`, omitting the cross factor.
    pub fn split_product(&self) -> F {
        self.partials.iter().fold(self.tilde.clone(), |acc, (_, f)| acc.mul_ref(f))
    }

    /// `tilde * prod_j F^(j) * cross`, which always equals `F_lambda`.
    pub fn full_product(&self) -> F {
        self.split_product().mul_ref(&self.cross)
    }
}

/// Splits `F_lambda` into the hook part, the partial factors `F^(j)` for
/// `j != k`, and the cross factor that the split leaves over.
pub fn schur_partials<F: Field>(
    params: &HeckeParams<F>,
    shape: &MPartition,
    k: usize,
) -> Result<SchurPartials<F>> {
    check_m(params, shape)?;
    let m = shape.m();
    if k == 0 || k > m {
        return Err(Error::Domain(format!("component index {k} out of range 1..={m}")));
    }
    let nodes = shape.nodes();
    let mut tilde = F::one();
    for node in &nodes {
        tilde = tilde.mul_ref(&hook_factor(params, shape, node)?);
    }
    let mut partials = Vec::new();
    for j in (1..=m).filter(|&j| j != k) {
        let mut acc = F::one();
        for node in &nodes {
            if node.k == k {
                acc = acc.mul_ref(&pair_factor(params, shape, node, j)?);
            } else if node.k == j {
                acc = acc.mul_ref(&pair_factor(params, shape, node, k)?);
            }
        }
        partials.push((j, acc));
    }
    let mut cross = F::one();
    for node in nodes.iter().filter(|node| node.k != k) {
        for b in (1..=m).filter(|&b| b != k && b != node.k) {
            cross = cross.mul_ref(&pair_factor(params, shape, node, b)?);
        }
    }
    Ok(SchurPartials { k, tilde, partials, cross })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_mpartitions;

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    fn params(q: Rational, v: &[i64]) -> HeckeParams<Rational> {
        HeckeParams::new(q, v.iter().map(|&x| r(x)).collect()).unwrap()
    }

    #[test]
    fn contents_of_the_three_tableau() {
        let p = params(r(2), &[3, 5, 7]);
        let t = StandardMTableau::parse("[[[1,3]],[[2]],[[4]]]").unwrap();
        assert_eq!(contents(&p, &t), vec![r(3), r(5), r(12), r(7)]);
        let cc: Vec<i64> = t.placement().iter().map(classical_content).collect();
        assert_eq!(cc, vec![0, 0, 1, 0]);
    }

    #[test]
    fn q_integers() {
        let p = params(r(2), &[1]);
        assert_eq!(q_integer(&p, 0), r(0));
        assert_eq!(q_integer(&p, 1), r(1));
        assert_eq!(q_integer(&p, 2), Rational::new(5, 2));
    }

    #[test]
    fn single_row_of_two() {
        // q / (q + q^-1) at q = 3 is 9/10.
        let p = params(r(3), &[5]);
        let lam = MPartition::parse("[[2]]").unwrap();
        assert_eq!(f_coefficient(&p, &lam).unwrap(), Rational::new(9, 10));
        assert_eq!(f_coefficient(&p, &MPartition::empty(1)).unwrap(), r(1));
    }

    #[test]
    fn two_one_shape_with_m_two() {
        let q = Rational::new(3, 2);
        let (v1, v2) = (Rational::new(2, 7), Rational::new(-5, 3));
        let p = HeckeParams::new(q.clone(), vec![v1.clone(), v2.clone()]).unwrap();
        let qi = q.inv().unwrap();
        let expected = (q.clone() + qi.clone())
            * (v1.clone() * qi.clone() - v2.clone() * q.clone())
            * (v1.clone() - v2.clone())
            * (v2 * qi.pow_i(2).unwrap() - v1 * q.pow_i(2).unwrap());
        let lam = MPartition::parse("[[2],[1]]").unwrap();
        assert_eq!(f_coefficient(&p, &lam).unwrap(), expected.inv().unwrap());
    }

    #[test]
    fn classical_values() {
        let (f, x) = classical_coefficients(&MPartition::parse("[[1],[1]]").unwrap());
        assert_eq!(f, r(1));
        assert_eq!(x, Cyclo::from_rational(&Rational::new(-1, 4)));
        let (f, x) = classical_coefficients(&MPartition::parse("[[2,1]]").unwrap());
        assert_eq!(f, Rational::new(1, 3));
        assert_eq!(x, Cyclo::one());
    }

    #[test]
    fn split_misses_cross_pairs_for_three_components() {
        let p = params(Rational::new(3, 2), &[2, -5, 7]);
        let mut literal_fails = false;
        for lam in enumerate_mpartitions(3, 3) {
            let full = f_coefficient(&p, &lam).unwrap();
            for k in 1..=3 {
                let s = schur_partials(&p, &lam, k).unwrap();
                assert_eq!(s.full_product(), full);
                literal_fails |= s.split_product() != full;
            }
        }
        assert!(literal_fails);
        for lam in enumerate_mpartitions(2, 3) {
            let full = f_coefficient(&params(r(2), &[3, -7]), &lam).unwrap();
            for k in 1..=2 {
                assert_eq!(schur_partials(&params(r(2), &[3, -7]), &lam, k).unwrap().split_product(), full);
            }
        }
    }
}
