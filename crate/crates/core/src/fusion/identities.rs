//! The scalar function `F_T(u)` and the identities tying the fusion procedure
//! to the Jucys-Murphy idempotents.

use super::oracle::Oracle;
use super::procedure::apply_phi;
use super::rational::{AlgebraRationalFunction, FactoredRatFunc};
use crate::combinatorics::{
    contents, f_coefficient, quantum_content, schur_partials, MPartition, StandardMTableau,
};
use crate::error::{Error, Result};
use crate::hecke::{baxterized_sigma, tau_rho, AlgebraPolynomial, HeckeAlgebra, Element};
use crate::scalar::{Field, HeckeParams, UniPoly};

fn split_last(t: &StandardMTableau) -> Result<(StandardMTableau, crate::combinatorics::MNode)> {
    match (t.restrict(), t.last_node()) {
        (Some(u), Some(g)) => Ok((u, *g)),
        _ => Err(Error::Domain("the empty tableau has no last node".into())),
    }
}

/// `F_V(u) = (u - c_N)/prod_j (u - v_j) * prod_{i<N} (u - c_i)^2 / ((u - q^2 c_i)(u - q^-2 c_i))`.
pub fn f_t_rational<F: Field>(params: &HeckeParams<F>, t: &StandardMTableau) -> Result<FactoredRatFunc<F>> {
    let c = contents(params, t);
    let Some((last, rest)) = c.split_last() else {
        return Err(Error::Domain("F_T needs a nonempty tableau".into()));
    };
    let (q2, qm2) = (params.q_pow(2), params.q_pow(-2));
    let mut num = vec![last.clone()];
    let mut den = params.v.clone();
    for ci in rest {
        num.push(ci.clone());
        num.push(ci.clone());
        den.push(q2.mul_ref(ci));
        den.push(qm2.mul_ref(ci));
    }
    Ok(FactoredRatFunc::new(F::one(), num, den))
}

/// `(u - c_N) prod_{beta removable from mu} (u - c(beta)) / prod_{alpha addable to mu} (u - c(alpha))`.
pub fn f_t_closed_form<F: Field>(params: &HeckeParams<F>, t: &StandardMTableau) -> Result<FactoredRatFunc<F>> {
    let (u, gamma) = split_last(t)?;
    let mu = u.shape();
    let mut num = vec![quantum_content(params, &gamma)];
    num.extend(mu.removable_nodes().iter().map(|b| quantum_content(params, b)));
    let den = mu.addable_nodes().iter().map(|a| quantum_content(params, a)).collect();
    Ok(FactoredRatFunc::new(F::one(), num, den))
}

/// Outcome of the two forms of `F_lambda / F_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurRatio {
    /// `prod (c_N - c(beta)) / prod_{alpha != gamma} (c_N - c(alpha)) = F_lambda / F_mu`.
    pub content_ratio: bool,
    /// `F_T(c_N) = F_lambda / F_mu`.
    pub value_at_last: bool,
}

impl SchurRatio {
    pub fn passed(&self) -> bool {
        self.content_ratio && self.value_at_last
    }
}

pub fn schur_ratio<F: Field>(params: &HeckeParams<F>, t: &StandardMTableau) -> Result<SchurRatio> {
    let (u, gamma) = split_last(t)?;
    let mu = u.shape();
    let cn = quantum_content(params, &gamma);
    let ratio = f_coefficient(params, t.shape())?.try_div(&f_coefficient(params, mu)?)?;
    let mut lhs = F::one();
    for beta in mu.removable_nodes() {
        lhs = lhs.mul_ref(&cn.sub_ref(&quantum_content(params, &beta)));
    }
    for alpha in mu.addable_nodes().into_iter().filter(|a| *a != gamma) {
        lhs = lhs.try_div(&cn.sub_ref(&quantum_content(params, &alpha)))?;
    }
    let value = f_t_rational(params, t)?.limit_at(&cn)?;
    Ok(SchurRatio { content_ratio: lhs == ratio, value_at_last: value == ratio })
}

/// Both ratio identities for the tableau `t` of shape `shape`.
pub fn schur_ratio_check<F: Field>(params: &HeckeParams<F>, shape: &MPartition, t: &StandardMTableau) -> Result<bool> {
    if t.shape() != shape {
        return Err(Error::Domain(format!("tableau {} does not have shape {shape}", t.encode())));
    }
    Ok(schur_ratio(params, t)?.passed())
}

/// The component-by-component form of the content ratio, with
/// `k = pos(gamma)`: the split `F = F~ prod_{j != k} F^(j)` for `lambda` and
/// `mu`, and the ratio identities for `F~` (component `k`) and for each
/// `F^(j)` (component `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRatio {
    /// `F = F~ prod_j F^(j)` literally, for both shapes. Holds for `m <= 2`;
    /// for larger `m` the pairs between two components other than `k` are
    /// not covered by any `F^(j)`.
    pub literal_split: bool,
    /// `F = F~ prod_j F^(j) * R_k` with `R_k` the leftover pair factors.
    pub full_split: bool,
    /// `R_k(lambda) = R_k(mu)`: adding a node at `k` leaves `R_k` unchanged.
    pub cross_invariant: bool,
    /// Nodes at `k`: content ratio equals `F~_lambda / F~_mu`.
    pub hook_part: bool,
    /// Nodes at each `j != k`: content ratio equals `F^(j)_lambda / F^(j)_mu`.
    pub per_component: bool,
}

impl PartialRatio {
    /// The identities the ratio argument needs, i.e. everything except the
    /// literal split.
    pub fn ratio_argument_holds(&self) -> bool {
        self.full_split && self.cross_invariant && self.hook_part && self.per_component
    }
}

pub fn partial_ratio<F: Field>(params: &HeckeParams<F>, t: &StandardMTableau) -> Result<PartialRatio> {
    let (u, gamma) = split_last(t)?;
    let (lambda, mu) = (t.shape(), u.shape());
    let k = gamma.k;
    let cn = quantum_content(params, &gamma);
    let sl = schur_partials(params, lambda, k)?;
    let sm = schur_partials(params, mu, k)?;
    let (fl, fm) = (f_coefficient(params, lambda)?, f_coefficient(params, mu)?);

    let content_ratio = |j: usize| -> Result<F> {
        let mut acc = F::one();
        for beta in mu.removable_nodes().into_iter().filter(|b| b.k == j) {
            acc = acc.mul_ref(&cn.sub_ref(&quantum_content(params, &beta)));
        }
        for alpha in mu.addable_nodes().into_iter().filter(|a| a.k == j && *a != gamma) {
            acc = acc.try_div(&cn.sub_ref(&quantum_content(params, &alpha)))?;
        }
        Ok(acc)
    };

    let mut per_component = true;
    for ((j, pl), (_, pm)) in sl.partials.iter().zip(&sm.partials) {
        per_component &= content_ratio(*j)? == pl.try_div(pm)?;
    }
    Ok(PartialRatio {
        literal_split: sl.split_product() == fl && sm.split_product() == fm,
        full_split: sl.full_product() == fl && sm.full_product() == fm,
        cross_invariant: sl.cross == sm.cross,
        hook_part: content_ratio(k)? == sl.tilde.try_div(&sm.tilde)?,
        per_component,
    })
}

/// `F_T(u) phi_N(c_1..c_{N-1}, u) E_U = sum_i (u - c_N)/(u - c(T_i|N)) E_{T_i}`
/// as rational functions of `u`, the sum running over all extensions of `U`.
pub fn spectral_identity_check<F: Field>(oracle: &Oracle<'_, F>, t: &StandardMTableau) -> Result<bool> {
    let alg = oracle.algebra();
    let params = alg.params();
    let (u, gamma) = split_last(t)?;
    let c = contents(params, t);
    let n = t.size();
    let eu = oracle.idempotent(&u)?;
    let lhs = apply_phi(alg, n, &c[..n - 1], &eu)?.mul_factored(&f_t_rational(params, t)?)?;

    let cn = quantum_content(params, &gamma);
    let mut rhs = AlgebraRationalFunction::from_polynomial(AlgebraPolynomial::zero());
    for ti in u.extensions() {
        let ci = quantum_content(params, ti.last_node().expect("extension is nonempty"));
        let num = AlgebraPolynomial::constant(oracle.idempotent(&ti)?).mul_scalar_poly(&UniPoly::linear(&cn));
        rhs = rhs.add(&AlgebraRationalFunction::new(num, vec![ci], F::one())?)?;
    }
    Ok(lhs.equals(&rhs))
}

/// The closed product printed for `m = 2` and the tableau `([1 3],[2])`:
///
/// `s2(v1 q^2, v2) s1(v1 q^2, v1) t(v1 q^2) s1^-1 s2^-1 s1(v2, v1) t(v2) s1^-1 t(v1)`
/// divided by `(q + q^-1)(v1 q^-1 - v2 q)(v1 - v2)(v2 q^-2 - v1 q^2)`.
pub fn printed_example_m2<F: Field>(alg: &HeckeAlgebra<F>) -> Result<Element<F>> {
    if alg.m() != 2 || alg.n() < 3 {
        return Err(Error::Domain("the printed example lives in H(2,1,n) with n >= 3".into()));
    }
    let params = alg.params();
    let (q, qi) = (params.q.clone(), params.q_inv());
    let (v1, v2) = (params.v[0].clone(), params.v[1].clone());
    let c3 = v1.mul_ref(&params.q_pow(2));
    let factors = [
        baxterized_sigma(alg, 2, &c3, &v2)?,
        baxterized_sigma(alg, 1, &c3, &v1)?,
        tau_rho(alg, &c3),
        alg.sigma_inverse(1)?,
        alg.sigma_inverse(2)?,
        baxterized_sigma(alg, 1, &v2, &v1)?,
        tau_rho(alg, &v2),
        alg.sigma_inverse(1)?,
        tau_rho(alg, &v1),
    ];
    let prod = factors.iter().fold(alg.identity(), |acc, f| alg.mul(&acc, f));
    let den = (q.add_ref(&qi))
        .mul_ref(&v1.mul_ref(&qi).sub_ref(&v2.mul_ref(&q)))
        .mul_ref(&v1.sub_ref(&v2))
        .mul_ref(&v2.mul_ref(&params.q_pow(-2)).sub_ref(&c3));
    Ok(prod.scale(&den.inv()?))
}
