//! Baxterized generators `sigma_i(alpha, beta)` and the polynomial `tau(rho)`.

use super::algebra::{Generator, HeckeAlgebra};
use super::element::Element;
use super::polynomial::AlgebraPolynomial;
use crate::error::{Error, Result};
use crate::scalar::{Field, HeckeParams, UniPoly};

/// `(q - q^-1) beta / (alpha - beta)`, the scalar part of `sigma_i(alpha, beta)`.
pub fn baxter_coefficient<F: Field>(params: &HeckeParams<F>, alpha: &F, beta: &F) -> Result<F> {
    let den = alpha.sub_ref(beta);
    if den.is_zero() {
        return Err(Error::Pole { point: format!("alpha = beta = {alpha}"), num_order: 0, den_order: 1 });
    }
    params.kappa().mul_ref(beta).try_div(&den)
}

/// `sigma_i(alpha, beta) = sigma_i + (q - q^-1) beta / (alpha - beta)`.
pub fn baxterized_sigma<F: Field>(
    alg: &HeckeAlgebra<F>,
    i: usize,
    alpha: &F,
    beta: &F,
) -> Result<Element<F>> {
    let c = baxter_coefficient(alg.params(), alpha, beta)?;
    Ok(alg.sigma(i)?.add(&alg.scalar(c)))
}

/// `(alpha - q^2 beta)(alpha - q^-2 beta) / (alpha - beta)^2`, the value of
/// `sigma_i(alpha, beta) sigma_i(beta, alpha)`.
pub fn inversion_scalar<F: Field>(params: &HeckeParams<F>, alpha: &F, beta: &F) -> Result<F> {
    let q2 = params.q_pow(2);
    let qm2 = params.q_pow(-2);
    let num = alpha.sub_ref(&q2.mul_ref(beta)).mul_ref(&alpha.sub_ref(&qm2.mul_ref(beta)));
    let d = alpha.sub_ref(beta);
    if d.is_zero() {
        return Err(Error::Pole { point: format!("alpha = beta = {alpha}"), num_order: 0, den_order: 2 });
    }
    num.try_div(&d.mul_ref(&d))
}

/// `a_i(rho) = a_i + rho a_{i+1} + ... + rho^(m-i) a_m` as a polynomial in
/// `rho`, where `(X - v_1)...(X - v_m) = sum a_i X^i`.
pub fn frak_a<F: Field>(params: &HeckeParams<F>, i: usize) -> UniPoly<F> {
    let a = params.char_coeffs();
    UniPoly::from_coeffs(a[i..].to_vec())
}

/// `tau(rho) = sum_{i=0}^{m-1} a_{i+1}(rho) tau^i` as a polynomial in `rho`.
pub fn tau_rho_polynomial<F: Field>(alg: &HeckeAlgebra<F>) -> AlgebraPolynomial<F> {
    let m = alg.m();
    let tau = alg.tau();
    let mut powers = vec![alg.identity()];
    for k in 1..m {
        powers.push(alg.mul(&powers[k - 1], &tau));
    }
    let mut coeffs = vec![Element::zero(); m];
    for (i, power) in powers.iter().enumerate() {
        for (k, c) in frak_a(alg.params(), i + 1).coeffs().iter().enumerate() {
            coeffs[k] = coeffs[k].add_scaled(power, c);
        }
    }
    AlgebraPolynomial::from_coeffs(coeffs)
}

/// `tau(rho)` at a scalar `rho`.
pub fn tau_rho<F: Field>(alg: &HeckeAlgebra<F>, rho: &F) -> Element<F> {
    tau_rho_polynomial(alg).eval(rho)
}

/// Whether `(rho - tau) tau(rho) = (rho - v_1)...(rho - v_m)` holds as a
/// polynomial identity in `rho`.
pub fn tau_rho_identity_holds<F: Field>(alg: &HeckeAlgebra<F>) -> bool {
    let t = tau_rho_polynomial(alg);
    let rho_minus_tau =
        AlgebraPolynomial::from_coeffs(vec![alg.tau().neg(), alg.identity()]);
    let lhs = rho_minus_tau.mul(alg, &t);
    let rhs = AlgebraPolynomial::constant(alg.identity()).mul_scalar_poly(&frak_a(alg.params(), 0));
    lhs == rhs
}

/// Both sides of `sigma_1(a,b) tau(a) sigma_1^-1 tau(b) = tau(b) sigma_1^-1 tau(a) sigma_1(a,b)`.
pub fn reflection_sides<F: Field>(
    alg: &HeckeAlgebra<F>,
    alpha: &F,
    beta: &F,
) -> Result<(Element<F>, Element<F>)> {
    let s = baxterized_sigma(alg, 1, alpha, beta)?;
    let si = alg.sigma_inverse(1)?;
    let (ta, tb) = (tau_rho(alg, alpha), tau_rho(alg, beta));
    let lhs = alg.mul(&alg.mul(&alg.mul(&s, &ta), &si), &tb);
    let rhs = alg.mul(&alg.mul(&alg.mul(&tb, &si), &ta), &s);
    Ok((lhs, rhs))
}

pub fn reflection_identity_check<F: Field>(alg: &HeckeAlgebra<F>, alpha: &F, beta: &F) -> Result<bool> {
    let (l, r) = reflection_sides(alg, alpha, beta)?;
    Ok(l == r)
}

/// Both sides of the Yang-Baxter equation with spectral parameters at
/// generators `i, i+1`.
pub fn yang_baxter_sides<F: Field>(
    alg: &HeckeAlgebra<F>,
    i: usize,
    a: &F,
    a1: &F,
    a2: &F,
) -> Result<(Element<F>, Element<F>)> {
    let lhs = alg.mul(
        &alg.mul(&baxterized_sigma(alg, i, a, a1)?, &baxterized_sigma(alg, i + 1, a, a2)?),
        &baxterized_sigma(alg, i, a1, a2)?,
    );
    let rhs = alg.mul(
        &alg.mul(&baxterized_sigma(alg, i + 1, a1, a2)?, &baxterized_sigma(alg, i, a, a2)?),
        &baxterized_sigma(alg, i + 1, a, a1)?,
    );
    Ok((lhs, rhs))
}

pub fn yang_baxter_check<F: Field>(alg: &HeckeAlgebra<F>, i: usize, a: &F, a1: &F, a2: &F) -> Result<bool> {
    let (l, r) = yang_baxter_sides(alg, i, a, a1, a2)?;
    Ok(l == r)
}

/// Whether `sigma_i(a,b) sigma_i(b,a)` equals the inversion scalar.
pub fn inversion_check<F: Field>(alg: &HeckeAlgebra<F>, i: usize, alpha: &F, beta: &F) -> Result<bool> {
    let prod = alg.mul(&baxterized_sigma(alg, i, alpha, beta)?, &baxterized_sigma(alg, i, beta, alpha)?);
    Ok(prod == alg.scalar(inversion_scalar(alg.params(), alpha, beta)?))
}

/// The generator-level Yang-Baxter form used in the classical limit,
/// `s_i + c` for a scalar shift `c`.
pub fn shifted_generator<F: Field>(alg: &HeckeAlgebra<F>, i: usize, shift: &F) -> Result<Element<F>> {
    Ok(alg.generator(Generator::Sigma(i))?.add(&alg.scalar(shift.clone())))
}
