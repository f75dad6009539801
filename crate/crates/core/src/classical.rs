//! The classical limit `q -> 1`, `v_k -> xi_k = zeta_m^(k-1)`, where
//! `H(m,1,n)` degenerates to the group algebra of `G(m,1,n)`.

use crate::combinatorics::{classical_coefficients, f_coefficient, MPartition};
use crate::error::{Error, Result};
use crate::hecke::{baxter_coefficient, frak_a, tau_rho_polynomial, Element, HeckeAlgebra};
use crate::scalar::{limit_at, Cyclo, Field, HeckeParams, RatFunc, UniPoly};

/// Group algebra of `G(m,1,n)` over `Q(zeta_m)`.
pub fn group_algebra(m: usize, n: usize) -> Result<HeckeAlgebra<Cyclo>> {
    HeckeAlgebra::new(HeckeParams::classical(m), n)
}

/// `lim_{q -> 1} (q - q^-1) beta / (alpha - beta)` at `alpha = xi_p q^(2a)`,
/// `beta = xi_p' q^(2a')`.
pub fn baxter_limit(m: usize, p: usize, p2: usize, a: i64, a2: i64) -> Result<Cyclo> {
    let params = HeckeParams::symbolic_q(m);
    let alpha = params.v[p - 1].mul_ref(&params.q_pow(2 * a));
    let beta = params.v[p2 - 1].mul_ref(&params.q_pow(2 * a2));
    limit_at(&baxter_coefficient(&params, &alpha, &beta)?, &Cyclo::one())
}

/// The expected limit `delta_{p p'} / (a - a')`.
pub fn baxter_limit_expected(p: usize, p2: usize, a: i64, a2: i64) -> Result<Cyclo> {
    if p != p2 {
        return Ok(Cyclo::zero());
    }
    Cyclo::one().try_div(&Cyclo::from_i64(a - a2))
}

/// `a_0(rho) = rho^m - 1` and `a_i(rho) = rho^(m-i)` at `v = xi`.
pub fn frak_a_limits_hold(m: usize) -> bool {
    let params = HeckeParams::classical(m);
    let a0 = UniPoly::monomial(Cyclo::one(), m) - UniPoly::one();
    frak_a(&params, 0) == a0 && (1..=m).all(|i| frak_a(&params, i) == UniPoly::monomial(Cyclo::one(), m - i))
}

/// `tau(rho) = sum_i rho^(m-1-i) t^i` in the group algebra.
pub fn tau_rho_limit_holds(alg: &HeckeAlgebra<Cyclo>) -> bool {
    let m = alg.m();
    let mut coeffs = vec![Element::zero(); m];
    let mut power = alg.identity();
    for i in 0..m {
        coeffs[m - 1 - i] = power.clone();
        power = alg.mul(&power, &alg.tau());
    }
    tau_rho_polynomial(alg).coeffs() == coeffs.as_slice()
}

/// `prod_{i != k} (xi_k - xi_i) = m / xi_k` for every `k`.
pub fn root_product_identity_holds(m: usize) -> bool {
    let xi: Vec<Cyclo> = (0..m).map(|k| Cyclo::zeta_pow(m, k as i64)).collect();
    (0..m).all(|k| {
        let prod = (0..m).filter(|&i| i != k).fold(Cyclo::one(), |acc, i| acc.mul_ref(&xi[k].sub_ref(&xi[i])));
        prod.mul_ref(&xi[k]) == Cyclo::from_i64(m as i64)
    })
}

/// `(lim_{q -> 1} F_lambda, x_lambda f_lambda)`.
pub fn shape_coefficient_limit(shape: &MPartition) -> Result<(Cyclo, Cyclo)> {
    let params = HeckeParams::symbolic_q(shape.m());
    let lim = limit_at(&f_coefficient(&params, shape)?, &Cyclo::one())?;
    let (f, x) = classical_coefficients(shape);
    Ok((lim, x.mul_ref(&Cyclo::from_rational(&f))))
}

/// `s_i(p, p', a, a') = s_i + delta_{p p'} / (a - a')`.
pub fn generalized_baxterized(
    alg: &HeckeAlgebra<Cyclo>,
    i: usize,
    (p, a): (usize, i64),
    (p2, a2): (usize, i64),
) -> Result<Element<Cyclo>> {
    let shift = baxter_limit_expected(p, p2, a, a2)?;
    Ok(alg.sigma(i)?.add(&alg.scalar(shift)))
}

/// `s_i(x, y) s_{i+1}(x, z) s_i(y, z) = s_{i+1}(y, z) s_i(x, z) s_{i+1}(x, y)`
/// for labels `x = (p, a)`, `y = (p', a')`, `z = (p'', a'')`.
pub fn classical_yang_baxter_check(
    alg: &HeckeAlgebra<Cyclo>,
    i: usize,
    x: (usize, i64),
    y: (usize, i64),
    z: (usize, i64),
) -> Result<bool> {
    let s = |j, l, r| generalized_baxterized(alg, j, l, r);
    let lhs = alg.mul(&alg.mul(&s(i, x, y)?, &s(i + 1, x, z)?), &s(i, y, z)?);
    let rhs = alg.mul(&alg.mul(&s(i + 1, y, z)?, &s(i, x, z)?), &s(i + 1, x, y)?);
    Ok(lhs == rhs)
}

/// Coefficientwise value at `q = 1`; a pole is reported with the offending
/// basis word index.
pub fn specialize_at_one(x: &Element<RatFunc<Cyclo>>) -> Result<Element<Cyclo>> {
    x.try_map_coeffs(|c| {
        limit_at(c, &Cyclo::one()).map_err(|e| match e {
            Error::Pole { point, num_order, den_order } => Error::Pole {
                point: format!("q = {point} in coefficient {c}"),
                num_order,
                den_order,
            },
            other => other,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn baxter_limits() {
        assert_eq!(baxter_limit(2, 1, 1, 1, 0).unwrap(), Cyclo::one());
        assert_eq!(baxter_limit(3, 1, 2, 1, 1).unwrap(), Cyclo::zero());
        assert_eq!(baxter_limit(1, 1, 1, -2, 1).unwrap(), Cyclo::from_rational(&crate::scalar::Rational::new(-1, 3)));
    }

    #[test]
    fn small_identities() {
        for m in 1..=4 {
            assert!(frak_a_limits_hold(m));
            assert!(root_product_identity_holds(m));
        }
    }

    #[test]
    fn two_single_boxes() {
        let shape = MPartition::parse("[[1],[1]]").unwrap();
        let (lim, expected) = shape_coefficient_limit(&shape).unwrap();
        assert_eq!(lim, expected);
        assert_eq!(lim, Cyclo::from_rational(&crate::scalar::Rational::new(-1, 4)));
    }
}
