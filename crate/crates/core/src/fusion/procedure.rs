//! The fusion procedure: staged evaluation of `Phi(c_1, ..., c_N)`.

use super::rational::AlgebraRationalFunction;
use crate::combinatorics::{contents, f_coefficient, StandardMTableau};
use crate::error::{Error, Result};
use crate::hecke::{frak_a, AlgebraPolynomial, Element, Generator, HeckeAlgebra};
use crate::scalar::{Field, UniPoly};

/// The value `A_k` after evaluating `u_1, ..., u_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionStage<F> {
    pub stage: usize,
    pub accumulated: Element<F>,
    /// Multiplicity of `(u - c_k)` among the denominators before cancellation.
    pub cancelled_poles: usize,
}

#[derive(Clone, Debug)]
pub struct FusionRun<F> {
    pub idempotent: Element<F>,
    pub stages: Vec<FusionStage<F>>,
}

fn check_contents<F: Field>(alg: &HeckeAlgebra<F>, k: usize, c: &[F]) -> Result<()> {
    if k == 0 || k > alg.n() {
        return Err(Error::Domain(format!("phi_{k} needs 1 <= k <= n = {}", alg.n())));
    }
    if c.len() + 1 != k {
        return Err(Error::InvalidParameter(format!("phi_{k} takes {} contents, got {}", k - 1, c.len())));
    }
    Ok(())
}

/// `phi_k(c_1, ..., c_{k-1}, u) x` with the denominator `prod (u - c_j)`
/// left unexpanded.
pub fn apply_phi<F: Field>(
    alg: &HeckeAlgebra<F>,
    k: usize,
    c: &[F],
    x: &Element<F>,
) -> Result<AlgebraRationalFunction<F>> {
    check_contents(alg, k, c)?;
    let kappa = alg.kappa().clone();

    // sigma_1^-1 ... sigma_{k-1}^-1 x
    let mut y = x.clone();
    for j in (1..k).rev() {
        y = alg.gen_mul(Generator::Sigma(j), &y)?.sub(&y.scale(&kappa));
    }

    // tau(u) y = sum_i a_{i+1}(u) tau^i y
    let m = alg.m();
    let mut coeffs = vec![Element::zero(); m];
    let mut power = y;
    for i in 0..m {
        if i > 0 {
            power = alg.gen_mul(Generator::Tau, &power)?;
        }
        for (d, a) in frak_a(alg.params(), i + 1).coeffs().iter().enumerate() {
            coeffs[d] = coeffs[d].add_scaled(&power, a);
        }
    }
    let mut p = AlgebraPolynomial::from_coeffs(coeffs);

    // sigma_j(u, c_j) numerators (sigma_j (u - c_j) + kappa c_j), j = 1 .. k-1
    for (j, cj) in c.iter().enumerate() {
        let s = p.map(|e| alg.gen_mul(Generator::Sigma(j + 1), e))?;
        p = s.mul_scalar_poly(&UniPoly::linear(cj)).add(&p.scale(&kappa.mul_ref(cj)));
    }
    AlgebraRationalFunction::new(p, c.to_vec(), F::one())
}

/// `phi_k(c_1, ..., c_{k-1}, u)` as a rational function of `u`.
pub fn phi_factor<F: Field>(alg: &HeckeAlgebra<F>, k: usize, c: &[F]) -> Result<AlgebraRationalFunction<F>> {
    apply_phi(alg, k, c, &alg.identity())
}

/// Runs the consecutive evaluations `A_k = (phi_k(c_1..c_{k-1}, u) A_{k-1})|_{u=c_k}`
/// and returns every stage together with `F_lambda A_N`.
pub fn fusion_run<F: Field>(alg: &HeckeAlgebra<F>, t: &StandardMTableau) -> Result<FusionRun<F>> {
    if t.m() != alg.m() || t.size() > alg.n() {
        return Err(Error::Domain(format!(
            "tableau {} does not fit H({},1,{})",
            t.encode(),
            alg.m(),
            alg.n()
        )));
    }
    let c = contents(alg.params(), t);
    let mut acc = alg.identity();
    let mut stages = Vec::with_capacity(t.size());
    for k in 1..=t.size() {
        let before = c[..k - 1].iter().filter(|s| **s == c[k - 1]).count();
        let b = apply_phi(alg, k, &c[..k - 1], &acc)?;
        acc = b.limit_at(&c[k - 1]).map_err(|e| Error::ResidualPole {
            stage: k,
            detail: format!("tableau {}: {e}", t.encode()),
        })?;
        stages.push(FusionStage { stage: k, accumulated: acc.clone(), cancelled_poles: before });
    }
    let idempotent = acc.scale(&f_coefficient(alg.params(), t.shape())?);
    Ok(FusionRun { idempotent, stages })
}

/// The primitive idempotent `E_T` produced by the fusion procedure.
pub fn fusion_idempotent<F: Field>(alg: &HeckeAlgebra<F>, t: &StandardMTableau) -> Result<Element<F>> {
    Ok(fusion_run(alg, t)?.idempotent)
}
