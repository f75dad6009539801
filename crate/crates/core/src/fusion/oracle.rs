//! Idempotents built from the Jucys-Murphy elements, used as the reference
//! for the fusion procedure.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::combinatorics::{quantum_content, MNode, MPartition, StandardMTableau};
use crate::error::{Error, Result};
use crate::hecke::{Element, HeckeAlgebra};
use super::rational::FactoredRatFunc;
use crate::scalar::Field;

/// Right multiplication by `prod (J_N - c(beta)) / (c(gamma) - c(beta))` over
/// the addable nodes `beta != gamma` of `mu`.
pub(crate) fn separating_factor<F: Field>(
    alg: &HeckeAlgebra<F>,
    x: &Element<F>,
    mu: &MPartition,
    gamma: &MNode,
) -> Result<Element<F>> {
    let params = alg.params();
    let n = mu.size() + 1;
    let cg = quantum_content(params, gamma);
    let mut acc = x.clone();
    for beta in mu.addable_nodes() {
        if beta == *gamma {
            continue;
        }
        let cb = quantum_content(params, &beta);
        let den = cg.sub_ref(&cb);
        if den.is_zero() {
            return Err(Error::NotGeneric(format!("addable nodes {gamma} and {beta} share the content {cg}")));
        }
        acc = alg.mul_jm(&acc, n)?.sub(&acc.scale(&cb)).scale(&den.inv()?);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Memoizing builder of `E_T = E_U prod (J_N - c(beta)) / (c(gamma) - c(beta))`.
/// Shares work between tableaux with a common prefix; safe to use from
/// several threads.
pub struct Oracle<'a, F> {
    alg: &'a HeckeAlgebra<F>,
    cache: Mutex<HashMap<Vec<MNode>, Element<F>>>,
}

impl<'a, F: Field> Oracle<'a, F> {
    pub fn new(alg: &'a HeckeAlgebra<F>) -> Self {
        Oracle { alg, cache: Mutex::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &'a HeckeAlgebra<F> {
        self.alg
    }

    pub fn idempotent(&self, t: &StandardMTableau) -> Result<Element<F>> {
        if t.m() != self.alg.m() {
            return Err(Error::Domain(format!("tableau {} does not have {} components", t.encode(), self.alg.m())));
        }
        let Some(gamma) = t.last_node().copied() else {
            return Ok(self.alg.identity());
        };
        if let Some(e) = self.cache.lock().unwrap().get(t.placement()) {
            return Ok(e.clone());
        }
        let u = t.restrict().expect("nonempty tableau");
        let eu = self.idempotent(&u)?;
        let e = separating_factor(self.alg, &eu, u.shape(), &gamma)?;
        self.cache.lock().unwrap().insert(t.placement().to_vec(), e.clone());
        Ok(e)
    }

    /// `E_U (u - c)/(u - J_N)` at `u = c`, expanded as
    /// `sum_i (u - c)/(u - c(T_i|N)) E_{T_i}` over the extensions `T_i` of `U`.
    /// Yields `E_T` for the extension by the node of content `c`.
    pub fn resolvent_evaluate(&self, u: &StandardMTableau, c: &F) -> Result<Element<F>> {
        let params = self.alg.params();
        let addable = u.shape().addable_nodes();
        if !addable.iter().any(|node| quantum_content(params, node) == *c) {
            return Err(Error::Domain(format!("{c} is not the content of an addable node of {}", u.shape())));
        }
        let mut acc = Element::zero();
        for ti in u.extensions() {
            let ci = quantum_content(params, ti.last_node().expect("extension is nonempty"));
            let weight = FactoredRatFunc::new(F::one(), vec![c.clone()], vec![ci]).limit_at(c)?;
            if !weight.is_zero() {
                acc = acc.add_scaled(&self.idempotent(&ti)?, &weight);
            }
        }
        Ok(acc)
    }
}

/// The oracle idempotent of a single tableau.
pub fn jm_idempotent<F: Field>(alg: &HeckeAlgebra<F>, t: &StandardMTableau) -> Result<Element<F>> {
    Oracle::new(alg).idempotent(t)
}

/// The indices `i <= N` at which `J_i E = E J_i = c(T|i) E` fails.
pub fn eigenvalue_failures<F: Field>(
    alg: &HeckeAlgebra<F>,
    t: &StandardMTableau,
    e: &Element<F>,
) -> Result<Vec<usize>> {
    let params = alg.params();
    let mut bad = Vec::new();
    for (i, node) in t.placement().iter().enumerate() {
        let expected = e.scale(&quantum_content(params, node));
        if alg.mul_jm(e, i + 1)? != expected || alg.jm_mul(i + 1, e)? != expected {
            bad.push(i + 1);
        }
    }
    Ok(bad)
}
