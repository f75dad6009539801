//! Completeness and orthogonality of a family of idempotents.

use super::oracle::separating_factor;
use crate::combinatorics::StandardMTableau;
use crate::error::Result;
use crate::hecke::{Element, HeckeAlgebra};
use crate::scalar::Field;

/// Whether the elements sum to the identity.
pub fn is_complete<F: Field>(alg: &HeckeAlgebra<F>, idempotents: &[Element<F>]) -> bool {
    idempotents.iter().fold(Element::zero(), |acc, e| acc.add(e)) == alg.identity()
}

/// Computes `E_T E_S` for every standard tableau `S` of the same size as `T`
/// and returns the tableaux `S` for which it differs from `delta_{TS} E_T`.
///
/// `E_S` is taken in its factored form `E_{S|1..k} * (separating factor)`,
/// so the product is built by right multiplications along the tree of
/// prefixes of `S`. A branch whose partial product vanishes is cut: every
/// completion then gives zero exactly. A cut branch along the prefixes of
/// `T` itself is reported by its prefix.
pub fn orthogonality_failures<F: Field>(
    alg: &HeckeAlgebra<F>,
    t: &StandardMTableau,
    e: &Element<F>,
) -> Result<Vec<StandardMTableau>> {
    let mut failures = Vec::new();
    walk(alg, t, e, &StandardMTableau::empty(t.m()), e.clone(), &mut failures)?;
    Ok(failures)
}

fn walk<F: Field>(
    alg: &HeckeAlgebra<F>,
    t: &StandardMTableau,
    e: &Element<F>,
    prefix: &StandardMTableau,
    cur: Element<F>,
    failures: &mut Vec<StandardMTableau>,
) -> Result<()> {
    let k = prefix.size();
    if k == t.size() {
        let expected = if prefix == t { e.clone() } else { Element::zero() };
        if cur != expected {
            failures.push(prefix.clone());
        }
        return Ok(());
    }
    for ext in prefix.extensions() {
        let gamma = *ext.last_node().expect("extension is nonempty");
        let next = separating_factor(alg, &cur, prefix.shape(), &gamma)?;
        if next.is_zero() {
            if t.prefix(k + 1) == ext {
                failures.push(ext);
            }
            continue;
        }
        walk(alg, t, e, &ext, next, failures)?;
    }
    Ok(())
}

/// Pairwise products by direct multiplication: the pairs `(i, j)` with
/// `E_i E_j != delta_ij E_i`.
pub fn pairwise_failures<F: Field>(alg: &HeckeAlgebra<F>, idempotents: &[Element<F>]) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for (i, a) in idempotents.iter().enumerate() {
        for (j, b) in idempotents.iter().enumerate() {
            let prod = alg.mul(a, b);
            let ok = if i == j { prod == *a } else { prod.is_zero() };
            if !ok {
                bad.push((i, j));
            }
        }
    }
    bad
}
