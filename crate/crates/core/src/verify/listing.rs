//! JSON documents for the `tableaux` and `idempotent` commands.

use serde_json::{json, Value};

use super::SCHEMA;
use crate::combinatorics::{
    enumerate_mpartitions, enumerate_standard_tableaux, quantum_content, MNode, MPartition, StandardMTableau,
};
use crate::error::Result;
use crate::fusion::{eigenvalue_failures, fusion_run, printed_example_m2, Oracle};
use crate::hecke::HeckeAlgebra;
use crate::combinatorics::f_coefficient;
use crate::scalar::{Field, HeckeParams};

/// `v_k q^(2(y-x))` written out, e.g. `v1 q^2`.
fn content_symbol(node: &MNode) -> String {
    match 2 * node.classical_content() {
        0 => format!("v{}", node.k),
        e => format!("v{} q^{e}", node.k),
    }
}

fn tableau_json<F: Field>(t: &StandardMTableau, params: Option<&HeckeParams<F>>) -> Value {
    let nodes = t.placement();
    let mut v = json!({
        "tableau": t.encode(),
        "nodes": nodes.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "contents": nodes.iter().map(content_symbol).collect::<Vec<_>>(),
        "classical_contents": nodes.iter().map(|x| x.classical_content()).collect::<Vec<_>>(),
        "positions": nodes.iter().map(|x| x.k).collect::<Vec<_>>(),
    });
    if let Some(p) = params {
        v["content_values"] = Value::Array(nodes.iter().map(|x| quantum_content(p, x).to_json()).collect());
    }
    v
}

/// All standard tableaux of one shape, or of every shape of size `n`.
pub fn tableaux_listing<F: Field>(
    m: usize,
    n: usize,
    shape: Option<&MPartition>,
    params: Option<&HeckeParams<F>>,
) -> Value {
    let shapes = match shape {
        Some(s) => vec![s.clone()],
        None => enumerate_mpartitions(m, n),
    };
    let mut total = 0;
    let mut squares = 0;
    let mut entries = Vec::new();
    for s in &shapes {
        let tabs = enumerate_standard_tableaux(s);
        total += tabs.len();
        squares += tabs.len() * tabs.len();
        entries.push(json!({
            "shape": s.encode(),
            "count": tabs.len(),
            "tableaux": tabs.iter().map(|t| tableau_json(t, params)).collect::<Vec<_>>(),
        }));
    }
    json!({
        "schema": SCHEMA,
        "m": m,
        "n": shape.map_or(n, |s| s.size()),
        "shapes": entries,
        "total": total,
        "sum_of_squares": squares,
    })
}

pub struct IdempotentReport {
    pub json: Value,
    pub passed: bool,
}

/// Fusion and oracle idempotents of `t` with the consistency flags.
pub fn idempotent_report<F: Field>(alg: &HeckeAlgebra<F>, t: &StandardMTableau, ground: Value) -> Result<IdempotentReport> {
    let oracle = Oracle::new(alg);
    let run = fusion_run(alg, t)?;
    let expected = oracle.idempotent(t)?;
    let e = &run.idempotent;

    let mut stages = Vec::new();
    let mut stages_ok = true;
    for st in &run.stages {
        let trunc = t.prefix(st.stage);
        let ok = st.accumulated.scale(&f_coefficient(alg.params(), trunc.shape())?) == oracle.idempotent(&trunc)?;
        stages_ok &= ok;
        stages.push(json!({
            "stage": st.stage,
            "cancelled_poles": st.cancelled_poles,
            "matches_oracle": ok,
            "accumulated": alg.element_to_json(&st.accumulated),
        }));
    }
    let mut flags = json!({
        "equals_oracle": *e == expected,
        "idempotent": alg.mul(e, e) == *e,
        "eigenvalues": eigenvalue_failures(alg, t, e)?.is_empty(),
        "stage_invariant": stages_ok,
    });
    if alg.m() == 2 && alg.n() >= 3 && t.encode() == "[[[1,3]],[[2]]]" {
        flags["printed_example"] = json!(printed_example_m2(alg)? == *e);
    }
    let passed = flags.as_object().expect("object").values().all(|v| v == &json!(true));
    let json = json!({
        "schema": SCHEMA,
        "m": alg.m(),
        "n": alg.n(),
        "ground": ground,
        "tableau": tableau_json(t, Some(alg.params())),
        "fusion": alg.element_to_json(e),
        "oracle": alg.element_to_json(&expected),
        "stages": stages,
        "flags": flags,
        "passed": passed,
    });
    Ok(IdempotentReport { json, passed })
}
