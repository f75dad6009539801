//! The checks behind each suite. Every function returns one record per
//! property; a record lists the failing instances as witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::CheckRecord;
use crate::classical::{
    baxter_limit, baxter_limit_expected, classical_yang_baxter_check, frak_a_limits_hold, group_algebra,
    root_product_identity_holds, shape_coefficient_limit, specialize_at_one, tau_rho_limit_holds,
};
use crate::combinatorics::{
    contents, enumerate_mpartitions, enumerate_tableaux_of_size, f_coefficient, f_croc, f_croc2, StandardMTableau,
};
use crate::error::Result;
use crate::fusion::{
    eigenvalue_failures, f_t_closed_form, f_t_rational, fusion_run, is_complete, orthogonality_failures,
    pairwise_failures, partial_ratio, printed_example_m2, spectral_identity_check, schur_ratio, Oracle,
};
use crate::hecke::{
    inversion_check, reflection_identity_check, tau_rho_identity_holds, tau_rho_polynomial, validate_presentation,
    yang_baxter_check, AlgebraPolynomial, Element, HeckeAlgebra,
};
use crate::scalar::{Field, HeckeParams, RatFunc, Rational};

fn label(check: &str, p: &Value) -> String {
    format!("{check} [m={},n={}]", p["m"], p["n"])
}

fn rec(check: &str, p: &Value, checked: usize, failures: Vec<Value>) -> CheckRecord {
    CheckRecord::new(label(check, p), p, checked, failures)
}

pub(super) fn algebra_checks<F: Field>(alg: &HeckeAlgebra<F>, seed: u64, p: &Value) -> Vec<CheckRecord> {
    let report = validate_presentation(alg, 200, seed);
    let mut out = Vec::new();
    let dim_fail = if report.dimension == report.expected_dimension {
        vec![]
    } else {
        vec![json!({ "dimension": report.dimension, "expected": report.expected_dimension })]
    };
    out.push(rec("algebra.dimension", p, 1, dim_fail));
    for fam in &report.families {
        let failures = fam.failures.iter().map(|w| json!({ "words": w, "seed": seed.to_string() })).collect();
        out.push(rec(&format!("algebra.{}", fam.name.replace(' ', "-")), p, fam.checked, failures));
    }

    let n = alg.n();
    let js: Vec<Element<F>> = (1..=n).map(|i| alg.jm_element(i).expect("index in range")).collect();
    let mut failures = Vec::new();
    for i in 0..n {
        for k in i + 1..n {
            if alg.mul(&js[i], &js[k]) != alg.mul(&js[k], &js[i]) {
                failures.push(json!({ "i": i + 1, "k": k + 1 }));
            }
        }
    }
    out.push(rec("algebra.jucys-murphy-commute", p, n * n.saturating_sub(1) / 2, failures));
    out
}

struct TableauOutcome {
    fusion_error: Option<Value>,
    equals_oracle: Option<Value>,
    stage: Vec<Value>,
    eigen: Option<Value>,
    orthogonal: Option<Value>,
    spectral: Option<Value>,
    resolvent: Option<Value>,
}

fn tableau_outcome<F: Field>(
    alg: &HeckeAlgebra<F>,
    oracle: &Oracle<'_, F>,
    t: &StandardMTableau,
) -> Result<(TableauOutcome, Option<Element<F>>)> {
    let enc = t.encode();
    let mut o = TableauOutcome {
        fusion_error: None,
        equals_oracle: None,
        stage: Vec::new(),
        eigen: None,
        orthogonal: None,
        spectral: None,
        resolvent: None,
    };
    let expected = oracle.idempotent(t)?;
    let run = match fusion_run(alg, t) {
        Ok(run) => run,
        Err(e) => {
            o.fusion_error = Some(json!({ "tableau": enc, "error": e.to_string() }));
            return Ok((o, None));
        }
    };
    if run.idempotent != expected {
        o.equals_oracle = Some(json!({
            "tableau": enc,
            "fusion": alg.element_to_json(&run.idempotent),
            "oracle": alg.element_to_json(&expected),
        }));
    }
    for st in &run.stages {
        let trunc = t.prefix(st.stage);
        let scaled = st.accumulated.scale(&f_coefficient(alg.params(), trunc.shape())?);
        if scaled != oracle.idempotent(&trunc)? {
            o.stage.push(json!({ "tableau": enc, "stage": st.stage, "accumulated": alg.element_to_json(&st.accumulated) }));
        }
    }
    let bad = eigenvalue_failures(alg, t, &run.idempotent)?;
    if !bad.is_empty() {
        o.eigen = Some(json!({ "tableau": enc, "indices": bad }));
    }
    let bad = orthogonality_failures(alg, t, &run.idempotent)?;
    if !bad.is_empty() {
        o.orthogonal = Some(json!({ "tableau": enc, "partners": bad.iter().map(|s| s.encode()).collect::<Vec<_>>() }));
    }
    if !spectral_identity_check(oracle, t)? {
        o.spectral = Some(json!({ "tableau": enc }));
    }
    let u = t.restrict().expect("nonempty");
    let c = contents(alg.params(), t).pop().expect("nonempty");
    if oracle.resolvent_evaluate(&u, &c)? != expected {
        o.resolvent = Some(json!({ "tableau": enc }));
    }
    Ok((o, Some(run.idempotent)))
}

pub(super) fn fusion_checks<F: Field>(alg: &HeckeAlgebra<F>, p: &Value) -> Result<Vec<CheckRecord>> {
    let (m, n) = (alg.m(), alg.n());
    let oracle = Oracle::new(alg);
    let tableaux = enumerate_tableaux_of_size(m, n);
    let outcomes: Vec<Result<(TableauOutcome, Option<Element<F>>)>> =
        tableaux.par_iter().map(|t| tableau_outcome(alg, &oracle, t)).collect();
    let mut list = Vec::new();
    let mut idempotents = Vec::new();
    for r in outcomes {
        let (o, e) = r?;
        list.push(o);
        if let Some(e) = e {
            idempotents.push(e);
        }
    }
    let count = tableaux.len();
    let collect = |f: &dyn Fn(&TableauOutcome) -> Option<Value>| list.iter().filter_map(f).collect::<Vec<_>>();
    let mut out = vec![
        rec("fusion.no-residual-pole", p, count, collect(&|o| o.fusion_error.clone())),
        rec("fusion.oracle-equality", p, count, collect(&|o| o.equals_oracle.clone())),
        rec("fusion.stage-invariant", p, count * n, list.iter().flat_map(|o| o.stage.clone()).collect()),
        rec("fusion.eigenvalues", p, count, collect(&|o| o.eigen.clone())),
        rec("fusion.orthogonality", p, count * count, collect(&|o| o.orthogonal.clone())),
        rec("fusion.spectral-identity", p, count, collect(&|o| o.spectral.clone())),
        rec("fusion.resolvent", p, count, collect(&|o| o.resolvent.clone())),
    ];
    let complete = idempotents.len() == count && is_complete(alg, &idempotents);
    out.push(rec("fusion.completeness", p, 1, if complete { vec![] } else { vec![json!({ "tableaux": count })] }));

    if m == 2 && n >= 3 {
        let t = StandardMTableau::parse("[[[1,3]],[[2]]]")?;
        let printed = printed_example_m2(alg)?;
        let ok = printed == oracle.idempotent(&t)?;
        let failures = if ok { vec![] } else { vec![json!({ "tableau": t.encode(), "printed": alg.element_to_json(&printed) })] };
        out.push(rec("fusion.printed-example", p, 1, failures));
    }
    Ok(out)
}

pub(super) fn scalar_checks<F: Field>(params: &HeckeParams<F>, n: usize, p: &Value) -> Result<Vec<CheckRecord>> {
    let m = params.m();
    let mut croc = (0, Vec::new());
    for size in 0..=n {
        for shape in enumerate_mpartitions(m, size) {
            croc.0 += 1;
            if f_croc(params, &shape)? != f_croc2(params, &shape)? {
                croc.1.push(json!({ "shape": shape.encode() }));
            }
        }
    }
    let (mut closed, mut content, mut value, mut split, mut argument) =
        (Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new());
    let mut count = 0;
    for size in 1..=n {
        for t in enumerate_tableaux_of_size(m, size) {
            count += 1;
            let w = json!({ "tableau": t.encode() });
            if f_t_rational(params, &t)?.to_ratfunc() != f_t_closed_form(params, &t)?.to_ratfunc() {
                closed.push(w.clone());
            }
            let s = schur_ratio(params, &t)?;
            if !s.content_ratio {
                content.push(w.clone());
            }
            if !s.value_at_last {
                value.push(w.clone());
            }
            let pr = partial_ratio(params, &t)?;
            if m <= 2 && !pr.literal_split {
                split.push(w.clone());
            }
            if !pr.ratio_argument_holds() {
                argument.push(json!({ "tableau": t.encode(), "detail": format!("{pr:?}") }));
            }
        }
    }
    let mut out = vec![
        rec("scalar.f-lambda-two-forms", p, croc.0, croc.1),
        rec("scalar.f-t-closed-form", p, count, closed),
        rec("scalar.content-ratio", p, count, content),
        rec("scalar.f-t-at-last-content", p, count, value),
        rec("scalar.partial-ratio", p, count, argument),
    ];
    if m <= 2 {
        out.push(rec("scalar.partial-split", p, count, split));
    }
    Ok(out)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-50..=50i64);
    Rational::new(num, rng.gen_range(1..=50))
}

/// Draws spectral parameters until the check is defined (no pole).
fn sampled_checks(
    rng: &mut ChaCha8Rng,
    runs: usize,
    arity: usize,
    mut check: impl FnMut(&[Rational], &mut ChaCha8Rng) -> Result<bool>,
) -> (usize, Vec<Value>) {
    let mut failures = Vec::new();
    let mut done = 0;
    let mut attempts = 0;
    while done < runs && attempts < 100 * runs {
        attempts += 1;
        let xs: Vec<Rational> = (0..arity).map(|_| small_rational(rng)).collect();
        match check(&xs, rng) {
            Ok(ok) => {
                done += 1;
                if !ok {
                    failures.push(json!({ "parameters": xs.iter().map(|x| x.to_string()).collect::<Vec<_>>() }));
                }
            }
            Err(_) => continue,
        }
    }
    (done, failures)
}

/// Number of random spectral-parameter choices per identity.
const BAXTER_SAMPLES: usize = 24;

/// `tau(rho)` as printed for `m <= 3`, as a polynomial in `rho`.
fn printed_tau_rho<F: Field>(alg: &HeckeAlgebra<F>) -> Option<AlgebraPolynomial<F>> {
    let v = &alg.params().v;
    let one = alg.identity();
    let t = alg.tau();
    match v.len() {
        1 => Some(AlgebraPolynomial::constant(one)),
        2 => {
            let c0 = t.sub(&alg.scalar(v[0].add_ref(&v[1])));
            Some(AlgebraPolynomial::from_coeffs(vec![c0, one]))
        }
        3 => {
            let e1 = v[0].add_ref(&v[1]).add_ref(&v[2]);
            let e2 = v[0].mul_ref(&v[1]).add_ref(&v[0].mul_ref(&v[2])).add_ref(&v[1].mul_ref(&v[2]));
            let c0 = alg.mul(&t, &t).sub(&t.scale(&e1)).add(&alg.scalar(e2));
            let c1 = t.sub(&alg.scalar(e1));
            Some(AlgebraPolynomial::from_coeffs(vec![c0, c1, one]))
        }
        _ => None,
    }
}

pub(super) fn baxter_checks<F: Field>(alg: &HeckeAlgebra<F>, seed: u64, p: &Value) -> Result<Vec<CheckRecord>> {
    let n = alg.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xba47);
    let lift = |x: &Rational| F::from_rational(x);
    let mut out = Vec::new();

    let fail = |ok: bool| if ok { vec![] } else { vec![json!({})] };
    out.push(rec("baxter.tau-rho-identity", p, 1, fail(tau_rho_identity_holds(alg))));
    if let Some(expected) = printed_tau_rho(alg) {
        out.push(rec("baxter.tau-rho-printed", p, 1, fail(tau_rho_polynomial(alg) == expected)));
    }

    if n >= 2 {
        let (k, f) = sampled_checks(&mut rng, BAXTER_SAMPLES, 2, |x, rng| {
            let i = rng.gen_range(1..n);
            inversion_check(alg, i, &lift(&x[0]), &lift(&x[1]))
        });
        out.push(rec("baxter.inversion", p, k, f));
        let (k, f) = sampled_checks(&mut rng, BAXTER_SAMPLES, 2, |x, _| {
            reflection_identity_check(alg, &lift(&x[0]), &lift(&x[1]))
        });
        out.push(rec("baxter.reflection", p, k, f));
    }
    if n >= 3 {
        let (k, f) = sampled_checks(&mut rng, BAXTER_SAMPLES, 3, |x, rng| {
            let i = rng.gen_range(1..n - 1);
            yang_baxter_check(alg, i, &lift(&x[0]), &lift(&x[1]), &lift(&x[2]))
        });
        out.push(rec("baxter.yang-baxter", p, k, f));
    }
    Ok(out)
}

pub(super) fn classical_checks(m: usize, n: usize, with_fusion: bool, p: &Value) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let fail = |ok: bool| if ok { vec![] } else { vec![json!({})] };

    let mut limits = (0, Vec::new());
    for pa in 1..=m {
        for pb in 1..=m {
            for a in -3..=3i64 {
                for b in -3..=3i64 {
                    if pa == pb && a == b {
                        continue;
                    }
                    limits.0 += 1;
                    let got = baxter_limit(m, pa, pb, a, b)?;
                    if got != baxter_limit_expected(pa, pb, a, b)? {
                        limits.1.push(json!({ "p": pa, "p'": pb, "a": a, "a'": b, "limit": got.to_json() }));
                    }
                }
            }
        }
    }
    out.push(rec("classical.baxter-limit", p, limits.0, limits.1));
    out.push(rec("classical.frak-a-limit", p, m + 1, fail(frak_a_limits_hold(m))));
    out.push(rec("classical.root-product", p, m, fail(root_product_identity_holds(m))));
    let group = group_algebra(m, n)?;
    out.push(rec("classical.tau-rho-limit", p, 1, fail(tau_rho_limit_holds(&group))));

    let mut shapes = (0, Vec::new());
    for size in 0..=n {
        for shape in enumerate_mpartitions(m, size) {
            shapes.0 += 1;
            let (lim, expected) = shape_coefficient_limit(&shape)?;
            if lim != expected {
                shapes.1.push(json!({ "shape": shape.encode(), "limit": lim.to_json(), "expected": expected.to_json() }));
            }
        }
    }
    out.push(rec("classical.f-lambda-limit", p, shapes.0, shapes.1));

    let g3 = if n == 3 { group } else { group_algebra(m, 3)? };
    let labels: Vec<(usize, i64)> = (1..=m).flat_map(|k| [(k, -1), (k, 0), (k, 2)]).collect();
    let mut yb = (0, Vec::new());
    for &x in &labels {
        for &y in &labels {
            for &z in &labels {
                if x == y || x == z || y == z {
                    continue;
                }
                yb.0 += 1;
                if !classical_yang_baxter_check(&g3, 1, x, y, z)? {
                    yb.1.push(json!({ "x": [x.0, x.1], "y": [y.0, y.1], "z": [z.0, z.1] }));
                }
            }
        }
    }
    out.push(rec("classical.yang-baxter", p, yb.0, yb.1));
    if !with_fusion {
        return Ok(out);
    }

    let alg: HeckeAlgebra<RatFunc<_>> = HeckeAlgebra::new(HeckeParams::symbolic_q(m), n)?;
    let group = group_algebra(m, n)?;
    let tableaux = enumerate_tableaux_of_size(m, n);
    let results: Vec<Result<_>> = tableaux
        .par_iter()
        .map(|t| {
            let run = fusion_run(&alg, t)?;
            Ok(specialize_at_one(&run.idempotent))
        })
        .collect();
    let mut poles = Vec::new();
    let mut special = Vec::new();
    for (t, r) in tableaux.iter().zip(results) {
        match r? {
            Ok(e) => special.push(e),
            Err(e) => poles.push(json!({ "tableau": t.encode(), "error": e.to_string() })),
        }
    }
    // with a pole some tableaux have no specialization, so the family is incomplete
    let (orth, complete) = if poles.is_empty() {
        let orth = pairwise_failures(&group, &special)
            .into_iter()
            .map(|(i, j)| json!({ "left": tableaux[i].encode(), "right": tableaux[j].encode() }))
            .collect();
        (orth, is_complete(&group, &special))
    } else {
        (vec![json!({ "skipped": "pole at q = 1" })], false)
    };
    out.push(rec("classical.fusion-finite-at-one", p, tableaux.len(), poles));
    out.push(rec("classical.fusion-orthogonal", p, special.len() * special.len(), orth));
    out.push(rec("classical.fusion-complete", p, 1, fail(complete)));
    Ok(out)
}
