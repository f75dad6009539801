//! Acceptance suite: one line per criterion, exact arithmetic throughout.
//! Independent reference computations live here, built from the public
//! primitives rather than the library's own check helpers where possible.

use std::time::{Duration, Instant};

use hecke_fusion::classical::{
    baxter_limit, classical_yang_baxter_check, frak_a_limits_hold, group_algebra, shape_coefficient_limit,
    specialize_at_one, tau_rho_limit_holds,
};
use hecke_fusion::combinatorics::{
    contents, enumerate_mpartitions, enumerate_tableaux_of_size, f_coefficient, f_croc, f_croc2, quantum_content,
    MPartition, StandardMTableau,
};
use hecke_fusion::fusion::{
    f_t_closed_form, f_t_rational, fusion_idempotent, fusion_run, is_complete, orthogonality_failures,
    pairwise_failures, partial_ratio, printed_example_m2, spectral_identity_check, Oracle,
};
use hecke_fusion::hecke::{
    baxterized_sigma, tau_rho, tau_rho_polynomial, validate_presentation, yang_baxter_check, AlgebraPolynomial,
    Element, HeckeAlgebra,
};
use hecke_fusion::scalar::{sample_generic, Cyclo, Field, HeckeParams, RatFunc, Rational, UniPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn generic_params(m: usize, n: usize, seed: u64) -> HeckeParams<Rational> {
    sample_generic(m, n, seed).generic_params().expect("rational ground")
}

fn generic(m: usize, n: usize, seed: u64) -> HeckeAlgebra<Rational> {
    HeckeAlgebra::new(generic_params(m, n, seed), n).expect("algebra builds")
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n = rng.gen_range(-40..=40i64);
    r(n, rng.gen_range(1..=40))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

// 1. Algebra validity
fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (m, n) in [(1, 4), (2, 3), (3, 3), (2, 4)] {
        let start = Instant::now();
        let alg = generic(m, n, 101);
        let expected = m.pow(n as u32) * factorial(n);
        ensure(alg.dimension() == expected, || format!("({m},{n}) dimension {} != {expected}", alg.dimension()))?;
        let report = validate_presentation(&alg, 200, 7);
        for fam in &report.families {
            ensure(fam.passed(), || format!("({m},{n}) {} fails at {:?}", fam.name, &fam.failures[..fam.failures.len().min(3)]))?;
        }
        let assoc = report.families.iter().find(|f| f.name == "associativity").map_or(0, |f| f.checked);
        ensure(assoc >= 200, || format!("only {assoc} associativity triples"))?;
        let took = start.elapsed();
        ensure(took < Duration::from_secs(120), || format!("({m},{n}) took {took:?}"))?;
        notes.push(format!("({m},{n}) dim {expected} in {:.1}s", took.as_secs_f64()));
    }
    Ok(notes.join(", "))
}

// 2. Fusion equals the Jucys-Murphy idempotents
fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (m, n) in [(1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4)] {
        let alg = generic(m, n, 202);
        let oracle = Oracle::new(&alg);
        let tableaux = enumerate_tableaux_of_size(m, n);
        let js: Vec<Element<Rational>> = (1..=n).map(|i| alg.jm_element(i).unwrap()).collect();
        let mut all = Vec::new();
        for t in &tableaux {
            let e = fusion_idempotent(&alg, t).map_err(|e| format!("{}: {e}", t.encode()))?;
            let o = oracle.idempotent(t).map_err(|e| e.to_string())?;
            ensure(e == o, || format!("({m},{n}) fusion differs from oracle at {}", t.encode()))?;
            for (i, c) in contents(alg.params(), t).iter().enumerate() {
                let expected = e.scale(c);
                ensure(alg.mul(&js[i], &e) == expected && alg.mul(&e, &js[i]) == expected, || {
                    format!("({m},{n}) J_{} eigenvalue fails at {}", i + 1, t.encode())
                })?;
            }
            let bad = orthogonality_failures(&alg, t, &e).map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("({m},{n}) orthogonality fails for {}", t.encode()))?;
            all.push(e);
        }
        let sum = all.iter().fold(Element::zero(), |acc, e| acc.add(e));
        ensure(sum == alg.identity(), || format!("({m},{n}) idempotents do not sum to 1"))?;
        if tableaux.len() <= 20 {
            // direct pairwise products as a second opinion
            ensure(pairwise_failures(&alg, &all).is_empty(), || format!("({m},{n}) direct products not orthogonal"))?;
        }
        count += tableaux.len();
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(600), || format!("took {took:?}"))?;
    Ok(format!("{count} tableaux in {:.1}s", took.as_secs_f64()))
}

// 3. The printed m = 2 example
fn criterion_3() -> Outcome {
    let t = StandardMTableau::parse("[[[1,3]],[[2]]]").unwrap();
    for seed in [1, 2, 3] {
        let alg = generic(2, 3, 300 + seed);
        let p = alg.params();
        let (q, qi) = (p.q.clone(), p.q_inv());
        let (v1, v2) = (p.v[0].clone(), p.v[1].clone());
        let kappa = q.clone() - qi.clone();
        // sigma_i(a, b) = sigma_i + kappa b / (a - b), tau(rho) = tau + rho - v1 - v2
        let bax = |i: usize, a: &Rational, b: &Rational| {
            alg.sigma(i).unwrap().add(&alg.scalar(kappa.clone() * b.clone() * (a.clone() - b.clone()).inv().unwrap()))
        };
        let tau_at = |rho: &Rational| alg.tau().add(&alg.scalar(rho.clone() - v1.clone() - v2.clone()));
        let c3 = v1.clone() * q.clone() * q.clone();
        let factors = [
            bax(2, &c3, &v2),
            bax(1, &c3, &v1),
            tau_at(&c3),
            alg.sigma_inverse(1).unwrap(),
            alg.sigma_inverse(2).unwrap(),
            bax(1, &v2, &v1),
            tau_at(&v2),
            alg.sigma_inverse(1).unwrap(),
            tau_at(&v1),
        ];
        let prod = factors.iter().fold(alg.identity(), |acc, f| alg.mul(&acc, f));
        let den = (q.clone() + qi.clone())
            * (v1.clone() * qi.clone() - v2.clone() * q.clone())
            * (v1.clone() - v2.clone())
            * (v2.clone() * qi.clone() * qi.clone() - c3.clone());
        let e = prod.scale(&den.inv().unwrap());
        let oracle = Oracle::new(&alg).idempotent(&t).unwrap();
        ensure(e == oracle, || format!("seed {seed}: printed expression differs from the oracle"))?;
        ensure(alg.mul(&e, &e) == e, || format!("seed {seed}: not idempotent"))?;
        ensure(printed_example_m2(&alg).unwrap() == e, || format!("seed {seed}: library form differs"))?;
        ensure(fusion_idempotent(&alg, &t).unwrap() == e, || format!("seed {seed}: fusion differs"))?;
    }
    Ok("3 samples".into())
}

/// `F_T(u)` straight from its definition, at a scalar `u`.
fn f_t_direct(p: &HeckeParams<Rational>, t: &StandardMTableau, u: &Rational) -> Option<Rational> {
    let c = contents(p, t);
    let (last, rest) = c.split_last()?;
    let mut num = u.clone() - last.clone();
    let mut den = p.v.iter().fold(Rational::one(), |acc, v| acc * (u.clone() - v.clone()));
    let (q2, qm2) = (p.q_pow(2), p.q_pow(-2));
    for ci in rest {
        num = num * (u.clone() - ci.clone()) * (u.clone() - ci.clone());
        den = den * (u.clone() - q2.clone() * ci.clone()) * (u.clone() - qm2.clone() * ci.clone());
    }
    (!den.is_zero()).then(|| num * den.inv().unwrap())
}

// 4. Scalar identities
fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let mut literal_m3_failures = 0;
    let mut tableaux = 0;
    for m in 1..=3 {
        let p = generic_params(m, 4, 400 + m as u64);
        for size in 0..=4 {
            for shape in enumerate_mpartitions(m, size) {
                let (a, b) = (f_croc(&p, &shape).unwrap(), f_croc2(&p, &shape).unwrap());
                ensure(a == b, || format!("F forms differ at {shape}"))?;
            }
        }
        for size in 1..=4 {
            for t in enumerate_tableaux_of_size(m, size) {
                tableaux += 1;
                let enc = t.encode();
                let def = f_t_rational(&p, &t).unwrap();
                let closed = f_t_closed_form(&p, &t).unwrap();
                ensure(def.to_ratfunc() == closed.to_ratfunc(), || format!("closed form differs at {enc}"))?;
                for _ in 0..3 {
                    let u = small_rational(&mut rng);
                    if let (Some(x), Ok(y)) = (f_t_direct(&p, &t, &u), closed.limit_at(&u)) {
                        ensure(x == y, || format!("F_T({u}) differs at {enc}"))?;
                    }
                }

                let u = t.restrict().unwrap();
                let gamma = *t.last_node().unwrap();
                let cn = quantum_content(&p, &gamma);
                let ratio = f_coefficient(&p, t.shape()).unwrap() * f_coefficient(&p, u.shape()).unwrap().inv().unwrap();
                let mut lhs = Rational::one();
                for beta in u.shape().removable_nodes() {
                    lhs = lhs * (cn.clone() - quantum_content(&p, &beta));
                }
                for alpha in u.shape().addable_nodes().into_iter().filter(|a| *a != gamma) {
                    lhs = lhs * (cn.clone() - quantum_content(&p, &alpha)).inv().unwrap();
                }
                ensure(lhs == ratio, || format!("content ratio fails at {enc}"))?;
                ensure(def.limit_at(&cn).unwrap() == ratio, || format!("F_T(c_N) fails at {enc}"))?;

                let pr = partial_ratio(&p, &t).unwrap();
                ensure(pr.ratio_argument_holds(), || format!("partial ratio identities fail at {enc}: {pr:?}"))?;
                if m <= 2 {
                    ensure(pr.literal_split, || format!("partial split fails at {enc}"))?;
                } else if !pr.literal_split {
                    literal_m3_failures += 1;
                }
            }
        }
    }
    Ok(format!(
        "{tableaux} tableaux; partial split exact for m <= 2, for m = 3 it needs the cross factor \
         (literal form off at {literal_m3_failures} tableaux, cross factor invariant everywhere)"
    ))
}

/// `phi_N(c_1..c_{N-1}, u) x` at a scalar `u`, multiplied out from its factors.
fn phi_at(alg: &HeckeAlgebra<Rational>, c: &[Rational], u: &Rational, x: &Element<Rational>) -> Option<Element<Rational>> {
    let mut y = x.clone();
    for j in (1..=c.len()).rev() {
        y = alg.mul(&alg.sigma_inverse(j).unwrap(), &y);
    }
    y = alg.mul(&tau_rho(alg, u), &y);
    for (j, cj) in c.iter().enumerate() {
        y = alg.mul(&baxterized_sigma(alg, j + 1, u, cj).ok()?, &y);
    }
    Some(y)
}

// 5. Spectral identity for F_T(u) phi_N E_U as a rational function of u
fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let mut count = 0;
    for (m, n) in [(2, 3), (3, 2)] {
        let alg = generic(m, n, 500);
        let oracle = Oracle::new(&alg);
        for t in enumerate_tableaux_of_size(m, n) {
            count += 1;
            ensure(spectral_identity_check(&oracle, &t).unwrap(), || format!("identity fails at {}", t.encode()))?;
            // pointwise at random u
            let c = contents(alg.params(), &t);
            let u_tab = t.restrict().unwrap();
            let eu = oracle.idempotent(&u_tab).unwrap();
            let mut points = 0;
            while points < 3 {
                let u = small_rational(&mut rng);
                let Some(f) = f_t_direct(alg.params(), &t, &u) else { continue };
                let Some(lhs) = phi_at(&alg, &c[..n - 1], &u, &eu) else { continue };
                let mut rhs = Element::zero();
                let mut pole = false;
                for ti in u_tab.extensions() {
                    let ci = quantum_content(alg.params(), ti.last_node().unwrap());
                    if ci == u {
                        pole = true;
                        break;
                    }
                    let w = (u.clone() - c[n - 1].clone()) * (u.clone() - ci).inv().unwrap();
                    rhs = rhs.add_scaled(&oracle.idempotent(&ti).unwrap(), &w);
                }
                if pole {
                    continue;
                }
                ensure(lhs.scale(&f) == rhs, || format!("pointwise identity fails at {} u = {u}", t.encode()))?;
                points += 1;
            }
        }
    }
    Ok(format!("{count} tableaux, symbolic in u plus 3 points each"))
}

// 6. Baxterization identities
fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let samples = 20;
    for m in 1..=3 {
        let alg = generic(m, 3, 600 + m as u64);
        let p = alg.params().clone();
        let (mut yb, mut inv, mut refl) = (0, 0, 0);
        while yb < samples || inv < samples || refl < samples {
            let (a, b, c) = (small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng));
            if a == b || a == c || b == c {
                continue;
            }
            if yb < samples {
                // generators i and i + 1 must exist in H(m,1,3)
                let i = 1;
                ensure(yang_baxter_check(&alg, i, &a, &b, &c).map_err(|e| format!("m={m} YB at {a},{b},{c}: {e}"))?, || format!("m={m} YB fails at {a},{b},{c}"))?;
                yb += 1;
            }
            if inv < samples {
                let i = rng.gen_range(1..=2);
                let prod = alg.mul(&baxterized_sigma(&alg, i, &a, &b).unwrap(), &baxterized_sigma(&alg, i, &b, &a).unwrap());
                let (q2, qm2) = (p.q_pow(2), p.q_pow(-2));
                let scalar = (a.clone() - q2 * b.clone()) * (a.clone() - qm2 * b.clone())
                    * ((a.clone() - b.clone()) * (a.clone() - b.clone())).inv().unwrap();
                ensure(prod == alg.scalar(scalar), || format!("m={m} inversion fails at {a},{b}"))?;
                inv += 1;
            }
            if refl < samples {
                let s = baxterized_sigma(&alg, 1, &a, &b).unwrap();
                let si = alg.sigma_inverse(1).unwrap();
                let (ta, tb) = (tau_rho(&alg, &a), tau_rho(&alg, &b));
                let lhs = [&s, &ta, &si, &tb].iter().fold(alg.identity(), |acc, f| alg.mul(&acc, f));
                let rhs = [&tb, &si, &ta, &s].iter().fold(alg.identity(), |acc, f| alg.mul(&acc, f));
                ensure(lhs == rhs, || format!("m={m} reflection fails at {a},{b}"))?;
                refl += 1;
            }
        }
    }
    Ok(format!("{samples} samples of each identity for m = 1, 2, 3 at n = 3"))
}

// 7. Classical limit
fn criterion_7() -> Outcome {
    let start = Instant::now();
    for m in 1..=4usize {
        for p in 1..=m {
            for p2 in 1..=m {
                for a in -3..=3i64 {
                    for a2 in -3..=3i64 {
                        if p == p2 && a == a2 {
                            continue;
                        }
                        let got = baxter_limit(m, p, p2, a, a2).map_err(|e| e.to_string())?;
                        let expected = if p == p2 { Cyclo::from_rational(&r(1, a - a2)) } else { Cyclo::zero() };
                        ensure(got == expected, || format!("Baxter limit m={m} p={p} p'={p2} a={a} a'={a2}: {got}"))?;
                    }
                }
            }
        }
        ensure(frak_a_limits_hold(m), || format!("a_i limits fail for m={m}"))?;
        ensure(tau_rho_limit_holds(&group_algebra(m, 2).unwrap()), || format!("tau(rho) limit fails for m={m}"))?;
    }
    for m in 1..=3usize {
        for size in 0..=3 {
            for shape in enumerate_mpartitions(m, size) {
                let (lim, _) = shape_coefficient_limit(&shape).map_err(|e| e.to_string())?;
                ensure(lim == x_times_f(&shape), || format!("lim F differs at {shape}"))?;
            }
        }
        let g = group_algebra(m, 3).unwrap();
        let labels: Vec<(usize, i64)> = (1..=m).flat_map(|p| [(p, -2), (p, 0), (p, 1)]).collect();
        for &x in &labels {
            for &y in &labels {
                for &z in &labels {
                    if x != y && x != z && y != z {
                        ensure(classical_yang_baxter_check(&g, 1, x, y, z).unwrap(), || {
                            format!("classical YB fails m={m} {x:?} {y:?} {z:?}")
                        })?;
                    }
                }
            }
        }
    }
    for (m, n) in [(2, 2), (2, 3)] {
        let alg: HeckeAlgebra<RatFunc<Cyclo>> = HeckeAlgebra::new(HeckeParams::symbolic_q(m), n).unwrap();
        let group = group_algebra(m, n).unwrap();
        let mut special = Vec::new();
        for t in enumerate_tableaux_of_size(m, n) {
            let e = fusion_run(&alg, &t).map_err(|e| e.to_string())?.idempotent;
            special.push(specialize_at_one(&e).map_err(|e| format!("{}: {e}", t.encode()))?);
        }
        ensure(pairwise_failures(&group, &special).is_empty(), || format!("({m},{n}) specializations not orthogonal"))?;
        ensure(is_complete(&group, &special), || format!("({m},{n}) specializations not complete"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(900), || format!("took {took:?}"))?;
    Ok(format!("in {:.1}s", took.as_secs_f64()))
}

/// `m^-n prod xi_pos / prod hooks`, computed from scratch.
fn x_times_f(shape: &MPartition) -> Cyclo {
    let m = shape.m();
    let mut acc = Cyclo::one();
    for node in shape.nodes() {
        let h = shape.hook_length(&node).unwrap() as i64;
        acc = acc.mul_ref(&Cyclo::zeta_pow(m, node.k as i64 - 1)).mul_ref(&Cyclo::from_rational(&r(1, h * m as i64)));
    }
    acc
}

fn tau_rho_checks<F: Field>(alg: &HeckeAlgebra<F>) -> Result<(), String> {
    let m = alg.m();
    let v = alg.params().v.clone();
    let (one, t) = (alg.identity(), alg.tau());
    let sum = v.iter().fold(F::zero(), |acc, x| acc + x.clone());
    let expected = match m {
        1 => vec![one.clone()],
        2 => vec![t.sub(&alg.scalar(sum)), one.clone()],
        _ => {
            let e2 = v[0].clone() * v[1].clone() + v[0].clone() * v[2].clone() + v[1].clone() * v[2].clone();
            vec![
                alg.mul(&t, &t).sub(&t.scale(&sum)).add(&alg.scalar(e2)),
                t.sub(&alg.scalar(sum)),
                one.clone(),
            ]
        }
    };
    let got = tau_rho_polynomial(alg);
    ensure(got.coeffs() == expected.as_slice(), || format!("m={m} tau(rho) coefficients differ"))?;
    // (rho - tau) tau(rho) against prod (rho - v_k), coefficientwise in rho
    let mut lhs = vec![Element::zero(); m + 1];
    for (k, c) in got.coeffs().iter().enumerate() {
        lhs[k + 1] = lhs[k + 1].add(c);
        lhs[k] = lhs[k].sub(&alg.mul(&t, c));
    }
    let roots = UniPoly::from_roots(v.iter());
    let rhs: Vec<Element<F>> = (0..=m).map(|k| one.scale(&roots.coeff(k))).collect();
    ensure(AlgebraPolynomial::from_coeffs(lhs) == AlgebraPolynomial::from_coeffs(rhs), || {
        format!("m={m} (rho - tau) tau(rho) differs from prod (rho - v_k)")
    })
}

// 8. tau(rho)
fn criterion_8() -> Outcome {
    for m in 1..=3 {
        tau_rho_checks(&generic(m, 2, 800))?;
        tau_rho_checks(&HeckeAlgebra::new(HeckeParams::<RatFunc<Cyclo>>::symbolic_q(m), 2).unwrap())?;
    }
    Ok("m = 1, 2, 3, generic and symbolic q".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("algebra validity", criterion_1),
        ("fusion equals Jucys-Murphy idempotents", criterion_2),
        ("printed m = 2 example", criterion_3),
        ("scalar identities", criterion_4),
        ("spectral identity for F_T(u) phi_N E_U", criterion_5),
        ("Baxterization identities", criterion_6),
        ("classical limit", criterion_7),
        ("tau(rho) expansion", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {} PASS  {name} ({note}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
