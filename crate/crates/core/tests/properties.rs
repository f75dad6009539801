use hecke_fusion::combinatorics::{enumerate_mpartitions, enumerate_standard_tableaux, enumerate_tableaux_of_size, MPartition};
use hecke_fusion::hecke::{Element, HeckeAlgebra};
use hecke_fusion::scalar::{limit_at, Cyclo, Field, HeckeParams, RatFunc, Rational, UniPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=25).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn cyclo(m: usize) -> impl Strategy<Value = Cyclo> {
    prop::collection::vec(rational(), m).prop_map(move |c| Cyclo::from_coeffs(m, c))
}

fn poly() -> impl Strategy<Value = UniPoly<Rational>> {
    prop::collection::vec(rational(), 0..4).prop_map(UniPoly::from_coeffs)
}

fn ratfunc() -> impl Strategy<Value = RatFunc<Rational>> {
    (poly(), poly().prop_filter("nonzero denominator", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn field_axioms<F: Field>(a: &F, b: &F, c: &F) -> Result<(), TestCaseError> {
    prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
    prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
    prop_assert_eq!((a.clone() - b.clone()) + b.clone(), a.clone());
    prop_assert!((a.clone() - a.clone()).is_zero());
    if a.is_zero() {
        prop_assert!(a.inv().is_err());
    } else {
        prop_assert!((a.clone() * a.inv().unwrap()).is_one());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn rational_parse_round_trip(a in rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn cyclotomic_field(
        (a, b, c) in prop::sample::select(vec![3usize, 4, 5, 6]).prop_flat_map(|m| (cyclo(m), cyclo(m), cyclo(m)))
    ) {
        field_axioms(&a, &b, &c)?;
        // rational constants carry no modulus but must still interact correctly
        let half = Cyclo::from_rational(&Rational::new(1, 2));
        prop_assert_eq!(a.clone() * half.clone() + a.clone() * half, a);
    }

    #[test]
    fn roots_of_unity(m in 1usize..=8, k in -20i64..=20) {
        let z = Cyclo::zeta(m);
        prop_assert!(z.pow_i(m as i64).unwrap().is_one());
        prop_assert_eq!(z.pow_i(k).unwrap(), Cyclo::zeta_pow(m, k));
    }

    #[test]
    fn ratfunc_field(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        field_axioms(&a, &b, &c)?;
    }

    #[test]
    fn ratfunc_is_canonical(a in ratfunc(), p in poly().prop_filter("nonzero", |p| !p.is_zero())) {
        let scaled = RatFunc::new(a.num().clone() * p.clone(), a.den().clone() * p).unwrap();
        prop_assert_eq!(scaled.num(), a.num());
        prop_assert_eq!(scaled.den(), a.den());
        prop_assert!(a.den().leading().unwrap().is_one());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in ratfunc(), b in ratfunc(), s in rational()) {
        if let (Ok(x), Ok(y)) = (a.eval(&s), b.eval(&s)) {
            prop_assert_eq!((a.clone() * b.clone()).eval(&s).unwrap(), x.clone() * y.clone());
            prop_assert_eq!((a.clone() + b.clone()).eval(&s).unwrap(), x + y);
        }
    }

    #[test]
    fn limit_agrees_with_value(a in ratfunc(), s in rational(), k in 0u32..3) {
        if let Ok(x) = a.eval(&s) {
            prop_assert_eq!(limit_at(&a, &s).unwrap(), x.clone());
            // a removable singularity does not change the limit
            let lin = UniPoly::linear(&s).pow(k);
            let padded = RatFunc::new(a.num().clone() * lin.clone(), a.den().clone() * lin).unwrap();
            prop_assert_eq!(limit_at(&padded, &s).unwrap(), x);
        }
    }
}

fn small_algebra() -> HeckeAlgebra<Rational> {
    let p = HeckeParams::new(Rational::new(5, 3), vec![Rational::new(2, 7), Rational::new(-3, 4)]).unwrap();
    HeckeAlgebra::new(p, 3).unwrap()
}

fn element(dim: u32) -> impl Strategy<Value = Element<Rational>> {
    prop::collection::vec((0..dim, rational()), 0..6).prop_map(Element::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn element_linear_structure(x in element(48), y in element(48), c in nonzero_rational()) {
        prop_assert_eq!(x.add(&y).sub(&y), x.clone());
        prop_assert_eq!(x.add_scaled(&y, &c), x.add(&y.scale(&c)));
        prop_assert!(x.sub(&x).is_zero());
        prop_assert!(x.terms().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn multiplication_is_bilinear_and_associative(x in element(48), y in element(48), z in element(48)) {
        let alg = small_algebra();
        prop_assert_eq!(alg.mul(&x, &y.add(&z)), alg.mul(&x, &y).add(&alg.mul(&x, &z)));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
        prop_assert_eq!(alg.mul(&alg.identity(), &x), x.clone());
        prop_assert_eq!(alg.mul(&x, &alg.identity()), x);
    }
}

/// Hook length formula times the multinomial for distributing the entries
/// among components.
fn hook_count(shape: &MPartition) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    let mut count = fact(shape.size());
    for comp in shape.components() {
        count /= fact(comp.size());
        let hooks: usize = (1..=comp.parts().len())
            .flat_map(|x| (1..=comp.row_len(x)).map(move |y| (x, y)))
            .map(|(x, y)| comp.hook(x, y).unwrap())
            .product();
        count *= fact(comp.size()) / hooks;
    }
    count
}

proptest! {
    #[test]
    fn tableaux_match_hook_formula(m in 1usize..=3, n in 0usize..=4) {
        let mut squares = 0;
        for shape in enumerate_mpartitions(m, n) {
            let tabs = enumerate_standard_tableaux(&shape);
            prop_assert_eq!(tabs.len(), hook_count(&shape), "{}", shape.encode());
            prop_assert!(tabs.iter().all(|t| t.shape() == &shape && t.size() == n));
            squares += tabs.len() * tabs.len();
        }
        prop_assert_eq!(squares, m.pow(n as u32) * (1..=n).product::<usize>());
        prop_assert_eq!(enumerate_tableaux_of_size(m, n).len(), enumerate_mpartitions(m, n).iter().map(hook_count).sum::<usize>());
    }
}
