use hecke_fusion::classical::{
    classical_yang_baxter_check, group_algebra, specialize_at_one, tau_rho_limit_holds,
};
use hecke_fusion::combinatorics::enumerate_tableaux_of_size;
use hecke_fusion::fusion::{fusion_idempotent, is_complete, pairwise_failures};
use hecke_fusion::hecke::HeckeAlgebra;
use hecke_fusion::scalar::HeckeParams;

#[test]
fn symbolic_fusion_specializes_to_group_algebra() {
    for (m, n) in [(2, 2), (2, 3)] {
        let t0 = std::time::Instant::now();
        let alg = HeckeAlgebra::new(HeckeParams::symbolic_q(m), n).unwrap();
        let group = group_algebra(m, n).unwrap();
        let mut specialized = Vec::new();
        for t in enumerate_tableaux_of_size(m, n) {
            let e = fusion_idempotent(&alg, &t).unwrap();
            specialized.push(specialize_at_one(&e).unwrap());
        }
        assert!(pairwise_failures(&group, &specialized).is_empty());
        assert!(is_complete(&group, &specialized));
        eprintln!("({m},{n}) symbolic fusion {:?}", t0.elapsed());
    }
}

#[test]
fn tau_rho_limit() {
    for m in 1..=4 {
        assert!(tau_rho_limit_holds(&group_algebra(m, 2).unwrap()), "m = {m}");
    }
}

#[test]
fn generalized_yang_baxter() {
    for m in 1..=3 {
        let g = group_algebra(m, 3).unwrap();
        let labels: Vec<(usize, i64)> = (1..=m).flat_map(|p| [(p, -1), (p, 0), (p, 2)]).collect();
        for &x in &labels {
            for &y in &labels {
                for &z in &labels {
                    if x == y || x == z || y == z {
                        continue;
                    }
                    assert!(classical_yang_baxter_check(&g, 1, x, y, z).unwrap(), "{x:?} {y:?} {z:?}");
                }
            }
        }
    }
}
