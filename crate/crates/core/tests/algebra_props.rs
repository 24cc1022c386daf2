use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zdg_core::corpus::{all_semigroups_with_zero, random_isomorphism, random_pearled_space, random_poset, v_map};
use zdg_core::graph::{zero_divisor_graph, Cardinal, Extended};
use zdg_core::ring::{comaximal_suite, FiniteRing, IdealOp};
use zdg_core::semigroup::{
    armendariz_invariant_suite, check_armendariz, check_homomorphism, eq_quotient, QuotientMode, SemigroupTable,
};
use zdg_core::spectral::{specs_theorem_suite, SpectralPoset};
use zdg_core::topology::FiniteSpace;
use zdg_core::Limits;

fn lim() -> Limits {
    Limits::default()
}

fn gamma_shape_ok(s: &SemigroupTable) -> Result<(), String> {
    let g = zero_divisor_graph(s);
    if g.is_empty() {
        return Ok(());
    }
    if !g.is_connected() {
        return Err("disconnected".into());
    }
    if g.diameter() > Extended::Finite(3) {
        return Err(format!("diameter {}", g.diameter()));
    }
    match g.girth() {
        Extended::Finite(3) | Extended::Finite(4) | Extended::Infinite => Ok(()),
        other => Err(format!("girth {other}")),
    }
}

fn divisors(n: usize) -> usize {
    (1..=n).filter(|d| n % d == 0).count()
}

fn distinct_primes(mut n: usize) -> usize {
    let mut k = 0;
    let mut p = 2;
    while n > 1 {
        if n % p == 0 {
            k += 1;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    k
}

#[test]
fn every_small_semigroup_has_a_tame_graph() {
    for n in 1..=4 {
        for s in all_semigroups_with_zero(n) {
            gamma_shape_ok(&s).unwrap();
        }
    }
}

#[test]
fn quotient_is_final_and_idempotent() {
    for s in all_semigroups_with_zero(4).into_iter().filter(SemigroupTable::is_nilpotent_free) {
        let q = eq_quotient(&s, QuotientMode::Strict, &lim()).unwrap();
        assert!(check_armendariz(&q.projection).is_armendariz());
        assert!(check_homomorphism(&q.projection).holds);
        let qq = eq_quotient(&q.quotient, QuotientMode::Strict, &lim()).unwrap();
        assert_eq!(qq.quotient.len(), q.quotient.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zn_graphs_are_tame(n in 2usize..=64) {
        let r = FiniteRing::zn(n).unwrap();
        prop_assert!(gamma_shape_ok(&r.multiplicative_semigroup()).is_ok());
    }

    #[test]
    fn zn_ideals_are_divisors(n in 2usize..=60) {
        let r = FiniteRing::zn(n).unwrap();
        let ideals = r.ideals(&lim()).unwrap();
        prop_assert_eq!(ideals.len(), divisors(n));
        prop_assert_eq!(ideals.maximal().len(), distinct_primes(n));
        prop_assert_eq!(r.is_reduced(), (2..=n).all(|p| n % (p * p) != 0));
    }

    #[test]
    fn comaximal_clique_counts_maximals(n in 2usize..=60) {
        let r = FiniteRing::zn(n).unwrap();
        let rep = comaximal_suite(&r, &lim()).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.parts);
        let k = rep.max_ideals.len();
        if k >= 2 {
            prop_assert_eq!(rep.invariants.clique, Cardinal::Finite(k));
            prop_assert_eq!(rep.invariants.chromatic, Cardinal::Finite(k));
        }
    }

    #[test]
    fn isomorphisms_preserve_everything(n in 2usize..=30, seed in any::<u64>()) {
        let r = FiniteRing::zn(n).unwrap();
        let s = r.multiplicative_semigroup();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_isomorphism(&s, &mut rng).unwrap();
        prop_assert!(check_armendariz(&g).is_armendariz());
        let a = zero_divisor_graph(g.source()).invariants(&lim()).unwrap();
        let b = zero_divisor_graph(g.target()).invariants(&lim()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn v_map_is_armendariz(n in 2usize..=48) {
        let r = FiniteRing::zn(n).unwrap();
        let g = v_map(&r, &lim()).unwrap();
        prop_assert!(check_armendariz(&g).is_armendariz());
        prop_assert!(check_homomorphism(&g).holds);
    }

    #[test]
    fn ag_graph_is_gamma_of_ideal_product(n in 2usize..=40) {
        let r = FiniteRing::zn(n).unwrap();
        let ideals = r.ideals(&lim()).unwrap();
        let t = ideals.semigroup(IdealOp::Mult).table;
        for a in 0..t.len() {
            for b in 0..t.len() {
                let direct = r.ideal_product(ideals.ideal(a), ideals.ideal(b));
                prop_assert_eq!(ideals.ideal(t.mul(a, b)), &direct);
            }
        }
    }

    #[test]
    fn random_pearled_alpha_maps(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sp = random_pearled_space(&mut rng, 6);
        let flags = sp.axiom_suite();
        prop_assert!(flags.violations.is_empty());
        let g = sp.alpha_map().unwrap();
        prop_assert!(check_armendariz(&g).is_armendariz());
        prop_assert!(armendariz_invariant_suite(&g, &lim()).unwrap().passed());
        let back = FiniteSpace::from_json(&sp.to_json(), &lim()).unwrap();
        prop_assert_eq!(back.closed_sets(), sp.closed_sets());
    }

    #[test]
    fn random_posets_follow_the_case_split(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_poset(&mut rng, 6);
        let (spec, uspec) = (p.spec_space(&lim()).unwrap(), p.uspec_space(&lim()).unwrap());
        prop_assert_eq!(spec.closed_sets(), uspec.closed_sets());
        let rep = specs_theorem_suite(&SpectralPoset::Finite(p), &lim()).unwrap();
        prop_assert!(rep.passed(), "{:?}", rep.parts);
    }
}
