use std::collections::BTreeSet;

use proptest::prelude::*;

use wilf_core::enumeration::enumerate_genus;
use wilf_core::lattice::{check_symmetry, check_thm_4_15, coords_to_gap, TwoGenerator};
use wilf_core::semimodule::{
    check_prop_4_3, check_thm_4_2, enumerate_semimodules, gap_profile, gap_semimodule, mu_delta_r,
    semimodule_from_generators,
};
use wilf_core::wilf::{check_wilf_type, interval_stats, wilf_value};
use wilf_core::NumericalSemigroup;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn semigroup_strategy() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2u64..40, 1..5)
        .prop_filter("coprime", |g| g.iter().fold(0, |a, &b| gcd(a, b)) == 1)
        .prop_map(|g| NumericalSemigroup::from_generators(&g).unwrap())
}

fn coprime_pair(max: u64) -> impl Strategy<Value = (u64, u64)> {
    (2..max, 3..=max).prop_filter("coprime, α < β", |&(a, b)| a < b && gcd(a, b) == 1)
}

fn all_up_to(genus: u64) -> Vec<NumericalSemigroup> {
    enumerate_genus(genus).map(Result::unwrap).filter(|ns| !ns.is_naturals()).collect()
}

/// Gaps `x` with `x + s ∈ Γ` for every nonzero `s ∈ Γ`.
fn pseudo_frobenius(ns: &NumericalSemigroup) -> Vec<u64> {
    let small: Vec<u64> = (1..=ns.conductor() + ns.multiplicity()).filter(|&s| ns.contains(s as i64)).collect();
    ns.gaps().iter().copied().filter(|&x| small.iter().all(|&s| ns.contains((x + s) as i64))).collect()
}

#[test]
fn symmetric_iff_conductor_is_twice_delta() {
    for ns in all_up_to(12) {
        let f = ns.frobenius();
        let pointwise = (0..=f).all(|z| ns.contains(z) != ns.contains(f - z));
        assert_eq!(pointwise, ns.conductor() == 2 * ns.delta(), "{ns}");
        assert_eq!(pointwise, ns.is_symmetric());
    }
}

#[test]
fn type_matches_pseudo_frobenius_count() {
    for ns in all_up_to(10) {
        let t = ns.type_of().unwrap();
        assert_eq!(t, pseudo_frobenius(&ns).len(), "{ns}");
        assert_eq!(t == 1, ns.is_symmetric(), "{ns}");
    }
}

#[test]
fn gap_theorems_hold_up_to_genus_ten() {
    for ns in all_up_to(10) {
        assert_eq!(check_thm_4_2(&ns), Ok(true));
        assert_eq!(check_prop_4_3(&ns), Ok(true));
    }
}

#[test]
fn semimodule_count_is_stable_under_small_examples() {
    for gens in [&[3u64, 4][..], &[4, 5, 6], &[3, 7], &[5, 6, 7, 8, 9]] {
        let ns = NumericalSemigroup::from_generators(gens).unwrap();
        let listed: Vec<Vec<u64>> =
            enumerate_semimodules(&ns).unwrap().map(|d| d.minimal_generators().to_vec()).collect();
        let distinct: BTreeSet<_> = listed.iter().collect();
        assert_eq!(distinct.len(), listed.len());
        for d in enumerate_semimodules(&ns).unwrap() {
            d.check_invariants().unwrap();
        }
    }
}

#[test]
fn two_generator_mu_for_pairs_is_at_most_three() {
    for (a, b) in [(3, 4), (3, 5), (3, 7), (4, 5), (4, 7), (5, 6), (5, 7), (2, 9)] {
        let ns = NumericalSemigroup::from_generators(&[a, b]).unwrap();
        assert!(mu_delta_r(&ns, 2).unwrap() <= 3, "<{a},{b}>");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn membership_matches_subset_sums(ns in semigroup_strategy()) {
        let gens = ns.minimal_generators();
        let top = ns.conductor() as usize + 2 * ns.multiplicity() as usize;
        let mut reach = vec![false; top];
        reach[0] = true;
        for n in 1..top {
            reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
        }
        for (n, &r) in reach.iter().enumerate() {
            prop_assert_eq!(r, ns.contains(n as i64));
        }
        prop_assert!(!ns.contains(ns.frobenius()));
        prop_assert_eq!(ns.genus() + ns.delta(), ns.conductor());
    }

    #[test]
    fn apery_elements_are_minimal_in_their_class(ns in semigroup_strategy(), pick in 0usize..8) {
        let small: Vec<u64> = (1..=ns.conductor() + 1).filter(|&s| ns.contains(s as i64)).collect();
        let s = small[pick % small.len()];
        let ap = ns.apery_set(s).unwrap();
        prop_assert_eq!(ap.elements.len() as u64, s);
        for &w in &ap.elements {
            prop_assert!(ns.contains(w as i64));
            prop_assert!(!ns.contains(w as i64 - s as i64));
        }
    }

    #[test]
    fn interval_identities(ns in semigroup_strategy()) {
        prop_assume!(!ns.is_naturals());
        let stats = interval_stats(&ns).unwrap();
        let m = ns.multiplicity();
        let weighted: u64 = stats.eta.iter().enumerate().map(|(j, &e)| (j as u64 + 1) * e).sum();
        prop_assert_eq!(stats.n.iter().sum::<u64>(), ns.delta());
        prop_assert_eq!(weighted + stats.rho, ns.delta() + m);
        for k in 2..=m as i64 {
            prop_assert_eq!(check_wilf_type(&ns, k), Ok(wilf_value(&ns, k as u64).unwrap() >= 0));
        }
        prop_assert!(wilf_value(&ns, 2).unwrap() <= 0);
        prop_assert!(wilf_value(&ns, m).unwrap() >= 0);
    }

    #[test]
    fn semimodules_are_translation_invariant(
        ns in semigroup_strategy(),
        raw in prop::collection::vec(0i64..60, 1..5),
        t in -100i64..100,
    ) {
        let d = semimodule_from_generators(&ns, &raw).unwrap();
        let moved: Vec<i64> = raw.iter().map(|x| x + t).collect();
        let e = semimodule_from_generators(&ns, &moved).unwrap();
        prop_assert_eq!(d.minimal_generators(), e.minimal_generators());
        prop_assert_eq!((d.conductor(), d.delta()), (e.conductor(), e.delta()));
        prop_assert_eq!(e.shift() - d.shift(), t);
        prop_assert!(d.check_invariants().is_ok());
    }

    #[test]
    fn minimal_generators_are_all_needed(
        ns in semigroup_strategy(),
        raw in prop::collection::vec(0i64..60, 2..6),
    ) {
        let d = semimodule_from_generators(&ns, &raw).unwrap();
        let gens = d.minimal_generators();
        for skip in 1..gens.len() {
            let rest: Vec<i64> = gens.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x as i64).collect();
            let smaller = semimodule_from_generators(&ns, &rest).unwrap();
            prop_assert!(!smaller.contains(gens[skip] as i64 - smaller.shift()));
        }
    }

    #[test]
    fn residue_profile_matches_union_sieve(ns in semigroup_strategy(), pick in 0usize..1000) {
        prop_assume!(!ns.is_naturals());
        let g = ns.gaps()[pick % ns.gaps().len()];
        let p = gap_profile(&ns, g);
        let d = gap_semimodule(&ns, g as i64).unwrap();
        prop_assert_eq!((p.conductor, p.delta), (d.conductor(), d.delta()));
        let brute = (g..).find(|&n| ns.contains(n as i64) && ns.contains((n - g) as i64)).unwrap();
        prop_assert_eq!(p.min_intersection, brute);
    }

    #[test]
    fn two_generator_checks((a, b) in coprime_pair(200)) {
        let tg = TwoGenerator::new(a, b).unwrap();
        prop_assert_eq!(check_thm_4_15(&tg), Ok(true));
        prop_assert_eq!(check_symmetry(&tg), Ok(true));
        let ns = tg.semigroup();
        prop_assert_eq!(ns.frobenius(), (a * b) as i64 - (a + b) as i64);
        prop_assert_eq!(2 * ns.genus(), (a - 1) * (b - 1));
        for lg in tg.points() {
            prop_assert_eq!(coords_to_gap(&lg), lg.gap as i64);
        }
    }
}
