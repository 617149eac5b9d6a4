mod common;

use common::*;
use num_bigint::BigUint;
use pgv_core::group::{nu_factorial, is_prime};
use pgv_core::{PermGroup, Permutation};
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn generators() -> impl Strategy<Value = Vec<Permutation>> {
    (2usize..=7).prop_flat_map(|n| prop::collection::vec(permutation(n), 1..=3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn orbit_stabilizer_on_uniform_generators(gens in generators()) {
        let g = PermGroup::from_generators(gens).unwrap();
        prop_assert_eq!(check_orbit_stabilizer(&g), Ok(()));
    }

    #[test]
    fn orbit_stabilizer_on_sparse_generators(seed in any::<u64>()) {
        let g = random_group(&mut rng(seed), 8);
        prop_assert_eq!(check_orbit_stabilizer(&g), Ok(()));
    }

    #[test]
    fn membership_matches_closure(gens in generators(), probe in any::<u64>()) {
        let n = gens[0].degree();
        let g = PermGroup::from_generators(gens.clone()).unwrap();
        let elements = closure(&gens, n);
        let x = random_perm(&mut rng(probe), n);
        prop_assert_eq!(g.contains(&x).unwrap(), elements.contains(x.images()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn double_coset_size_law(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = 4 + (seed % 4) as usize;
        let h = small_subgroup(&mut r, n, 120);
        prop_assert!(h.order() <= BigUint::from(120u32));
        let t = random_perm(&mut r, n);
        prop_assert_eq!(check_double_coset_law(&h, &t, 1_000_000), Ok(()));
    }

    #[test]
    fn derived_series_ends_in_perfect_group(gens in generators()) {
        let g = PermGroup::from_generators(gens).unwrap();
        let series = g.derived_series();
        let orders = series.orders();
        prop_assert!(orders.windows(2).all(|w| w[1] < w[0] && &w[0] % &w[1] == BigUint::from(0u32)));
        let last = orders.last().unwrap();
        let solvable = *last == BigUint::from(1u32);
        prop_assert_eq!(series.is_solvable(), solvable);
        prop_assert_eq!(g.is_solvable(), solvable);
    }

    #[test]
    fn conjugate_group_has_same_order(gens in generators(), seed in any::<u64>()) {
        let n = gens[0].degree();
        let g = PermGroup::from_generators(gens).unwrap();
        let c = random_perm(&mut rng(seed), n);
        let gc = g.conjugate(&c).unwrap();
        prop_assert_eq!(gc.order(), g.order());
        prop_assert!(g.generators().iter().all(|x| gc.contains(&x.conjugate_by(&c)).unwrap()));
    }
}

/// Legendre's sum computed by counting factors one integer at a time.
#[test]
fn nu_factorial_matches_direct_count_and_bound() {
    let primes: Vec<u64> = (2..=97).filter(|&p| (2..p).all(|d| p % d != 0)).collect();
    assert_eq!(primes.len(), 25);
    for &p in &primes {
        assert!(is_prime(p));
        let mut running = 0u64;
        for n in 1..=10_000u64 {
            let mut k = n;
            while k % p == 0 {
                running += 1;
                k /= p;
            }
            assert_eq!(nu_factorial(n, p).unwrap(), running, "n = {n}, p = {p}");
            // ν_p(n!) < n / (p − 1), compared without division
            assert!(running * (p - 1) < n, "bound fails at n = {n}, p = {p}");
        }
    }
}

#[test]
fn primality_matches_trial_division() {
    for n in 0..5_000u64 {
        let expected = n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
        assert_eq!(is_prime(n), expected, "{n}");
    }
}
