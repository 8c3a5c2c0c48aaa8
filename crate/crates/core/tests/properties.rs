use num_bigint::BigUint;
use proptest::prelude::*;

use primegraph::altgraph::{self, Parity};
use primegraph::certificates;
use primegraph::engine::{self, Policy, Proposition};
use primegraph::numtheory::{self, Sieve};
use primegraph::oracle;
use primegraph::orders::{self, gl_order, o_even_order, sp_order};
use primegraph::semisimple::{self, FormSign};
use primegraph::{Family, GroupId, Sign};

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn pow_mod(b: u64, e: u64, m: u64) -> u64 {
    (0..e).fold(1u64, |acc, _| (acc as u128 * b as u128 % m as u128) as u64)
}

const PRIME_POWERS: [u64; 18] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 31, 32, 64];
const SMALL_Q: [u64; 6] = [2, 3, 4, 5, 8, 9];

fn small_q() -> impl Strategy<Value = u64> {
    prop::sample::select(SMALL_Q.to_vec())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop::sample::select(vec![Sign::Plus, Sign::Minus])
}

fn mersenne_prime(q: u64) -> bool {
    trial_prime(q) && (q + 1).is_power_of_two()
}

#[test]
fn ppd_absent_exactly_on_zsigmondy_exceptions() {
    for q in PRIME_POWERS {
        for e in 1u32..=24 {
            let exception = e == 1 || (e == 2 && mersenne_prime(q)) || (q, e) == (2, 6);
            assert_eq!(!numtheory::ppd_exists(q, e), exception, "q = {q} e = {e}");
            match numtheory::ppd(q, e) {
                Some(r) => assert_eq!(numtheory::phi_order(r, q).unwrap(), e as u64),
                None if !exception => {
                    // every primitive prime is too large for u64
                    let f = numtheory::factor(&numtheory::cyclotomic_value(q, e));
                    let too_big = |p: &BigUint| p.bits() > 64 || (e as u64) % p.to_u64_digits()[0] == 0;
                    assert!(f.factors().all(|(p, _)| too_big(p) && numtheory::is_prime_big(p)), "q = {q} e = {e}");
                }
                None => {}
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn phi_order_characterizes_divisibility(
        r in prop::sample::select((3u64..10_000).filter(|&r| trial_prime(r)).collect::<Vec<_>>()),
        q in prop::sample::select((2u64..=64).filter(|&q| numtheory::prime_power(q).is_some()).collect::<Vec<_>>()),
        n in 1u64..=48,
    ) {
        prop_assume!(q % r != 0);
        let a = numtheory::phi_order(r, q).unwrap();
        prop_assert_eq!(pow_mod(q % r, n, r) == 1, n % a == 0);
    }

    #[test]
    fn goldbach_pair_matches_double_loop(half in 2u64..=5_000) {
        let n = 2 * half;
        let brute = (2..n / 2).any(|r| trial_prime(r) && trial_prime(n - r) && r != n - r);
        let found = numtheory::goldbach_distinct_pair(n, None);
        prop_assert_eq!(found.is_some(), brute);
        if let Some((r, s)) = found {
            prop_assert!(r < s && r + s == n && trial_prime(r) && trial_prime(s));
        }
    }

    #[test]
    fn linear_orders_nest(m in 1u32..=8, l in 0u32..8, q in small_q(), eps in sign()) {
        prop_assume!(l < m);
        prop_assert!(gl_order(m - l, q, eps).divides(&gl_order(m, q, eps)));
    }

    #[test]
    fn symplectic_orders_nest(m in 1u32..=8, l in 0u32..8, q in small_q(), eps in sign()) {
        prop_assume!(l < m);
        let sp = sp_order(2 * m, q);
        prop_assert!(sp_order(2 * (m - l), q).divides(&sp));
        prop_assert!(o_even_order(2 * m, q, eps).divides(&sp));
    }

    #[test]
    fn orthogonal_orders_nest(m in 1u32..=8, l in 0u32..8, q in small_q(), eps in sign(), eps2 in sign()) {
        prop_assume!(l < m);
        let big = o_even_order(2 * m, q, eps);
        let small = o_even_order(2 * (m - l), q, eps2);
        if l == 0 && eps != eps2 {
            // the excluded case really fails once q^m > 3
            if m >= 2 {
                prop_assert!(!small.divides(&big));
            }
        } else {
            prop_assert!(small.divides(&big));
        }
    }

    #[test]
    fn symplectic_and_o_minus_share_primes(m in prop::sample::select(vec![2u32, 4, 6, 8]), q in prop::sample::select(vec![2u64, 4, 8])) {
        let g = orders::pi(&GroupId::symplectic(2 * m, q)).unwrap();
        let h = orders::pi(&GroupId::orthogonal_full(2 * m, q, Sign::Minus)).unwrap();
        prop_assert_eq!(g, h);
    }
}

#[test]
fn alternating_orders_are_half_factorials() {
    let mut fact = BigUint::from(1u32);
    for n in 1..=20u32 {
        fact *= n;
        if n >= 5 {
            let o = orders::order(&GroupId::alternating(n)).unwrap().order;
            assert_eq!(o.value() * 2u32, fact, "A{n}");
        }
    }
}

fn classical_host() -> impl Strategy<Value = GroupId> {
    let q = prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]);
    (1u32..=8, q, 0u8..6).prop_filter_map("valid host", |(m, q, kind)| {
        let g = match kind {
            0 => GroupId::symplectic(2 * m, q),
            1 => GroupId::symplectic_matrix(2 * m, q),
            2 if m >= 2 => GroupId::omega_even(2 * m, q, Sign::Plus),
            3 if m >= 2 => GroupId::omega_even(2 * m, q, Sign::Minus),
            4 if m >= 2 => GroupId::orthogonal_full(2 * m, q, if m % 2 == 0 { Sign::Minus } else { Sign::Plus }),
            5 if q % 2 == 1 && m >= 2 => GroupId::omega_odd(2 * m + 1, q),
            _ => return None,
        };
        g.validate().ok().map(|_| g)
    })
}

fn odd_primes_except_p(g: &GroupId) -> Vec<u64> {
    let p = g.characteristic().unwrap();
    orders::pi(g).unwrap().into_iter().filter(|&r| r != 2 && r != p).collect()
}

// hosts whose tuple count exceeds the enumeration bound are skipped
fn classes(host: &GroupId, r: u64) -> Vec<semisimple::ClassTuple> {
    match semisimple::enumerate_classes(host, r) {
        Ok(v) => v,
        Err(primegraph::Error::BoundExceeded { .. }) => Vec::new(),
        Err(e) => panic!("{host} r = {r}: {e}"),
    }
}

fn sign_rule_holds(eps: Sign, i: u32, weight: u32, ell: u32, form: Option<FormSign>) -> bool {
    let plus = form == Some(FormSign::Plus);
    let minus = form == Some(FormSign::Minus);
    match (eps, i % 2 == 1) {
        (Sign::Plus, true) => ell == 0 || plus,
        (Sign::Plus, false) => (weight % 2 == 0 && (ell == 0 || plus)) || (weight % 2 == 1 && ell > 0 && minus),
        (Sign::Minus, true) => ell > 0 && minus,
        (Sign::Minus, false) => (weight % 2 == 1 && (ell == 0 || plus)) || (weight % 2 == 0 && ell > 0 && minus),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn class_tuples_respect_sign_rules(host in classical_host()) {
        let Family::OrthogonalEven { sign, .. } = host.family else { return Ok(()) };
        for r in odd_primes_except_p(&host) {
            for t in classes(&host, r) {
                prop_assert!(sign_rule_holds(sign, t.i, t.weight(), t.ell, t.eps), "{:?}", t);
                if t.i % 2 == 1 {
                    let half = t.a.len() / 2;
                    prop_assert_eq!(&t.a[..half], &t.a[half..]);
                }
            }
        }
    }

    #[test]
    fn centralizer_factors_divide_host(host in classical_host()) {
        let order = orders::order(&host).unwrap().order;
        for r in odd_primes_except_p(&host) {
            for t in classes(&host, r) {
                let c = semisimple::centralizer_order(&t).unwrap();
                prop_assert!(c.odd_part_exact.divides(&order), "{:?}", t);
                prop_assert!(c.odd_part_exact.is_divisible_by_prime(r));
            }
        }
    }

    #[test]
    fn certificates_never_contradict_bounds(host in classical_host()) {
        prop_assert!(certificates::check_divides_host(&host).unwrap());
        let p = host.characteristic().unwrap();
        let (suff, nec) = certificates::unipotent_data(&host).unwrap();
        for s in orders::pi(&host).unwrap() {
            if s == p || s == 2 {
                continue;
            }
            let present = suff.iter().any(|c| c.decides(s).unwrap() == Some(true));
            let excluded = nec.iter().any(|b| b.excludes(s).unwrap())
                || suff.iter().any(|c| c.decides(s).unwrap() == Some(false));
            prop_assert!(!(present && excluded), "{} s = {}", host, s);
        }
    }
}

#[test]
fn n_bound_majorizes_centralizers() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for host in [GroupId::symplectic(8, q), GroupId::omega_even(8, q, Sign::Plus), GroupId::symplectic(4, q)] {
            let p = host.characteristic().unwrap();
            for r in odd_primes_except_p(&host) {
                for t in classes(&host, r) {
                    let n = semisimple::n_bound(&host, t.i).unwrap();
                    let c = semisimple::centralizer_order(&t).unwrap();
                    for s in c.odd_part_exact.primes() {
                        if s != p {
                            assert_eq!(&n % s, BigUint::from(0u32), "{host} r = {r} i = {} s = {s}", t.i);
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn intransitive_edges_lie_in_alternating(n in 5u64..=60, k in 1u64..60, a in 0usize..17, b in 0usize..17) {
        prop_assume!(k < n);
        let primes: Vec<u64> = (2..=n).filter(|&p| trial_prime(p)).collect();
        let (r, s) = (primes[a % primes.len()], primes[b % primes.len()]);
        prop_assume!(r < s);
        if altgraph::adjacent_intransitive(n, k, r, s) {
            prop_assert!(altgraph::adjacent_alternating(n, r, s));
        }
    }

    #[test]
    fn alternating_adjacency_closed_form(n in 5u64..=200, a in 0usize..46, b in 0usize..46) {
        let primes: Vec<u64> = (2..=200).filter(|&p| trial_prime(p)).collect();
        let (r, s) = (primes[a], primes[b]);
        prop_assume!(r < s);
        let e = |p: u64| if p == 2 { 4 } else { p };
        prop_assert_eq!(altgraph::adjacent_alternating(n, r, s), e(r) + e(s) <= n);
    }

    #[test]
    fn gc2_predicate_matches_graph_comparison(half in 7u64..=1000) {
        let n = 2 * half + 1;
        prop_assume!(!trial_prime(n));
        let sieve = Sieve::new(n + 1);
        let cmp = altgraph::compare_nested_exhaustive(n);
        prop_assert_eq!(cmp.equal(), altgraph::gc2_predicate(n).unwrap());
        prop_assert_eq!(cmp, altgraph::compare_nested(n, &sieve));
    }

    #[test]
    fn sampling_is_deterministic_and_sound(seed in any::<u64>(), budget in 0u64..400) {
        let p = oracle::presentation_for(&GroupId::symplectic(4, 3)).unwrap().unwrap();
        let a = oracle::sample_spectrum(&p, budget, seed).unwrap();
        prop_assert_eq!(&a, &oracle::sample_spectrum(&p, budget, seed).unwrap());
        for (&order, &step) in &a.sample.as_ref().unwrap().witnesses {
            prop_assert_eq!(oracle::replay_sample(&p, seed, step).unwrap(), order);
        }
        let exact = [1u64, 2, 3, 4, 5, 6, 9, 12];
        prop_assert!(a.orders.iter().all(|o| exact.contains(o)));
    }

    #[test]
    fn replayed_witnesses_revalidate(m in prop::sample::select(vec![6u32, 8, 10, 12, 14]), q in prop::sample::select(vec![2u64, 4])) {
        for prop in [Proposition::SymplecticOMinus, Proposition::OmegaPlusSymplectic] {
            let rep = engine::replay_witness(prop, m, q).unwrap();
            prop_assert!(rep.reproduced().unwrap(), "{} m = {} q = {}", prop, m, q);
        }
    }
}

#[test]
fn alternating_graphs_match_cycle_types() {
    for n in 5..=13u32 {
        for g in [GroupId::alternating(n), GroupId::symmetric(n)] {
            let spec = oracle::cycle_type_spectrum(&g).unwrap();
            let pi = orders::pi(&g).unwrap();
            for &r in &pi {
                for &s in pi.iter().filter(|&&s| s > r) {
                    let by_spectrum = spec.orders.iter().any(|o| o % (r * s) == 0);
                    assert_eq!(altgraph::adjacent_in(&g, r, s).unwrap(), by_spectrum, "{g} {r} {s}");
                }
            }
        }
    }
    assert_eq!(altgraph::min_support(35, Parity::Even), Some(12));
}

#[test]
fn spectra_are_divisor_closed() {
    let mut reports = vec![oracle::cycle_type_spectrum(&GroupId::intransitive(7, 12)).unwrap()];
    for g in [GroupId::symplectic(4, 3), GroupId::linear(2, 25), GroupId::parabolic(GroupId::unitary(4, 2), 2)] {
        let p = oracle::presentation_for(&g).unwrap().unwrap();
        reports.push(oracle::enumerate_spectrum(&p, 100_000).unwrap());
    }
    for rep in reports {
        for &o in &rep.orders {
            for d in (1..=o).filter(|d| o % d == 0) {
                assert!(rep.orders.contains(&d), "{}: {d} | {o}", rep.label);
            }
        }
    }
}

#[test]
fn subgroup_edges_lie_in_supergroup() {
    for row in engine::main_table_rows().into_iter().filter(|r| r.q.is_some()) {
        let g = engine::compute_graph(&row.g, &Policy::formulas_only()).unwrap();
        let h = engine::compute_graph(&row.h, &Policy::formulas_only()).unwrap();
        assert!(h.vertices.iter().all(|v| g.vertices.contains(v)));
        for e in h.present_edges() {
            assert!(g.present_edges().contains(&e), "{} vs {}: {e:?}", row.g, row.h);
        }
    }
}
