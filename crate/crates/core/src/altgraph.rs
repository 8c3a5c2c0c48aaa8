//! Prime graphs of alternating and symmetric groups and of intransitive
//! subgroups `(S_k × S_{n-k}) ∩ A_n`, via cycle types; plus the scanners for
//! the Goldbach-type statements about them.

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Reverse;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Family, GroupId};
use crate::numtheory::{is_prime, Sieve};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Any,
}

fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Least total length of a set of disjoint cycles whose lengths have lcm `m` and whose
/// product has the given parity; `None` when no such set exists.
///
/// Shortest path over states (lcm so far, parity), adding one cycle of length `d | m`
/// at a time, so repeated cycle lengths are covered.
pub fn min_support_uncached(m: u64, parity: Parity) -> Option<u64> {
    let divs = divisors(m);
    let index: HashMap<u64, usize> = divs.iter().enumerate().map(|(k, &d)| (d, k)).collect();
    let mut dist = vec![[u64::MAX; 2]; divs.len()];
    let mut heap = BinaryHeap::new();
    dist[0][0] = 0;
    heap.push(Reverse((0u64, 0usize, 0usize)));
    while let Some(Reverse((cost, l, par))) = heap.pop() {
        if cost > dist[l][par] {
            continue;
        }
        for &d in &divs[1..] {
            let nl = index[&num_integer::lcm(divs[l], d)];
            let np = par ^ ((d as usize - 1) & 1);
            let nc = cost + d;
            if nc < dist[nl][np] {
                dist[nl][np] = nc;
                heap.push(Reverse((nc, nl, np)));
            }
        }
    }
    let top = &dist[divs.len() - 1];
    let pick = match parity {
        Parity::Even => top[0],
        Parity::Odd => top[1],
        Parity::Any => top[0].min(top[1]),
    };
    (pick != u64::MAX).then_some(pick)
}

/// Memoized [`min_support_uncached`].
pub fn min_support(m: u64, parity: Parity) -> Option<u64> {
    static MEMO: OnceLock<Mutex<HashMap<(u64, Parity), Option<u64>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = memo.lock().ok().and_then(|g| g.get(&(m, parity)).copied()) {
        return v;
    }
    let v = min_support_uncached(m, parity);
    if let Ok(mut g) = memo.lock() {
        g.insert((m, parity), v);
    }
    v
}

/// `e(2) = 4`, `e(p) = p` for odd `p`.
pub fn e(p: u64) -> u64 {
    if p == 2 {
        4
    } else {
        p
    }
}

pub fn adjacent_alternating(n: u64, r: u64, s: u64) -> bool {
    min_support(r * s, Parity::Even).is_some_and(|v| v <= n)
}

pub fn adjacent_symmetric(n: u64, r: u64, s: u64) -> bool {
    min_support(r * s, Parity::Any).is_some_and(|v| v <= n)
}

fn fits(d: u64, parity: Parity, degree: u64) -> bool {
    min_support(d, parity).is_some_and(|v| v <= degree)
}

/// `r ~ s` in `(S_k × S_{n-k}) ∩ A_n`.
pub fn adjacent_intransitive(n: u64, k: u64, r: u64, s: u64) -> bool {
    let m = r * s;
    let divs = divisors(m);
    for &d1 in &divs {
        for &d2 in &divs {
            if num_integer::lcm(d1, d2) != m {
                continue;
            }
            for (p1, p2) in [(Parity::Even, Parity::Even), (Parity::Odd, Parity::Odd)] {
                if fits(d1, p1, k) && fits(d2, p2, n - k) {
                    return true;
                }
            }
        }
    }
    false
}

/// Cycle-type adjacency in any group this module handles.
pub fn adjacent_in(group: &GroupId, r: u64, s: u64) -> Result<bool> {
    match &group.family {
        Family::Alternating { n } => Ok(adjacent_alternating(*n as u64, r, s)),
        Family::Symmetric { n } => Ok(adjacent_symmetric(*n as u64, r, s)),
        Family::DirectFactorIntersection { k, n } => Ok(adjacent_intransitive(*n as u64, *k as u64, r, s)),
        _ => Err(Error::Unsupported(format!("{group} is not a permutation-type group"))),
    }
}

/// Least degree carrying an element of order `rs` of the sign the group requires.
pub fn pair_minimal_support(group: &GroupId, r: u64, s: u64) -> Option<u64> {
    match &group.family {
        Family::Alternating { .. } => min_support(r * s, Parity::Even),
        Family::Symmetric { .. } => min_support(r * s, Parity::Any),
        _ => None,
    }
}

/// Every prime `p ≤ n` satisfies `p ≤ k`.
pub fn pi_condition(n: u64, k: u64) -> bool {
    (k + 1..=n).all(|p| !is_prime(p))
}

/// `Γ(A_{p+1}) ≠ Γ(A_p)`, via distinct primes summing to `p + 1`.
pub fn gc1_predicate(p: u64) -> Result<bool> {
    if p < 7 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not a prime ≥ 7")));
    }
    Ok(crate::numtheory::goldbach_distinct_pair(p + 1, None).is_some())
}

/// `Γ(A_n) = Γ(A_{n-1})` for odd `n ≥ 15`, via compositeness of `n - 4`.
pub fn gc2_predicate(n: u64) -> Result<bool> {
    if n < 15 || n % 2 == 0 {
        return Err(Error::InvalidArgument(format!("{n} is not an odd integer ≥ 15")));
    }
    Ok(!is_prime(n - 4))
}

/// Conjectured answer to `Γ(A_n) = Γ((S_k × S_{n-k}) ∩ A_n)`.
pub fn conjectured_equal(n: u64, k: u64) -> bool {
    matches!((n, k), (6, 5) | (10, 7)) || (n >= 25 && n % 2 == 1 && k == n - 1 && !is_prime(n - 4))
}

/// Edges of `Γ(A_n)` that are missing from `Γ(A_{n-1})`: exactly the prime pairs whose
/// minimal even support is `n`.
///
/// Any cycle set realizing order `rs` uses at least `r + s` points. Two odd primes need
/// exactly `r + s`, so only `r + s = n` can qualify; with `r = 2` the cycle type `2^2 s`
/// bounds the support by `s + 4`, leaving `s ∈ [n-4, n-2]`. Each candidate is then settled
/// by the exact search.
pub fn nested_difference(n: u64, sieve: &Sieve) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for s in n.saturating_sub(4)..=n.saturating_sub(2) {
        if s > 2 && sieve.is_prime(s) && min_support_uncached(2 * s, Parity::Even) == Some(n) {
            out.push((2, s));
        }
    }
    if n % 2 == 0 {
        for r in (3..n / 2).step_by(2) {
            let s = n - r;
            if sieve.is_prime(r) && sieve.is_prime(s) && min_support_uncached(r * s, Parity::Even) == Some(n) {
                out.push((r, s));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Full comparison of `Γ(A_n)` with `Γ(A_{n-1})`: vertex sets and edge sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestedComparison {
    pub n: u64,
    pub same_vertices: bool,
    pub missing_edges: Vec<(u64, u64)>,
}

impl NestedComparison {
    pub fn equal(&self) -> bool {
        self.same_vertices && self.missing_edges.is_empty()
    }
}

pub fn compare_nested(n: u64, sieve: &Sieve) -> NestedComparison {
    NestedComparison { n, same_vertices: !sieve.is_prime(n), missing_edges: nested_difference(n, sieve) }
}

/// Brute comparison of `Γ(A_n)` and `Γ(A_{n-1})` running the exact search on every prime pair.
pub fn compare_nested_exhaustive(n: u64) -> NestedComparison {
    let primes: Vec<u64> = (2..=n).filter(|&p| is_prime(p)).collect();
    let mut missing = Vec::new();
    for (a, &r) in primes.iter().enumerate() {
        for &s in &primes[a + 1..] {
            if adjacent_alternating(n, r, s) && !adjacent_alternating(n - 1, r, s) {
                missing.push((r, s));
            }
        }
    }
    NestedComparison { n, same_vertices: !is_prime(n), missing_edges: missing }
}

/// Report line of the intransitive-subgroup scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanLine {
    pub n: u64,
    pub k: u64,
    pub equal: bool,
    pub witness_edge: Option<(u64, u64)>,
    pub predicted: bool,
    pub agrees: bool,
}

/// Compares `Γ(A_n)` with `Γ((S_k × S_{n-k}) ∩ A_n)` for every `5 ≤ n ≤ n_max` and every
/// `k` with [`pi_condition`]. Pairs are ranked by minimal even support once; for a given
/// `(n, k)` only pairs with support in `(max(k, n-k), n]` can fail, since smaller ones are
/// realized inside one of the two alternating factors.
pub fn intransitive_scan(n_min: u64, n_max: u64) -> Result<Vec<ScanLine>> {
    if n_min < 5 || n_max < n_min {
        return Err(Error::Range(format!("invalid scan range [{n_min}, {n_max}]")));
    }
    if n_max > 20_000 {
        return Err(Error::Range(format!("n_max = {n_max} exceeds the scan bound 20000")));
    }
    let sieve = Sieve::new(n_max + 1);
    let primes: Vec<u64> = sieve.primes().collect();
    let mut ranked: Vec<(u64, u64, u64)> = Vec::new();
    for (a, &r) in primes.iter().enumerate() {
        for &s in &primes[a + 1..] {
            if r + s > n_max {
                break;
            }
            if let Some(v) = min_support(r * s, Parity::Even) {
                if v <= n_max {
                    ranked.push((v, r, s));
                }
            }
        }
    }
    ranked.sort_unstable();
    let mut out = Vec::new();
    for n in n_min..=n_max {
        for k in 2..n {
            if !pi_condition_sieve(n, k, &sieve) {
                continue;
            }
            let big = k.max(n - k);
            // π(H) is the set of primes ≤ max(k, n-k) together with 2 when the group has even order
            let same_vertices = primes.iter().take_while(|&&p| p <= n).all(|&p| p <= big);
            let lo = ranked.partition_point(|&(v, _, _)| v <= big);
            let hi = ranked.partition_point(|&(v, _, _)| v <= n);
            let witness = ranked[lo..hi]
                .iter()
                .find(|&&(_, r, s)| !adjacent_intransitive(n, k, r, s))
                .map(|&(_, r, s)| (r, s));
            let equal = same_vertices && witness.is_none();
            let predicted = conjectured_equal(n, k);
            out.push(ScanLine { n, k, equal, witness_edge: witness, predicted, agrees: equal == predicted });
        }
    }
    Ok(out)
}

fn pi_condition_sieve(n: u64, k: u64, sieve: &Sieve) -> bool {
    (k + 1..=n).all(|p| !sieve.is_prime(p))
}

/// Result of the Goldbach-variant scan over even `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldbachReport {
    pub lo: u64,
    pub hi: u64,
    pub checked: u64,
    pub counterexamples: Vec<u64>,
}

/// For each even `n` in `[lo, hi]`, looks for primes `r < s < p` with `r + s = n`, where
/// `p` is the largest prime below `n`.
pub fn goldbach_variant_scan(lo: u64, hi: u64) -> Result<GoldbachReport> {
    if lo < 4 || hi < lo {
        return Err(Error::Range(format!("invalid scan range [{lo}, {hi}]")));
    }
    if hi > 1_000_000_000 {
        return Err(Error::Range(format!("hi = {hi} exceeds the scan bound 10^9")));
    }
    let sieve = Sieve::new(hi + 1);
    let mut report = GoldbachReport { lo, hi, checked: 0, counterexamples: Vec::new() };
    let mut largest_below = 2;
    let mut next = 2;
    let start = if lo % 2 == 0 { lo } else { lo + 1 };
    let mut n = start;
    while n <= hi {
        while next < n {
            if sieve.is_prime(next) {
                largest_below = next;
            }
            next += 1;
        }
        let cap = largest_below;
        let found = crate::numtheory::goldbach_distinct_pair_by(n, Some(cap), |x| sieve.is_prime(x));
        report.checked += 1;
        if found.is_none() {
            report.counterexamples.push(n);
        }
        n += 2;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_support_examples() {
        assert_eq!(min_support(1, Parity::Even), Some(0));
        assert_eq!(min_support(1, Parity::Odd), None);
        assert_eq!(min_support(35, Parity::Even), Some(12));
        assert_eq!(min_support(14, Parity::Even), Some(11));
        assert_eq!(min_support(6, Parity::Even), Some(7));
        assert_eq!(min_support(6, Parity::Any), Some(5));
        assert_eq!(min_support(2, Parity::Odd), Some(2));
        assert_eq!(min_support(2, Parity::Even), Some(4));
    }

    #[test]
    fn alternating_examples() {
        assert!(adjacent_alternating(12, 5, 7));
        assert!(!adjacent_alternating(11, 5, 7));
        assert!(!adjacent_alternating(10, 2, 7));
        for (r, s) in [(2, 3), (2, 5), (3, 5)] {
            assert!(!adjacent_alternating(6, r, s));
        }
    }

    #[test]
    fn intransitive_examples() {
        assert!(adjacent_intransitive(10, 7, 3, 5));
        assert!(!adjacent_intransitive(6, 5, 2, 3));
        // s = n - 4 prime, k = n - 1
        assert!(!adjacent_intransitive(17, 16, 2, 13));
        assert!(adjacent_alternating(17, 2, 13));
    }

    #[test]
    fn pi_condition_examples() {
        assert!(pi_condition(10, 7));
        assert!(!pi_condition(12, 7));
        assert!(pi_condition(25, 24));
    }

    #[test]
    fn gc_predicates() {
        assert!(gc1_predicate(7).unwrap());
        assert!(gc1_predicate(11).unwrap());
        assert!(gc1_predicate(5).is_err());
        assert!(gc2_predicate(25).unwrap());
        assert!(!gc2_predicate(15).unwrap());
        assert!(gc2_predicate(49).unwrap());
        let sieve = Sieve::new(101);
        assert!(!compare_nested(15, &sieve).equal());
        assert!(compare_nested(25, &sieve).equal());
        // A_6 versus A_5: no edges on either side
        assert!(compare_nested_exhaustive(6).missing_edges.is_empty());
    }

    #[test]
    fn small_scan_classification() {
        let lines = intransitive_scan(5, 40).unwrap();
        let equal: Vec<(u64, u64)> = lines.iter().filter(|l| l.equal).map(|l| (l.n, l.k)).collect();
        assert_eq!(equal, vec![(6, 5), (10, 7), (25, 24), (39, 38)]);
        assert!(lines.iter().all(|l| l.agrees));
    }

    #[test]
    fn goldbach_small() {
        let r = goldbach_variant_scan(12, 10_000).unwrap();
        assert!(r.counterexamples.is_empty());
        assert_eq!(goldbach_variant_scan(10, 10).unwrap().counterexamples, vec![10]);
    }
}
