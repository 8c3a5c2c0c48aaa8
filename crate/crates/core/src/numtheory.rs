//! Exact integer primitives: primality, factorization, multiplicative orders,
//! primitive prime divisors, a segmented sieve and distinct Goldbach pairs.
//!
//! Every routine here is deterministic. Primality below 2^64 uses a fixed
//! Miller-Rabin base set that is known to be exact on that range; above it the
//! first 64 primes are used as bases, so results are reproducible run to run.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Block length of the segmented sieve.
pub const SIEVE_BLOCK: u64 = 1 << 20;

/// Number of Miller-Rabin rounds used for integers at or above 2^64.
pub const BIG_MR_ROUNDS: usize = 64;

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn miller_rabin_u64(n: u64, a: u64) -> bool {
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test on the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    SMALL_PRIMES.iter().all(|&a| miller_rabin_u64(n, a))
}

fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2;
    while out.len() < count {
        if is_prime(n) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// Primality for arbitrary size: exact below 2^64, otherwise
/// [`BIG_MR_ROUNDS`] Miller-Rabin rounds with the first primes as bases.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'bases: for a in first_primes(BIG_MR_ROUNDS) {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Returns `(p, f)` when `q = p^f` with `p` prime and `f >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    if is_prime(q) {
        return Some((q, 1));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut rest = q;
            let mut f = 0;
            while rest % p == 0 {
                rest /= p;
                f += 1;
            }
            return (rest == 1).then_some((p, f));
        }
        p += 1;
    }
    None
}

fn pollard_brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g, mut q) = (2u64, 2u64, 1u64, 1u64);
        let mut ys = 0u64;
        let mut r = 1u64;
        let m = 128u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    let mut n = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_brent_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
}

fn pollard_brent_big(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x;
        let mut y = BigUint::from(2u32);
        let mut ys = y.clone();
        let mut g = one.clone();
        let mut q = one.clone();
        let mut r = 1u64;
        let m = 256u64;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (&q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
            if g == one {
                continue;
            }
            if &g == n {
                loop {
                    ys = f(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    g = diff.gcd(n);
                    if g > one {
                        break;
                    }
                }
            }
        }
        if &g != n {
            return g;
        }
        c += 1u32;
    }
}

/// A positive integer held together with its prime factorization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: BigUint,
    factors: BTreeMap<BigUint, u32>,
}

impl Factorization {
    pub fn one() -> Self {
        Factorization { value: BigUint::one(), factors: BTreeMap::new() }
    }

    /// Builds from `(prime, exponent)` pairs. Primes are assumed certified by the caller.
    pub fn from_prime_powers<I: IntoIterator<Item = (BigUint, u32)>>(pairs: I) -> Self {
        let mut f = Factorization::one();
        for (p, e) in pairs {
            if e == 0 {
                continue;
            }
            f.value *= num_traits::pow(p.clone(), e as usize);
            *f.factors.entry(p).or_insert(0) += e;
        }
        f
    }

    pub fn of_u64(n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut map = BTreeMap::new();
        factor_u64_into(n, &mut map);
        Factorization::from_prime_powers(map.into_iter().map(|(p, e)| (BigUint::from(p), e)))
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> impl Iterator<Item = (&BigUint, u32)> {
        self.factors.iter().map(|(p, e)| (p, *e))
    }

    pub fn primes(&self) -> Vec<u64> {
        self.factors.keys().filter_map(|p| p.to_u64()).collect()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors.get(&BigUint::from(p)).copied().unwrap_or(0)
    }

    pub fn is_divisible_by_prime(&self, p: u64) -> bool {
        self.exponent_of(p) > 0
    }

    pub fn mul(&self, other: &Factorization) -> Factorization {
        let mut out = self.clone();
        out.value *= &other.value;
        for (p, e) in &other.factors {
            *out.factors.entry(p.clone()).or_insert(0) += e;
        }
        out
    }

    pub fn pow(&self, k: u32) -> Factorization {
        let mut out = Factorization::one();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact quotient; fails when `other` does not divide `self`.
    pub fn div(&self, other: &Factorization) -> Result<Factorization> {
        let mut out = self.clone();
        for (p, e) in &other.factors {
            let have = out.factors.get(p).copied().unwrap_or(0);
            if have < *e {
                return Err(Error::Arithmetic(format!("{} does not divide {}", other.value, self.value)));
            }
            if have == *e {
                out.factors.remove(p);
            } else {
                out.factors.insert(p.clone(), have - e);
            }
        }
        out.value = &self.value / &other.value;
        Ok(out)
    }

    /// Divides by `2^k`, failing when the 2-part is too small.
    pub fn div_pow2(&self, k: u32) -> Result<Factorization> {
        self.div(&Factorization::from_prime_powers([(BigUint::from(2u32), k)]))
    }

    pub fn divides(&self, other: &Factorization) -> bool {
        self.factors.iter().all(|(p, e)| other.factors.get(p).copied().unwrap_or(0) >= *e)
    }

    /// The part of the value coprime to 2.
    pub fn odd_part(&self) -> Factorization {
        let mut out = self.clone();
        if let Some(e) = out.factors.remove(&BigUint::from(2u32)) {
            out.value >>= e as usize;
        }
        out
    }

    /// Checks the invariants: primes certified, product equals the value.
    pub fn validate(&self) -> bool {
        let mut prod = BigUint::one();
        for (p, e) in &self.factors {
            if *e == 0 || !is_prime_big(p) {
                return false;
            }
            prod *= num_traits::pow(p.clone(), *e as usize);
        }
        prod == self.value
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.value)?;
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Serialized as `[[p, e], ...]`; primes above `u64` are written as strings.
impl Serialize for Factorization {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for (p, e) in &self.factors {
            match p.to_u64() {
                Some(small) => seq.serialize_element(&(small, *e))?,
                None => seq.serialize_element(&(p.to_string(), *e))?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Factorization {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Prime {
            Small(u64),
            Big(String),
        }
        let raw: Vec<(Prime, u32)> = Vec::deserialize(deserializer)?;
        let mut pairs = Vec::with_capacity(raw.len());
        for (p, e) in raw {
            let p = match p {
                Prime::Small(v) => BigUint::from(v),
                Prime::Big(s) => s.parse::<BigUint>().map_err(serde::de::Error::custom)?,
            };
            pairs.push((p, e));
        }
        Ok(Factorization::from_prime_powers(pairs))
    }
}

/// Factors any `n >= 1`. Trial division, then Pollard-Brent.
pub fn factor(n: &BigUint) -> Factorization {
    assert!(!n.is_zero(), "factor(0)");
    if let Some(small) = n.to_u64() {
        return Factorization::of_u64(small);
    }
    let mut out: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();
    let mut d = 2u64;
    while d < 100_000 {
        let big_d = BigUint::from(d);
        while (&rest % &big_d).is_zero() {
            *out.entry(big_d.clone()).or_insert(0) += 1;
            rest /= &big_d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(small) = m.to_u64() {
            let mut map = BTreeMap::new();
            factor_u64_into(small, &mut map);
            for (p, e) in map {
                *out.entry(BigUint::from(p)).or_insert(0) += e;
            }
            continue;
        }
        if is_prime_big(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_brent_big(&m);
        let other = &m / &d;
        stack.push(d);
        stack.push(other);
    }
    Factorization::from_prime_powers(out)
}

/// Factorization of `q^k - sign` for `sign` in `{+1, -1}`; `q^k + 1` when `sign == -1`.
pub fn factor_qpow_minus(q: u64, k: u32, sign: i8) -> Factorization {
    let qk = num_traits::pow(BigUint::from(q), k as usize);
    let v = if sign > 0 { qk - 1u32 } else { qk + 1u32 };
    factor(&v)
}

/// Multiplicative order of `q` modulo the prime `r`: the least `a >= 1` with `r | q^a - 1`.
pub fn phi_order(r: u64, q: u64) -> Result<u64> {
    if r < 2 || !is_prime(r) {
        return Err(Error::InvalidArgument(format!("{r} is not prime")));
    }
    if q % r == 0 {
        return Err(Error::InvalidArgument(format!("{r} divides {q}")));
    }
    let mut order = r - 1;
    let phi = Factorization::of_u64(r - 1);
    for p in phi.primes() {
        while order % p == 0 && pow_mod(q, order / p, r) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

fn mobius(n: u64) -> i8 {
    let f = Factorization::of_u64(n);
    if f.factors().any(|(_, e)| e > 1) {
        0
    } else if f.factors().count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Value of the `e`-th cyclotomic polynomial at `q`.
pub fn cyclotomic_value(q: u64, e: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for d in 1..=e {
        if e % d != 0 {
            continue;
        }
        let term = num_traits::pow(BigUint::from(q), d as usize) - 1u32;
        match mobius((e / d) as u64) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    num / den
}

/// Part of `Φ_e(q)` coprime to `e`. Its prime divisors are exactly the
/// primitive prime divisors of `q^e - 1`.
fn primitive_part(q: u64, e: u32) -> BigUint {
    let mut v = cyclotomic_value(q, e);
    for p in Factorization::of_u64(e as u64).primes() {
        let big_p = BigUint::from(p);
        while (&v % &big_p).is_zero() {
            v /= &big_p;
        }
    }
    v
}

/// Whether `q^e - 1` has a primitive prime divisor, without factoring.
pub fn ppd_exists(q: u64, e: u32) -> bool {
    e >= 2 && !primitive_part(q, e).is_one()
}

/// Largest primitive prime divisor of `q^e - 1` that fits in a `u64`, if any.
///
/// Primitive divisors exist except on `e = 1`, `(q, 2)` with `q` a Mersenne prime, and `(2, 6)`.
pub fn ppd(q: u64, e: u32) -> Option<u64> {
    if e < 2 {
        return None;
    }
    let part = primitive_part(q, e);
    if part.is_one() {
        return None;
    }
    let f = factor(&part);
    let r = f.factors().filter_map(|(p, _)| p.to_u64()).max()?;
    debug_assert_eq!(phi_order(r, q).ok(), Some(e as u64));
    Some(r)
}

/// Least prime not dividing `m`.
pub fn smallest_prime_not_dividing(m: u64) -> u64 {
    let mut p = 2;
    loop {
        if is_prime(p) && m % p != 0 {
            return p;
        }
        p += 1;
    }
}

/// Largest prime strictly below `n`, if any.
pub fn largest_prime_below(n: u64) -> Option<u64> {
    (2..n).rev().find(|&k| is_prime(k))
}

/// Least-`r` pair of distinct primes `r < s` with `r + s = n`, and `s < cap` when given.
pub fn goldbach_distinct_pair(n: u64, cap: Option<u64>) -> Option<(u64, u64)> {
    goldbach_distinct_pair_by(n, cap, is_prime)
}

pub fn goldbach_distinct_pair_by(
    n: u64,
    cap: Option<u64>,
    prime: impl Fn(u64) -> bool,
) -> Option<(u64, u64)> {
    let mut r = 2;
    while 2 * r < n {
        let s = n - r;
        if prime(r) && prime(s) && cap.map_or(true, |c| s < c) {
            return Some((r, s));
        }
        r += 1;
    }
    None
}

/// Primality bitmap over `[0, limit)`, built block by block.
pub struct Sieve {
    limit: u64,
    bits: Vec<u64>,
}

fn base_primes(limit: u64) -> Vec<u64> {
    let root = (limit as f64).sqrt() as u64 + 2;
    let mut composite = vec![false; root as usize + 1];
    let mut out = Vec::new();
    for i in 2..=root {
        if !composite[i as usize] {
            out.push(i);
            let mut j = i * i;
            while j <= root {
                composite[j as usize] = true;
                j += i;
            }
        }
    }
    out
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let words = (limit as usize + 63) / 64;
        let mut bits = vec![0u64; words];
        for_each_prime_segmented(0, limit, |p| {
            bits[(p / 64) as usize] |= 1 << (p % 64);
        });
        Sieve { limit, bits }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    #[inline]
    pub fn is_prime(&self, n: u64) -> bool {
        if n >= self.limit {
            return is_prime(n);
        }
        self.bits[(n / 64) as usize] >> (n % 64) & 1 == 1
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.limit).filter(move |&n| self.is_prime(n))
    }
}

/// Calls `visit` on every prime in `[lo, hi)` in increasing order, sieving
/// blocks of [`SIEVE_BLOCK`] integers at a time.
pub fn for_each_prime_segmented(lo: u64, hi: u64, mut visit: impl FnMut(u64)) {
    if hi <= 2 || hi <= lo {
        return;
    }
    let base = base_primes(hi);
    let mut start = lo.max(2);
    let mut block = vec![true; SIEVE_BLOCK as usize];
    while start < hi {
        let end = (start + SIEVE_BLOCK).min(hi);
        let len = (end - start) as usize;
        block[..len].iter_mut().for_each(|b| *b = true);
        for &p in &base {
            if p * p >= end {
                break;
            }
            let mut j = (start.div_ceil(p) * p).max(p * p);
            while j < end {
                block[(j - start) as usize] = false;
                j += p;
            }
        }
        for (i, &flag) in block[..len].iter().enumerate() {
            if flag {
                visit(start + i as u64);
            }
        }
        start = end;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division(mut n: u64) -> BTreeMap<u64, u32> {
        let mut out = BTreeMap::new();
        let mut d = 2;
        while d * d <= n {
            while n % d == 0 {
                *out.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += 1;
        }
        if n > 1 {
            *out.entry(n).or_insert(0) += 1;
        }
        out
    }

    fn as_map(f: &Factorization) -> BTreeMap<u64, u32> {
        f.factors().map(|(p, e)| (p.to_u64().unwrap(), e)).collect()
    }

    #[test]
    fn factor_examples() {
        assert_eq!(as_map(&factor(&BigUint::from(1u32))), BTreeMap::new());
        assert_eq!(as_map(&factor(&BigUint::from(720u32))), trial_division(720));
        assert_eq!(as_map(&factor(&BigUint::from(720u32))), BTreeMap::from([(2, 4), (3, 2), (5, 1)]));
        assert_eq!(as_map(&factor(&BigUint::from(255u32))), BTreeMap::from([(3, 1), (5, 1), (17, 1)]));
    }

    #[test]
    fn factor_agrees_with_trial_division() {
        for n in (1..5000u64).chain([999_983 * 1_000_003, 600_851_475_143]) {
            let f = Factorization::of_u64(n);
            assert!(f.validate());
            if n < 5000 {
                assert_eq!(as_map(&f), trial_division(n), "n = {n}");
            }
        }
    }

    #[test]
    fn factor_big_values() {
        let n = num_traits::pow(BigUint::from(2u32), 128) - 1u32;
        let f = factor(&n);
        assert!(f.validate());
        assert_eq!(f.primes().len(), 9);
    }

    #[test]
    fn primality_matches_sieve() {
        let sieve = Sieve::new(200_000);
        for n in 0..200_000 {
            assert_eq!(is_prime(n), sieve.is_prime(n), "n = {n}");
        }
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751));
    }

    #[test]
    fn phi_order_examples() {
        assert_eq!(phi_order(5, 2).unwrap(), 4);
        assert_eq!(phi_order(3, 4).unwrap(), 1);
        assert_eq!(phi_order(17, 2).unwrap(), 8);
        assert!(phi_order(3, 9).is_err());
    }

    fn brute_phi(r: u64, q: u64) -> u64 {
        let mut a = 1;
        let mut x = q % r;
        while x != 1 {
            x = x * (q % r) % r;
            a += 1;
        }
        a
    }

    #[test]
    fn phi_order_matches_scan() {
        for r in (3..2000).filter(|&r| is_prime(r)) {
            for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64] {
                if q % r != 0 {
                    assert_eq!(phi_order(r, q).unwrap(), brute_phi(r, q));
                }
            }
        }
    }

    #[test]
    fn ppd_examples() {
        assert_eq!(ppd(2, 6), None);
        assert_eq!(ppd(2, 4), Some(5));
        assert_eq!(ppd(2, 8), Some(17));
        assert_eq!(ppd(2, 3), Some(7));
        assert_eq!(ppd(2, 5), Some(31));
        assert_eq!(ppd(3, 6), Some(7));
        assert_eq!(ppd(7, 2), None);
        assert_eq!(ppd(5, 2), Some(3));
    }

    #[test]
    fn ppd_matches_brute_force_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            for e in 2..=12u32 {
                let value = num_traits::pow(BigUint::from(q), e as usize) - 1u32;
                let f = factor(&value);
                let best = f
                    .primes()
                    .into_iter()
                    .filter(|&r| brute_phi(r, q) == e as u64)
                    .max();
                assert_eq!(ppd(q, e), best, "q = {q}, e = {e}");
                if let Some(r) = best {
                    assert_eq!(r % e as u64, 1);
                }
            }
        }
    }

    #[test]
    fn smallest_prime_not_dividing_examples() {
        assert_eq!(smallest_prime_not_dividing(8), 3);
        assert_eq!(smallest_prime_not_dividing(6), 5);
        assert_eq!(smallest_prime_not_dividing(12), 5);
        for m in (8..2000).step_by(2) {
            let l = smallest_prime_not_dividing(m);
            assert!(m % l != 0 && l % 2 == 1 && 2 * l < m);
        }
    }

    #[test]
    fn goldbach_examples() {
        assert_eq!(goldbach_distinct_pair(12, Some(11)), Some((5, 7)));
        assert_eq!(goldbach_distinct_pair(16, None), Some((3, 13)));
        assert_eq!(goldbach_distinct_pair(16, Some(13)), Some((5, 11)));
        assert_eq!(goldbach_distinct_pair(8, None), Some((3, 5)));
        assert_eq!(goldbach_distinct_pair(10, Some(7)), None);
    }

    #[test]
    fn segmented_sieve_crosses_blocks() {
        let mut count = 0;
        let mut last = 0;
        for_each_prime_segmented(SIEVE_BLOCK - 100, SIEVE_BLOCK + 100, |p| {
            assert!(is_prime(p) && p > last);
            last = p;
            count += 1;
        });
        let expected = (SIEVE_BLOCK - 100..SIEVE_BLOCK + 100).filter(|&n| is_prime(n)).count();
        assert_eq!(count, expected);
    }
}
