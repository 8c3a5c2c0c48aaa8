//! Exact group orders, held factored.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Family, Flavor, GroupId, Sign, Sporadic};
use crate::numtheory::{factor_qpow_minus, prime_power, Factorization};

/// `q^k - sign`, memoized since the same values recur across every formula.
pub fn q_pow_minus(q: u64, k: u32, sign: i8) -> Factorization {
    assert!(k >= 1, "q^0 - 1 is zero");
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32, i8), Factorization>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().map(|c| c.get(&(q, k, sign)).cloned()).ok().flatten() {
        return f;
    }
    let f = factor_qpow_minus(q, k, sign);
    if let Ok(mut c) = cache.lock() {
        c.insert((q, k, sign), f.clone());
    }
    f
}

/// `q^k` as a factorization.
pub fn q_pow(q: u64, k: u64) -> Factorization {
    let (p, f) = prime_power(q).expect("field size must be a prime power");
    Factorization::from_prime_powers([(BigUint::from(p), f * k as u32)])
}

fn product(parts: impl IntoIterator<Item = Factorization>) -> Factorization {
    parts.into_iter().fold(Factorization::one(), |acc, f| acc.mul(&f))
}

fn exact_div(a: &Factorization, d: u64) -> Factorization {
    a.div(&Factorization::of_u64(d)).expect("group order divisor")
}

/// `|GL_n(q)|` for `sign = +`, `|GU_n(q)|` for `sign = -`.
pub fn gl_order(n: u32, q: u64, sign: Sign) -> Factorization {
    let mut f = q_pow(q, (n as u64) * (n.saturating_sub(1) as u64) / 2);
    for k in 1..=n {
        let s = if sign == Sign::Minus && k % 2 == 1 { -1 } else { 1 };
        f = f.mul(&q_pow_minus(q, k, s));
    }
    f
}

/// `|Sp_{dim}(q)|`; `dim = 0` gives 1.
pub fn sp_order(dim: u32, q: u64) -> Factorization {
    let m = dim / 2;
    product(std::iter::once(q_pow(q, (m * m) as u64)).chain((1..=m).map(|k| q_pow_minus(q, 2 * k, 1))))
}

/// `|O^ε_{dim}(q)|` for even `dim`; the trivial group when `dim = 0`.
pub fn o_even_order(dim: u32, q: u64, sign: Sign) -> Factorization {
    let m = dim / 2;
    if m == 0 {
        return Factorization::one();
    }
    product(
        [Factorization::of_u64(2), q_pow(q, (m * (m - 1)) as u64), q_pow_minus(q, m, sign.value())]
            .into_iter()
            .chain((1..m).map(|k| q_pow_minus(q, 2 * k, 1))),
    )
}

/// `|SO_{dim}(q)|` for odd `dim` (equal to `|Sp_{dim-1}(q)|` as a number).
pub fn so_odd_order(dim: u32, q: u64) -> Factorization {
    sp_order(dim - 1, q)
}

fn sporadic_order(s: Sporadic) -> Factorization {
    let pp: &[(u64, u32)] = match s {
        Sporadic::M11 => &[(2, 4), (3, 2), (5, 1), (11, 1)],
        Sporadic::M12 => &[(2, 6), (3, 3), (5, 1), (11, 1)],
        Sporadic::M22 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1)],
        Sporadic::M23 => &[(2, 7), (3, 2), (5, 1), (7, 1), (11, 1), (23, 1)],
        Sporadic::M24 => &[(2, 10), (3, 3), (5, 1), (7, 1), (11, 1), (23, 1)],
        Sporadic::HS => &[(2, 9), (3, 2), (5, 3), (7, 1), (11, 1)],
        Sporadic::McL => &[(2, 7), (3, 6), (5, 3), (7, 1), (11, 1)],
        Sporadic::Co2 => &[(2, 18), (3, 6), (5, 3), (7, 1), (11, 1), (23, 1)],
        Sporadic::Co3 => &[(2, 10), (3, 7), (5, 3), (7, 1), (11, 1), (23, 1)],
        Sporadic::Tits => &[(2, 11), (3, 3), (5, 2), (13, 1)],
    };
    Factorization::from_prime_powers(pp.iter().map(|&(p, e)| (BigUint::from(p), e)))
}

fn factorial(n: u32) -> Factorization {
    (2..=n as u64).fold(Factorization::one(), |acc, k| acc.mul(&Factorization::of_u64(k)))
}

fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Order of a group, factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrder {
    pub group: GroupId,
    pub order: Factorization,
}

#[derive(Serialize, Deserialize)]
struct GroupOrderJson {
    group: GroupId,
    order: String,
    factors: Factorization,
}

impl Serialize for GroupOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupOrderJson { group: self.group.clone(), order: self.order.value().to_string(), factors: self.order.clone() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = GroupOrderJson::deserialize(d)?;
        if j.factors.value().to_string() != j.order {
            return Err(serde::de::Error::custom("order does not match its factorization"));
        }
        Ok(GroupOrder { group: j.group, order: j.factors })
    }
}

fn order_raw(g: &GroupId) -> Result<Factorization> {
    g.validate()?;
    let g = g.clone().normalized();
    Ok(match (&g.family, g.flavor) {
        (Family::Alternating { n }, _) => exact_div(&factorial(*n), 2),
        (Family::Symmetric { n }, _) => factorial(*n),
        (Family::Linear { dim, q, sign }, fl) => {
            let full = gl_order(*dim, *q, *sign);
            let c = if *sign == Sign::Plus { q - 1 } else { q + 1 };
            match fl {
                Flavor::Full => full,
                Flavor::Omega => exact_div(&full, c),
                Flavor::Simple => exact_div(&exact_div(&full, c), gcd(*dim as u64, c)),
            }
        }
        (Family::Symplectic { dim, q }, fl) => {
            let sp = sp_order(*dim, *q);
            if fl == Flavor::Simple && q % 2 == 1 {
                exact_div(&sp, 2)
            } else {
                sp
            }
        }
        (Family::OrthogonalOdd { dim, q }, fl) => {
            let so = so_odd_order(*dim, *q);
            match (q % 2, fl) {
                (0, _) => so,
                (_, Flavor::Full) => so.mul(&Factorization::of_u64(2)),
                _ => exact_div(&so, 2),
            }
        }
        (Family::OrthogonalEven { dim, q, sign }, fl) => {
            let o = o_even_order(*dim, *q, *sign);
            let m = dim / 2;
            match fl {
                Flavor::Full => o,
                _ if q % 2 == 0 => exact_div(&o, 2),
                Flavor::Omega => exact_div(&o, 4),
                Flavor::Simple => {
                    let qm = q.checked_pow(m).ok_or_else(|| Error::Unsupported(format!("{g}: field too large")))?;
                    let z = if sign.value() > 0 { gcd(4, (qm - 1) % 4) } else { gcd(4, (qm + 1) % 4) };
                    let z = if z == 0 { 4 } else { z };
                    exact_div(&exact_div(&o, 4), z / 2)
                }
            }
        }
        (Family::G2 { q }, _) => product([q_pow(*q, 6), q_pow_minus(*q, 6, 1), q_pow_minus(*q, 2, 1)]),
        (Family::Sporadic(s), _) => sporadic_order(*s),
        (Family::DirectFactorIntersection { k, n }, _) => exact_div(&factorial(*k).mul(&factorial(n - k)), 2),
        (Family::Parabolic { host, .. }, _) => match &host.family {
            Family::OrthogonalEven { .. } => Factorization::of_u64(64).mul(&order_raw(&GroupId::linear(4, 2))?),
            Family::Linear { sign: Sign::Plus, .. } => Factorization::of_u64(32).mul(&order_raw(&GroupId::linear(5, 2))?),
            _ => Factorization::of_u64(16).mul(&order_raw(&GroupId::linear(2, 4))?),
        },
        (Family::ExtensionFieldSymplectic { q }, _) => {
            let base = sp_order(2, q * q).mul(&Factorization::of_u64(2));
            if q % 2 == 1 {
                exact_div(&base, 2)
            } else {
                base
            }
        }
    })
}

pub fn order(g: &GroupId) -> Result<GroupOrder> {
    Ok(GroupOrder { group: g.clone(), order: order_raw(g)? })
}

/// Prime divisors of `|g|`.
pub fn pi(g: &GroupId) -> Result<BTreeSet<u64>> {
    Ok(order_raw(g)?.primes().into_iter().collect())
}

pub fn divides_order(sub: &GroupId, sup: &GroupId) -> Result<bool> {
    Ok(order_raw(sub)?.divides(&order_raw(sup)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn val(g: &GroupId) -> u128 {
        order(g).unwrap().order.value().to_u128().unwrap()
    }

    fn brute_gl(n: u32, q: u64) -> u128 {
        // counts ordered bases: (q^n - 1)(q^n - q)...
        let qn = (q as u128).pow(n);
        (0..n).map(|k| qn - (q as u128).pow(k)).product()
    }

    #[test]
    fn small_orders() {
        assert_eq!(val(&GroupId::symplectic(4, 2)), 720);
        assert_eq!(val(&GroupId::unitary(4, 2)), 25920);
        assert_eq!(val(&GroupId::alternating(6)), 360);
        assert_eq!(val(&GroupId::symplectic(4, 3)), 25920);
        assert_eq!(val(&GroupId::omega_odd(5, 3)), 25920);
        assert_eq!(val(&GroupId::unitary(4, 3)), 3_265_920);
        assert_eq!(val(&GroupId::omega_even(6, 3, Sign::Minus)), 3_265_920);
        assert_eq!(val(&GroupId::g2(3)), 4_245_696);
        assert_eq!(val(&GroupId::omega_even(8, 2, Sign::Plus)), 174_182_400);
        assert_eq!(val(&GroupId::omega_even(8, 3, Sign::Plus)), 4_952_179_814_400);
        assert_eq!(val(&GroupId::linear(6, 2)), 20_158_709_760);
        assert_eq!(val(&GroupId::orthogonal_full(4, 2, Sign::Minus)), 120);
        assert_eq!(val(&GroupId::orthogonal_full(6, 2, Sign::Plus)), 40320);
        assert_eq!(val(&GroupId::sporadic(Sporadic::M11)), 7920);
        assert_eq!(val(&GroupId::parabolic(GroupId::unitary(4, 2), 2)), 960);
    }

    #[test]
    fn gl_matches_basis_count() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            for n in 1..=4 {
                assert_eq!(gl_order(n, q, Sign::Plus).value().to_u128().unwrap(), brute_gl(n, q), "GL({n},{q})");
            }
        }
    }

    #[test]
    fn alternating_factorials() {
        let mut f: u128 = 1;
        for n in 2..=20u32 {
            f *= n as u128;
            assert_eq!(val(&GroupId::alternating(n)), f / 2);
        }
    }

    #[test]
    fn divisibility_examples() {
        let o8m = GroupId::orthogonal_full(8, 2, Sign::Minus);
        assert!(divides_order(&o8m, &GroupId::symplectic(8, 2)).unwrap());
        assert!(!divides_order(&GroupId::symplectic(6, 2), &GroupId::symplectic(4, 2)).unwrap());
        assert!(gl_order(1, 4, Sign::Minus).divides(&sp_order(4, 2)));
    }

    #[test]
    fn pi_examples() {
        let v = |g: GroupId| pi(&g).unwrap().into_iter().collect::<Vec<_>>();
        assert_eq!(v(GroupId::unitary(4, 2)), vec![2, 3, 5]);
        assert_eq!(v(GroupId::alternating(10)), vec![2, 3, 5, 7]);
        assert_eq!(v(GroupId::sporadic(Sporadic::M11)), vec![2, 3, 5, 11]);
    }

    #[test]
    fn json_shape() {
        let o = order(&GroupId::alternating(6)).unwrap();
        let j = serde_json::to_value(&o).unwrap();
        assert_eq!(j["order"], "360");
        assert_eq!(j["group"], "A(6)");
        let back: GroupOrder = serde_json::from_value(j).unwrap();
        assert_eq!(back, o);
    }
}
