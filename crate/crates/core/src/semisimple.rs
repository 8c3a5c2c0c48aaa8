//! Semisimple classes of odd prime order `r ≠ p` in symplectic, orthogonal and
//! (for `q = 2`) linear groups, with their centralizer orders.
//!
//! A class is described by the multiplicities `a_1..a_t` of the `t = (r-1)/i`
//! Frobenius orbits of primitive `r`-th roots of unity (`i = Φ(r,q)`), the
//! dimension `ℓ` of the fixed space and, for orthogonal hosts, the type `ε′`
//! of the form restricted to it.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::{Certificate, Decision};
use crate::group::{Family, Flavor, GroupId, Sign};
use crate::numtheory::{is_prime, phi_order, prime_power, Factorization};
use crate::orders::{self, gl_order, o_even_order, so_odd_order, sp_order};

/// Upper limit on the number of tuples a single query may enumerate.
pub const MAX_TUPLES: usize = 200_000;

/// Type of the quadratic form on the fixed space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    /// Odd-dimensional fixed space.
    #[serde(rename = "o")]
    Circ,
}

impl From<Sign> for FormSign {
    fn from(s: Sign) -> Self {
        match s {
            Sign::Plus => FormSign::Plus,
            Sign::Minus => FormSign::Minus,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassTuple {
    pub host: GroupId,
    pub r: u64,
    pub i: u32,
    pub t: u32,
    pub a: Vec<u32>,
    pub ell: u32,
    /// `None` for symplectic and linear hosts.
    pub eps: Option<FormSign>,
}

impl ClassTuple {
    pub fn weight(&self) -> u32 {
        self.a.iter().sum()
    }
}

/// Centralizer order of a class: odd part exact, power of 2 bracketed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralizerOrder {
    pub tuple: ClassTuple,
    pub odd_part_exact: Factorization,
    pub two_part_lower: u32,
    pub two_part_upper: u32,
    /// The factors whose product gives the order before any index-2 corrections.
    pub factor_labels: Vec<String>,
}

impl CentralizerOrder {
    /// The exact order when the 2-part is determined.
    pub fn exact(&self) -> Option<Factorization> {
        (self.two_part_lower == self.two_part_upper).then(|| {
            self.odd_part_exact.mul(&Factorization::from_prime_powers([(BigUint::from(2u32), self.two_part_lower)]))
        })
    }

    /// `Some(true)` if `s` certainly divides the order, `Some(false)` if it certainly does not.
    pub fn certifies(&self, s: u64) -> Option<bool> {
        if s == 2 {
            if self.two_part_lower >= 1 {
                Some(true)
            } else if self.two_part_upper == 0 {
                Some(false)
            } else {
                None
            }
        } else {
            Some(self.odd_part_exact.is_divisible_by_prime(s))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum HostKind {
    Symplectic { projective: bool },
    /// Even dimension. `projective` only for the simple flavor with `q` odd.
    OrthogonalEven { sign: Sign, flavor: Flavor },
    OrthogonalOdd { flavor: Flavor },
    Linear,
}

struct Host {
    n: u32,
    q: u64,
    p: u64,
    kind: HostKind,
}

fn host_info(host: &GroupId) -> Result<Host> {
    host.validate()?;
    let g = host.clone().normalized();
    let unsupported = || Error::Unsupported(format!("semisimple classes are not implemented for {host}"));
    let (n, q, kind) = match (&g.family, g.flavor) {
        (Family::Symplectic { dim, q }, fl) => (*dim, *q, HostKind::Symplectic { projective: fl == Flavor::Simple && q % 2 == 1 }),
        (Family::OrthogonalEven { dim, q, sign }, fl) => (*dim, *q, HostKind::OrthogonalEven { sign: *sign, flavor: fl }),
        (Family::OrthogonalOdd { dim, q }, fl) if q % 2 == 1 => (*dim, *q, HostKind::OrthogonalOdd { flavor: fl }),
        (Family::Linear { dim, q: 2, sign: Sign::Plus }, _) => (*dim, 2, HostKind::Linear),
        _ => return Err(unsupported()),
    };
    let (p, _) = prime_power(q).ok_or_else(unsupported)?;
    Ok(Host { n, q, p, kind })
}

/// Natural-module dimension of a supported host.
pub fn natural_dimension(host: &GroupId) -> Result<u32> {
    Ok(host_info(host)?.n)
}

/// Pushes every vector of length `len` with entries summing to `total`, in lexicographic order.
fn compositions(len: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>, cap: usize) -> Result<()> {
    let count = (1..=total as u64).try_fold(1u128, |acc, k| {
        let c = acc * (len as u128 - prefix.len() as u128 + k as u128 - 1) / k as u128;
        (c <= cap as u128).then_some(c)
    });
    if out.len() > cap || count.is_none() {
        return Err(Error::BoundExceeded { group: "semisimple tuple enumeration".into(), bound: cap as u64 });
    }
    if prefix.len() + 1 == len {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return Ok(());
    }
    for first in 0..=total {
        prefix.push(first);
        compositions(len, total - first, prefix, out, cap)?;
        prefix.pop();
    }
    Ok(())
}

/// All class tuples for elements of order `r` in `host`, ordered by `(Σa, a)`.
pub fn enumerate_classes(host: &GroupId, r: u64) -> Result<Vec<ClassTuple>> {
    let h = host_info(host)?;
    if r == 2 || !is_prime(r) {
        return Err(Error::InvalidArgument(format!("r = {r} must be an odd prime")));
    }
    if r == h.p {
        return Err(Error::InvalidArgument(format!("r = {r} is the characteristic of {host}")));
    }
    let i = phi_order(r, h.q)? as u32;
    let t = ((r - 1) / i as u64) as u32;
    let paired = i % 2 == 1 && !matches!(h.kind, HostKind::Linear);
    // dimension consumed by one unit of the free parameters
    let (slots, unit) = if paired { (t / 2, 2 * i) } else { (t, i) };
    let max_total = h.n / unit;
    let mut out = Vec::new();
    for total in 1..=max_total {
        let mut vecs = Vec::new();
        compositions(slots as usize, total, &mut Vec::new(), &mut vecs, MAX_TUPLES)?;
        for v in vecs {
            let a: Vec<u32> = if paired { v.iter().chain(v.iter()).copied().collect() } else { v };
            let sum: u32 = a.iter().sum();
            let ell = h.n - i * sum;
            let eps = match h.kind {
                HostKind::Symplectic { .. } | HostKind::Linear => None,
                HostKind::OrthogonalOdd { .. } => Some(FormSign::Circ),
                HostKind::OrthogonalEven { sign, .. } => {
                    let e = if i % 2 == 0 && sum % 2 == 1 { sign.flip() } else { sign };
                    if ell == 0 && e == Sign::Minus {
                        continue;
                    }
                    Some(FormSign::from(e))
                }
            };
            out.push(ClassTuple { host: host.clone(), r, i, t, a, ell, eps });
            if out.len() > MAX_TUPLES {
                return Err(Error::BoundExceeded { group: host.to_string(), bound: MAX_TUPLES as u64 });
            }
        }
    }
    Ok(out)
}

fn torus(tuple: &ClassTuple, q: u64, kind: HostKind) -> (Factorization, Vec<String>) {
    let i = tuple.i;
    let mut f = Factorization::one();
    let mut labels = Vec::new();
    let linear = matches!(kind, HostKind::Linear);
    if i % 2 == 0 && !linear {
        let big_q = q.pow(i / 2);
        for &a in tuple.a.iter().filter(|&&a| a > 0) {
            f = f.mul(&gl_order(a, big_q, Sign::Minus));
            labels.push(format!("|GU_{a}({q}^{})|", i / 2));
        }
    } else {
        let big_q = q.pow(i);
        let count = if linear { tuple.a.len() } else { tuple.a.len() / 2 };
        for &a in tuple.a[..count].iter().filter(|&&a| a > 0) {
            f = f.mul(&gl_order(a, big_q, Sign::Plus));
            labels.push(format!("|GL_{a}({q}^{i})|"));
        }
    }
    (f, labels)
}

/// Centralizer order of the class described by `tuple` in `tuple.host`.
pub fn centralizer_order(tuple: &ClassTuple) -> Result<CentralizerOrder> {
    let h = host_info(&tuple.host)?;
    let q = h.q;
    let ell = tuple.ell;
    let (t_part, mut labels) = torus(tuple, q, h.kind);
    // `base` is the centralizer in the matrix group named below; `lo..=hi` factors of 2 are
    // then removed for the passage to the requested flavor.
    let (fixed, fixed_label, lo, hi) = match h.kind {
        HostKind::Symplectic { projective } => {
            let k = u32::from(projective);
            (sp_order(ell, q), format!("|Sp_{ell}({q})|"), k, k)
        }
        HostKind::Linear => (gl_order(ell, q, Sign::Plus), format!("|GL_{ell}({q})|"), 0, 0),
        HostKind::OrthogonalEven { flavor, .. } => {
            let e = match tuple.eps {
                Some(FormSign::Minus) => Sign::Minus,
                _ => Sign::Plus,
            };
            let sym = if e == Sign::Plus { "+" } else { "-" };
            let o = o_even_order(ell, q, e);
            if q % 2 == 0 {
                // odd-order elements and the torus lie in Ω; only O_ℓ meets the nontrivial coset
                let k = u32::from(flavor != Flavor::Full && ell > 0);
                (o, format!("|O{sym}_{ell}({q})|"), k, k)
            } else if flavor == Flavor::Full {
                (o, format!("|O{sym}_{ell}({q})|"), 0, 0)
            } else {
                let so = if ell == 0 { o } else { o.div_pow2(1)? };
                let (mut lo, mut hi) = if ell >= 2 { (1, 1) } else { (0, 1) };
                if flavor == Flavor::Simple {
                    let m = h.n / 2;
                    let qm = q.pow(m);
                    let minus_one_in_omega = if e_host(h.kind) == Sign::Plus { qm % 4 == 1 } else { qm % 4 == 3 };
                    if minus_one_in_omega {
                        lo += 1;
                        hi += 1;
                    }
                }
                (so, format!("|SO{sym}_{ell}({q})|"), lo, hi)
            }
        }
        HostKind::OrthogonalOdd { flavor } => {
            let so = so_odd_order(ell, q);
            if flavor == Flavor::Full {
                (so.mul(&Factorization::of_u64(2)), format!("|O_{ell}({q})|"), 0, 0)
            } else {
                let (lo, hi) = if ell >= 3 { (1, 1) } else { (0, 1) };
                (so, format!("|SO_{ell}({q})|"), lo, hi)
            }
        }
    };
    labels.insert(0, fixed_label);
    let base = fixed.mul(&t_part);
    let v2 = base.exponent_of(2);
    Ok(CentralizerOrder {
        tuple: tuple.clone(),
        odd_part_exact: base.odd_part(),
        two_part_lower: v2.saturating_sub(hi),
        two_part_upper: v2.saturating_sub(lo),
        factor_labels: labels,
    })
}

fn e_host(kind: HostKind) -> Sign {
    match kind {
        HostKind::OrthogonalEven { sign, .. } => sign,
        _ => Sign::Plus,
    }
}

/// Decides `r ~ s` from the semisimple classes of order `r`.
///
/// `s` may be any prime other than `r`, including the characteristic. For `s = 2`
/// the answer is `Unknown` when the 2-part bracket does not settle it.
pub fn adjacent_semisimple(host: &GroupId, r: u64, s: u64) -> Result<Decision> {
    if s == r {
        return Err(Error::InvalidArgument("r and s must differ".into()));
    }
    let tuples = enumerate_classes(host, r)?;
    if tuples.is_empty() {
        return Err(Error::InvalidArgument(format!("{r} does not divide |{host}|")));
    }
    let mut undetermined = false;
    for t in &tuples {
        let c = centralizer_order(t)?;
        match c.certifies(s) {
            Some(true) => {
                let mut chain = c.factor_labels.clone();
                chain.push(if s == 2 {
                    format!("2^{} divides |C|", c.two_part_lower)
                } else {
                    format!("{s} divides odd part {}", c.odd_part_exact.value())
                });
                return Ok(Decision::Present(Certificate::SemisimpleWitness {
                    host: host.clone(),
                    r,
                    s,
                    tuple: t.clone(),
                    divisor_chain: chain,
                }));
            }
            Some(false) => {}
            None => undetermined = true,
        }
    }
    if undetermined {
        return Ok(Decision::Unknown(format!(
            "2-part of centralizers of {r}-elements in {host} not determined by the formula"
        )));
    }
    Ok(Decision::Absent(Certificate::SemisimpleExhaustion {
        host: host.clone(),
        r,
        s,
        classes: tuples.len(),
        divisor_chain: vec![format!("{s} divides no centralizer order among {} classes", tuples.len())],
    }))
}

fn host_sign_for_bound(host: &GroupId) -> Result<(u64, &'static str)> {
    let g = host.clone().normalized();
    match &g.family {
        Family::Symplectic { dim: 8, q } => Ok((*q, "Sp8")),
        Family::Symplectic { dim: 4, q } => Ok((*q, "Sp4")),
        Family::OrthogonalEven { dim: 8, q, sign: Sign::Plus } if g.flavor != Flavor::Full => Ok((*q, "O8+")),
        _ => Err(Error::InvalidArgument(format!("no N(i) table entry for {host}"))),
    }
}

/// The integer `N(i)` bounding odd prime divisors `s ≠ p` of centralizers of
/// `r`-elements with `Φ(r,q) = i` in `PSp_8(q)`, `PΩ_8^+(q)` and `PSp_4(q)`.
pub fn n_bound(host: &GroupId, i: u32) -> Result<BigUint> {
    let (q, kind) = host_sign_for_bound(host)?;
    let qp = |k: u32| BigUint::from(q).pow(k);
    let one = || BigUint::from(1u32);
    let bad = || Err(Error::InvalidArgument(format!("i = {i} is not admissible for {host}")));
    Ok(match (kind, i) {
        ("Sp8", 4) => qp(4) - one(),
        ("Sp8", 8) => qp(4) + one(),
        ("Sp8", 3) => (qp(1) + one()) * (qp(3) - one()),
        ("Sp8", 6) => (qp(1) - one()) * (qp(3) + one()),
        ("Sp8", 1 | 2) => (qp(2) + one()) * (qp(6) - one()),
        ("O8+", 4) => qp(4) - one(),
        ("O8+", 3) => qp(3) - one(),
        ("O8+", 6) => qp(3) + one(),
        ("O8+", 1) => (qp(4) - one()) * (qp(3) - one()),
        ("O8+", 2) => (qp(4) - one()) * (qp(3) + one()),
        ("Sp4", 4) => qp(2) + one(),
        ("Sp4", 1 | 2) => qp(2) - one(),
        _ => return bad(),
    })
}

/// Number of elements of order `r`, from the class tuples, when every centralizer order is exact.
pub fn class_equation_count(host: &GroupId, r: u64) -> Result<BigUint> {
    let order = orders::order(host)?.order;
    let mut total = BigUint::from(0u32);
    for t in enumerate_classes(host, r)? {
        let c = centralizer_order(&t)?
            .exact()
            .ok_or_else(|| Error::Undecided(format!("centralizer order of {t:?} not exact")))?;
        total += order.div(&c)?.value();
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn odd(c: &CentralizerOrder) -> u64 {
        c.odd_part_exact.value().to_u64().unwrap()
    }

    #[test]
    fn sp8_i8_single_class_shape() {
        // r = 17 has Φ(17,2) = 8
        let ts = enumerate_classes(&GroupId::symplectic(8, 2), 17).unwrap();
        assert_eq!(ts.len(), 2);
        assert!(ts.iter().all(|t| t.ell == 0 && t.weight() == 1));
    }

    #[test]
    fn sp12_witness_from_ell_four() {
        let host = GroupId::symplectic(12, 2);
        let d = adjacent_semisimple(&host, 17, 5).unwrap();
        match d {
            Decision::Present(Certificate::SemisimpleWitness { tuple, .. }) => assert_eq!(tuple.ell, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn o12_minus_excludes_five() {
        let host = GroupId::orthogonal_full(12, 2, Sign::Minus);
        let ts = enumerate_classes(&host, 17).unwrap();
        assert!(ts.iter().all(|t| t.ell == 4 && t.eps == Some(FormSign::Plus)));
        let c = centralizer_order(&ts[0]).unwrap();
        assert_eq!(odd(&c), 9 * 17);
        assert!(matches!(adjacent_semisimple(&host, 17, 5).unwrap(), Decision::Absent(_)));
    }

    #[test]
    fn psp43_order_five_class() {
        let host = GroupId::symplectic(4, 3);
        let ts = enumerate_classes(&host, 5).unwrap();
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].ell, 0);
        assert_eq!(class_equation_count(&host, 5).unwrap(), BigUint::from(5184u32));
    }

    #[test]
    fn o8_minus_i8_centralizer() {
        let host = GroupId::orthogonal_full(8, 2, Sign::Minus);
        let ts = enumerate_classes(&host, 17).unwrap();
        let c = centralizer_order(&ts[0]).unwrap();
        assert_eq!(c.exact().unwrap().value().to_u64(), Some(17));
    }

    #[test]
    fn n_bound_examples() {
        let q = 3u64;
        assert_eq!(n_bound(&GroupId::symplectic(8, q), 8).unwrap(), BigUint::from(82u32));
        assert_eq!(n_bound(&GroupId::omega_even(8, q, Sign::Plus), 4).unwrap(), BigUint::from(80u32));
        assert_eq!(n_bound(&GroupId::symplectic(4, q), 1).unwrap(), BigUint::from(8u32));
        assert!(n_bound(&GroupId::symplectic(6, q), 1).is_err());
    }

    #[test]
    fn rejects_characteristic_and_two() {
        assert!(enumerate_classes(&GroupId::symplectic(4, 3), 3).is_err());
        assert!(enumerate_classes(&GroupId::symplectic(4, 3), 2).is_err());
    }

    #[test]
    fn psp4_i4_matches_table() {
        // Φ(5,3) = 4: s | q^2 + 1 = 10 present, others absent
        let host = GroupId::symplectic(4, 3);
        assert!(matches!(adjacent_semisimple(&host, 5, 2).unwrap(), Decision::Absent(_)));
        assert!(matches!(adjacent_semisimple(&host, 5, 3).unwrap(), Decision::Absent(_)));
        let host = GroupId::symplectic(4, 4);
        assert!(matches!(adjacent_semisimple(&host, 17, 3).unwrap(), Decision::Absent(_)));
        assert!(matches!(adjacent_semisimple(&host, 3, 5).unwrap(), Decision::Present(_)));
    }
}
