//! Stored centralizer facts for elements of order `p` (the characteristic) and for
//! involutions, and the adjacency rule built on them.
//!
//! Each entry is a pattern over `q`; it is instantiated on demand from the host.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::{product_of, Certificate, Decision, Term};
use crate::group::{Family, Flavor, GroupId, Sign};
use crate::numtheory::prime_power;
use crate::orders;

/// A centralizer divisor for one class of elements of order `p` (or of involutions).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnipotentCertificate {
    pub host: GroupId,
    /// Label such as `[J_3,J_1^4]`, `b_1` or `t_3`.
    pub element: String,
    /// Jordan blocks as `(size, multiplicity)`; empty for semisimple involutions.
    pub jordan: Vec<(u32, u32)>,
    /// Order of the element: `p`, or 2 for the involution entries.
    pub order: u64,
    pub payload: Vec<Term>,
    pub central_two_exponent: u32,
    /// The payload is the full centralizer order of every element of this order in the host.
    pub exact: bool,
}

impl UnipotentCertificate {
    pub fn payload_value(&self) -> Result<crate::numtheory::Factorization> {
        product_of(&self.payload)
    }

    /// `Some(true)` when the payload shows `s` in the centralizer; `Some(false)` when the
    /// certificate is exact and excludes `s`.
    pub fn decides(&self, s: u64) -> Result<Option<bool>> {
        let v = self.payload_value()?;
        let holds = if s == 2 { v.exponent_of(2) > self.central_two_exponent } else { v.is_divisible_by_prime(s) };
        Ok(if holds {
            Some(true)
        } else if self.exact {
            Some(false)
        } else {
            None
        })
    }

    fn into_certificate(self, s: u64) -> Certificate {
        Certificate::Unipotent {
            host: self.host,
            r: self.order,
            s,
            element: self.element,
            payload: self.payload,
            central_two_exponent: self.central_two_exponent,
            exact: self.exact,
        }
    }
}

/// Odd prime divisors of the centralizer of every element in `scope` divide `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NecessaryBound {
    pub host: GroupId,
    pub element: String,
    /// Order of the elements covered.
    pub order: u64,
    pub bound: Vec<Term>,
    pub scope: String,
}

impl NecessaryBound {
    pub fn excludes(&self, s: u64) -> Result<bool> {
        Ok(s != 2 && !product_of(&self.bound)?.is_divisible_by_prime(s))
    }

    fn into_certificate(self, s: u64) -> Certificate {
        Certificate::NecessaryBound {
            host: self.host,
            r: self.order,
            s,
            element: self.element,
            bound: self.bound,
            scope: self.scope,
        }
    }
}

/// Involution data for `PΩ_8^+(q)` and `Ω_7(q)` with `q` odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionCertificates {
    pub bound: NecessaryBound,
    pub witnesses: Vec<UnipotentCertificate>,
}

fn sp(dim: u32, q: u64) -> Term {
    Term::Sp { dim, q }
}

fn qpow(q: u64, k: u64) -> Term {
    Term::QPow { q, k }
}

fn jordan_label(blocks: &[(u32, u32)]) -> String {
    let parts: Vec<String> = blocks
        .iter()
        .filter(|&&(_, m)| m > 0)
        .map(|&(size, m)| if m == 1 { format!("J_{size}") } else { format!("J_{size}^{m}") })
        .collect();
    format!("[{}]", parts.join(","))
}

struct Ctx {
    host: GroupId,
    q: u64,
    p: u64,
}

impl Ctx {
    fn unipotent(&self, jordan: Vec<(u32, u32)>, label: Option<&str>, payload: Vec<Term>, exact: bool) -> UnipotentCertificate {
        let element = match label {
            Some(l) => format!("{l} {}", jordan_label(&jordan)),
            None => jordan_label(&jordan),
        };
        UnipotentCertificate {
            host: self.host.clone(),
            element,
            jordan,
            order: self.p,
            payload,
            central_two_exponent: 0,
            exact,
        }
    }

    fn bound(&self, bound: Vec<Term>, scope: &str) -> NecessaryBound {
        NecessaryBound {
            host: self.host.clone(),
            element: format!("order {}", self.p),
            order: self.p,
            bound,
            scope: scope.to_string(),
        }
    }
}

fn context(host: &GroupId) -> Result<Ctx> {
    host.validate()?;
    let g = host.clone().normalized();
    let q = g.field().ok_or_else(|| Error::Unsupported(format!("{host} is not of Lie type")))?;
    let (p, _) = prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?;
    Ok(Ctx { host: g, q, p })
}

/// Sufficient certificates and necessary bounds for elements of order `p` in `host`.
pub fn unipotent_data(host: &GroupId) -> Result<(Vec<UnipotentCertificate>, Vec<NecessaryBound>)> {
    let c = context(host)?;
    let (q, p) = (c.q, c.p);
    let even = p == 2;
    let mut suff = Vec::new();
    let mut nec = Vec::new();
    match (&c.host.family, c.host.flavor) {
        (&Family::Symplectic { dim: 2, .. }, fl) => {
            // SL_2(q): C(u) = Z × U, so |C| = q in L_2(q) and 2q in SL_2(q), q odd
            let mut payload = vec![qpow(q, 1)];
            if !even && fl != Flavor::Simple {
                payload.push(Term::Int { value: 2 });
            }
            suff.push(c.unipotent(vec![(2, 1)], None, payload, true));
        }
        (&Family::Symplectic { dim, .. }, fl) if dim >= 4 => {
            // transvection: |C| = q^{2m-1}|Sp_{2m-2}(q)|, doubled by -I in the matrix group for odd q
            let mut payload = vec![qpow(q, (dim - 1) as u64), sp(dim - 2, q)];
            if !even && fl != Flavor::Simple {
                payload.push(Term::Int { value: 2 });
            }
            let label = if even { Some("b_1") } else { None };
            suff.push(c.unipotent(vec![(2, 1), (1, dim - 2)], label, payload, false));
            nec.push(c.bound(vec![sp(dim - 2, q)], "every element of order p"));
        }
        (&Family::OrthogonalEven { dim, sign, .. }, fl) if even => {
            let m = dim / 2;
            if fl == Flavor::Full && m >= 2 {
                suff.push(c.unipotent(vec![(2, 1), (1, dim - 2)], Some("b_1"), vec![Term::Int { value: 2 }, sp(dim - 2, q)], false));
            }
            if m >= 2 {
                // a transvection of Sp_{2m-2}(q) ≤ Ω_{2m}(q)
                suff.push(c.unipotent(
                    vec![(2, 2), (1, dim - 4)],
                    Some("c_2"),
                    vec![qpow(q, (dim - 3) as u64), sp(dim - 4, q)],
                    false,
                ));
            }
            if m >= 4 {
                let scope = if fl == Flavor::Full { "O minus Ω" } else { "every element of order p" };
                if fl == Flavor::Full {
                    nec.push(c.bound(vec![sp(dim - 2, q)], scope));
                } else {
                    nec.push(c.bound(vec![sp(dim - 4, q)], scope));
                }
            } else if m == 2 && sign == Sign::Minus {
                // Ω_4^-(q): centralizers of order q^2; outer involutions: 2|Sp_2(q)|
                let b = if fl == Flavor::Full { vec![sp(2, q)] } else { vec![qpow(q, 2)] };
                nec.push(c.bound(b, "every element of order p"));
            }
        }
        (&Family::OrthogonalEven { dim, sign, .. }, fl) => {
            let m = dim / 2;
            if m >= 4 {
                // [J_3] on a nondegenerate 3-space, identity on the complement
                suff.push(c.unipotent(
                    vec![(3, 1), (1, dim - 3)],
                    None,
                    vec![Term::Order { group: GroupId::omega_odd(dim - 3, q) }],
                    false,
                ));
                nec.push(c.bound(vec![sp(dim - 4, q)], "every element of order p"));
            } else if m == 2 && sign == Sign::Minus && fl == Flavor::Full {
                suff.push(c.unipotent(vec![(3, 1), (1, 1)], None, vec![Term::Int { value: 2 }, qpow(q, 2)], true));
            }
        }
        (&Family::OrthogonalOdd { dim, .. }, _) if !even => {
            let m = (dim - 1) / 2;
            if m == 2 {
                suff.push(c.unipotent(vec![(2, 2), (1, 1)], None, vec![Term::QPowMinus { q, k: 2, sign: 1 }], false));
            }
            if m >= 3 {
                suff.push(c.unipotent(
                    vec![(3, 1), (1, dim - 3)],
                    None,
                    vec![Term::OmegaEven { dim: dim - 3, q, sign: Sign::Minus }],
                    false,
                ));
                // Ω_{2m+1}(q) ≤ PΩ_{2m+2}^+(q)
                nec.push(c.bound(vec![sp(dim - 3, q)], "every element of order p"));
            }
        }
        (&Family::ExtensionFieldSymplectic { .. }, _) => {
            let k = if even { 2 } else { 1 };
            suff.push(UnipotentCertificate {
                element: "every element of order p".into(),
                ..c.unipotent(vec![], None, vec![Term::Int { value: 1 << k }, qpow(q, 2)], true)
            });
        }
        (&Family::Linear { dim, sign: Sign::Plus, .. }, _) if dim >= 3 => {
            suff.push(c.unipotent(
                vec![(2, 1), (1, dim - 2)],
                Some("transvection"),
                vec![qpow(q, (2 * dim - 3) as u64), Term::Gl { n: dim - 2, q, sign: Sign::Plus }],
                false,
            ));
        }
        _ => {}
    }
    Ok((suff, nec))
}

/// Involution certificates for `PΩ_8^+(q)` and `Ω_7(q)`, `q` odd.
///
/// With `ε = +` for `q ≡ 1 (mod 4)` and `ε = -` otherwise, odd primes in involution
/// centralizers of `PΩ_8^+(q)` divide `(q^3 - ε)(q^4 - 1)`, and the `t_3` involution of
/// `Ω_7(q)` has `|Ω_6^ε(q)|` dividing its centralizer order.
pub fn involution_certificates_odd_q(host: &GroupId) -> Result<InvolutionCertificates> {
    let g = host.clone().normalized();
    let (q, seven) = match (&g.family, g.flavor) {
        (&Family::OrthogonalEven { dim: 8, q, sign: Sign::Plus }, Flavor::Simple) if q % 2 == 1 => (q, false),
        (&Family::OrthogonalOdd { dim: 7, q }, Flavor::Simple) if q % 2 == 1 => (q, true),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "involution certificates are stored only for POmega+(8,q) and Omega(7,q), q odd; got {host}"
            )))
        }
    };
    let eps = if q % 4 == 1 { Sign::Plus } else { Sign::Minus };
    let bound = NecessaryBound {
        host: g.clone(),
        element: "involution".into(),
        order: 2,
        bound: vec![Term::QPowMinus { q, k: 3, sign: eps.value() }, Term::QPowMinus { q, k: 4, sign: 1 }],
        scope: if seven { "every involution (via Ω_7(q) ≤ PΩ_8^+(q))".into() } else { "every involution".into() },
    };
    let t3 = UnipotentCertificate {
        host: g,
        element: "t_3".into(),
        jordan: vec![],
        order: 2,
        payload: vec![Term::OmegaEven { dim: 6, q, sign: eps }],
        central_two_exponent: 0,
        exact: false,
    };
    Ok(InvolutionCertificates { bound, witnesses: vec![t3] })
}

/// Bound on odd primes in centralizers of involutions in `Ω_{2m}^-(q)`, `q` even.
pub fn omega_minus_involution_bound(host: &GroupId) -> Result<NecessaryBound> {
    let g = host.clone().normalized();
    let (dim, q) = match (&g.family, g.flavor) {
        (&Family::OrthogonalEven { dim, q, sign: Sign::Minus }, fl) if fl != Flavor::Full => (dim, q),
        _ => return Err(Error::InvalidArgument(format!("{host} is not Omega-(2m,q)"))),
    };
    if q % 2 == 1 {
        return Err(Error::InvalidArgument(format!("{host}: q must be even")));
    }
    let m = dim / 2;
    let (bound, scope) = match m {
        2 => (vec![qpow(q, 2)], "every involution; |C| = q^2 exactly"),
        m if m >= 4 => (vec![sp(dim - 4, q)], "every involution"),
        _ => return Err(Error::Unsupported(format!("{host}: no involution bound stored for m = {m}"))),
    };
    Ok(NecessaryBound { host: g, element: "involution".into(), order: 2, bound, scope: scope.into() })
}

/// Decides `r ~ s` for `r ∈ {2, p}` from stored certificates.
///
/// `s` is normally an odd prime; `s = 2` is accepted with `r = p` odd, where evenness
/// of a centralizer payload gives elements of order `2p`.
pub fn adjacent_special(host: &GroupId, r: u64, s: u64) -> Result<Decision> {
    let c = context(host)?;
    if r == s {
        return Err(Error::InvalidArgument("r and s must differ".into()));
    }
    if r != 2 && r != c.p {
        return Err(Error::InvalidArgument(format!("r = {r} is neither 2 nor the characteristic")));
    }
    if s == 2 && r == 2 {
        return Err(Error::InvalidArgument("s must be odd".into()));
    }
    let (suff, nec) = if r == c.p {
        unipotent_data(host)?
    } else {
        match involution_certificates_odd_q(host) {
            Ok(inv) => (inv.witnesses, vec![inv.bound]),
            Err(_) => (Vec::new(), Vec::new()),
        }
    };
    let mut excluded_by_exact = None;
    for cert in suff {
        match cert.decides(s)? {
            Some(true) => return Ok(Decision::Present(cert.into_certificate(s))),
            Some(false) => excluded_by_exact = Some(cert),
            None => {}
        }
    }
    if let Some(cert) = excluded_by_exact {
        return Ok(Decision::Absent(cert.into_certificate(s)));
    }
    for b in nec {
        if b.excludes(s)? {
            return Ok(Decision::Absent(b.into_certificate(s)));
        }
    }
    Ok(Decision::Unknown(format!("no stored certificate settles {r} ~ {s} in {host}")))
}

/// Checks that every payload and bound factor divides `|host|`.
pub fn check_divides_host(host: &GroupId) -> Result<bool> {
    let order = orders::order(host)?.order;
    let (suff, nec) = unipotent_data(host)?;
    for cert in &suff {
        if !cert.payload_value()?.odd_part().divides(&order) {
            return Ok(false);
        }
    }
    for b in &nec {
        if !product_of(&b.bound)?.odd_part().divides(&order) {
            return Ok(false);
        }
    }
    Ok(true)
}
