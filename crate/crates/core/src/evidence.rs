//! Certificates attached to edge decisions, and their re-validation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GroupId, Sign};
use crate::numtheory::Factorization;
use crate::orders::{self, q_pow, q_pow_minus};
use crate::semisimple::{self, ClassTuple};

/// One factor of a centralizer payload or a necessary bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "term", rename_all = "kebab-case")]
pub enum Term {
    /// Order of a named group.
    Order { group: GroupId },
    /// `|GL_n(q)|` (sign `+`) or `|GU_n(q)|` (sign `-`).
    Gl { n: u32, q: u64, sign: Sign },
    Sp { dim: u32, q: u64 },
    /// `|Ω^ε_dim(q)|` for even `dim`.
    OmegaEven { dim: u32, q: u64, sign: Sign },
    /// `q^k - sign`.
    QPowMinus { q: u64, k: u32, sign: i8 },
    QPow { q: u64, k: u64 },
    Int { value: u64 },
}

impl Term {
    pub fn value(&self) -> Result<Factorization> {
        Ok(match self {
            Term::Order { group } => orders::order(group)?.order,
            Term::Gl { n, q, sign } => orders::gl_order(*n, *q, *sign),
            Term::Sp { dim, q } => orders::sp_order(*dim, *q),
            Term::OmegaEven { dim, q, sign } => {
                orders::order(&GroupId::omega_even_matrix(*dim, *q, *sign))?.order
            }
            Term::QPowMinus { q, k, sign } => q_pow_minus(*q, *k, *sign),
            Term::QPow { q, k } => q_pow(*q, *k),
            Term::Int { value } => Factorization::of_u64(*value),
        })
    }

    pub fn label(&self) -> String {
        match self {
            Term::Order { group } => format!("|{group}|"),
            Term::Gl { n, q, sign: Sign::Plus } => format!("|GL_{n}({q})|"),
            Term::Gl { n, q, sign: Sign::Minus } => format!("|GU_{n}({q})|"),
            Term::Sp { dim, q } => format!("|Sp_{dim}({q})|"),
            Term::OmegaEven { dim, q, sign } => {
                format!("|Omega{}_{dim}({q})|", if *sign == Sign::Plus { "+" } else { "-" })
            }
            Term::QPowMinus { q, k, sign } => {
                format!("({q}^{k} {} 1)", if *sign > 0 { "-" } else { "+" })
            }
            Term::QPow { q, k } => format!("{q}^{k}"),
            Term::Int { value } => value.to_string(),
        }
    }
}

pub fn product_of(terms: &[Term]) -> Result<Factorization> {
    terms.iter().try_fold(Factorization::one(), |acc, t| Ok(acc.mul(&t.value()?)))
}

/// How a spectrum was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumMode {
    ExactEnumeration,
    CycleTypeExact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A semisimple class of order `r` whose centralizer order is divisible by `s`.
    SemisimpleWitness { host: GroupId, r: u64, s: u64, tuple: ClassTuple, divisor_chain: Vec<String> },
    /// Every semisimple class of order `r` was checked and none has `s` in its centralizer order.
    SemisimpleExhaustion { host: GroupId, r: u64, s: u64, classes: usize, divisor_chain: Vec<String> },
    /// An element of order `r` (unipotent or involution) whose centralizer has a divisor built
    /// from `payload`; `exact` marks a payload that equals the centralizer order.
    Unipotent {
        host: GroupId,
        r: u64,
        s: u64,
        element: String,
        payload: Vec<Term>,
        /// 2-exponent of the central subgroup factored out in a projective host.
        central_two_exponent: u32,
        exact: bool,
    },
    /// Odd prime divisors of every relevant centralizer divide the bound, and `s` does not.
    NecessaryBound { host: GroupId, r: u64, s: u64, element: String, bound: Vec<Term>, scope: String },
    /// Cycle-type decision in an alternating or symmetric group (or an intransitive subgroup).
    /// `minimal_support` is the least degree carrying an element of order `rs` with the
    /// required sign, when a single number describes it.
    CycleType { group: GroupId, r: u64, s: u64, minimal_support: Option<u64>, degree: u64 },
    /// Decision read off an element-order spectrum.
    Spectrum { group: GroupId, r: u64, s: u64, mode: SpectrumMode, witness_order: Option<u64>, seed: Option<u64>, step: Option<u64> },
    /// Absence inherited from a supergroup: `Γ(H) ⊆ Γ(G)` whenever `H ≤ G`.
    Inherited { supergroup: GroupId, r: u64, s: u64 },
}

impl Certificate {
    pub fn pair(&self) -> (u64, u64) {
        let (r, s) = match self {
            Certificate::SemisimpleWitness { r, s, .. }
            | Certificate::SemisimpleExhaustion { r, s, .. }
            | Certificate::Unipotent { r, s, .. }
            | Certificate::NecessaryBound { r, s, .. }
            | Certificate::CycleType { r, s, .. }
            | Certificate::Spectrum { r, s, .. }
            | Certificate::Inherited { r, s, .. } => (*r, *s),
        };
        (r.min(s), r.max(s))
    }

    /// Re-checks the arithmetic behind the certificate from freshly computed factored orders.
    /// Returns `Ok(true)` when the claim it supports still follows; spectrum and inherited
    /// certificates are only checked for shape since they rest on external runs.
    pub fn revalidate(&self, present: bool) -> Result<bool> {
        match self {
            Certificate::SemisimpleWitness { host, r, s, tuple, .. } => {
                if !present || tuple.r != *r {
                    return Ok(false);
                }
                let fresh = semisimple::enumerate_classes(host, *r)?;
                if !fresh.contains(tuple) {
                    return Ok(false);
                }
                Ok(semisimple::centralizer_order(tuple)?.certifies(*s) == Some(true))
            }
            Certificate::SemisimpleExhaustion { host, r, s, classes, .. } => {
                if present {
                    return Ok(false);
                }
                let fresh = semisimple::enumerate_classes(host, *r)?;
                if fresh.len() != *classes {
                    return Ok(false);
                }
                for t in &fresh {
                    if semisimple::centralizer_order(t)?.certifies(*s) != Some(false) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Certificate::Unipotent { s, payload, central_two_exponent, exact, .. } => {
                let p = product_of(payload)?;
                let holds = if *s == 2 { p.exponent_of(2) > *central_two_exponent } else { p.is_divisible_by_prime(*s) };
                // a divisor of the centralizer order can only certify presence
                Ok(holds == present && (present || *exact))
            }
            Certificate::NecessaryBound { s, bound, .. } => {
                let b = product_of(bound)?;
                Ok(!present && !b.is_divisible_by_prime(*s))
            }
            Certificate::CycleType { group, r, s, .. } => Ok(crate::altgraph::adjacent_in(group, *r, *s)? == present),
            Certificate::Spectrum { witness_order, r, s, .. } => {
                Ok(!present || witness_order.is_some_and(|o| o % (r * s) == 0))
            }
            Certificate::Inherited { .. } => Ok(!present),
        }
    }
}

/// Outcome of a single adjacency query.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "certificate", rename_all = "kebab-case")]
pub enum Decision {
    Present(Certificate),
    Absent(Certificate),
    Unknown(String),
}

impl Decision {
    pub fn is_decided(&self) -> bool {
        !matches!(self, Decision::Unknown(_))
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Decision::Present(_) => Some(true),
            Decision::Absent(_) => Some(false),
            Decision::Unknown(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Decision::Present(c) | Decision::Absent(c) => Some(c),
            Decision::Unknown(_) => None,
        }
    }

    pub fn revalidate(&self) -> Result<bool> {
        match self {
            Decision::Present(c) => c.revalidate(true),
            Decision::Absent(c) => c.revalidate(false),
            Decision::Unknown(_) => Err(Error::Undecided("no certificate on an unknown edge".into())),
        }
    }
}
