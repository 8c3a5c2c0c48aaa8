//! Instantiated checks of the classification tables, the second-maximal corollary,
//! and the negative witnesses from the case-by-case propositions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::evidence::Decision;
use crate::group::{GroupId, Sign, Sporadic};
use crate::numtheory::{factor_qpow_minus, ppd, smallest_prime_not_dividing};
use crate::orders;

use super::{compare, compute_graph, decide_by_formula, ComparisonVerdict, Policy, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainRow {
    pub g: GroupId,
    pub h: GroupId,
    /// Field size for the generic rows.
    pub q: Option<u64>,
    /// Expected number of components of `Γ(G)`.
    pub expected_components: usize,
}

fn delta(a: u64, b: u64) -> usize {
    usize::from(a == b)
}

/// Every pair of the main table: generic rows at their two smallest admissible `q`,
/// then the fixed rows with one line per subgroup.
pub fn main_table_rows() -> Vec<MainRow> {
    let mut rows = Vec::new();
    let mut generic = |g: GroupId, h: GroupId, q: u64, s: usize| rows.push(MainRow { g, h, q: Some(q), expected_components: s });
    for q in [2, 4] {
        generic(GroupId::symplectic(8, q), GroupId::orthogonal_full(8, q, Sign::Minus), q, 2);
    }
    for q in [3, 5] {
        generic(GroupId::omega_even(8, q, Sign::Plus), GroupId::omega_odd(7, q), q, 1 + delta(3, q));
    }
    for q in [2, 4] {
        generic(GroupId::omega_even(8, q, Sign::Plus), GroupId::symplectic(6, q), q, 1 + delta(2, q));
    }
    for q in [4, 8] {
        generic(GroupId::symplectic(4, q), GroupId::orthogonal_full(4, q, Sign::Minus), q, 2);
    }
    let mut fixed = |g: &GroupId, h: GroupId, s: usize| rows.push(MainRow { g: g.clone(), h, q: None, expected_components: s });
    let o8 = GroupId::omega_even(8, 2, Sign::Plus);
    for node in [1, 3, 4] {
        fixed(&o8, GroupId::parabolic(o8.clone(), node), 2);
    }
    fixed(&o8, GroupId::alternating(9), 2);
    let l6 = GroupId::linear(6, 2);
    for node in [1, 5] {
        fixed(&l6, GroupId::parabolic(l6.clone(), node), 2);
    }
    fixed(&GroupId::symplectic(6, 2), GroupId::orthogonal_full(6, 2, Sign::Plus), 2);
    let u42 = GroupId::unitary(4, 2);
    fixed(&u42, GroupId::parabolic(u42.clone(), 2), 2);
    fixed(&u42, GroupId::symplectic(4, 2), 2);
    fixed(&GroupId::unitary(4, 3), GroupId::alternating(7), 2);
    fixed(&GroupId::g2(3), GroupId::linear(2, 13), 3);
    fixed(&GroupId::alternating(6), GroupId::linear(2, 5), 3);
    fixed(&GroupId::sporadic(Sporadic::M11), GroupId::linear(2, 11), 3);
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MainRowReport {
    pub row: MainRow,
    pub verdict: ComparisonVerdict,
    pub components: Option<usize>,
    /// Unknown edges left in `Γ(G)` and `Γ(H)` after escalation.
    pub unknown_edges: usize,
}

impl MainRowReport {
    /// `EQUAL` with every edge of both graphs decided.
    pub fn pass(&self) -> bool {
        self.verdict.is_equal() && self.unknown_edges == 0
    }

    pub fn components_match(&self) -> bool {
        self.components == Some(self.row.expected_components)
    }
}

pub fn verify_main_row(row: &MainRow, policy: &Policy) -> Result<MainRowReport> {
    let gg = compute_graph(&row.g, policy)?;
    let mut hh = compute_graph(&row.h, policy)?;
    super::inherit_absences(&gg, &mut hh);
    let verdict = super::compare_graphs(&gg, &hh, true);
    Ok(MainRowReport {
        row: row.clone(),
        components: gg.components().ok(),
        unknown_edges: gg.unknown_edges().len() + hh.unknown_edges().len(),
        verdict,
    })
}

pub fn verify_main_table(policy: &Policy) -> Result<Vec<MainRowReport>> {
    main_table_rows().iter().map(|row| verify_main_row(row, policy)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiRow {
    /// Row label of the π-table: `a`..`f` for the infinite families, `fixed` otherwise.
    pub row: String,
    pub g: GroupId,
    pub h: GroupId,
}

/// Small instances of every row of the π-equality table.
pub fn pi_table_rows() -> Vec<PiRow> {
    let mut rows = Vec::new();
    let mut add = |row: &str, g: GroupId, h: GroupId| rows.push(PiRow { row: row.into(), g, h });
    for (n, k) in [(6, 5), (10, 7), (12, 11), (25, 24)] {
        add("a", GroupId::alternating(n), GroupId::intransitive(k, n));
    }
    for (m, q) in [(2, 2), (2, 4), (4, 2), (6, 2)] {
        add("b", GroupId::symplectic(2 * m, q), GroupId::orthogonal_full(2 * m, q, Sign::Minus));
    }
    for (m, q) in [(2, 3), (2, 5), (4, 3)] {
        add("c", GroupId::omega_odd(2 * m + 1, q), GroupId::orthogonal_full(2 * m, q, Sign::Minus));
    }
    for (m, q) in [(4, 3), (4, 5), (6, 3)] {
        add("d", GroupId::omega_even(2 * m, q, Sign::Plus), GroupId::orthogonal_odd_full(2 * m - 1, q));
    }
    for (m, q) in [(4, 2), (4, 4), (6, 2)] {
        add("e", GroupId::omega_even(2 * m, q, Sign::Plus), GroupId::symplectic(2 * m - 2, q));
    }
    for q in [3, 4, 5, 7] {
        add("f", GroupId::symplectic(4, q), GroupId::extension_field_symplectic(q));
    }
    let l6 = GroupId::linear(6, 2);
    let u42 = GroupId::unitary(4, 2);
    let u43 = GroupId::unitary(4, 3);
    let o8 = GroupId::omega_even(8, 2, Sign::Plus);
    let m11 = GroupId::sporadic(Sporadic::M11);
    let m12 = GroupId::sporadic(Sporadic::M12);
    let m22 = GroupId::sporadic(Sporadic::M22);
    let m23 = GroupId::sporadic(Sporadic::M23);
    let fixed = [
        (l6.clone(), GroupId::parabolic(l6.clone(), 1)),
        (l6.clone(), GroupId::parabolic(l6, 5)),
        (GroupId::unitary(3, 3), GroupId::linear(2, 7)),
        (GroupId::unitary(3, 5), GroupId::alternating(7)),
        (u42.clone(), GroupId::parabolic(u42.clone(), 2)),
        (u42, GroupId::symplectic(4, 2)),
        (u43.clone(), GroupId::linear(3, 4)),
        (u43, GroupId::alternating(7)),
        (GroupId::unitary(5, 2), GroupId::linear(2, 11)),
        (GroupId::unitary(6, 2), m22.clone()),
        (GroupId::symplectic(4, 7), GroupId::alternating(7)),
        (GroupId::symplectic(6, 2), GroupId::orthogonal_full(6, 2, Sign::Plus)),
        (o8.clone(), GroupId::parabolic(o8.clone(), 1)),
        (o8.clone(), GroupId::parabolic(o8.clone(), 3)),
        (o8.clone(), GroupId::parabolic(o8.clone(), 4)),
        (o8, GroupId::alternating(9)),
        (GroupId::g2(3), GroupId::linear(2, 13)),
        (GroupId::sporadic(Sporadic::Tits), GroupId::linear(2, 25)),
        (m11.clone(), GroupId::linear(2, 11)),
        (m12.clone(), m11),
        (m12, GroupId::linear(2, 11)),
        (GroupId::sporadic(Sporadic::M24), m23.clone()),
        (GroupId::sporadic(Sporadic::HS), m22.clone()),
        (GroupId::sporadic(Sporadic::McL), m22),
        (GroupId::sporadic(Sporadic::Co2), m23.clone()),
        (GroupId::sporadic(Sporadic::Co3), m23),
    ];
    for (g, h) in fixed {
        add("fixed", g, h);
    }
    rows
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiRowReport {
    pub row: PiRow,
    pub pi_g: BTreeSet<u64>,
    pub pi_h: BTreeSet<u64>,
}

impl PiRowReport {
    pub fn pass(&self) -> bool {
        self.pi_g == self.pi_h
    }
}

pub fn verify_pi_table() -> Result<Vec<PiRowReport>> {
    pi_table_rows()
        .into_iter()
        .map(|row| Ok(PiRowReport { pi_g: orders::pi(&row.g)?, pi_h: orders::pi(&row.h)?, row }))
        .collect()
}

/// How the chain `Ω_{2m}^-(q) < O_{2m}^-(q) < Sp_{2m}(q)` was separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessPath {
    /// `s = ppd(q, 2m-2)` with `2 ~ s` in `Sp_{2m}(q)` and not in `Ω_{2m}^-(q)`.
    Ppd,
    /// No such `s` exists; the two graphs were computed and compared in full.
    Direct,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCase {
    pub m: u32,
    pub q: u64,
    pub path: WitnessPath,
    pub g: GroupId,
    pub t: GroupId,
    pub witness: Option<Witness>,
}

impl ChainCase {
    pub fn separated(&self) -> bool {
        self.witness.as_ref().is_some_and(|w| w.present_in_first)
    }
}

/// Separates `Γ(Sp_{2m}(q))` from `Γ(Ω_{2m}^-(q))` for even `q`.
pub fn chain_case(m: u32, q: u64, policy: &Policy) -> Result<ChainCase> {
    if q % 2 != 0 || m < 2 {
        return Err(Error::InvalidArgument(format!("chain case needs q even and m ≥ 2, got m = {m}, q = {q}")));
    }
    let g = GroupId::symplectic(2 * m, q);
    let t = GroupId::omega_even(2 * m, q, Sign::Minus);
    match ppd(q, 2 * m - 2) {
        Some(s) => {
            let in_first = decide_by_formula(&g, 2, s)?;
            let in_second = decide_by_formula(&t, 2, s)?;
            let witness = match (in_first.as_bool(), in_second.as_bool()) {
                (Some(true), Some(false)) => Some(Witness { pair: (2, s), present_in_first: true, in_first, in_second }),
                _ => None,
            };
            Ok(ChainCase { m, q, path: WitnessPath::Ppd, g, t, witness })
        }
        None => {
            let v = compare(&g, &t, true, policy)?;
            Ok(ChainCase { m, q, path: WitnessPath::Direct, witness: v.witness().cloned(), g, t })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryReport {
    /// The two second-maximal equalities.
    pub second_maximal: Vec<ComparisonVerdict>,
    pub chain: Vec<ChainCase>,
}

impl CorollaryReport {
    pub fn pass(&self) -> bool {
        self.second_maximal.iter().all(|v| v.is_equal()) && self.chain.iter().all(|c| c.separated())
    }
}

pub fn verify_corollary(policy: &Policy) -> Result<CorollaryReport> {
    let second_maximal = vec![
        compare(&GroupId::unitary(4, 2), &GroupId::orthogonal_full(4, 2, Sign::Minus), true, policy)?,
        compare(&GroupId::omega_even(8, 2, Sign::Plus), &GroupId::orthogonal_full(6, 2, Sign::Plus), true, policy)?,
    ];
    let chain = [(2, 4), (2, 8), (4, 2), (4, 4)]
        .into_iter()
        .map(|(m, q)| chain_case(m, q, policy))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorollaryReport { second_maximal, chain })
}

/// The propositions whose proofs exhibit a negative witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Proposition {
    /// `Sp_{2m}(q)` against `O_{2m}^-(q)`, `m, q` even.
    #[serde(rename = "3.2")]
    SymplecticOMinus,
    /// `Ω_{2m+1}(q)` against `O_{2m}^-(q)`, `m` even, `q` odd.
    #[serde(rename = "3.3")]
    OddOmegaOMinus,
    /// `Ω_{2m}^+(q)` against `Sp_{2m-2}(q)`, `m, q` even.
    #[serde(rename = "3.4")]
    OmegaPlusSymplectic,
    /// `PΩ_{2m}^+(q)` against `Ω_{2m-1}(q)`, `m` even, `q` odd.
    #[serde(rename = "3.5")]
    OmegaPlusOddOmega,
    /// `PSp_4(q)` against `Sp_2(q^2)`.
    #[serde(rename = "3.6")]
    ExtensionField,
}

impl Proposition {
    pub const ALL: [Proposition; 5] = [
        Proposition::SymplecticOMinus,
        Proposition::OddOmegaOMinus,
        Proposition::OmegaPlusSymplectic,
        Proposition::OmegaPlusOddOmega,
        Proposition::ExtensionField,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Proposition::SymplecticOMinus => "3.2",
            Proposition::OddOmegaOMinus => "3.3",
            Proposition::OmegaPlusSymplectic => "3.4",
            Proposition::OmegaPlusOddOmega => "3.5",
            Proposition::ExtensionField => "3.6",
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Proposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Proposition> {
        Proposition::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown proposition `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReplay {
    pub proposition: Proposition,
    pub m: u32,
    pub q: u64,
    pub g: GroupId,
    pub h: GroupId,
    /// How `(r, s)` was chosen.
    pub recipe: String,
    pub witness: Witness,
}

impl WitnessReplay {
    /// Present in `G`, absent in `H`, and both certificates re-check.
    pub fn reproduced(&self) -> Result<bool> {
        let w = &self.witness;
        Ok(matches!(w.in_first, Decision::Present(_)) && matches!(w.in_second, Decision::Absent(_)) && w.revalidate()?)
    }
}

fn need_ppd(q: u64, e: u32) -> Result<u64> {
    ppd(q, e).ok_or_else(|| Error::Arithmetic(format!("q^{e} - 1 has no primitive prime divisor for q = {q}")))
}

/// `(r, s)` for `Sp`/`Ω^+` with large even `m`: ppds of `q^ℓ - 1` and `q^{m-ℓ} - 1`, where
/// `ℓ` is the least prime not dividing `m`; for `m = 6` ppds of `q^8 - 1` and `q^4 - 1`.
fn torus_pair(m: u32, q: u64) -> Result<(u64, u64, String)> {
    if m == 6 {
        return Ok((need_ppd(q, 8)?, need_ppd(q, 4)?, "r = ppd(q,8), s = ppd(q,4)".into()));
    }
    if m >= 8 && m % 2 == 0 {
        let l = smallest_prime_not_dividing(m as u64) as u32;
        return Ok((need_ppd(q, l)?, need_ppd(q, m - l)?, format!("l = {l}, r = ppd(q,{l}), s = ppd(q,{})", m - l)));
    }
    Err(Error::InvalidArgument(format!("m = {m} is outside the excluded range (m = 6 or even m ≥ 8)")))
}

fn smallest_odd_prime_of_q2_minus_1(q: u64) -> Result<u64> {
    factor_qpow_minus(q, 2, 1)
        .primes()
        .into_iter()
        .find(|&p| p != 2)
        .ok_or_else(|| Error::InvalidArgument(format!("q^2 - 1 has no odd prime divisor for q = {q}")))
}

/// Rebuilds the witness pair from a proposition's proof and decides it in both groups
/// through the formula tiers.
pub fn replay_witness(prop: Proposition, m: u32, q: u64) -> Result<WitnessReplay> {
    let p = crate::numtheory::prime_power(q).ok_or_else(|| Error::InvalidArgument(format!("{q} is not a prime power")))?.0;
    let (g, h, r, s, recipe) = match prop {
        Proposition::SymplecticOMinus => {
            if q % 2 != 0 {
                return Err(Error::InvalidArgument("q must be even".into()));
            }
            let (r, s, recipe) = torus_pair(m, q)?;
            (GroupId::symplectic(2 * m, q), GroupId::orthogonal_full(2 * m, q, Sign::Minus), r, s, recipe)
        }
        Proposition::OddOmegaOMinus => {
            if q % 2 == 0 || m % 2 != 0 {
                return Err(Error::InvalidArgument("need m even and q odd".into()));
            }
            let (s, recipe) = match m {
                2 if q >= 5 => (smallest_odd_prime_of_q2_minus_1(q)?, "r = p, s odd prime dividing q^2 - 1".to_string()),
                2 => return Err(Error::InvalidArgument("(m, q) = (2, 3) gives equal graphs".into())),
                _ => (need_ppd(q, 2 * m - 2)?, format!("r = p, s = ppd(q,{})", 2 * m - 2)),
            };
            (GroupId::omega_odd(2 * m + 1, q), GroupId::orthogonal_full(2 * m, q, Sign::Minus), p, s, recipe)
        }
        Proposition::OmegaPlusSymplectic => {
            if q % 2 != 0 {
                return Err(Error::InvalidArgument("q must be even".into()));
            }
            let (r, s, recipe) = torus_pair(m, q)?;
            (GroupId::omega_even(2 * m, q, Sign::Plus), GroupId::symplectic(2 * m - 2, q), r, s, recipe)
        }
        Proposition::OmegaPlusOddOmega => {
            if q % 2 == 0 {
                return Err(Error::InvalidArgument("q must be odd".into()));
            }
            let (r, s, recipe) = torus_pair(m, q)?;
            (GroupId::omega_even(2 * m, q, Sign::Plus), GroupId::omega_odd(2 * m - 1, q), r, s, recipe)
        }
        Proposition::ExtensionField => {
            if m != 2 || q < 4 {
                return Err(Error::InvalidArgument("need m = 2 and q ≥ 4".into()));
            }
            let s = smallest_odd_prime_of_q2_minus_1(q)?;
            (
                GroupId::symplectic(4, q),
                GroupId::extension_field_symplectic(q),
                p,
                s,
                "r = p, s odd prime dividing q^2 - 1".to_string(),
            )
        }
    };
    let in_first = decide_by_formula(&g, r, s)?;
    let in_second = decide_by_formula(&h, r, s)?;
    let present_in_first = matches!(in_first, Decision::Present(_));
    Ok(WitnessReplay {
        proposition: prop,
        m,
        q,
        g,
        h,
        recipe,
        witness: Witness { pair: (r, s), present_in_first, in_first, in_second },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proposition_ids_round_trip() {
        for p in Proposition::ALL {
            assert_eq!(p.id().parse::<Proposition>().unwrap(), p);
        }
        assert!("3.1".parse::<Proposition>().is_err());
    }

    #[test]
    fn torus_pairs() {
        assert_eq!(torus_pair(6, 2).unwrap().0, 17);
        let (r, s, _) = torus_pair(8, 2).unwrap();
        assert_eq!((r, s), (7, 31));
        assert!(torus_pair(4, 2).is_err());
    }

    #[test]
    fn row_counts() {
        assert_eq!(main_table_rows().len(), 8 + 13);
        assert!(pi_table_rows().iter().all(|r| r.g.validate().is_ok() && r.h.validate().is_ok()));
    }
}
