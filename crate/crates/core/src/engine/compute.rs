use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::altgraph;
use crate::certificates;
use crate::error::{Error, Result};
use crate::evidence::{Certificate, Decision};
use crate::group::{Family, Flavor, GroupId, Sign};
use crate::oracle::{self, SpectrumReport};
use crate::orders;
use crate::semisimple;

use super::PrimeGraph;

/// How far the engine may go to decide an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Policy {
    /// Largest group order the oracle enumerates.
    pub enumeration_bound: u64,
    /// Random elements drawn when a group is too large to enumerate.
    pub sampling_budget: u64,
    pub seed: u64,
    /// Fall back to the oracle for edges the formula tiers leave open.
    pub escalate: bool,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            enumeration_bound: oracle::DEFAULT_ENUMERATION_BOUND,
            sampling_budget: oracle::DEFAULT_SAMPLING_BUDGET,
            seed: 1,
            escalate: true,
        }
    }
}

impl Policy {
    pub fn formulas_only() -> Policy {
        Policy { escalate: false, ..Policy::default() }
    }
}

fn is_permutation_type(g: &GroupId) -> bool {
    matches!(g.family, Family::Alternating { .. } | Family::Symmetric { .. } | Family::DirectFactorIntersection { .. })
}

/// The group whose classes the formula tiers use for `g`, if any.
/// `L_2(q)` is handled as `PSp_2(q)`.
fn formula_host(g: &GroupId) -> Option<GroupId> {
    let g = g.clone().normalized();
    let host = match (&g.family, g.flavor) {
        (&Family::Linear { dim: 2, q, sign: Sign::Plus }, Flavor::Simple) => GroupId::symplectic(2, q),
        (&Family::Linear { dim: 2, q, sign: Sign::Plus }, Flavor::Omega) => GroupId::symplectic_matrix(2, q),
        (Family::Symplectic { .. }, _)
        | (Family::OrthogonalEven { .. }, _)
        | (Family::OrthogonalOdd { .. }, _)
        | (Family::ExtensionFieldSymplectic { .. }, _) => g.clone(),
        (Family::Linear { q: 2, sign: Sign::Plus, .. }, _) => g.clone(),
        _ => return None,
    };
    Some(host)
}

fn usable(d: Result<Decision>) -> Option<Decision> {
    match d {
        Ok(d) if d.is_decided() => Some(d),
        _ => None,
    }
}

/// Decides `r ~ s` in a Lie-type host from the semisimple and certificate tiers only.
pub fn decide_by_formula(host: &GroupId, r: u64, s: u64) -> Result<Decision> {
    let (r, s) = (r.min(s), r.max(s));
    let p = host.characteristic().ok_or_else(|| Error::Unsupported(format!("{host} is not of Lie type")))?;
    // semisimple: an odd r' ∉ {p} carries the query; the other prime may be 2 or p
    for (a, b) in [(s, r), (r, s)] {
        if a != 2 && a != p {
            if let Some(d) = usable(semisimple::adjacent_semisimple(host, a, b)) {
                return Ok(d);
            }
        }
    }
    let mut queries = Vec::new();
    if r == p || s == p {
        let other = if r == p { s } else { r };
        queries.push((p, other));
    }
    if r == 2 && s != p {
        queries.push((2, s));
    }
    if r == 2 && s == p {
        queries.push((2, p));
    }
    for (a, b) in queries {
        if let Some(d) = usable(certificates::adjacent_special(host, a, b)) {
            return Ok(d);
        }
    }
    Ok(Decision::Unknown(format!("formula tiers leave {r} ~ {s} open in {host}")))
}

fn cycle_type_graph(g: &GroupId, label: &GroupId) -> Result<PrimeGraph> {
    let vertices: Vec<u64> = orders::pi(label)?.into_iter().collect();
    let mut graph = PrimeGraph::new(label.clone(), vertices);
    let degree = match g.family {
        Family::Alternating { n } | Family::Symmetric { n } | Family::DirectFactorIntersection { n, .. } => n as u64,
        _ => unreachable!(),
    };
    let pairs: Vec<(u64, u64)> = graph.pairs().collect();
    for (r, s) in pairs {
        let cert = Certificate::CycleType {
            group: g.clone(),
            r,
            s,
            minimal_support: altgraph::pair_minimal_support(g, r, s),
            degree,
        };
        let d = if altgraph::adjacent_in(g, r, s)? { Decision::Present(cert) } else { Decision::Absent(cert) };
        graph.set(r, s, d);
    }
    Ok(graph)
}

type SpectrumCache = Mutex<HashMap<String, Arc<SpectrumReport>>>;

fn cache() -> &'static SpectrumCache {
    static CACHE: OnceLock<SpectrumCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Spectrum of `g` from the oracle: cycle types for permutation-type groups, otherwise
/// a shipped presentation, enumerated when small enough and sampled when not.
/// Results are memoized per group and policy.
pub fn oracle_spectrum(g: &GroupId, policy: &Policy) -> Result<Option<Arc<SpectrumReport>>> {
    let canon = g.canonical();
    if is_permutation_type(&canon) {
        return Ok(Some(Arc::new(oracle::cycle_type_spectrum(&canon)?)));
    }
    let Some(pres) = oracle::presentation_for(g)? else {
        return Ok(None);
    };
    let small = pres.expected_order.as_ref().is_some_and(|o| *o <= policy.enumeration_bound.into());
    let key = if small {
        format!("{} enumerate", pres.label)
    } else {
        format!("{} sample {} {}", pres.label, policy.sampling_budget, policy.seed)
    };
    if let Some(hit) = cache().lock().expect("spectrum cache poisoned").get(&key) {
        return Ok(Some(hit.clone()));
    }
    let report = if small {
        oracle::enumerate_spectrum(&pres, policy.enumeration_bound)?
    } else {
        oracle::sample_spectrum(&pres, policy.sampling_budget, policy.seed)?
    };
    let report = Arc::new(report);
    cache().lock().expect("spectrum cache poisoned").insert(key, report.clone());
    Ok(Some(report))
}

/// Prime graph of `g` under `policy`.
///
/// Permutation-type groups are decided by cycle types. Lie-type groups go through the
/// semisimple and certificate tiers; edges left open escalate to the oracle when allowed.
/// Groups the formulas do not cover fall back to their canonical isomorphic form, then
/// to the oracle. Unknown edges are never filled in by assumption.
pub fn compute_graph(g: &GroupId, policy: &Policy) -> Result<PrimeGraph> {
    g.validate()?;
    let label = g.clone().normalized();
    if is_permutation_type(&label) {
        return cycle_type_graph(&label, &label);
    }
    let vertices: Vec<u64> = orders::pi(&label)?.into_iter().collect();
    let mut graph = PrimeGraph::new(label.clone(), vertices);
    let pairs: Vec<(u64, u64)> = graph.pairs().collect();
    match formula_host(&label) {
        Some(host) => {
            for &(r, s) in &pairs {
                graph.set(r, s, decide_by_formula(&host, r, s)?);
            }
        }
        None => {
            let canon = label.canonical();
            if canon != label {
                let inner = compute_graph(&canon, policy)?;
                for &(r, s) in &pairs {
                    let d = inner.get(r, s).cloned().unwrap_or_else(|| Decision::Unknown("missing".into()));
                    graph.set(r, s, d);
                }
            } else {
                for &(r, s) in &pairs {
                    graph.set(r, s, Decision::Unknown("no formula tier for this family".into()));
                }
            }
        }
    }
    if policy.escalate && !graph.is_decided() {
        escalate(&mut graph, policy)?;
    }
    Ok(graph)
}

fn escalate(graph: &mut PrimeGraph, policy: &Policy) -> Result<()> {
    let Some(report) = oracle_spectrum(&graph.group, policy)? else {
        return Ok(());
    };
    let canon = graph.group.canonical();
    let from_oracle = if is_permutation_type(&canon) {
        cycle_type_graph(&canon, &canon)?
    } else {
        oracle::graph_from_spectrum(&report)?
    };
    for (r, s) in graph.unknown_edges() {
        if let Some(d) = from_oracle.get(r, s) {
            if d.is_decided() {
                graph.set(r, s, d.clone());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edges(g: &PrimeGraph) -> Vec<(u64, u64)> {
        g.present_edges()
    }

    #[test]
    fn alternating_six_is_edgeless() {
        let g = compute_graph(&GroupId::alternating(6), &Policy::default()).unwrap();
        assert_eq!(g.vertices, vec![2, 3, 5]);
        assert!(edges(&g).is_empty());
        assert_eq!(g.components().unwrap(), 3);
    }

    #[test]
    fn omega8_plus_2_by_formulas() {
        let g = compute_graph(&GroupId::omega_even(8, 2, Sign::Plus), &Policy::formulas_only()).unwrap();
        assert!(g.is_decided(), "{:?}", g.unknown_edges());
        assert_eq!(edges(&g), vec![(2, 3), (2, 5), (3, 5)]);
        assert_eq!(g.components().unwrap(), 2);
    }

    #[test]
    fn psl2_by_formulas() {
        for q in [7u64, 11, 13, 25] {
            let g = compute_graph(&GroupId::linear(2, q), &Policy::formulas_only()).unwrap();
            assert!(g.is_decided(), "L2({q}): {:?}", g.unknown_edges());
        }
        let g = compute_graph(&GroupId::linear(2, 11), &Policy::formulas_only()).unwrap();
        assert_eq!(edges(&g), vec![(2, 3)]);
    }

    #[test]
    fn m11_needs_the_oracle() {
        let m11 = GroupId::sporadic(crate::group::Sporadic::M11);
        assert!(!compute_graph(&m11, &Policy::formulas_only()).unwrap().is_decided());
        let g = compute_graph(&m11, &Policy::default()).unwrap();
        assert_eq!(edges(&g), vec![(2, 3)]);
        assert_eq!(g.components().unwrap(), 3);
    }
}
