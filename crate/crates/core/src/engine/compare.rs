use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::evidence::{Certificate, Decision};
use crate::group::GroupId;

use super::{compute_graph, Policy, PrimeGraph};

/// An edge on which the two graphs provably differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub pair: (u64, u64),
    /// `true` when the edge is present in the first group (the usual orientation).
    pub present_in_first: bool,
    pub in_first: Decision,
    pub in_second: Decision,
}

impl Witness {
    /// Re-checks both certificates from freshly computed orders.
    pub fn revalidate(&self) -> Result<bool> {
        Ok(self.in_first.revalidate()? && self.in_second.revalidate()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Equal,
    NotEqual {
        witness: Option<Witness>,
        /// Primes dividing exactly one of the two orders.
        vertex_difference: Vec<u64>,
    },
    Undecided { unknown: Vec<(u64, u64)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub g: GroupId,
    pub h: GroupId,
    pub embedding: bool,
    pub pi_equal: bool,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl ComparisonVerdict {
    pub fn is_equal(&self) -> bool {
        self.verdict == Verdict::Equal
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::NotEqual { witness, .. } => witness.as_ref(),
            _ => None,
        }
    }
}

/// Marks edges of the subgroup graph that are absent in the supergroup as inherited absences.
pub fn inherit_absences(sup: &PrimeGraph, sub: &mut PrimeGraph) {
    for (r, s) in sub.unknown_edges() {
        if let Some(Decision::Absent(_)) = sup.get(r, s) {
            sub.set(r, s, Decision::Absent(Certificate::Inherited { supergroup: sup.group.clone(), r, s }));
        }
    }
}

/// Compares two computed graphs. With `embedding`, `h` is taken to be a subgroup of `g`,
/// so only edges present in `g` need testing in `h`.
pub fn compare_graphs(gg: &PrimeGraph, hh: &PrimeGraph, embedding: bool) -> ComparisonVerdict {
    let mut hh = hh.clone();
    if embedding {
        inherit_absences(gg, &mut hh);
    }
    let diff: Vec<u64> = gg
        .vertices
        .iter()
        .filter(|v| !hh.vertices.contains(v))
        .chain(hh.vertices.iter().filter(|v| !gg.vertices.contains(v)))
        .copied()
        .collect();
    let mut base = ComparisonVerdict {
        g: gg.group.clone(),
        h: hh.group.clone(),
        embedding,
        pi_equal: diff.is_empty(),
        verdict: Verdict::Equal,
    };
    if !diff.is_empty() {
        let mut diff = diff;
        diff.sort_unstable();
        base.verdict = Verdict::NotEqual { witness: None, vertex_difference: diff };
        return base;
    }
    let unknown_decision = || Decision::Unknown("not computed".into());
    let mut unknown = Vec::new();
    for (r, s) in gg.pairs() {
        let a = gg.get(r, s).cloned().unwrap_or_else(unknown_decision);
        let b = hh.get(r, s).cloned().unwrap_or_else(unknown_decision);
        if embedding && matches!(a, Decision::Absent(_)) {
            continue;
        }
        match (a.as_bool(), b.as_bool()) {
            (Some(x), Some(y)) if x != y => {
                let witness = Witness { pair: (r, s), present_in_first: x, in_first: a, in_second: b };
                base.verdict = Verdict::NotEqual { witness: Some(witness), vertex_difference: Vec::new() };
                return base;
            }
            (Some(_), Some(_)) => {}
            _ => unknown.push((r, s)),
        }
    }
    if !unknown.is_empty() {
        base.verdict = Verdict::Undecided { unknown };
    }
    base
}

/// Computes both graphs and compares them.
pub fn compare(g: &GroupId, h: &GroupId, embedding: bool, policy: &Policy) -> Result<ComparisonVerdict> {
    let gg = compute_graph(g, policy)?;
    let hh = compute_graph(h, policy)?;
    Ok(compare_graphs(&gg, &hh, embedding))
}
